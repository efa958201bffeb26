// sweep.hpp: Independent per-p trajectories on a small thread pool, merged in
// input order.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace wipe {

class SweepError : public std::runtime_error {
public:
    SweepError(double p, std::exception_ptr cause, const std::string& what)
        : std::runtime_error(what), p_(p), cause_(std::move(cause)) {}

    double p() const { return p_; }
    const std::exception_ptr& cause() const { return cause_; }

private:
    double p_;
    std::exception_ptr cause_;
};

/// Worker count: `requested` (0 = hardware concurrency), capped by the
/// WIPE_SIM_THREADS environment variable when set, and by the job count.
inline std::size_t sweep_threads(std::size_t requested, std::size_t jobs) {
    std::size_t n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("WIPE_SIM_THREADS")) {
        const long v = std::strtol(cap, nullptr, 10);
        if (v > 0) n = std::min(n, static_cast<std::size_t>(v));
    }
    return std::max<std::size_t>(1, std::min(n, jobs));
}

/// Calls fn(p) for every p in p_list and returns the results in p_list order.
/// A failure is reported for the first failing p in that order.
template <class Fn>
auto sweep_map(const std::vector<double>& p_list, Fn&& fn, std::size_t threads = 0)
    -> std::vector<decltype(fn(0.0))> {
    using Result = decltype(fn(0.0));
    const std::size_t jobs = p_list.size();
    std::vector<Result> results(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < jobs; i = next++) {
            try {
                results[i] = fn(p_list[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const std::size_t n = sweep_threads(threads, jobs);
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n);
        for (std::size_t k = 0; k < n; ++k) pool.emplace_back(worker);
    }

    for (std::size_t i = 0; i < jobs; ++i) {
        if (!errors[i]) continue;
        std::string msg = "trajectory for p=" + std::to_string(p_list[i]) + " failed";
        try {
            std::rethrow_exception(errors[i]);
        } catch (const std::exception& e) {
            msg += ": ";
            msg += e.what();
        } catch (...) {
        }
        throw SweepError(p_list[i], errors[i], msg);
    }
    return results;
}

}  // namespace wipe
