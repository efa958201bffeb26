// analytic_qubit.hpp: Closed-form coherence of a qubit coupled through
// c Iz⊗Iz to a maximally mixed qubit that is replaced with probability p per
// interval tau.
//
// With L = ln x = ln(1-p)/tau the off-diagonal element obeys
//   kappa'' - L kappa' + (c^2/4) kappa = 0,
// whose exponents are r± = -[L ± sqrt(L^2 - c^2)]/2. Each finite step obeys the
// exact two-term recurrence implemented by recurrence_oracle().

#pragma once

#include "wipe/linalg.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wipe {

class DegenerateBranchError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ProbabilityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Branch { oscillatory, degenerate, overdamped };

inline const char* to_string(Branch b) {
    switch (b) {
        case Branch::oscillatory: return "oscillatory";
        case Branch::degenerate: return "degenerate";
        case Branch::overdamped: return "overdamped";
    }
    return "unknown";
}

struct DecoherenceFactors {
    Complex r_plus;   // 1/s
    Complex r_minus;  // 1/s
    Branch branch{Branch::oscillatory};
    double ln_x{0.0};
    double c{0.0};

    // p = 1: the environment is replaced every instant and eta stays at b.
    bool perfect_conservation() const { return std::isinf(ln_x); }
};

struct CoherenceCoefficients {
    Complex u_f, v_f, u_g, v_g;
};

struct RecurrencePair {
    Complex f;
    Complex g;
    std::size_t m{0};
};

namespace analytic {

inline constexpr double kDegenerateTol = 1e-12;

inline void require_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0))
        throw ProbabilityError(std::string(what) + ": p must lie in [0, 1], got " +
                               std::to_string(p));
}

/// ln(1-p)/tau; -inf for p = 1.
inline double log_rate(double p, double tau) {
    require_probability(p, "log_rate");
    if (!(tau > 0.0)) throw std::invalid_argument("log_rate: tau must be positive");
    if (p == 1.0) return -std::numeric_limits<double>::infinity();
    return std::log1p(-p) / tau;
}

/// 1 - exp(-c tau): the p at which -ln x = c.
inline double threshold(double c, double tau) {
    if (!(c > 0.0) || !(tau > 0.0))
        throw std::invalid_argument("threshold: c and tau must be positive");
    return -std::expm1(-c * tau);
}

inline DecoherenceFactors decoherence_factors(double ln_x, double c) {
    if (!(ln_x <= 0.0)) throw std::invalid_argument("decoherence_factors: ln x must be <= 0");
    if (!(c > 0.0)) throw std::invalid_argument("decoherence_factors: c must be positive");

    DecoherenceFactors r;
    r.ln_x = ln_x;
    r.c = c;
    if (std::isinf(ln_x)) {
        r.r_plus = 0.0;
        r.r_minus = std::numeric_limits<double>::infinity();
        r.branch = Branch::overdamped;
        return r;
    }

    const double disc = ln_x * ln_x - c * c;
    if (std::abs(disc) <= kDegenerateTol * c * c) {
        r.r_plus = r.r_minus = -0.5 * ln_x;
        r.branch = Branch::degenerate;
    } else if (disc < 0.0) {
        // principal root of a negative number: +i sqrt(c^2 - L^2)
        const double s = std::sqrt(-disc);
        r.r_plus = Complex(-0.5 * ln_x, -0.5 * s);
        r.r_minus = Complex(-0.5 * ln_x, 0.5 * s);
        r.branch = Branch::oscillatory;
    } else {
        const double s = std::sqrt(disc);
        const double r_minus = 0.5 * (-ln_x + s);
        r.r_minus = r_minus;
        r.r_plus = 0.25 * c * c / r_minus;  // r+ r- = c^2/4, no cancellation
        r.branch = Branch::overdamped;
    }
    return r;
}

inline DecoherenceFactors decoherence_factors(double p, double tau, double c) {
    return decoherence_factors(log_rate(p, tau), c);
}

inline CoherenceCoefficients coefficients(Complex b, const DecoherenceFactors& r) {
    if (r.branch == Branch::degenerate)
        throw DegenerateBranchError("coefficients: r+ = r-, use the confluent form");
    if (r.perfect_conservation())
        throw DegenerateBranchError("coefficients: undefined in the p = 1 limit");
    const Complex i(0.0, 1.0);
    const Complex denom = 4.0 * (r.r_plus - r.r_minus);
    const Complex ibc = i * b * r.c;
    return {(ibc - 2.0 * b * r.r_minus) / denom, (-ibc + 2.0 * b * r.r_plus) / denom,
            (-ibc - 2.0 * b * r.r_minus) / denom, (ibc + 2.0 * b * r.r_plus) / denom};
}

namespace detail {

/// e^z - 1 without cancellation near z = 0.
inline Complex expm1(Complex z) {
    const double x = z.real(), y = z.imag();
    const double s = std::sin(0.5 * y);
    return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

/// (1 - e^{-delta t}) / delta, tending to t as delta -> 0.
inline Complex relaxation_integral(Complex delta, double t) {
    if (std::abs(delta) * t < 1e-300) return t;
    return -expm1(-delta * t) / delta;
}

}  // namespace detail

/// Off-diagonal element of the reduced principal state at time t.
///
/// Evaluated as b e^{-r+ t} [1 + r+ (1 - e^{-(r- - r+) t})/(r- - r+)], which
/// equals b(-r- e^{-r+ t} + r+ e^{-r- t})/(r+ - r-) and reduces to the
/// confluent b(1 + ct/2)e^{-ct/2} when r+ = r-.
inline Complex eta(double t, Complex b, const DecoherenceFactors& r) {
    if (!(t >= 0.0)) throw std::invalid_argument("eta: t must be non-negative");
    if (r.perfect_conservation()) return b;
    if (r.branch == Branch::degenerate) {
        const double h = 0.5 * r.c * t;
        return b * (1.0 + h) * std::exp(-h);
    }
    const Complex delta = r.r_minus - r.r_plus;
    return b * std::exp(-r.r_plus * t) *
           (1.0 + r.r_plus * detail::relaxation_integral(delta, t));
}

/// The two closed-form components f(t), g(t) with f + g = eta.
inline std::pair<Complex, Complex> f_g_closed(double t, Complex /*b*/,
                                              const DecoherenceFactors& r,
                                              const CoherenceCoefficients& k) {
    if (r.branch == Branch::degenerate)
        throw DegenerateBranchError("f_g_closed: r+ = r-, use the confluent form");
    if (r.perfect_conservation())
        throw DegenerateBranchError("f_g_closed: undefined in the p = 1 limit");
    const Complex ep = std::exp(-r.r_plus * t);
    const Complex em = std::exp(-r.r_minus * t);
    return {k.u_f * ep + k.v_f * em, k.u_g * ep + k.v_g * em};
}

/// Iterates the coupled first-order system for (f_m, g_m), m = 0..m_max, from
/// f_0 = g_0 = b/2.
///
/// x enters only through x^dt, so it is passed as ln x (see log_rate); x itself
/// underflows to 0 for e.g. p = 0.75, tau = 1e-3.
inline std::vector<RecurrencePair> recurrence_oracle(std::size_t m_max, Complex b, double c,
                                                     double ln_x, double dt) {
    if (!(ln_x <= 0.0)) throw std::invalid_argument("recurrence_oracle: ln x must be <= 0");
    if (!(dt > 0.0)) throw std::invalid_argument("recurrence_oracle: dt must be positive");
    const double w = std::isinf(ln_x) ? 0.0 : std::exp(ln_x * dt);
    const double half = 0.5 * c * dt;
    const Complex down(std::cos(half), -std::sin(half));  // e^{-ic dt/2}
    const Complex up = std::conj(down);

    std::vector<RecurrencePair> out;
    out.reserve(m_max + 1);
    Complex f = 0.5 * b, g = 0.5 * b;
    out.push_back({f, g, 0});
    for (std::size_t m = 1; m <= m_max; ++m) {
        const Complex sum = f + g, diff = f - g;
        f = 0.5 * down * (sum + w * diff);
        g = 0.5 * up * (sum - w * diff);
        out.push_back({f, g, m});
    }
    return out;
}

}  // namespace analytic
}  // namespace wipe
