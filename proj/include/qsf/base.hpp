// Core domain types for q-series evaluation: the validated base q,
// truncation-control parameters, and the error taxonomy shared by all
// modules. Everything operates on double-precision complex values.

#ifndef QSF_BASE_HPP
#define QSF_BASE_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qsf {

using cx = std::complex<double>;

// ---------------------------------------------------------------------------
// Error taxonomy
// ---------------------------------------------------------------------------

struct qsf_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation.
struct domain_error : qsf_error {
    using qsf_error::qsf_error;
};

// Evaluation requested at (or numerically indistinguishable from) a pole.
struct pole_error : domain_error {
    using domain_error::domain_error;
};

// Principal-branch power requested on the branch cut.
struct branch_error : domain_error {
    using domain_error::domain_error;
};

// A series/product cannot converge for the given arguments.
struct convergence_error : qsf_error {
    using qsf_error::qsf_error;
};

// Adaptive summation hit max_terms before the stopping rule fired.
struct truncation_error : convergence_error {
    using convergence_error::convergence_error;
};

// A coefficient magnitude tripped the overflow guard (1e250).
struct overflow_error : convergence_error {
    using convergence_error::convergence_error;
};

// An operator/series does not have the structural shape an algorithm needs.
struct shape_error : qsf_error {
    using qsf_error::qsf_error;
};

// Magnitude ceiling for formal coefficients; below DBL_MAX with headroom for
// convolutions.
inline constexpr double overflow_guard_threshold = 1e250;

// ---------------------------------------------------------------------------
// q_base: validated base q with 0 < |q| < 1 and cached derived constants
// ---------------------------------------------------------------------------

class q_base {
  public:
    explicit q_base(cx q) : value_(q), modulus_(std::abs(q)) {
        if (!(modulus_ > 0.0) || !(modulus_ < 1.0) || !std::isfinite(modulus_))
            throw domain_error("q_base: |q| must lie strictly between 0 and 1");
    }

    cx value() const { return value_; }
    double modulus() const { return modulus_; }

    cx squared() const { return value_ * value_; }

    // Principal branch of sqrt(q).
    cx sqrt_principal() const { return std::sqrt(value_); }

    double inv_modulus_squared() const { return 1.0 / (modulus_ * modulus_); }

    // q^k for integer k (k may be negative); repeated multiplication keeps
    // this exact-to-rounding for the small exponents used in lattice walks.
    cx ipow(long k) const {
        cx base = k >= 0 ? value_ : 1.0 / value_;
        unsigned long n = k >= 0 ? static_cast<unsigned long>(k)
                                 : static_cast<unsigned long>(-k);
        cx r = 1.0;
        while (n) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    // q^{n(n-1)/2}, the theta-series exponent, for integer n of either sign.
    cx triangular_pow(long n) const {
        double e = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
        return std::exp(e * std::log(value_));
    }

  private:
    cx value_;
    double modulus_;
};

// ---------------------------------------------------------------------------
// series_params: truncation order, tolerance, consecutive-small-term stop
// ---------------------------------------------------------------------------

struct series_params {
    int max_terms = 4096;
    double rel_tol = 1e-15;
    int stop_run = 3;

    series_params() = default;
    series_params(int max_terms_, double rel_tol_, int stop_run_ = 3)
        : max_terms(max_terms_), rel_tol(rel_tol_), stop_run(stop_run_) {
        validate();
    }

    void validate() const {
        if (max_terms < 1) throw domain_error("series_params: max_terms >= 1 required");
        if (!(rel_tol > 0.0) || !(rel_tol < 1.0))
            throw domain_error("series_params: rel_tol must be in (0,1)");
        if (stop_run < 1) throw domain_error("series_params: stop_run >= 1 required");
    }
};

// Value of an adaptive summation together with its internal magnitude scale
// (running max of |term| and |partial sum|) and the sum of |term|. Identity
// checks use these to scale residuals where cancellation makes the plain
// value a meaningless yardstick.
struct sum_result {
    cx value{};
    double term_scale = 0.0;  // max |term| seen
    double abs_sum = 0.0;     // sum of |term|
    int terms = 0;
};

// Adaptive unilateral summation. `ratio(n)` maps term index n (0-based) to
// term_{n+1}/term_n. Stops after stop_run consecutive terms below
// rel_tol * (max partial magnitude); q-series can plateau before the
// super-geometric decay kicks in, hence the run requirement.
template <typename RatioFn>
sum_result sum_adaptive(cx first_term, RatioFn&& ratio, const series_params& p) {
    sum_result r;
    cx term = first_term;
    cx acc = 0.0;
    double scale = 0.0;
    int run = 0;
    for (int n = 0; n < p.max_terms; ++n) {
        acc += term;
        r.abs_sum += std::abs(term);
        scale = std::max({scale, std::abs(term), std::abs(acc)});
        r.terms = n + 1;
        if (std::abs(term) < p.rel_tol * scale) {
            if (++run >= p.stop_run) {
                r.value = acc;
                r.term_scale = scale;
                return r;
            }
        } else {
            run = 0;
        }
        term *= ratio(n);
    }
    throw truncation_error("sum_adaptive: max_terms reached before terms became negligible");
}

// Scaled residual of a two-sided identity: |lhs-rhs| / max(|lhs|, |rhs|,
// extra_scale, floor). extra_scale carries the term-magnitude sum of the
// larger side when the caller has it.
inline double scaled_residual(cx lhs, cx rhs, double extra_scale = 0.0,
                              double floor = 1e-300) {
    double s = std::max({std::abs(lhs), std::abs(rhs), extra_scale, floor});
    return std::abs(lhs - rhs) / s;
}

}  // namespace qsf

#endif
