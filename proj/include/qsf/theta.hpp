// Jacobi theta function theta(x) = sum_{n in Z} q^{n(n-1)/2} x^n, in two
// independently computed forms: the bilateral series and the triple product
// (q, -x, -q/x; q)_inf. The product form is the production evaluator (its
// zeros at x in -q^Z come out exact); the series form is the cross-oracle.

#ifndef QSF_THETA_HPP
#define QSF_THETA_HPP

#include "qsf/base.hpp"
#include "qsf/pochhammer.hpp"

namespace qsf {

// Bilateral series, summed adaptively: the n=0 term, then the n>0 wing with
// term ratio q^n x, then the n<0 wing with ratio q^n / x. Each wing stops
// after stop_run terms below rel_tol * (running max |term|). Returns the
// value plus the magnitude scale of the bilateral sum.
inline sum_result theta_series_scaled(cx x, const q_base& q,
                                      const series_params& p = {}) {
    if (x == cx(0.0)) throw domain_error("theta: x must be nonzero");
    sum_result r;
    cx acc = 1.0;  // n = 0
    double scale = 1.0;
    r.abs_sum = 1.0;
    r.terms = 1;

    // wing stepping from term t0 with ratio(k) = multiplier from index k to
    // k+1; k counts wing terms starting at 1.
    auto wing = [&](cx t0, auto&& ratio) {
        cx term = t0;
        int run = 0;
        for (int k = 1; k <= p.max_terms; ++k) {
            acc += term;
            r.abs_sum += std::abs(term);
            scale = std::max(scale, std::abs(term));
            ++r.terms;
            if (std::abs(term) < p.rel_tol * scale) {
                if (++run >= p.stop_run) return;
            } else {
                run = 0;
            }
            term *= ratio(k);
        }
        throw truncation_error("theta_series: wing did not decay within max_terms");
    };

    // n >= 1: term_n = q^{n(n-1)/2} x^n, ratio term_{n+1}/term_n = q^n x.
    wing(x, [&](int k) { return q.ipow(k) * x; });
    // n <= -1: term_{-m} = q^{m(m+1)/2} x^{-m}, ratio = q^{m+1}/x.
    wing(q.value() / x, [&](int k) { return q.ipow(k + 1) / x; });

    r.value = acc;
    r.term_scale = scale;
    return r;
}

inline cx theta_series(cx x, const q_base& q, const series_params& p = {}) {
    return theta_series_scaled(x, q, p).value;
}

// Jacobi triple product: theta(x) = (q; q)_inf (-x; q)_inf (-q/x; q)_inf.
inline cx theta_product(cx x, const q_base& q, const series_params& p = {}) {
    if (x == cx(0.0)) throw domain_error("theta: x must be nonzero");
    return qpochhammer_inf(q.value(), q, p) * qpochhammer_inf(-x, q, p) *
           qpochhammer_inf(-q.value() / x, q, p);
}

// Production evaluator.
inline cx theta(cx x, const q_base& q, const series_params& p = {}) {
    return theta_product(x, q, p);
}

}  // namespace qsf

#endif
