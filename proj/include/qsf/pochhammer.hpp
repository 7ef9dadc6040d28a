// q-Pochhammer symbols (a;q)_n and (a;q)_inf, plus the multi-argument
// product convenience (a1,...,am;q)_inf.

#ifndef QSF_POCHHAMMER_HPP
#define QSF_POCHHAMMER_HPP

#include <initializer_list>

#include "qsf/base.hpp"

namespace qsf {

// (a;q)_n = (1-a)(1-aq)...(1-aq^{n-1}); the empty product (n=0) is 1.
inline cx qpochhammer(cx a, const q_base& q, int n) {
    cx r = 1.0;
    cx f = a;
    for (int k = 0; k < n; ++k) {
        r *= (1.0 - f);
        f *= q.value();
    }
    return r;
}

// (a;q)_inf, truncated once |a q^k| stays below rel_tol for stop_run
// consecutive k. The neglected tail multiplies the result by
// 1 + O(rel_tol/(1-|q|)).
inline cx qpochhammer_inf(cx a, const q_base& q, const series_params& p = {}) {
    cx r = 1.0;
    cx f = a;
    int run = 0;
    for (int k = 0; k < p.max_terms; ++k) {
        r *= (1.0 - f);
        f *= q.value();
        if (std::abs(f) < p.rel_tol) {
            if (++run >= p.stop_run) return r;
        } else {
            run = 0;
        }
    }
    throw truncation_error("qpochhammer_inf: factors did not decay within max_terms");
}

// (a1,a2,...,am;q)_inf as the product of the individual infinite symbols.
inline cx qpochhammer_inf(std::initializer_list<cx> as, const q_base& q,
                          const series_params& p = {}) {
    cx r = 1.0;
    for (cx a : as) r *= qpochhammer_inf(a, q, p);
    return r;
}

}  // namespace qsf

#endif
