// Basic hypergeometric series r_phi_s with adaptive truncation, and the
// series-equals-product identity for psi(q).

#ifndef QSF_HYPERGEOMETRIC_HPP
#define QSF_HYPERGEOMETRIC_HPP

#include <utility>
#include <vector>

#include "qsf/base.hpp"
#include "qsf/pochhammer.hpp"

namespace qsf {

// Numerator/denominator parameter lists for r_phi_s(a1..ar; b1..bs; q, x).
// A zero lower parameter is legal ((0;q)_n = 1); a lower parameter of the
// form q^{-m} would zero a denominator within the truncation range and is
// rejected when the running factor hits it.
struct hyper_spec {
    std::vector<cx> upper;
    std::vector<cx> lower;
    q_base base;

    hyper_spec(std::vector<cx> upper_, std::vector<cx> lower_, q_base base_)
        : upper(std::move(upper_)), lower(std::move(lower_)), base(base_) {}

    // 1 + s - r; positive means entire, zero means radius 1, negative means
    // zero radius of convergence (formal only).
    int excess() const {
        return 1 + static_cast<int>(lower.size()) - static_cast<int>(upper.size());
    }
};

// Defining sum of Def. "basic hypergeometric series": term n carries
// [(-1)^n q^{n(n-1)/2}]^{1+s-r} x^n. Computed by the one-step term-ratio
// recurrence; term_{n+1}/term_n =
//   prod_i (1 - a_i q^n) / [prod_j (1 - b_j q^n) (1 - q^{n+1})]
//   * x * [(-1) q^n]^{1+s-r}.
inline sum_result rphi_scaled(const hyper_spec& spec, cx x, const series_params& p = {}) {
    const int d = spec.excess();
    if (d < 0)
        throw convergence_error("rphi: series with 1+s-r < 0 has zero radius of convergence");
    if (d == 0 && !(std::abs(x) < 1.0))
        throw convergence_error("rphi: balanced series requires |x| < 1");

    const cx q = spec.base.value();
    auto ratio = [&](int n) {
        cx qn = spec.base.ipow(n);
        cx r = x;
        for (cx a : spec.upper) r *= (1.0 - a * qn);
        for (cx b : spec.lower) {
            cx den = 1.0 - b * qn;
            if (std::abs(den) < 1e-14)
                throw domain_error("rphi: lower parameter hits q^{-n} within truncation range");
            r /= den;
        }
        r /= (1.0 - qn * q);
        for (int i = 0; i < d; ++i) r *= -qn;
        return r;
    };
    return sum_adaptive(cx(1.0), ratio, p);
}

inline cx rphi(const hyper_spec& spec, cx x, const series_params& p = {}) {
    return rphi_scaled(spec, x, p).value;
}

// psi(q) = sum_{n>=0} q^{n(n+1)/2} versus its product form
// (q^2;q^2)_inf / (q;q^2)_inf; returns |series - product| / |product|.
inline double psi_identity_residual(const q_base& q, const series_params& p = {}) {
    // term ratio: q^{(n+1)(n+2)/2 - n(n+1)/2} = q^{n+1}
    cx series =
        sum_adaptive(cx(1.0), [&](int n) { return q.ipow(n + 1); }, p).value;
    q_base q2(q.squared());
    cx product = qpochhammer_inf(q.squared(), q2, p) / qpochhammer_inf(q.value(), q2, p);
    return std::abs(series - product) / std::abs(product);
}

}  // namespace qsf

#endif
