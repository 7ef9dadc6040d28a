// Connection formulas evaluated as residuals: Watson's classical formula for
// 2phi1 and the connection formula between the Ramanujan function and the
// q-Airy function,
//   A_{q^2}(-q^3/x^2)
//     = (q,-1;q)_inf^{-1} { theta(x/q) Ai_q(-x) + theta(-x/q) Ai_q(x) }.

#ifndef QSF_CONNECTION_HPP
#define QSF_CONNECTION_HPP

#include "qsf/airy.hpp"
#include "qsf/base.hpp"
#include "qsf/hypergeometric.hpp"
#include "qsf/pochhammer.hpp"
#include "qsf/theta.hpp"

namespace qsf {

namespace detail {

// Guard a Watson prefactor denominator against the (a;q)_inf zero set
// a in q^{Z<=0}.
inline void require_off_pole(cx v, const q_base& q, const char* what) {
    double m = std::abs(v);
    if (m < 1e-12) return;  // far inside the unit disk, no q^{-m} nearby
    // candidate exponent k with |q^k| ~ |v|, k <= 0
    double k = std::log(m) / std::log(q.modulus());
    long k0 = static_cast<long>(std::llround(k));
    for (long kk = k0 - 1; kk <= k0 + 1; ++kk) {
        if (kk > 0) continue;
        cx lattice = q.ipow(kk);
        if (std::abs(v - lattice) < 1e-9 * std::abs(lattice))
            throw domain_error(std::string("watson_residual: parameter ") + what +
                               " hits the q^{Z<=0} pole set");
    }
}

}  // namespace detail

// Watson's connection formula for 2phi1(a,b;c;q,x), evaluated as printed:
// eight infinite Pochhammer prefactors per term, both 2phi1 series summed in
// their convergence regions (|x| < 1 and |cq/(abx)| < 1). Returns
// |LHS - RHS| / max(|LHS|, |RHS|, |term1| + |term2|).
inline double watson_residual(cx a, cx b, cx c, cx x, const q_base& q,
                              const series_params& p = {}) {
    if (a == cx(0.0) || b == cx(0.0))
        throw domain_error("watson_residual: a and b must be nonzero");
    if (!(std::abs(x) < 1.0))
        throw domain_error("watson_residual: |x| < 1 required");
    const cx qq = q.value();
    const cx z = c * qq / (a * b * x);
    // |z| >= 1 makes the RHS series diverge; rphi would also reject it, but
    // the precondition names it a ConvergenceError explicitly.
    if (!(std::abs(z) < 1.0))
        throw convergence_error("watson_residual: |cq/(abx)| < 1 required");

    detail::require_off_pole(a / b, q, "a/b");
    detail::require_off_pole(b / a, q, "b/a");
    detail::require_off_pole(c, q, "c");
    detail::require_off_pole(x, q, "x");
    detail::require_off_pole(qq / x, q, "q/x");

    cx lhs = rphi(hyper_spec({a, b}, {c}, q), x, p);

    cx den_x = qpochhammer_inf(x, q, p) * qpochhammer_inf(qq / x, q, p) *
               qpochhammer_inf(c, q, p);
    cx term1 = qpochhammer_inf(b, q, p) * qpochhammer_inf(c / a, q, p) *
               qpochhammer_inf(a * x, q, p) * qpochhammer_inf(qq / (a * x), q, p) /
               (den_x * qpochhammer_inf(b / a, q, p)) *
               rphi(hyper_spec({a, a * qq / c}, {a * qq / b}, q), z, p);
    cx term2 = qpochhammer_inf(a, q, p) * qpochhammer_inf(c / b, q, p) *
               qpochhammer_inf(b * x, q, p) * qpochhammer_inf(qq / (b * x), q, p) /
               (den_x * qpochhammer_inf(a / b, q, p)) *
               rphi(hyper_spec({b, b * qq / c}, {b * qq / a}, q), z, p);

    cx rhs = term1 + term2;
    return scaled_residual(lhs, rhs, std::abs(term1) + std::abs(term2));
}

// Scaled residual of the main connection formula at x in C^*. The LHS is
// A_{q^2}(-q^3/x^2); the RHS combines theta and Ai_q with base q. Theta
// prefactors below 1e-250 in magnitude are exact zeros of the x in -q^Z
// lattice and are treated as such. The residual scale includes the
// term-magnitude sums of both sides: for |x| large the two RHS products (and
// the LHS series internally) cancel at a scale far above the value, and that
// scale is the meaningful yardstick there.
inline double connection_residual(cx x, const q_base& q, const series_params& p = {}) {
    if (x == cx(0.0)) throw domain_error("connection_residual: x must be nonzero");
    const cx qq = q.value();

    q_base q2(q.squared());
    sum_result lhs = ramanujan_aq_scaled(-qq * qq * qq / (x * x), q2, p);

    cx pref = 1.0 / (qpochhammer_inf(qq, q, p) * qpochhammer_inf(-1.0, q, p));
    cx th_plus = theta(x / qq, q, p);
    cx th_minus = theta(-x / qq, q, p);
    if (std::abs(th_plus) < 1e-250) th_plus = 0.0;
    if (std::abs(th_minus) < 1e-250) th_minus = 0.0;

    cx t1 = th_plus == cx(0.0) ? cx(0.0) : pref * th_plus * qairy_aiq(-x, q, p);
    cx t2 = th_minus == cx(0.0) ? cx(0.0) : pref * th_minus * qairy_aiq(x, q, p);
    cx rhs = t1 + t2;

    double scale = std::max(lhs.abs_sum, std::abs(t1) + std::abs(t2));
    return scaled_residual(lhs.value, rhs, scale);
}

}  // namespace qsf

#endif
