// The q-Borel transformation as a coefficient map, its operational relation
// with t^m sigma^l, the first-order equation it induces for g = B_q f, the
// shearing transformation t^2 = x, and the two formal/functional checks that
// close out the structure around the infinity point: the divergent second
// solution of the Ramanujan equation and the theta-gauge lemma.

#ifndef QSF_BOREL_HPP
#define QSF_BOREL_HPP

#include <utility>

#include "qsf/pochhammer.hpp"
#include "qsf/series.hpp"
#include "qsf/theta.hpp"

namespace qsf {

// B_q: a_n -> a_n q^{-n(n-1)/2}. The twist grows like |q|^{-n^2/2}; the
// guard trips before coefficients become unrepresentable.
inline truncated_series q_borel(const truncated_series& s) {
    std::vector<cx> c(static_cast<size_t>(s.order()) + 1);
    for (int n = 0; n <= s.order(); ++n) {
        double e = -0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
        cx v = s[n] * std::exp(e * std::log(s.base().value()));
        if (std::abs(v) > overflow_guard_threshold)
            throw overflow_error("q_borel: coefficient magnitude exceeds the guard");
        c[static_cast<size_t>(n)] = v;
    }
    truncated_series r(std::move(c), s.base());
    r.set_trusted(s.trusted());
    return r;
}

// Max coefficient difference over trusted indices between
//   B_q(t^m sigma^l s)   and   q^{-m(m-1)/2} tau^m sigma^{l-m} B_q(s).
// l - m may be negative; sigma_twist handles signed powers on coefficients.
inline double borel_operational_residual(int m, int l, const truncated_series& s) {
    if (m < 0 || l < 0) throw shape_error("borel_operational_residual: m, l >= 0");
    truncated_series lhs = q_borel(shift_up(sigma_twist(s, l), m));
    truncated_series rhs_inner = shift_up(sigma_twist(q_borel(s), l - m), m);
    double e = -0.5 * static_cast<double>(m) * static_cast<double>(m - 1);
    truncated_series rhs = scale(rhs_inner, std::exp(e * std::log(s.base().value())));

    int hi = std::min(lhs.trusted(), rhs.trusted());
    double worst = 0.0;
    for (int n = 0; n <= hi; ++n) worst = std::max(worst, std::abs(lhs[n] - rhs[n]));
    return worst;
}

// Applying B_q to (K t^2 sigma^2 - sigma + 1) f = 0 term-by-term via the
// operational relation yields the first-order equation
//   g(q tau) = (1 + K q^{-1} tau^2) g(tau).
// Returns the operator encoding g(q tau) - (1 + K q^{-1} tau^2) g(tau), i.e.
// the residual form whose coefficients must vanish on g = B_q f.
inline formal_operator derive_g_equation(const formal_operator& eq, const q_base& q) {
    if (eq.terms.size() != 3)
        throw shape_error("derive_g_equation: expected the three-term t^2 equation");
    const formal_term* lead = nullptr;
    bool have_sigma = false, have_one = false;
    for (const auto& t : eq.terms) {
        if (t.x_power == 2 && t.sigma_power == 2 && std::abs(t.constant) > 0.0)
            lead = &t;
        else if (t.x_power == 0 && t.sigma_power == 1 &&
                 std::abs(t.constant + 1.0) < 1e-12)
            have_sigma = true;
        else if (t.x_power == 0 && t.sigma_power == 0 &&
                 std::abs(t.constant - 1.0) < 1e-12)
            have_one = true;
    }
    if (!lead || !have_sigma || !have_one)
        throw shape_error("derive_g_equation: operator is not of the K t^2 sigma^2 - sigma + 1 shape");
    cx K = lead->constant;
    return formal_operator{{1.0, 0, 1}, {-1.0, 0, 0}, {-K / q.value(), 2, 0}};
}

// Shearing transformation t^2 = x, v(t) = u(t^2), p = sqrt(q): coefficient
// of x^n relocates to t^{2n}, odd coefficients are exactly zero, and the
// base changes to the principal square root. If (K x sigma_q^2 - sigma_q + 1)
// annihilates u to order N, (K t^2 sigma_p^2 - sigma_p + 1) annihilates the
// image to order 2N.
inline truncated_series shearing_map(const truncated_series& u) {
    int N = u.order();
    std::vector<cx> c(2 * static_cast<size_t>(N) + 1, cx(0.0));
    for (int n = 0; n <= N; ++n) c[2 * static_cast<size_t>(n)] = u[n];
    truncated_series r(std::move(c), q_base(u.base().sqrt_principal()));
    r.set_trusted(std::min(2 * u.trusted() + 1, 2 * N));
    return r;
}

// Taylor coefficients (in x) of A_{q^2}(-q^3 x): a_n = q^{2n^2+3n}/(q^2;q^2)_n.
// Solves (-q^5 x sigma_{q^2}^2 - sigma_{q^2} + 1) u = 0 with base q^2; its
// shearing image is the f(t) series below.
inline truncated_series connection_u_series(const q_base& q, int order) {
    q_base q2(q.squared());
    std::vector<cx> c(static_cast<size_t>(order) + 1);
    cx poch = 1.0;
    for (int n = 0; n <= order; ++n) {
        if (n > 0) poch *= (1.0 - q2.ipow(n));
        c[static_cast<size_t>(n)] = q.ipow(2L * n * n + 3L * n) / poch;
    }
    return truncated_series(std::move(c), q2);
}

// Taylor coefficients (in t) of f(t) = A_{q^2}(-q^3 t^2), base q.
inline truncated_series connection_f_series(const q_base& q, int order) {
    q_base q2(q.squared());
    std::vector<cx> c(static_cast<size_t>(order) + 1, cx(0.0));
    cx poch = 1.0;
    for (int m = 0; 2 * m <= order; ++m) {
        if (m > 0) poch *= (1.0 - q2.ipow(m));
        c[2 * static_cast<size_t>(m)] = q.ipow(2L * m * m + 3L * m) / poch;
    }
    return truncated_series(std::move(c), q);
}

// ---------------------------------------------------------------------------
// Divergent second solution of the Ramanujan equation
// ---------------------------------------------------------------------------

// Coefficients c_n = q^{-n(n+1)/2} / (q;q)_n of the zero-radius companion
// series h with theta(x) h(x) solving (q x sigma^2 - sigma + 1) u = 0.
// Substituting u = theta * h and using theta(q^k x) = q^{-k(k-1)/2} x^{-k}
// theta(x) reduces the equation to h(q^2 x) - h(q x) + x h(x) = 0, whose
// coefficient recurrence c_n q^n (q^n - 1) = -c_{n-1} forces this exponent.
// (The 2phi0(0,0;-;q,.) form of h then has argument -x/q, not -x.)
inline truncated_series divergent_companion_series(const q_base& q, int order) {
    std::vector<cx> c(static_cast<size_t>(order) + 1);
    cx poch = 1.0;
    for (int n = 0; n <= order; ++n) {
        if (n > 0) poch *= (1.0 - q.ipow(n));
        double e = -0.5 * static_cast<double>(n) * static_cast<double>(n + 1);
        cx v = std::exp(e * std::log(q.value())) / poch;
        if (std::abs(v) > overflow_guard_threshold)
            throw overflow_error("divergent_companion_series: coefficient exceeds the guard");
        c[static_cast<size_t>(n)] = v;
    }
    return truncated_series(std::move(c), q);
}

// Forms the window product theta(x) h(x), applies the Ramanujan equation
// formally, and returns the max residual coefficient over the trusted
// window, scaled by the max product coefficient there.
//
// Trust has two layers. The generic product/operator bookkeeping bounds the
// window; on top of that, h has zero radius of convergence, so the truncated
// convolution represents the formal product only where the omitted tail
// (first omitted term c_{N+1} theta_{n-N-1}) is negligible against the kept
// terms. That confines trust to negative indices, with depth growing in |n|.
inline double divergent_second_solution_check(const q_base& q, int half_width,
                                              int order, const series_params& p = {}) {
    if (half_width < order + 5)
        throw shape_error("divergent_second_solution_check: window must exceed order by 5");

    laurent_window th = theta_window(q, half_width);
    truncated_series h = divergent_companion_series(q, order);
    laurent_window product = multiply(th, h);
    laurent_window resid = apply(second_order_x_equation(q.value()), product);

    // first omitted coefficient of h
    double e = -0.5 * static_cast<double>(order + 1) * static_cast<double>(order + 2);
    cx c_next = std::exp(e * std::log(q.value()));
    {
        cx poch = 1.0;
        for (int n = 1; n <= order + 1; ++n) poch *= (1.0 - q.ipow(n));
        c_next /= poch;
    }

    double worst = 0.0;
    double scale = 0.0;
    bool any = false;
    for (int n = std::max(resid.trust_lo(), -half_width + 1); n <= std::min(resid.trust_hi(), -1); ++n) {
        double local = 0.0;
        for (int m = 0; m <= order; ++m)
            local = std::max(local, std::abs(th[n - m] * h[m]));
        double tail = std::abs(c_next * q.triangular_pow(static_cast<long>(n) - order - 1));
        if (tail > p.rel_tol * local) continue;  // truncation hole not negligible here
        any = true;
        worst = std::max(worst, std::abs(resid[n]));
        scale = std::max(scale, std::abs(product[n]));
    }
    if (!any)
        throw shape_error("divergent_second_solution_check: no trusted indices; enlarge the window");
    return worst / scale;
}

// ---------------------------------------------------------------------------
// Theta gauge lemma at the infinity point
// ---------------------------------------------------------------------------

// E(t) = 1/theta(-q^2 t) satisfies sigma_q E = -q^2 t E and
// sigma_q^2 E = q^5 t^2 E. Returns the two scaled residuals.
inline std::pair<double, double> gauge_lemma_check(cx t, const q_base& q,
                                                   const series_params& p = {}) {
    const cx qq = q.value();
    cx th1 = theta(-qq * qq * t, q, p);
    cx th2 = theta(-qq * qq * qq * t, q, p);
    cx th3 = theta(-qq * qq * qq * qq * t, q, p);
    if (std::abs(th1) < 1e-250 || std::abs(th2) < 1e-250 || std::abs(th3) < 1e-250)
        throw domain_error("gauge_lemma_check: t sits on a theta zero");

    cx E = 1.0 / th1;
    cx E1 = 1.0 / th2;  // E(q t)
    cx E2 = 1.0 / th3;  // E(q^2 t)

    double r1 = scaled_residual(E1, -qq * qq * t * E);
    double r2 = scaled_residual(E2, qq * qq * qq * qq * qq * t * t * E);
    return {r1, r2};
}

}  // namespace qsf

#endif
