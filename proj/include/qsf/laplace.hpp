// The analytic half of the q-Borel/q-Laplace story: the Borel image
// g(tau) = 1/((-q^2 tau; q)_inf (q^2 tau; q)_inf) of f(t) = A_{q^2}(-q^3 t^2),
// the q-Laplace transformation as a trapezoidal contour integral, and the
// residue summation over the pole lattice tau = +-q^{-2-k} that reconstructs
// f(t) in closed form. Residues are assembled from the two residue-lemma
// pieces explicitly so each piece stays independently testable.

#ifndef QSF_LAPLACE_HPP
#define QSF_LAPLACE_HPP

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qsf/airy.hpp"
#include "qsf/base.hpp"
#include "qsf/pochhammer.hpp"
#include "qsf/theta.hpp"

namespace qsf {

// Contour |tau| = r with M equispaced nodes. The q-Laplace contour for g
// must stay strictly inside the first poles at +-q^{-2}.
struct contour_config {
    double radius;
    int nodes;

    contour_config(double radius_, int nodes_) : radius(radius_), nodes(nodes_) {
        if (!(radius > 0.0)) throw domain_error("contour_config: radius must be positive");
        if (nodes < 64 || nodes % 2 != 0)
            throw domain_error("contour_config: node count must be even and >= 64");
    }

    void require_inside_poles(const q_base& q) const {
        if (!(radius < q.inv_modulus_squared()))
            throw domain_error("contour_config: radius must satisfy r < 1/|q|^2");
    }
};

// Halfway to the first pole; node-doubling error estimates attach to every
// quadrature result.
inline contour_config default_contour(const q_base& q) {
    return contour_config(0.5 * q.inv_modulus_squared(), 512);
}

// g(tau) = 1/((-q^2 tau;q)_inf (q^2 tau;q)_inf); simple poles on the lattice
// tau = +-q^{-2-k}, k >= 0.
inline cx g_eval(cx tau, const q_base& q, const series_params& p = {}) {
    if (tau != cx(0.0)) {
        // pole proximity: |tau -+ q^{-2-k}| / |q^{-2-k}| < 1e-12
        double j_guess = std::log(std::abs(tau)) / std::log(q.modulus());
        long j0 = static_cast<long>(std::llround(j_guess));
        for (long j = j0 - 1; j <= j0 + 1; ++j) {
            if (j > -2) continue;
            cx lattice = q.ipow(j);
            double d = std::min(std::abs(tau - lattice), std::abs(tau + lattice));
            if (d < 1e-12 * std::abs(lattice))
                throw pole_error("g_eval: tau is numerically on the pole lattice");
        }
    }
    cx q2t = q.squared() * tau;
    return 1.0 / (qpochhammer_inf(-q2t, q, p) * qpochhammer_inf(q2t, q, p));
}

struct quadrature_result {
    cx value{};
    double est_err = 0.0;  // node-doubling comparison |I_M - I_{M/2}|
    int nodes = 0;
};

// (1/2 pi i) contour integral of g(tau) theta(t/tau) dtau/tau over |tau|=r,
// evaluated by the trapezoidal rule (spectrally accurate for analytic
// periodic integrands). Generic in the integrand so entire Borel images can
// be transformed with the same engine.
template <typename GFn>
quadrature_result q_laplace(GFn&& g, cx t, const q_base& q, const contour_config& c,
                            const series_params& p = {}) {
    if (t == cx(0.0)) throw domain_error("q_laplace: t must be nonzero");
    const int M = c.nodes;
    cx sum_all = 0.0, sum_even = 0.0;
    for (int j = 0; j < M; ++j) {
        double phi = 2.0 * M_PI * j / M;
        cx tau = c.radius * std::exp(cx(0.0, phi));
        cx v = g(tau) * theta(t / tau, q, p);
        sum_all += v;
        if (j % 2 == 0) sum_even += v;
    }
    quadrature_result r;
    r.value = sum_all / static_cast<double>(M);
    r.est_err = std::abs(r.value - sum_even / static_cast<double>(M / 2));
    r.nodes = M;
    return r;
}

// The q-Laplace transform of the connection-problem g; approximates
// f(t) = A_{q^2}(-q^3 t^2).
inline quadrature_result q_laplace_contour(cx t, const q_base& q, const contour_config& c,
                                           const series_params& p = {}) {
    c.require_inside_poles(q);
    return q_laplace([&](cx tau) { return g_eval(tau, q, p); }, t, q, c, p);
}

// A conditioning-aware radius for transforming the Borel image of a degree-N
// polynomial: at r = |q|^{(N-1)/2} the twisted coefficients a_n q^{-n(n-1)/2} r^n
// stay bounded by max|a_n|, which keeps the contour cancellation benign.
inline double borel_polynomial_radius(const q_base& q, int degree) {
    return std::pow(q.modulus(), 0.5 * (degree - 1));
}

// ---------------------------------------------------------------------------
// Residue lemma pieces
// ---------------------------------------------------------------------------

// Res{ 1/((tau/lambda;q)_inf tau); tau = lambda q^{-k} }
//   = (-1)^{k+1} q^{k(k+1)/2} / ((q;q)_k (q;q)_inf); independent of lambda.
inline cx residue_vanishing_factor(int k, const q_base& q, const series_params& p = {}) {
    double sign = (k % 2 == 0) ? -1.0 : 1.0;
    return sign * q.ipow(static_cast<long>(k) * (k + 1) / 2) /
           (qpochhammer(q.value(), q, k) * qpochhammer_inf(q.value(), q, p));
}

// 1/(lambda q^{-k};q)_inf = (-lambda)^{-k} q^{k(k+1)/2} / ((lambda;q)_inf (q/lambda;q)_k),
// lambda not in q^Z.
inline cx reciprocal_shifted_pochhammer(cx lambda, int k, const q_base& q,
                                        const series_params& p = {}) {
    cx ml = -lambda;
    cx ml_pow = 1.0;
    for (int i = 0; i < k; ++i) ml_pow *= ml;
    return q.ipow(static_cast<long>(k) * (k + 1) / 2) /
           (ml_pow * qpochhammer_inf(lambda, q, p) *
            qpochhammer(q.value() / lambda, q, k));
}

// -Res{ g(tau) theta(t/tau) / tau; tau = sign q^{-2-k} }: the vanishing
// Pochhammer contributes the residue-lemma item (1) value, the spectator
// factor 1/((-sign) q^2 tau;q)_inf at the pole is (-q^{-k};q)_inf^{-1} via
// item (2) with lambda = -1, and theta is evaluated at t/tau = sign t q^{2+k}.
// The minus sign from the residue theorem is carried here so the terms sum
// directly to f(t).
inline cx residue_at_pole(int sign, int k, cx t, const q_base& q,
                          const series_params& p = {}) {
    if (t == cx(0.0)) throw domain_error("residue_at_pole: t must be nonzero");
    if (sign != 1 && sign != -1) throw domain_error("residue_at_pole: sign must be +-1");
    cx th = theta(static_cast<double>(sign) * t * q.ipow(2 + k), q, p);
    cx spectator = reciprocal_shifted_pochhammer(-1.0, k, q, p);
    cx vanishing = residue_vanishing_factor(k, q, p);
    return -(th * spectator * vanishing);
}

// ---------------------------------------------------------------------------
// Residue summation
// ---------------------------------------------------------------------------

struct residue_entry {
    cx tau;      // pole location, +-q^{-2-k}
    cx residue;  // the f-contribution (minus the raw residue)
};

struct residue_ledger {
    std::vector<residue_entry> entries;  // k ascending; within k: +, then -
    cx sum{};
    cx closed_form{};
    double abs_sum = 0.0;  // sum of |entry| magnitudes, the cancellation scale
    int k_used = 0;
};

// Closed two-term form of the residue sum:
//   f(t) = (q,-1;q)_inf^{-1} [ theta(q^2 t) Ai_q(-1/t) + theta(-q^2 t) Ai_q(1/t) ].
inline cx residue_closed_form(cx t, const q_base& q, const series_params& p = {}) {
    if (t == cx(0.0)) throw domain_error("residue_closed_form: t must be nonzero");
    cx pref = 1.0 / (qpochhammer_inf(q.value(), q, p) * qpochhammer_inf(-1.0, q, p));
    cx q2t = q.squared() * t;
    return pref * (theta(q2t, q, p) * qairy_aiq(-1.0 / t, q, p) +
                   theta(-q2t, q, p) * qairy_aiq(1.0 / t, q, p));
}

inline constexpr int residue_k_max = 60;

// Sums the pole residues k = 0,1,2,... (deterministic order: increasing k,
// sign + before -) until the pair magnitude falls below rel_tol times the
// running scale, then cross-checks the result against the closed two-term
// form. Residue terms can grow before the q^{k(k+1)} decay takes over, so
// the scale tracks the largest pair seen.
inline residue_ledger residue_sum_f(cx t, const q_base& q, const series_params& p = {}) {
    if (t == cx(0.0)) throw domain_error("residue_sum_f: t must be nonzero");
    residue_ledger ledger;
    cx acc = 0.0;
    double scale = 0.0;
    int run = 0;
    bool converged = false;
    for (int k = 0; k < residue_k_max; ++k) {
        cx rp = residue_at_pole(+1, k, t, q, p);
        cx rm = residue_at_pole(-1, k, t, q, p);
        ledger.entries.push_back({q.ipow(-2 - k), rp});
        ledger.entries.push_back({-q.ipow(-2 - k), rm});
        acc += rp + rm;
        double pair_mag = std::abs(rp) + std::abs(rm);
        ledger.abs_sum += pair_mag;
        scale = std::max({scale, pair_mag, std::abs(acc)});
        ledger.k_used = k + 1;
        if (pair_mag < p.rel_tol * scale) {
            if (++run >= p.stop_run) {
                converged = true;
                break;
            }
        } else {
            run = 0;
        }
    }
    if (!converged)
        throw truncation_error("residue_sum_f: residue tail did not fall below rel_tol");

    ledger.sum = acc;
    ledger.closed_form = residue_closed_form(t, q, p);
    double agreement = scaled_residual(ledger.sum, ledger.closed_form, ledger.abs_sum);
    if (agreement > std::max(1e-8, 1e3 * p.rel_tol))
        throw qsf_error("residue_sum_f: residue sum disagrees with the closed form");
    return ledger;
}

// {"poles": [{"tau": [re,im], "residue": [re,im]}...], "sum": [re,im],
//  "closed_form": [re,im]}
inline std::string to_json(const residue_ledger& ledger) {
    char buf[160];
    std::string out = "{\"poles\":[";
    for (size_t i = 0; i < ledger.entries.size(); ++i) {
        const auto& e = ledger.entries[i];
        std::snprintf(buf, sizeof buf,
                      "%s{\"tau\":[%.17g,%.17g],\"residue\":[%.17g,%.17g]}",
                      i ? "," : "", e.tau.real(), e.tau.imag(), e.residue.real(),
                      e.residue.imag());
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "],\"sum\":[%.17g,%.17g],\"closed_form\":[%.17g,%.17g]}",
                  ledger.sum.real(), ledger.sum.imag(), ledger.closed_form.real(),
                  ledger.closed_form.imag());
    out += buf;
    return out;
}

}  // namespace qsf

#endif
