// Identity-verification suites over seeded random grids, with
// machine-readable reports. Every suite maps to one family of library
// invariants; thresholds are pinned here. Reports are byte-deterministic
// functions of (suite, config): the sampler is hand-rolled (splitmix64) so
// no standard-library distribution quirks can leak into the output, and
// records are sorted by residual with index tiebreak.

#ifndef QSF_VERIFY_HPP
#define QSF_VERIFY_HPP

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qsf/airy.hpp"
#include "qsf/base.hpp"
#include "qsf/bessel.hpp"
#include "qsf/borel.hpp"
#include "qsf/connection.hpp"
#include "qsf/hypergeometric.hpp"
#include "qsf/laplace.hpp"
#include "qsf/pochhammer.hpp"
#include "qsf/series.hpp"
#include "qsf/theta.hpp"

namespace qsf {

// ---------------------------------------------------------------------------
// Deterministic sampling
// ---------------------------------------------------------------------------

class point_sampler {
  public:
    explicit point_sampler(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // log-uniform modulus, uniform phase; avoids clustering at scale extremes
    cx annulus(double mod_lo, double mod_hi) {
        double m = std::exp(uniform(std::log(mod_lo), std::log(mod_hi)));
        double ph = uniform(0.0, 2.0 * M_PI);
        return m * std::exp(cx(0.0, ph));
    }

  private:
    std::uint64_t state_;
};

// True when x lies within rel_tol (relative) of s*q^k for s in signs and some
// integer k; nearness only happens for k near log|x|/log|q|.
inline bool near_power_lattice(cx x, const q_base& q, double rel_tol,
                               bool plus_sign = true, bool minus_sign = true) {
    double m = std::abs(x);
    if (!(m > 0.0)) return true;
    long k0 = static_cast<long>(std::llround(std::log(m) / std::log(q.modulus())));
    for (long k = k0 - 2; k <= k0 + 2; ++k) {
        cx lattice = q.ipow(k);
        double scale = std::abs(lattice);
        if (plus_sign && std::abs(x - lattice) < rel_tol * scale) return true;
        if (minus_sign && std::abs(x + lattice) < rel_tol * scale) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Config and report
// ---------------------------------------------------------------------------

enum class report_format { json, csv };

struct run_config {
    q_base q{cx(0.5)};
    series_params params{};
    std::uint64_t seed = 7;
    int points = 100;
    report_format format = report_format::json;
    double radius = 0.0;  // 0 = operation default
    int nodes = 512;
};

struct check_record {
    cx x;
    cx lhs;
    cx rhs;
    double residual = 0.0;
};

struct verify_report {
    std::string suite;
    cx q;
    std::uint64_t seed = 0;
    int points = 0;
    double threshold = 0.0;
    double max_residual = 0.0;
    bool pass = false;
    int resamples = 0;
    double elapsed_ms = 0.0;  // stderr only; never serialized
    std::vector<check_record> records;
};

namespace detail {

inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt_pair(cx v) {
    return "[" + fmt_double(v.real()) + "," + fmt_double(v.imag()) + "]";
}

// "a+bi" without commas, CSV-safe; plain real when imag is zero.
inline std::string fmt_complex_flat(cx v) {
    if (v.imag() == 0.0) return fmt_double(v.real());
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
    return buf;
}

}  // namespace detail

inline std::string to_json(const verify_report& r) {
    std::string out = "{\"suite\":\"" + r.suite + "\"";
    out += ",\"q\":" + detail::fmt_pair(r.q);
    out += ",\"seed\":" + std::to_string(r.seed);
    out += ",\"points\":" + std::to_string(r.points);
    out += ",\"threshold\":" + detail::fmt_double(r.threshold);
    out += ",\"resamples\":" + std::to_string(r.resamples);
    out += ",\"max_residual\":" + detail::fmt_double(r.max_residual);
    out += std::string(",\"pass\":") + (r.pass ? "true" : "false");
    out += ",\"records\":[";
    for (size_t i = 0; i < r.records.size(); ++i) {
        const auto& rec = r.records[i];
        if (i) out += ",";
        out += "{\"x\":" + detail::fmt_pair(rec.x) + ",\"lhs\":" + detail::fmt_pair(rec.lhs) +
               ",\"rhs\":" + detail::fmt_pair(rec.rhs) +
               ",\"residual\":" + detail::fmt_double(rec.residual) + "}";
    }
    out += "]}";
    return out;
}

inline std::string to_csv(const verify_report& r) {
    std::string out = "suite,q,seed,points,max_residual,pass\n";
    out += r.suite + "," + detail::fmt_complex_flat(r.q) + "," + std::to_string(r.seed) +
           "," + std::to_string(r.points) + "," + detail::fmt_double(r.max_residual) +
           "," + (r.pass ? "true" : "false") + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Suite implementations
// ---------------------------------------------------------------------------

namespace suites {

// Sample from the annulus, resampling away from the +-q^Z lattices where
// theta degenerates; gives up gracefully after a bounded number of retries.
inline cx lattice_safe_point(point_sampler& rng, const run_config& cfg, double lo,
                             double hi, int& resamples) {
    for (int tries = 0; tries < 100; ++tries) {
        cx x = rng.annulus(lo, hi);
        if (!near_power_lattice(x, cfg.q, 1e-6) &&
            !near_power_lattice(x / cfg.q.value(), cfg.q, 1e-6) &&
            !near_power_lattice(-x / cfg.q.value(), cfg.q, 1e-6)) {
            return x;
        }
        ++resamples;
    }
    return rng.annulus(lo, hi);
}

inline verify_report triple_product(const run_config& cfg) {
    verify_report r;
    point_sampler rng(cfg.seed);
    for (int i = 0; i < cfg.points; ++i) {
        cx x = lattice_safe_point(rng, cfg, 0.05, 20.0, r.resamples);
        sum_result s = theta_series_scaled(x, cfg.q, cfg.params);
        cx pr = theta_product(x, cfg.q, cfg.params);
        double res = std::abs(s.value - pr) / std::max(std::abs(s.value), s.term_scale);
        r.records.push_back({x, s.value, pr, res});
    }
    return r;
}

inline verify_report theta_shift(const run_config& cfg) {
    verify_report r;
    point_sampler rng(cfg.seed);
    const cx q = cfg.q.value();
    for (int i = 0; i < cfg.points; ++i) {
        cx x = lattice_safe_point(rng, cfg, 0.05, 10.0, r.resamples);
        cx base_theta = theta(x, cfg.q, cfg.params);
        double worst = 0.0;
        cx worst_lhs = 0.0, worst_rhs = 0.0;
        for (int k = -5; k <= 5; ++k) {
            cx lhs = theta(cfg.q.ipow(k) * x, cfg.q, cfg.params);
            cx xk = 1.0;
            for (int j = 0; j < std::abs(k); ++j) xk *= (k > 0 ? x : 1.0 / x);
            cx rhs = base_theta / (cfg.q.triangular_pow(k) * xk);
            double res = scaled_residual(lhs, rhs);
            if (res >= worst) {
                worst = res;
                worst_lhs = lhs;
                worst_rhs = rhs;
            }
        }
        r.records.push_back({x, worst_lhs, worst_rhs, worst});

        // sign-flip consequence: r(x) = theta(-lambda x)/theta(lambda x)
        // satisfies r(qx) = -r(x)
        cx lam = lattice_safe_point(rng, cfg, 0.2, 5.0, r.resamples);
        cx x2 = lattice_safe_point(rng, cfg, 0.05, 10.0, r.resamples);
        while (near_power_lattice(lam * x2, cfg.q, 1e-6) ||
               near_power_lattice(lam * x2 * q, cfg.q, 1e-6)) {
            x2 = lattice_safe_point(rng, cfg, 0.05, 10.0, r.resamples);
            ++r.resamples;
        }
        auto ratio = [&](cx y) {
            return theta(-lam * y, cfg.q, cfg.params) / theta(lam * y, cfg.q, cfg.params);
        };
        cx lhs = ratio(q * x2), rhs = -ratio(x2);
        r.records.push_back({x2, lhs, rhs, scaled_residual(lhs, rhs)});
    }
    return r;
}

inline verify_report inversion(const run_config& cfg) {
    verify_report r;
    point_sampler rng(cfg.seed);
    for (int i = 0; i < cfg.points; ++i) {
        cx x = lattice_safe_point(rng, cfg, 0.05, 20.0, r.resamples);
        cx lhs = x * theta(1.0 / x, cfg.q, cfg.params);
        cx rhs = theta(x, cfg.q, cfg.params);
        r.records.push_back({x, lhs, rhs, scaled_residual(lhs, rhs)});
    }
    return r;
}

inline verify_report eq3(const run_config& cfg) {
    verify_report r;
    point_sampler rng(cfg.seed);
    qdiff_operator op = ramanujan_equation(cfg.q);
    auto u = [&](cx y) { return ramanujan_aq(y, cfg.q, cfg.params); };
    for (int i = 0; i < cfg.points; ++i) {
        cx x = rng.annulus(0.05, 10.0);
        double res = qdiff_residual(op, u, x, cfg.q);
        r.records.push_back({x, u(x), cx(0.0), res});
    }
    return r;
}

inline verify_report eq4(const run_config& cfg) {
    verify_report r;
    point_sampler rng(cfg.seed);
    qdiff_operator op = qairy_equation(cfg.q);
    auto u = [&](cx y) { return qairy_aiq(y, cfg.q, cfg.params); };
    for (int i = 0; i < cfg.points; ++i) {
        cx x = rng.annulus(0.05, 10.0);
        double res = qdiff_residual(op, u, x, cfg.q);
        r.records.push_back({x, u(x), cx(0.0), res});
    }
    return r;
}

inline verify_report hahn(const run_config& cfg) {
    verify_report r;
    point_sampler rng(cfg.seed);
    const cx nus[4] = {0.0, 0.5, 1.0, 2.3};
    for (int i = 0; i < cfg.points; ++i) {
        cx nu = nus[i % 4];
        cx x = rng.annulus(0.05, 1.0);
        double res = jackson_relation_residual(nu, x, cfg.q, cfg.params);
        r.records.push_back({x, nu, cx(0.0), res});
    }
    return r;
}

inline verify_report oyama(const run_config& cfg) {
    verify_report r;
    point_sampler rng(cfg.seed);
    for (int i = 0; i < cfg.points; ++i) {
        cx x = rng.annulus(0.05, 3.0);
        double res = hahn_exton_airy_residual(x, cfg.q, cfg.params);
        r.records.push_back({x, cx(0.0), cx(0.0), res});
    }
    return r;
}

inline verify_report watson(const run_config& cfg) {
    verify_report r;
    point_sampler rng(cfg.seed);
    int done = 0;
    while (done < cfg.points) {
        cx a = rng.annulus(0.2, 0.9);
        cx b = rng.annulus(0.2, 0.9);
        cx c = rng.annulus(0.2, 0.9);
        cx x = rng.annulus(0.3, 0.8);
        if (!(std::abs(c * cfg.q.value() / (a * b * x)) < 0.85) ||
            std::abs(a / b - 1.0) < 0.05) {
            ++r.resamples;
            continue;
        }
        double res;
        try {
            res = watson_residual(a, b, c, x, cfg.q, cfg.params);
        } catch (const domain_error&) {
            ++r.resamples;
            continue;
        }
        r.records.push_back({x, a, b, res});
        ++done;
    }
    return r;
}

inline verify_report borel_laplace(const run_config& cfg) {
    verify_report r;
    point_sampler rng(cfg.seed);
    // Conditioning of the contour reconstruction grows like
    // exp(deg^2 ln(1/|q|) / 8); cap the degree so 1e-9 stays reachable in
    // doubles at small |q|.
    double L = std::log(1.0 / cfg.q.modulus());
    int degree = std::min(12, static_cast<int>(std::sqrt(104.0 / L)));
    degree = std::max(degree, 3);
    int pts_per_poly = std::max(2, cfg.points / 10);
    for (int pi = 0; pi < 10; ++pi) {
        std::vector<cx> coeffs(static_cast<size_t>(degree) + 1);
        for (auto& cc : coeffs) cc = cx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        truncated_series poly(coeffs, cfg.q);
        truncated_series borel = q_borel(poly);
        double radius = cfg.radius > 0.0 ? cfg.radius : borel_polynomial_radius(cfg.q, degree);
        contour_config contour(radius, cfg.nodes);
        auto g = [&](cx tau) {
            cx acc = 0.0, tp = 1.0;
            for (int n = 0; n <= degree; ++n, tp *= tau) acc += borel[n] * tp;
            return acc;
        };
        for (int i = 0; i < pts_per_poly; ++i) {
            cx t = rng.annulus(0.1, 2.0);
            cx recovered = q_laplace(g, t, cfg.q, contour, cfg.params).value;
            cx direct = 0.0, tp = 1.0;
            for (int n = 0; n <= degree; ++n, tp *= t) direct += poly[n] * tp;
            double res = std::abs(recovered - direct) / std::max(1.0, std::abs(direct));
            r.records.push_back({t, recovered, direct, res});
        }
    }
    return r;
}

inline verify_report g_equation(const run_config& cfg) {
    verify_report r;
    point_sampler rng(cfg.seed);
    const cx q = cfg.q.value();
    const cx q2 = q * q;
    double r0 = cfg.q.inv_modulus_squared();
    for (int i = 0; i < cfg.points; ++i) {
        cx tau;
        for (int tries = 0;; ++tries) {
            tau = rng.annulus(0.05 * r0, 0.95 * r0);
            try {
                (void)g_eval(tau, cfg.q, cfg.params);
                (void)g_eval(q * tau, cfg.q, cfg.params);
                break;
            } catch (const pole_error&) {
                ++r.resamples;
                if (tries > 100) throw;
            }
        }
        cx lhs = g_eval(q * tau, cfg.q, cfg.params);
        cx rhs = (1.0 + q2 * tau) * (1.0 - q2 * tau) * g_eval(tau, cfg.q, cfg.params);
        r.records.push_back({tau, lhs, rhs, scaled_residual(lhs, rhs)});
    }
    // coefficient recurrence q^n g_n = g_n - q^4 g_{n-2} through order 20
    truncated_series g = q_borel(connection_f_series(cfg.q, 24));
    for (int n = 2; n <= 20; ++n) {
        cx lhs = cfg.q.ipow(n) * g[n];
        cx rhs = g[n] - cfg.q.ipow(4) * g[n - 2];
        double res = std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0});
        r.records.push_back({cx(static_cast<double>(n)), lhs, rhs, res});
    }
    return r;
}

inline verify_report residues(const run_config& cfg) {
    verify_report r;
    point_sampler rng(cfg.seed);

    // residue-lemma item (1) against a local contour around the pole
    for (int k = 0; k <= 5; ++k) {
        cx lam = 0.7;
        cx pole = lam * cfg.q.ipow(-k);
        double rad = 0.05 * std::abs(pole) * std::min(1.0, std::abs(1.0 - cfg.q.value()) / 2.0);
        int M = 2048;
        cx acc = 0.0;
        for (int j = 0; j < M; ++j) {
            cx w = rad * std::exp(cx(0.0, 2.0 * M_PI * j / M));
            cx tau = pole + w;
            acc += w / (qpochhammer_inf(tau / lam, cfg.q, cfg.params) * tau);
        }
        cx quad = acc / static_cast<double>(M);
        cx formula = residue_vanishing_factor(k, cfg.q, cfg.params);
        r.records.push_back({pole, formula, quad, scaled_residual(formula, quad)});
    }

    // residue-lemma item (2) against direct evaluation
    for (int k = 1; k <= 4; ++k) {
        cx lam = rng.annulus(0.2, 0.8);
        cx direct = 1.0 / qpochhammer_inf(lam * cfg.q.ipow(-k), cfg.q, cfg.params);
        cx formula = reciprocal_shifted_pochhammer(lam, k, cfg.q, cfg.params);
        r.records.push_back({lam, formula, direct, scaled_residual(formula, direct)});
    }

    // triple cross-oracle and ledger decay at sampled t
    q_base q2(cfg.q.squared());
    contour_config contour(cfg.radius > 0.0 ? cfg.radius : 0.5 * cfg.q.inv_modulus_squared(),
                           cfg.nodes);
    int nt = std::max(1, cfg.points / 10);
    for (int i = 0; i < nt; ++i) {
        cx t = lattice_safe_point(rng, cfg, 0.1, 10.0, r.resamples);
        residue_ledger led = residue_sum_f(t, cfg.q, cfg.params);
        cx via_contour = q_laplace_contour(t, cfg.q, contour, cfg.params).value;
        cx direct = ramanujan_aq(-cfg.q.ipow(3) * t * t, q2, cfg.params);
        r.records.push_back(
            {t, via_contour, led.sum, scaled_residual(via_contour, led.sum, led.abs_sum)});
        r.records.push_back({t, led.sum, direct, scaled_residual(led.sum, direct, led.abs_sum)});
        r.records.push_back({t, via_contour, direct, scaled_residual(via_contour, direct)});

        // ledger tail decay: pair magnitudes shrink monotonically once k
        // passes the peak at ~1 + ln(1/|t|)/ln(1/|q|)
        double L = std::log(1.0 / cfg.q.modulus());
        int k_dec = std::max(
            5, 2 + static_cast<int>(std::ceil(std::log(std::max(1.0, 1.0 / std::abs(t))) / L)));
        bool decays = true;
        for (int k = k_dec; k + 3 < led.k_used; ++k) {
            double mk = std::abs(led.entries[2 * k].residue) +
                        std::abs(led.entries[2 * k + 1].residue);
            double mk1 = std::abs(led.entries[2 * k + 2].residue) +
                         std::abs(led.entries[2 * k + 3].residue);
            if (mk1 >= mk && mk > 0.0) decays = false;
        }
        r.records.push_back({t, cx(0.0), cx(0.0), decays ? 0.0 : 1.0});
    }

    // contour-radius independence (fractions of the pole radius; the tight
    // one needs more nodes because the integrand is nearly singular there)
    cx t = lattice_safe_point(rng, cfg, 0.3, 3.0, r.resamples);
    double r0 = cfg.q.inv_modulus_squared();
    const double fractions[3] = {0.125, 0.375, 0.975};
    cx vals[3];
    for (int i = 0; i < 3; ++i) {
        contour_config cc(fractions[i] * r0, std::max(cfg.nodes, 4096));
        vals[i] = q_laplace_contour(t, cfg.q, cc, cfg.params).value;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            r.records.push_back({t, vals[i], vals[j], scaled_residual(vals[i], vals[j])});
    return r;
}

inline verify_report connection(const run_config& cfg) {
    verify_report r;
    point_sampler rng(cfg.seed);
    for (int i = 0; i < cfg.points; ++i) {
        cx x = lattice_safe_point(rng, cfg, 0.05, 10.0, r.resamples);
        double res = connection_residual(x, cfg.q, cfg.params);
        q_base q2(cfg.q.squared());
        cx lhs = ramanujan_aq(-cfg.q.ipow(3) / (x * x), q2, cfg.params);
        r.records.push_back({x, lhs, lhs, res});
    }
    return r;
}

inline verify_report psi(const run_config& cfg) {
    verify_report r;
    double res = psi_identity_residual(cfg.q, cfg.params);
    r.records.push_back({cfg.q.value(), cx(0.0), cx(0.0), res});
    return r;
}

inline verify_report gauge(const run_config& cfg) {
    verify_report r;
    point_sampler rng(cfg.seed);
    for (int i = 0; i < cfg.points; ++i) {
        cx t;
        for (int tries = 0;; ++tries) {
            t = rng.annulus(0.05, 10.0);
            if (!near_power_lattice(t, cfg.q, 1e-6, true, false)) break;
            ++r.resamples;
            if (tries > 100) break;
        }
        auto [r1, r2] = gauge_lemma_check(t, cfg.q, cfg.params);
        r.records.push_back({t, cx(r1), cx(r2), std::max(r1, r2)});
    }
    return r;
}

inline verify_report divergent_formal(const run_config& cfg) {
    verify_report r;
    // window sized so the zero-radius tail rule leaves trusted indices
    double L = std::log(1.0 / cfg.q.modulus());
    int N = 12;
    int M = std::max(25, N + 1 + static_cast<int>(std::ceil(36.0 / ((N + 1) * L))));
    double res = divergent_second_solution_check(cfg.q, M, N, cfg.params);
    r.records.push_back({cx(static_cast<double>(M), static_cast<double>(N)), cx(0.0),
                         cx(0.0), res});

    // negative control: theta alone (companion series = 1) must NOT satisfy
    // the equation; encode "control failed to fail" as residual 1.
    laurent_window th = theta_window(cfg.q, M);
    truncated_series one(std::vector<cx>{cx(1.0)}, cfg.q);
    laurent_window prod = multiply(th, one);
    laurent_window resid = apply(second_order_x_equation(cfg.q.value()), prod);
    double worst = 0.0, scale = 0.0;
    for (int n = resid.trust_lo(); n <= std::min(resid.trust_hi(), -1); ++n) {
        worst = std::max(worst, std::abs(resid[n]));
        scale = std::max(scale, std::abs(prod[n]));
    }
    double control = worst / scale;
    r.records.push_back({cx(0.0), cx(control), cx(0.0), control > 1e-3 ? 0.0 : 1.0});
    return r;
}

inline verify_report shearing(const run_config& cfg) {
    verify_report r;
    const int N = 16;
    truncated_series u = connection_u_series(cfg.q, N);

    // pre-shear equation (K x sigma^2 - sigma + 1) u = 0 with base q^2
    formal_operator pre = second_order_x_equation(-cfg.q.ipow(5));
    truncated_series pre_res = apply(pre, u);
    double worst = 0.0;
    for (int n = 0; n <= pre_res.trusted(); ++n) worst = std::max(worst, std::abs(pre_res[n]));
    r.records.push_back({cx(-1.0), cx(worst), cx(0.0), worst});

    truncated_series v = shearing_map(u);

    // relocation and odd-coefficient structure
    truncated_series f = connection_f_series(cfg.q, v.order());
    double reloc = 0.0;
    for (int n = 0; n <= std::min(v.trusted(), f.trusted()); ++n)
        reloc = std::max(reloc, std::abs(v[n] - f[n]));
    r.records.push_back({cx(0.0), cx(reloc), cx(0.0), reloc});
    double oddmax = 0.0;
    for (int n = 1; n <= v.order(); n += 2) oddmax = std::max(oddmax, std::abs(v[n]));
    r.records.push_back({cx(1.0), cx(oddmax), cx(0.0), oddmax});

    // post-shear equation (K t^2 sigma^2 - sigma + 1) v = 0 with base q
    truncated_series post_res = apply(airy_infinity_equation(cfg.q), v);
    worst = 0.0;
    for (int n = 0; n <= post_res.trusted(); ++n) worst = std::max(worst, std::abs(post_res[n]));
    r.records.push_back({cx(2.0), cx(worst), cx(0.0), worst});
    return r;
}

}  // namespace suites

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

struct suite_definition {
    double threshold;
    const char* description;
    verify_report (*run)(const run_config&);
};

inline const std::map<std::string, suite_definition>& suite_registry() {
    static const std::map<std::string, suite_definition> reg = {
        {"triple-product", {1e-10, "theta bilateral series vs triple product", suites::triple_product}},
        {"theta-shift", {1e-9, "theta(q^k x) shift identity and the sign-flip ratio", suites::theta_shift}},
        {"inversion", {1e-10, "x theta(1/x) = theta(x)", suites::inversion}},
        {"eq3", {1e-9, "(q x sigma^2 - sigma + 1) annihilates A_q", suites::eq3}},
        {"eq4", {1e-9, "(sigma^2 + x sigma - 1) annihilates Ai_q", suites::eq4}},
        {"hahn", {1e-9, "J2 = (-x^2/4;q)_inf J1", suites::hahn}},
        {"oyama", {1e-9, "J3 under q^nu=-1 vs Ai_q(-q x^2)", suites::oyama}},
        {"watson", {1e-8, "Watson connection formula for 2phi1", suites::watson}},
        {"borel-laplace", {1e-9, "L_q o B_q = id on polynomials", suites::borel_laplace}},
        {"g-equation", {1e-11, "g(q tau) = (1+q^2 tau)(1-q^2 tau) g(tau) and coefficients", suites::g_equation}},
        {"residues", {1e-8, "residue lemmas, contour = residue sum = A_{q^2}", suites::residues}},
        {"connection", {1e-9, "A_{q^2}(-q^3/x^2) connection formula", suites::connection}},
        {"psi", {1e-8, "psi(q) series = product", suites::psi}},
        {"gauge", {1e-8, "sigma E = -q^2 t E and sigma^2 E = q^5 t^2 E", suites::gauge}},
        {"divergent-formal", {1e-10, "theta-times-divergent-series second solution", suites::divergent_formal}},
        {"shearing", {1e-12, "t^2 = x shearing onto the infinity equation", suites::shearing}},
    };
    return reg;
}

// Runs one suite; throws domain_error for unknown names. Records end up
// sorted by residual descending (index ascending on ties).
inline verify_report run_suite(const std::string& name, const run_config& cfg) {
    auto it = suite_registry().find(name);
    if (it == suite_registry().end())
        throw shape_error("unknown suite: " + name);
    auto t0 = std::chrono::steady_clock::now();
    verify_report r = it->second.run(cfg);
    auto t1 = std::chrono::steady_clock::now();

    r.suite = name;
    r.q = cfg.q.value();
    r.seed = cfg.seed;
    r.points = cfg.points;
    r.threshold = it->second.threshold;
    r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    r.max_residual = 0.0;
    for (const auto& rec : r.records) r.max_residual = std::max(r.max_residual, rec.residual);
    r.pass = r.max_residual <= r.threshold;

    std::vector<size_t> idx(r.records.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return r.records[a].residual > r.records[b].residual;
    });
    std::vector<check_record> sorted;
    sorted.reserve(idx.size());
    for (size_t i : idx) sorted.push_back(r.records[i]);
    r.records = std::move(sorted);
    return r;
}

}  // namespace qsf

#endif
