#include <catch2/catch_amalgamated.hpp>

#include "qsf/hypergeometric.hpp"
#include "qsf/pochhammer.hpp"

using namespace qsf;
using Catch::Matchers::WithinAbs;

namespace {

struct rng64 {
    std::uint64_t s;
    double uniform() {
        s += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return static_cast<double>((z ^ (z >> 31)) >> 11) * 0x1.0p-53;
    }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    cx point(double lo, double hi) {
        double m = std::exp(uniform(std::log(lo), std::log(hi)));
        return m * std::exp(cx(0.0, 2.0 * M_PI * uniform()));
    }
};

// term n of the defining series, computed from scratch
cx direct_term(const hyper_spec& spec, cx x, int n) {
    const q_base& q = spec.base;
    cx num = 1.0;
    for (cx a : spec.upper) num *= qpochhammer(a, q, n);
    cx den = qpochhammer(q.value(), q, n);
    for (cx b : spec.lower) den *= qpochhammer(b, q, n);
    cx sign_factor = 1.0;
    int d = spec.excess();
    for (int i = 0; i < d; ++i)
        sign_factor *= (n % 2 ? -1.0 : 1.0) * q.triangular_pow(n);
    cx xp = 1.0;
    for (int i = 0; i < n; ++i) xp *= x;
    return num / den * sign_factor * xp;
}

}  // namespace

TEST_CASE("rphi at x = 0 is 1") {
    q_base q(0.5);
    hyper_spec spec({cx(0.3)}, {cx(0.7)}, q);
    CHECK(rphi(spec, cx(0.0)) == cx(1.0));
}

TEST_CASE("0phi1(-;0;q,-qx) equals the direct Ramanujan series") {
    q_base q(0.5);
    cx x(0.2);
    // oracle: sum q^{n^2} (-x)^n / (q;q)_n, 50 terms
    cx oracle = 0.0;
    for (int n = 0; n < 50; ++n) {
        double e = static_cast<double>(n) * n;
        cx xp = 1.0;
        for (int i = 0; i < n; ++i) xp *= -x;
        oracle += std::pow(0.5, e) * xp / qpochhammer(q.value(), q, n);
    }
    cx v = rphi(hyper_spec({}, {cx(0.0)}, q), -q.value() * x);
    CHECK_THAT(std::abs(v - oracle) / std::abs(oracle), WithinAbs(0.0, 1e-13));
}

TEST_CASE("1phi1(0;-q;q,-x) equals the direct q-Airy series") {
    q_base q(0.5);
    cx x(0.2);
    cx oracle = 0.0;
    for (int n = 0; n < 50; ++n) {
        cx num = q.triangular_pow(n);
        cx den = qpochhammer(-q.value(), q, n) * qpochhammer(q.value(), q, n);
        cx xp = 1.0;
        for (int i = 0; i < n; ++i) xp *= x;
        oracle += num / den * xp;
    }
    cx v = rphi(hyper_spec({cx(0.0)}, {-q.value()}, q), -(-x));
    CHECK_THAT(std::abs(v - oracle) / std::abs(oracle), WithinAbs(0.0, 1e-13));
}

TEST_CASE("balanced series requires |x| < 1; zero-radius series are rejected") {
    q_base q(0.5);
    hyper_spec balanced({cx(0.3), cx(0.2)}, {cx(0.1)}, q);  // 2phi1
    CHECK_THROWS_AS(rphi(balanced, cx(1.0)), convergence_error);
    CHECK_THROWS_AS(rphi(balanced, cx(1.7)), convergence_error);
    hyper_spec divergent({cx(0.0), cx(0.0)}, {}, q);  // 2phi0
    CHECK_THROWS_AS(rphi(divergent, cx(0.1)), convergence_error);
}

TEST_CASE("lower parameter on the q^{-n} lattice is rejected") {
    q_base q(0.5);
    hyper_spec spec({cx(0.3)}, {cx(4.0)}, q);  // b = q^{-2}
    CHECK_THROWS_AS(rphi(spec, cx(0.2)), domain_error);
}

TEST_CASE("term recurrence equals direct term computation on random specs") {
    rng64 rng{31};
    for (int trial = 0; trial < 12; ++trial) {
        q_base q(rng.uniform(0.2, 0.7));
        int r = static_cast<int>(rng.uniform(0.0, 2.999));
        int s = std::max(r - 1 + static_cast<int>(rng.uniform(0.0, 1.999)), 0);
        std::vector<cx> upper, lower;
        for (int i = 0; i < r; ++i) upper.push_back(rng.point(0.1, 0.9));
        for (int i = 0; i < s; ++i) lower.push_back(rng.point(1.1, 2.0));
        hyper_spec spec(upper, lower, q);
        cx x = rng.point(0.05, spec.excess() == 0 ? 0.8 : 2.0);

        // replay the implementation's recurrence and compare each term with
        // the from-scratch formula
        cx term = 1.0;
        for (int n = 0; n <= 30; ++n) {
            cx direct = direct_term(spec, x, n);
            CHECK_THAT(std::abs(term - direct),
                       WithinAbs(0.0, 1e-12 * std::max(1.0, std::abs(direct))));
            cx qn = q.ipow(n);
            cx ratio = x;
            for (cx a : spec.upper) ratio *= (1.0 - a * qn);
            for (cx b : spec.lower) ratio /= (1.0 - b * qn);
            ratio /= (1.0 - qn * q.value());
            for (int i = 0; i < spec.excess(); ++i) ratio *= -qn;
            term *= ratio;
        }
    }
}

TEST_CASE("psi(q) series equals its product form") {
    CHECK(psi_identity_residual(q_base(0.5)) < 1e-12);

    // small q: three-term expansion 1 + q + q^3 carries the value
    {
        q_base q(0.01);
        double res = psi_identity_residual(q);
        CHECK(res < 1e-12);
        cx series = 1.0 + 0.01 + std::pow(0.01, 3);
        q_base q2(cx(0.0001));
        cx product = qpochhammer_inf(cx(0.0001), q2) / qpochhammer_inf(cx(0.01), q2);
        CHECK_THAT(std::abs(series - product) / std::abs(product), WithinAbs(0.0, 1e-11));
    }

    // slow-decay stress case
    {
        series_params p(10000, 1e-15);
        CHECK(psi_identity_residual(q_base(0.9), p) < 1e-10);
    }
}
