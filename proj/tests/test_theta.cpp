#include <catch2/catch_amalgamated.hpp>

#include "qsf/theta.hpp"

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

bool on_zero_lattice(cx x, const q_base& q) {
    // theta zeros sit on -q^Z
    double k = std::log(std::abs(x)) / std::log(q.modulus());
    long k0 = static_cast<long>(std::llround(k));
    for (long kk = k0 - 2; kk <= k0 + 2; ++kk)
        if (std::abs(x + q.ipow(kk)) < 1e-3 * std::abs(q.ipow(kk))) return true;
    return false;
}

}  // namespace

TEST_CASE("theta rejects x = 0") {
    q_base q(0.5);
    CHECK_THROWS_AS(theta_series(cx(0.0), q), domain_error);
    CHECK_THROWS_AS(theta_product(cx(0.0), q), domain_error);
}

TEST_CASE("theta vanishes on the -q^Z lattice") {
    q_base q(0.5);
    sum_result s = theta_series_scaled(cx(-1.0), q);
    CHECK_THAT(std::abs(s.value), WithinAbs(0.0, 1e-14 * s.term_scale));
    CHECK(theta_product(cx(-1.0), q) == cx(0.0));  // (1;q)_inf factor

    for (int m = -3; m <= 3; ++m) {
        cx x = -q.ipow(m);
        sum_result sm = theta_series_scaled(x, q);
        CHECK_THAT(std::abs(sm.value), WithinAbs(0.0, 1e-12 * sm.term_scale));
        CHECK_THAT(std::abs(theta_product(x, q)), WithinAbs(0.0, 1e-13 * sm.term_scale));
    }
}

TEST_CASE("series and product forms cross-check at spec points") {
    {
        q_base q(0.5);
        cx a = theta_series(cx(2.0), q), b = theta_product(cx(2.0), q);
        CHECK_THAT(std::abs(a - b) / std::abs(b), WithinAbs(0.0, 1e-12));
    }
    {
        q_base q(0.3);
        cx a = theta_series(cx(1.0), q), b = theta_product(cx(1.0), q);
        CHECK_THAT(std::abs(a - b) / std::abs(b), WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("triple product identity over random points") {
    rng64 rng{2024};
    int tested = 0;
    while (tested < 200) {
        q_base q(rng.point(0.05, 0.9));
        cx x = rng.point(0.05, 20.0);
        if (on_zero_lattice(x, q)) continue;
        sum_result s = theta_series_scaled(x, q);
        cx p = theta_product(x, q);
        double scale = std::max(std::abs(s.value), s.term_scale);
        CHECK(std::abs(s.value - p) <= 1e-10 * scale);
        ++tested;
    }
}

TEST_CASE("q-shift identity theta(q^k x) = q^{-k(k-1)/2} x^{-k} theta(x)") {
    rng64 rng{7};
    for (int trial = 0; trial < 40; ++trial) {
        q_base q(rng.uniform(0.15, 0.85));
        cx x = rng.point(0.1, 8.0);
        if (on_zero_lattice(x, q)) continue;
        cx tx = theta(x, q);
        for (int k = -5; k <= 5; ++k) {
            cx lhs = theta(q.ipow(k) * x, q);
            cx xk = 1.0;
            for (int j = 0; j < std::abs(k); ++j) xk *= (k > 0 ? x : 1.0 / x);
            cx rhs = tx / (q.triangular_pow(k) * xk);
            CHECK(scaled_residual(lhs, rhs) <= 1e-9);
        }
    }
}

TEST_CASE("inversion x theta(1/x) = theta(x)") {
    rng64 rng{8};
    for (int trial = 0; trial < 60; ++trial) {
        q_base q(rng.uniform(0.15, 0.85));
        cx x = rng.point(0.05, 20.0);
        if (on_zero_lattice(x, q)) continue;
        cx lhs = x * theta(1.0 / x, q);
        cx rhs = theta(x, q);
        CHECK(scaled_residual(lhs, rhs) <= 1e-10);
    }
}

TEST_CASE("sign-flip ratio r(x) = theta(-ax)/theta(ax) satisfies r(qx) = -r(x)") {
    rng64 rng{9};
    for (int trial = 0; trial < 40; ++trial) {
        q_base q(rng.uniform(0.2, 0.8));
        cx lam = rng.point(0.3, 3.0);
        cx x = rng.point(0.1, 5.0);
        if (on_zero_lattice(lam * x, q) || on_zero_lattice(-lam * x, q) ||
            on_zero_lattice(lam * x * q.value(), q))
            continue;
        auto r = [&](cx y) { return theta(-lam * y, q) / theta(lam * y, q); };
        CHECK(scaled_residual(r(q.value() * x), -r(x)) <= 1e-9);
    }
}
