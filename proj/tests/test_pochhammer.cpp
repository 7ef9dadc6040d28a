#include <catch2/catch_amalgamated.hpp>

#include "qsf/pochhammer.hpp"

using namespace qsf;
using Catch::Matchers::WithinAbs;

namespace {

// splitmix64, kept local so generator changes elsewhere cannot shift these
// test points
struct rng64 {
    std::uint64_t s;
    double uniform() {
        s += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return static_cast<double>((z ^ (z >> 31)) >> 11) * 0x1.0p-53;
    }
    cx point(double lo, double hi) {
        double m = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * uniform());
        return m * std::exp(cx(0.0, 2.0 * M_PI * uniform()));
    }
};

}  // namespace

TEST_CASE("q_base validates its invariant") {
    CHECK_THROWS_AS(q_base(cx(1.0)), domain_error);
    CHECK_THROWS_AS(q_base(cx(0.0)), domain_error);
    CHECK_THROWS_AS(q_base(cx(0.0, 1.2)), domain_error);
    q_base q(cx(0.3, 0.4));
    CHECK_THAT(q.modulus(), WithinAbs(0.5, 1e-15));
    CHECK_THAT(std::abs(q.squared() - cx(0.3, 0.4) * cx(0.3, 0.4)), WithinAbs(0.0, 1e-16));
    CHECK_THAT(std::abs(q.sqrt_principal() * q.sqrt_principal() - q.value()),
               WithinAbs(0.0, 1e-15));
    CHECK_THAT(q.inv_modulus_squared(), WithinAbs(4.0, 1e-12));
}

TEST_CASE("series_params validates") {
    CHECK_THROWS_AS(series_params(0, 1e-12), domain_error);
    CHECK_THROWS_AS(series_params(10, 2.0), domain_error);
    CHECK_THROWS_AS(series_params(10, 1e-12, 0), domain_error);
}

TEST_CASE("finite q-Pochhammer small cases") {
    q_base q(0.5);
    CHECK(qpochhammer(cx(123.0, -4.0), q, 0) == cx(1.0));  // empty product
    CHECK(qpochhammer(cx(0.5), q, 1) == cx(0.5));
    CHECK(qpochhammer(cx(0.5), q, 2) == cx(0.375));  // (1-0.5)(1-0.25)
}

TEST_CASE("finite q-Pochhammer recurrence (a;q)_{n+1} = (a;q)_n (1-a q^n)") {
    rng64 rng{101};
    for (int trial = 0; trial < 50; ++trial) {
        q_base q(rng.point(0.1, 0.9));
        cx a = rng.point(0.05, 3.0);
        for (int n = 0; n < 12; ++n) {
            cx lhs = qpochhammer(a, q, n + 1);
            cx rhs = qpochhammer(a, q, n) * (1.0 - a * q.ipow(n));
            CHECK_THAT(std::abs(lhs - rhs), WithinAbs(0.0, 1e-13 * std::max(1.0, std::abs(lhs))));
        }
    }
}

TEST_CASE("infinite q-Pochhammer trivial values") {
    q_base q(0.5);
    CHECK(qpochhammer_inf(cx(0.0), q) == cx(1.0));
    CHECK(qpochhammer_inf(cx(1.0), q) == cx(0.0));
}

TEST_CASE("infinite q-Pochhammer matches a long brute-force product") {
    q_base q(0.5);
    // independent oracle: fixed 60-factor product
    cx oracle = 1.0;
    cx f = 0.5;
    for (int k = 0; k <= 60; ++k) {
        oracle *= (1.0 - f);
        f *= 0.5;
    }
    cx v = qpochhammer_inf(cx(0.5), q);
    CHECK_THAT(std::abs(v - oracle) / std::abs(oracle), WithinAbs(0.0, 1e-14));
}

TEST_CASE("multi-argument infinite symbol is the product of singles") {
    q_base q(0.4);
    cx a = cx(0.3, 0.2), b = cx(-0.7), c = cx(1.5, -0.4);
    cx joint = qpochhammer_inf({a, b, c}, q);
    cx split = qpochhammer_inf(a, q) * qpochhammer_inf(b, q) * qpochhammer_inf(c, q);
    CHECK_THAT(std::abs(joint - split), WithinAbs(0.0, 1e-14 * std::abs(split)));
}

TEST_CASE("infinite q-Pochhammer reports truncation exhaustion") {
    q_base q(0.99);  // allowed by the type; decay is slow
    series_params tiny(16, 1e-15);
    CHECK_THROWS_AS(qpochhammer_inf(cx(0.5), q, tiny), truncation_error);
}
