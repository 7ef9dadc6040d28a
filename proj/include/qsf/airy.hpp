// The two q-analogues of the Airy function and the second-order q-difference
// equations they satisfy:
//   Ramanujan function  A_q(x)  = sum q^{n^2} (-x)^n / (q;q)_n,
//       annihilated by  q x sigma^2 - sigma + 1            (eq. "ram"),
//   q-Airy function     Ai_q(x) = 1phi1(0; -q; q, -x),
//       annihilated by  sigma^2 + x sigma - 1              (eq. "qai"),
// with sigma u(x) = u(qx). Operators are represented as lists of
// (constant, x-power, shift) terms so residuals can be evaluated pointwise
// against any function handle.

#ifndef QSF_AIRY_HPP
#define QSF_AIRY_HPP

#include <vector>

#include "qsf/base.hpp"
#include "qsf/theta.hpp"

namespace qsf {

// A_q(x); entire. Term ratio a_{n+1}/a_n = -q^{2n+1} x / (1 - q^{n+1}).
inline sum_result ramanujan_aq_scaled(cx x, const q_base& q, const series_params& p = {}) {
    return sum_adaptive(
        cx(1.0),
        [&](int n) {
            return -q.ipow(2 * n + 1) * x / (1.0 - q.ipow(n + 1));
        },
        p);
}

inline cx ramanujan_aq(cx x, const q_base& q, const series_params& p = {}) {
    return ramanujan_aq_scaled(x, q, p).value;
}

// Ai_q(x) = sum q^{n(n-1)/2} x^n / ((-q;q)_n (q;q)_n); entire.
// Term ratio a_{n+1}/a_n = q^n x / ((1 + q^{n+1})(1 - q^{n+1})).
inline sum_result qairy_aiq_scaled(cx x, const q_base& q, const series_params& p = {}) {
    return sum_adaptive(
        cx(1.0),
        [&](int n) {
            cx qn1 = q.ipow(n + 1);
            return q.ipow(n) * x / ((1.0 + qn1) * (1.0 - qn1));
        },
        p);
}

inline cx qairy_aiq(cx x, const q_base& q, const series_params& p = {}) {
    return qairy_aiq_scaled(x, q, p).value;
}

// ---------------------------------------------------------------------------
// Pointwise q-difference operators
// ---------------------------------------------------------------------------

// One operator term: constant * x^degree * u(q^shift x).
struct qdiff_term {
    cx constant;
    int degree = 0;  // monomial degree in x
    int shift = 0;   // power of sigma_q, >= 0
};

struct qdiff_operator {
    std::vector<qdiff_term> terms;

    qdiff_operator(std::initializer_list<qdiff_term> ts) : terms(ts) {
        if (terms.empty()) throw shape_error("qdiff_operator: at least one term required");
        for (const auto& t : terms)
            if (t.shift < 0 || t.degree < 0)
                throw shape_error("qdiff_operator: degrees and shifts must be nonnegative");
    }
};

// q x sigma^2 - sigma + 1
inline qdiff_operator ramanujan_equation(const q_base& q) {
    return qdiff_operator{{q.value(), 1, 2}, {-1.0, 0, 1}, {1.0, 0, 0}};
}

// sigma^2 + x sigma - 1
inline qdiff_operator qairy_equation(const q_base&) {
    return qdiff_operator{{1.0, 0, 2}, {1.0, 1, 1}, {-1.0, 0, 0}};
}

// |sum of operator terms applied to u at x| / max |term|.
template <typename Fn>
double qdiff_residual(const qdiff_operator& op, Fn&& u, cx x, const q_base& q) {
    cx acc = 0.0;
    double scale = 0.0;
    for (const auto& t : op.terms) {
        cx xp = 1.0;
        for (int i = 0; i < t.degree; ++i) xp *= x;
        cx v = t.constant * xp * u(q.ipow(t.shift) * x);
        acc += v;
        scale = std::max(scale, std::abs(v));
    }
    return std::abs(acc) / std::max(scale, 1e-300);
}

// theta(-x)/theta(x): satisfies r(qx) = -r(x), the same sign-flip functional
// equation as the non-meromorphic factor e^{pi i log x / log q}; used as that
// factor's computable surrogate in second-solution checks.
inline cx theta_sign_flip_ratio(cx x, const q_base& q, const series_params& p = {}) {
    cx den = theta(x, q, p);
    if (std::abs(den) < 1e-250)
        throw domain_error("theta_sign_flip_ratio: x is on the theta zero lattice");
    return theta(-x, q, p) / den;
}

}  // namespace qsf

#endif
