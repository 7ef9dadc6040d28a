// Truncated power series and symmetric Laurent windows with explicit
// trusted-index bookkeeping, plus formal q-difference operators acting on
// coefficients. These are the substrate of all formal (non-numeric) checks:
// divergent series are never summed, they exist only as coefficient arrays.

#ifndef QSF_SERIES_HPP
#define QSF_SERIES_HPP

#include <algorithm>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "qsf/base.hpp"

namespace qsf {

// ---------------------------------------------------------------------------
// truncated_series: coefficients of t^0 .. t^N
// ---------------------------------------------------------------------------

class truncated_series {
  public:
    truncated_series(std::vector<cx> coeffs, q_base base)
        : coeffs_(std::move(coeffs)), base_(base) {
        if (coeffs_.empty()) throw shape_error("truncated_series: empty coefficient array");
        trusted_ = order();
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    int trusted() const { return trusted_; }
    void set_trusted(int t) { trusted_ = std::min(t, order()); }
    const q_base& base() const { return base_; }

    cx operator[](int n) const {
        return (n < 0 || n > order()) ? cx(0.0) : coeffs_[static_cast<size_t>(n)];
    }
    void set(int n, cx v) { coeffs_.at(static_cast<size_t>(n)) = v; }
    const std::vector<cx>& coeffs() const { return coeffs_; }

  private:
    std::vector<cx> coeffs_;
    q_base base_;
    int trusted_;
};

inline truncated_series add(const truncated_series& a, const truncated_series& b) {
    int n = std::min(a.order(), b.order());
    std::vector<cx> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] = a[i] + b[i];
    truncated_series r(std::move(c), a.base());
    r.set_trusted(std::min(a.trusted(), b.trusted()));
    return r;
}

inline truncated_series scale(const truncated_series& a, cx s) {
    std::vector<cx> c(a.coeffs());
    for (auto& v : c) v *= s;
    truncated_series r(std::move(c), a.base());
    r.set_trusted(a.trusted());
    return r;
}

// Cauchy product truncated at min(order_a, order_b); coefficients up to that
// order are exact, so trust only shrinks to the weaker input.
inline truncated_series multiply(const truncated_series& a, const truncated_series& b) {
    int n = std::min(a.order(), b.order());
    std::vector<cx> c(static_cast<size_t>(n) + 1, cx(0.0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n && j <= b.order(); ++j)
            c[static_cast<size_t>(i + j)] += a[i] * b[j];
    truncated_series r(std::move(c), a.base());
    r.set_trusted(std::min(a.trusted(), b.trusted()));
    return r;
}

// Multiplication by t^m: coefficients relocate upward, the top m drop off.
inline truncated_series shift_up(const truncated_series& a, int m) {
    std::vector<cx> c(static_cast<size_t>(a.order()) + 1, cx(0.0));
    for (int n = a.order(); n >= m; --n) c[static_cast<size_t>(n)] = a[n - m];
    truncated_series r(std::move(c), a.base());
    r.set_trusted(std::min(a.trusted() + m, a.order()));
    return r;
}

// sigma_q^k on coefficients: a_n -> q^{kn} a_n, defined for any integer k
// (negative powers are meaningful at the coefficient level even though the
// operator calculus only uses k >= 0).
inline truncated_series sigma_twist(const truncated_series& a, int k) {
    std::vector<cx> c(a.coeffs());
    for (int n = 0; n <= a.order(); ++n) c[static_cast<size_t>(n)] *= a.base().ipow(static_cast<long>(k) * n);
    truncated_series r(std::move(c), a.base());
    r.set_trusted(a.trusted());
    return r;
}

// ---------------------------------------------------------------------------
// laurent_window: coefficients of x^{-M} .. x^{M} with a trusted subrange
// ---------------------------------------------------------------------------

class laurent_window {
  public:
    laurent_window(int half_width, q_base base)
        : coeffs_(2 * static_cast<size_t>(half_width) + 1, cx(0.0)),
          base_(base),
          half_width_(half_width),
          trust_lo_(-half_width),
          trust_hi_(half_width) {
        if (half_width < 0) throw shape_error("laurent_window: negative half width");
    }

    int half_width() const { return half_width_; }
    int trust_lo() const { return trust_lo_; }
    int trust_hi() const { return trust_hi_; }
    void set_trust(int lo, int hi) {
        trust_lo_ = std::max(lo, -half_width_);
        trust_hi_ = std::min(hi, half_width_);
    }
    const q_base& base() const { return base_; }

    cx operator[](int n) const {
        if (n < -half_width_ || n > half_width_) return 0.0;
        return coeffs_[static_cast<size_t>(n + half_width_)];
    }
    void set(int n, cx v) { coeffs_.at(static_cast<size_t>(n + half_width_)) = v; }

  private:
    std::vector<cx> coeffs_;
    q_base base_;
    int half_width_;
    int trust_lo_, trust_hi_;
};

// Window coefficients of theta: L_k = q^{k(k-1)/2}, k in [-M, M].
inline laurent_window theta_window(const q_base& q, int half_width) {
    laurent_window w(half_width, q);
    for (int k = -half_width; k <= half_width; ++k) w.set(k, q.triangular_pow(k));
    return w;
}

// Product of a Laurent window and a power series, exact on the inner window
// [-M + N, M - N]: outside it the window truncation (low side) or headroom
// for later coefficient shifts (high side) can bite.
inline laurent_window multiply(const laurent_window& w, const truncated_series& s) {
    int M = w.half_width();
    int N = s.order();
    laurent_window out(M, w.base());
    for (int n = -M; n <= M; ++n) {
        cx acc = 0.0;
        for (int m = 0; m <= N; ++m) {
            int k = n - m;
            if (k < -M || k > M) continue;
            acc += w[k] * s[m];
        }
        out.set(n, acc);
    }
    out.set_trust(std::max(w.trust_lo() + N, -M), std::min(w.trust_hi() - N, M));
    return out;
}

// ---------------------------------------------------------------------------
// formal_operator: sum of (constant, x_power, sigma_power) monomial terms
// ---------------------------------------------------------------------------

struct formal_term {
    cx constant;
    int x_power = 0;
    int sigma_power = 0;
};

struct formal_operator {
    std::vector<formal_term> terms;

    formal_operator(std::initializer_list<formal_term> ts) : terms(ts) { check(); }
    explicit formal_operator(std::vector<formal_term> ts) : terms(std::move(ts)) { check(); }

    void check() const {
        if (terms.empty()) throw shape_error("formal_operator: no terms");
        for (const auto& t : terms)
            if (t.x_power < 0 || t.sigma_power < 0)
                throw shape_error("formal_operator: powers must be nonnegative");
    }
    int max_x_power() const {
        int m = 0;
        for (const auto& t : terms) m = std::max(m, t.x_power);
        return m;
    }
    int min_x_power() const {
        int m = terms.front().x_power;
        for (const auto& t : terms) m = std::min(m, t.x_power);
        return m;
    }
};

// K x sigma^2 - sigma + 1; the Ramanujan-function equation is K = q.
inline formal_operator second_order_x_equation(cx K) {
    return formal_operator{{K, 1, 2}, {-1.0, 0, 1}, {1.0, 0, 0}};
}

// K t^2 sigma^2 - sigma + 1; the sheared form of the above.
inline formal_operator second_order_t2_equation(cx K) {
    return formal_operator{{K, 2, 2}, {-1.0, 0, 1}, {1.0, 0, 0}};
}

// -q^5 t^2 sigma^2 - sigma + 1, the equation satisfied by the gauged series
// f(t) = A_{q^2}(-q^3 t^2) at infinity.
inline formal_operator airy_infinity_equation(const q_base& q) {
    return second_order_t2_equation(-q.ipow(5));
}

// Term (c, m, l) maps a_n to a contribution c q^{ln} a_n at output index
// n + m. Output order equals input order; coefficients above
// N - max(x_power) are flagged untrusted.
inline truncated_series apply(const formal_operator& op, const truncated_series& s) {
    int N = s.order();
    std::vector<cx> out(static_cast<size_t>(N) + 1, cx(0.0));
    for (const auto& t : op.terms) {
        for (int n = 0; n + t.x_power <= N; ++n) {
            out[static_cast<size_t>(n + t.x_power)] +=
                t.constant * s.base().ipow(static_cast<long>(t.sigma_power) * n) * s[n];
        }
    }
    truncated_series r(std::move(out), s.base());
    r.set_trusted(std::min(s.trusted(), N - op.max_x_power()));
    return r;
}

inline laurent_window apply(const formal_operator& op, const laurent_window& w) {
    int M = w.half_width();
    laurent_window out(M, w.base());
    for (int n = -M; n <= M; ++n) {
        cx acc = 0.0;
        for (const auto& t : op.terms) {
            int k = n - t.x_power;
            if (k < -M || k > M) continue;
            acc += t.constant * w.base().ipow(static_cast<long>(t.sigma_power) * k) * w[k];
        }
        out.set(n, acc);
    }
    out.set_trust(w.trust_lo() + op.max_x_power(), w.trust_hi() + op.min_x_power());
    return out;
}

// JSON array-of-pairs form used by golden-file tests: [[re, im], ...],
// 17 significant digits.
inline std::string to_json(const truncated_series& s) {
    std::string out = "[";
    char buf[96];
    for (int n = 0; n <= s.order(); ++n) {
        std::snprintf(buf, sizeof buf, "%s[%.17g,%.17g]", n ? "," : "", s[n].real(),
                      s[n].imag());
        out += buf;
    }
    out += "]";
    return out;
}

}  // namespace qsf

#endif
