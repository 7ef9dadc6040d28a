// The three classical q-Bessel functions (Jackson's first and second, and
// the Hahn-Exton third) and the two published algebraic relations linking
// them to each other and to the q-Airy function.
//
// All three series carry 1/((q^{nu+1};q)_n (q;q)_n) in the summand; the
// (q^{nu+1};q)_inf/(q;q)_inf prefactor and the x^nu (or (x/2)^nu) factor are
// included. Fractional powers use the principal branch throughout.

#ifndef QSF_BESSEL_HPP
#define QSF_BESSEL_HPP

#include "qsf/airy.hpp"
#include "qsf/base.hpp"
#include "qsf/hypergeometric.hpp"
#include "qsf/pochhammer.hpp"

namespace qsf {

enum class bessel_mode {
    generic,               // q^nu = exp(nu log q), x^nu principal branch
    qnu_equals_minus_one,  // q^nu substituted by -1 exactly; x^nu factored out
};

struct bessel_order {
    cx nu{};
    bessel_mode mode = bessel_mode::generic;
};

namespace detail {

inline bool is_integer(cx v) {
    return std::abs(v.imag()) < 1e-12 &&
           std::abs(v.real() - std::round(v.real())) < 1e-12;
}

// Principal-branch base^expo with the branch cut on the negative real axis;
// integer exponents are exact and cut-free.
inline cx principal_pow(cx base, cx expo) {
    if (is_integer(expo)) {
        long k = static_cast<long>(std::llround(expo.real()));
        cx b = k >= 0 ? base : 1.0 / base;
        unsigned long n = k >= 0 ? static_cast<unsigned long>(k)
                                 : static_cast<unsigned long>(-k);
        cx r = 1.0;
        while (n) {
            if (n & 1) r *= b;
            b *= b;
            n >>= 1;
        }
        return r;
    }
    if (base.imag() == 0.0 && base.real() <= 0.0)
        throw branch_error("principal_pow: non-integer power on the branch cut");
    return std::exp(expo * std::log(base));
}

}  // namespace detail

// J^(kind)_nu(x; q) for kind in {1,2,3}. Kind 1 converges only for
// |x^2/4| < 1; kinds 2 and 3 are entire in x. In mode qnu_equals_minus_one
// the returned value omits the x^nu factor (substitution (q^{nu+1};q)_n ->
// (-q;q)_n, prefactor likewise); callers comparing against relation (2) must
// factor x^nu from both sides.
inline cx qbessel(int kind, const bessel_order& order, cx x, const q_base& q,
                  const series_params& p = {}) {
    if (kind < 1 || kind > 3) throw domain_error("qbessel: kind must be 1, 2 or 3");

    cx qnu1;  // q^{nu+1}
    if (order.mode == bessel_mode::qnu_equals_minus_one)
        qnu1 = -q.value();
    else
        qnu1 = detail::principal_pow(q.value(), order.nu + 1.0);

    cx prefactor = qpochhammer_inf(qnu1, q, p) / qpochhammer_inf(q.value(), q, p);

    cx series;
    switch (kind) {
        case 1: {
            cx z = -x * x / 4.0;
            if (!(std::abs(z) < 1.0))
                throw convergence_error("qbessel: kind 1 requires |x^2/4| < 1");
            series = rphi(hyper_spec({0.0, 0.0}, {qnu1}, q), z, p);
            break;
        }
        case 2:
            series = rphi(hyper_spec({}, {qnu1}, q), -qnu1 * x * x / 4.0, p);
            break;
        default:
            series = rphi(hyper_spec({0.0}, {qnu1}, q), q.value() * x * x, p);
            break;
    }

    if (order.mode == bessel_mode::qnu_equals_minus_one) return prefactor * series;

    if (x == cx(0.0)) {
        if (order.nu == cx(0.0)) return prefactor * series;  // x^0 = 1
        if (order.nu.real() > 0.0) return 0.0;
        throw domain_error("qbessel: x = 0 with Re(nu) <= 0");
    }
    cx arg = (kind == 3) ? x : x / 2.0;
    return prefactor * detail::principal_pow(arg, order.nu) * series;
}

// Relation between Jackson's q-Bessel functions:
//   J^(2)_nu(x;q) = (-x^2/4; q)_inf J^(1)_nu(x;q),  |x| < 2.
inline double jackson_relation_residual(cx nu, cx x, const q_base& q,
                                        const series_params& p = {}) {
    bessel_order ord{nu, bessel_mode::generic};
    cx lhs = qbessel(2, ord, x, q, p);
    cx rhs = qpochhammer_inf(-x * x / 4.0, q, p) * qbessel(1, ord, x, q, p);
    return scaled_residual(lhs, rhs);
}

// Relation between the Hahn-Exton function and the q-Airy function under
// q^nu = -1, with x^nu cancelled from both sides:
//   J^(3)_nu(x;q) / x^nu = [(-q;q)_inf/(q;q)_inf] Ai_q(-q x^2).
inline double hahn_exton_airy_residual(cx x, const q_base& q,
                                       const series_params& p = {}) {
    bessel_order ord{cx(0.0), bessel_mode::qnu_equals_minus_one};
    cx lhs = qbessel(3, ord, x, q, p);
    cx rhs = qpochhammer_inf(-q.value(), q, p) / qpochhammer_inf(q.value(), q, p) *
             qairy_aiq(-q.value() * x * x, q, p);
    return scaled_residual(lhs, rhs);
}

}  // namespace qsf

#endif
