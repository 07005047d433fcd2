#include "qcong/hyperseries.hpp"

#include <stdexcept>

namespace qcong {

namespace {

// 1 - sign q^e
LaurentPoly one_minus(int sign, long e) { return LaurentPoly(1) - LaurentPoly::monomial(sign, e); }

LaurentPoly qpow(long e, long c = 1) { return LaurentPoly::monomial(c, e); }

// (sign q^start; q^step)_len
LaurentPoly poch(int sign, long start, long step, long len) {
    LaurentPoly r(1);
    for (long i = 0; i < len; ++i) r *= one_minus(sign, start + step * i);
    return r;
}

void validate(const HyperSeriesSpec& s) {
    if (s.upper.size() != s.lower.size() + 1) throw std::invalid_argument("phi: need one more upper than lower parameter");
    if (s.base_scale < 1) throw std::invalid_argument("phi: base scale must be positive");
    if (s.truncation < 0) throw std::invalid_argument("phi: negative truncation");
    for (const auto* v : {&s.upper, &s.lower})
        for (const auto& p : *v)
            if (p.sign != 1 && p.sign != -1) throw std::invalid_argument("phi: parameter sign must be +-1");
    if (s.argument.sign != 1 && s.argument.sign != -1) throw std::invalid_argument("phi: argument sign must be +-1");
}

// Ratio t_{k+1}/t_k as (num, den) polynomials; num is zero once the series
// has terminated.
std::pair<LaurentPoly, LaurentPoly> step_ratio(const HyperSeriesSpec& s, long k) {
    const long sk = s.base_scale * k;
    LaurentPoly num = qpow(s.argument.exp, s.argument.sign);
    LaurentPoly den = one_minus(1, sk + s.base_scale);
    for (const auto& a : s.upper) num *= one_minus(a.sign, a.exp + sk);
    for (const auto& b : s.lower) {
        if (b.sign == 1 && b.exp + sk == 0) throw VanishingDenominator("phi: lower parameter vanishes at k=" + std::to_string(k + 1));
        den *= one_minus(b.sign, b.exp + sk);
    }
    return {num, den};
}

}  // namespace

RationalFn phi_term(const HyperSeriesSpec& spec, long k) {
    validate(spec);
    RationalFn t(1);
    for (long i = 0; i < k; ++i) {
        auto [num, den] = step_ratio(spec, i);
        if (num.is_zero()) return RationalFn();
        t = t * RationalFn(num, den);
    }
    return t;
}

RationalFn eval_phi(const HyperSeriesSpec& spec) {
    validate(spec);
    RationalFn term(1), sum(1);
    for (long k = 0; k < spec.truncation; ++k) {
        auto [num, den] = step_ratio(spec, k);
        if (num.is_zero()) break;
        term = term * RationalFn(num, den);
        sum = sum + term;
    }
    return sum;
}

WatsonInstance watson_4k_plus_1(long n, long arg_shift) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("watson: n must be odd and > 1");
    const long N = (n - 1) / 2;
    WatsonInstance w;

    // sum_k (-1)^k [4k+1]_{q^2}[4k+1]^2 (q^{2-2n},q^{2+2n};q^4)_k (q^4;q^8)_k
    //      / ((q^{4-2n},q^{4+2n};q^4)_k (q^8;q^8)_k) q^{-4k}
    for (long k = 0; k <= N; ++k) {
        LaurentPoly num = q_integer(4 * k + 1, 2) * pow(q_integer(4 * k + 1), 2) * poch(1, 2 - 2 * n, 4, k) *
                          poch(1, 2 + 2 * n, 4, k) * poch(1, 4, 8, k) * qpow(-4 * k, k % 2 ? -1 : 1);
        LaurentPoly den = poch(1, 4 - 2 * n, 4, k) * poch(1, 4 + 2 * n, 4, k) * poch(1, 8, 8, k);
        w.direct = w.direct + RationalFn(num, den);
    }

    HyperSeriesSpec s87;
    s87.upper = {{1, 2}, {1, 5}, {-1, 5}, {1, 5}, {1, 5}, {-1, 2}, {1, 2 + 2 * n}, {1, 2 - 2 * n}};
    s87.lower = {{1, 1}, {-1, 1}, {1, 1}, {1, 1}, {-1, 4}, {1, 4 - 2 * n}, {1, 4 + 2 * n}};
    s87.base_scale = 4;
    s87.argument = {-1, -4 + arg_shift};
    s87.truncation = N;
    w.phi87 = eval_phi(s87);

    HyperSeriesSpec s43;
    s43.upper = {{1, -4}, {-1, 2}, {1, 2 + 2 * n}, {1, 2 - 2 * n}};
    s43.lower = {{1, 1}, {1, 1}, {-1, 4}};
    s43.base_scale = 4;
    s43.argument = {1, 4};
    s43.truncation = N;
    const RationalFn pre(poch(1, 6, 4, N) * poch(-1, 2 - 2 * n, 4, N), poch(-1, 4, 4, N) * poch(1, 4 - 2 * n, 4, N));
    w.phi43 = pre * eval_phi(s43);

    // q^{1-n}[n]_{q^2}(-1/n)(1 - (1+q^2)(1-q^{2-2n})(1-q^{2+2n}) / ((1+q^4)(1-q)^2))
    const RationalFn inner = RationalFn(1) - RationalFn(one_minus(-1, 2) * one_minus(1, 2 - 2 * n) * one_minus(1, 2 + 2 * n),
                                                        one_minus(-1, 4) * pow(one_minus(1, 1), 2));
    w.closed = RationalFn(qpow(1 - n, kronecker(-1, n)) * q_integer(n, 2)) * inner;
    return w;
}

WatsonInstance watson_4k_minus_1(long n, long arg_shift) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("watson: n must be odd and > 1");
    const long N = (n + 1) / 2;
    WatsonInstance w;

    // sum_k (-1)^k [4k-1]_{q^2}[4k-1]^2 (q^{-2-2n},q^{-2+2n};q^4)_k (q^{-4};q^8)_k
    //      / ((q^{4-2n},q^{4+2n};q^4)_k (q^8;q^8)_k) q^{4k}
    for (long k = 0; k <= N; ++k) {
        LaurentPoly num = q_integer(4 * k - 1, 2) * pow(q_integer(4 * k - 1), 2) * poch(1, -2 - 2 * n, 4, k) *
                          poch(1, -2 + 2 * n, 4, k) * poch(1, -4, 8, k) * qpow(4 * k, k % 2 ? -1 : 1);
        LaurentPoly den = poch(1, 4 - 2 * n, 4, k) * poch(1, 4 + 2 * n, 4, k) * poch(1, 8, 8, k);
        w.direct = w.direct + RationalFn(num, den);
    }

    HyperSeriesSpec s87;
    s87.upper = {{1, -2}, {1, 3}, {-1, 3}, {1, 3}, {1, 3}, {-1, -2}, {1, -2 + 2 * n}, {1, -2 - 2 * n}};
    s87.lower = {{1, -1}, {-1, -1}, {1, -1}, {1, -1}, {-1, 4}, {1, 4 - 2 * n}, {1, 4 + 2 * n}};
    s87.base_scale = 4;
    s87.argument = {-1, 4 + arg_shift};
    s87.truncation = N;
    w.phi87 = RationalFn(qpow(-4, -1)) * eval_phi(s87);

    HyperSeriesSpec s43;
    s43.upper = {{1, -4}, {-1, -2}, {1, -2 + 2 * n}, {1, -2 - 2 * n}};
    s43.lower = {{1, -1}, {1, -1}, {-1, -4}};
    s43.base_scale = 4;
    s43.argument = {1, 4};
    s43.truncation = N;
    const RationalFn pre(qpow(-4, -1) * poch(1, 2, 4, N) * poch(-1, 6 - 2 * n, 4, N),
                         poch(-1, 4, 4, N) * poch(1, 4 - 2 * n, 4, N));
    w.phi43 = pre * eval_phi(s43);

    // -2q^{n-5}[n]_{q^2}(1+q^4)/((1+q^{2n-2})(1+q^{2n+2})) (-1/n)
    //   * (1 - (1+q^2)(1-q^{2n-2})(1-q^{-2n-2}) q^4 / ((1+q^4)(1-q)^2))
    const RationalFn inner =
        RationalFn(1) - RationalFn(one_minus(-1, 2) * one_minus(1, 2 * n - 2) * one_minus(1, -2 * n - 2) * qpow(4),
                                   one_minus(-1, 4) * pow(one_minus(1, 1), 2));
    w.closed = RationalFn(qpow(n - 5, -2 * kronecker(-1, n)) * q_integer(n, 2) * one_minus(-1, 4),
                          one_minus(-1, 2 * n - 2) * one_minus(-1, 2 * n + 2)) *
               inner;
    return w;
}

bool watson_instance_check(long n) { return watson_4k_plus_1(n).holds() && watson_4k_minus_1(n).holds(); }

}  // namespace qcong
