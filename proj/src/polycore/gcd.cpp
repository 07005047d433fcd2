#include "qcong/polycore.hpp"

#include <cstdint>

namespace qcong {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Word-size primes just below 2^62, found once with GMP's primality test.
const std::vector<u64>& modular_primes() {
    static const std::vector<u64> primes = [] {
        std::vector<u64> out;
        mpz_class p = (mpz_class(1) << 62);
        for (int i = 0; i < 512; ++i) {
            p -= 1;
            while (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) p -= 1;
            out.push_back(p.get_ui());
        }
        return out;
    }();
    return primes;
}

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

std::vector<u64> reduce(const std::vector<Integer>& c, u64 p) {
    std::vector<u64> out(c.size());
    mpz_class pm;
    mpz_set_ui(pm.get_mpz_t(), p);
    mpz_class t;
    for (std::size_t i = 0; i < c.size(); ++i) {
        mpz_fdiv_r(t.get_mpz_t(), c[i].get_mpz_t(), pm.get_mpz_t());
        out[i] = mpz_get_ui(t.get_mpz_t());
    }
    return out;
}

void strip(std::vector<u64>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Monic gcd over F_p.
std::vector<u64> gcd_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
    strip(a);
    strip(b);
    while (!b.empty()) {
        // a <- a mod b
        const u64 inv = invmod(b.back(), p);
        const std::size_t nb = b.size();
        while (a.size() >= nb) {
            u64 f = mulmod(a.back(), inv, p);
            if (f != 0) {
                const std::size_t shift = a.size() - nb;
                for (std::size_t j = 0; j < nb; ++j) {
                    u64 s = mulmod(f, b[j], p);
                    u64& x = a[shift + j];
                    x = x >= s ? x - s : x + p - s;
                }
            }
            a.pop_back();
            strip(a);
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        const u64 inv = invmod(a.back(), p);
        for (auto& x : a) x = mulmod(x, inv, p);
    }
    return a;
}

std::vector<Integer> symmetric_lift(const std::vector<Integer>& v, const Integer& modulus) {
    std::vector<Integer> out = v;
    Integer half = modulus / 2;
    for (auto& x : out) {
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
        if (x > half) x -= modulus;
    }
    return out;
}

LaurentPoly normalize_result(LaurentPoly g) {
    if (g.is_zero()) return g;
    return g.without_offset().primitive_part();
}

}  // namespace

LaurentPoly gcd_subresultant(const LaurentPoly& a0, const LaurentPoly& b0) {
    if (a0.is_zero() && b0.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (a0.is_zero()) return normalize_result(b0);
    if (b0.is_zero()) return normalize_result(a0);
    LaurentPoly a = a0.without_offset().primitive_part();
    LaurentPoly b = b0.without_offset().primitive_part();
    if (a.span_degree() < b.span_degree()) std::swap(a, b);
    if (b.span_degree() == 0) return LaurentPoly(1);

    // Subresultant PRS (Collins / Brown), operating on coefficient vectors.
    std::vector<Integer> A = a.coeffs(), B = b.coeffs();
    Integer g = 1, h = 1;
    while (true) {
        const std::size_t delta = A.size() - B.size();
        // pseudo-remainder of A by B
        std::vector<Integer> R = A;
        const Integer& lb = B.back();
        const std::size_t nb = B.size();
        for (std::size_t k = R.size(); k >= nb; --k) {
            Integer top = R[k - 1];
            for (auto& x : R) x *= lb;
            if (top != 0)
                for (std::size_t j = 0; j < nb; ++j) R[k - nb + j] -= top * B[j];
            R.pop_back();
        }
        while (!R.empty() && R.back() == 0) R.pop_back();
        if (R.empty()) break;
        if (R.size() == 1) return LaurentPoly(1);
        Integer denom = g;
        Integer hp = 1;
        for (std::size_t i = 0; i < delta; ++i) hp *= h;
        denom *= hp;
        for (auto& x : R) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), denom.get_mpz_t());
        A = std::move(B);
        B = std::move(R);
        g = A.back();
        if (delta == 0) {
            // h unchanged
        } else {
            // h = g^delta / h^(delta-1)
            Integer num = 1, den = 1;
            for (std::size_t i = 0; i < delta; ++i) num *= g;
            for (std::size_t i = 1; i < delta; ++i) den *= h;
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
    return normalize_result(LaurentPoly(0, B));
}

LaurentPoly gcd_q(const LaurentPoly& a0, const LaurentPoly& b0) {
    if (a0.is_zero() && b0.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (a0.is_zero()) return normalize_result(b0);
    if (b0.is_zero()) return normalize_result(a0);
    LaurentPoly a = a0.without_offset().primitive_part();
    LaurentPoly b = b0.without_offset().primitive_part();
    if (a.span_degree() == 0 || b.span_degree() == 0) return LaurentPoly(1);
    if (a == b) return a;

    Integer gamma;
    mpz_gcd(gamma.get_mpz_t(), a.leading().get_mpz_t(), b.leading().get_mpz_t());

    const auto& primes = modular_primes();
    // One more than any possible image length, so the first image always resets.
    std::size_t best_deg = static_cast<std::size_t>(std::min(a.span_degree(), b.span_degree())) + 2;
    std::vector<Integer> acc;  // CRT image of gamma * monic gcd
    Integer modulus = 1;
    std::vector<Integer> last_lift;

    for (u64 p : primes) {
        if (mpz_divisible_ui_p(a.leading().get_mpz_t(), p) ||
            mpz_divisible_ui_p(b.leading().get_mpz_t(), p))
            continue;
        auto gp = gcd_mod(reduce(a.coeffs(), p), reduce(b.coeffs(), p), p);
        if (gp.size() == 1) return LaurentPoly(1);
        if (gp.size() > best_deg) continue;  // unlucky prime
        const u64 gam = mpz_fdiv_ui(gamma.get_mpz_t(), p);
        for (auto& x : gp) x = mulmod(x, gam, p);
        if (gp.size() < best_deg) {
            best_deg = gp.size();
            acc.assign(gp.size(), 0);
            for (std::size_t i = 0; i < gp.size(); ++i) mpz_set_ui(acc[i].get_mpz_t(), gp[i]);
            modulus = 0;
            mpz_set_ui(modulus.get_mpz_t(), p);
            last_lift.clear();
            continue;
        }
        // CRT: x = acc (mod modulus), x = gp (mod p)
        Integer pm;
        mpz_set_ui(pm.get_mpz_t(), p);
        Integer minv;
        mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pm.get_mpz_t());
        for (std::size_t i = 0; i < acc.size(); ++i) {
            Integer cur = acc[i] % pm;
            if (cur < 0) cur += pm;
            Integer diff;
            mpz_set_ui(diff.get_mpz_t(), gp[i]);
            diff -= cur;
            diff *= minv;
            mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), pm.get_mpz_t());
            acc[i] += modulus * diff;
        }
        modulus *= pm;
        auto lifted = symmetric_lift(acc, modulus);
        if (lifted == last_lift) {
            LaurentPoly cand = LaurentPoly(0, lifted).primitive_part();
            if (divides(cand, a) && divides(cand, b)) return cand;
        }
        last_lift = std::move(lifted);
    }
    return gcd_subresultant(a, b);
}

}  // namespace qcong
