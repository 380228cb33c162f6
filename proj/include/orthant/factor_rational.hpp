#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "orthant/factor_fp.hpp"
#include "orthant/unipoly.hpp"

namespace orthant {

namespace detail {

// -- arithmetic on integer polynomials (dense mpz vectors, trimmed) --

using ZXPoly = std::vector<mpz_class>;  // c_0 .. c_d

inline void zx_trim(ZXPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::int64_t zx_deg(const ZXPoly& f) { return static_cast<std::int64_t>(f.size()) - 1; }

inline ZXPoly zx_mul(const ZXPoly& a, const ZXPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZXPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zx_trim(r);
    return r;
}

inline ZXPoly zx_sub(const ZXPoly& a, const ZXPoly& b) {
    ZXPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zx_trim(r);
    return r;
}

/// Division by a monic divisor; returns nullopt unless it is exact over Z.
inline std::optional<ZXPoly> zx_exact_div_monic(const ZXPoly& a, const ZXPoly& b) {
    assert(!b.empty() && b.back() == 1);
    ZXPoly r = a;
    if (zx_deg(r) < zx_deg(b)) return r.empty() ? std::optional<ZXPoly>({}) : std::nullopt;
    ZXPoly q(static_cast<std::size_t>(zx_deg(r) - zx_deg(b)) + 1, mpz_class(0));
    for (std::int64_t i = zx_deg(r); i >= zx_deg(b); --i) {
        mpz_class c = r[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        q[static_cast<std::size_t>(i - zx_deg(b))] = c;
        for (std::int64_t j = 0; j <= zx_deg(b); ++j)
            r[static_cast<std::size_t>(i - zx_deg(b) + j)] -= c * b[static_cast<std::size_t>(j)];
    }
    zx_trim(r);
    if (!r.empty()) return std::nullopt;
    zx_trim(q);
    return q;
}

inline void zx_mod_sym(ZXPoly& f, const mpz_class& m) {
    const mpz_class half = m / 2;
    for (auto& c : f) {
        c %= m;
        if (c < -half) c += m;
        if (c > half) c -= m;
    }
    zx_trim(f);
}

inline ZXPoly zx_from_fp(const UniPoly<Fp>& f, const mpz_class& m) {
    ZXPoly r;
    r.reserve(static_cast<std::size_t>(f.degree() + 1));
    for (std::int64_t i = 0; i <= f.degree(); ++i)
        r.emplace_back(static_cast<unsigned long>(f.coeff(static_cast<std::size_t>(i)).value()));
    zx_mod_sym(r, m);
    return r;
}

inline UniPoly<Fp> zx_to_fp(const ZXPoly& f, const FpCtx& ctx) {
    std::vector<Fp> c;
    c.reserve(f.size());
    for (const auto& v : f) {
        mpz_class r = v % static_cast<long>(ctx.p);
        if (r < 0) r += static_cast<long>(ctx.p);
        c.emplace_back(r.get_ui(), ctx.p);
    }
    return UniPoly<Fp>(ctx, std::move(c));
}

/// Linear Hensel step chain: given monic F == a*b mod p with gcd(a,b) = 1
/// mod p, lifts to F == A*B mod p^K (A, B monic, symmetric coefficients).
inline std::pair<ZXPoly, ZXPoly> hensel_pair_lift(const ZXPoly& F, const UniPoly<Fp>& a0,
                                                  const UniPoly<Fp>& b0, const FpCtx& ctx,
                                                  int K) {
    auto [g, s, t] = ext_gcd(a0, b0);
    assert(g.is_one());
    mpz_class pj(static_cast<unsigned long>(ctx.p));
    mpz_class pj1 = pj * pj;
    ZXPoly A = zx_from_fp(a0, pj);
    ZXPoly B = zx_from_fp(b0, pj);
    A.resize(static_cast<std::size_t>(a0.degree()) + 1, mpz_class(0));
    A.back() = 1;
    B.resize(static_cast<std::size_t>(b0.degree()) + 1, mpz_class(0));
    B.back() = 1;
    for (int j = 1; j < K; ++j) {
        // e = (F - A*B) / p^j mod p
        ZXPoly diff = zx_sub(F, zx_mul(A, B));
        for (auto& c : diff) c /= pj;
        auto e = zx_to_fp(diff, ctx);
        if (!e.is_zero()) {
            auto u = (t * e) % a0;
            auto v = exact_div(e - u * b0, a0);
            ZXPoly du = zx_from_fp(u, mpz_class(static_cast<unsigned long>(ctx.p)));
            ZXPoly dv = zx_from_fp(v, mpz_class(static_cast<unsigned long>(ctx.p)));
            for (std::size_t i = 0; i < du.size(); ++i) A[i] += du[i] * pj;
            for (std::size_t i = 0; i < dv.size(); ++i) B[i] += dv[i] * pj;
            zx_mod_sym(A, pj1);
            zx_mod_sym(B, pj1);
            A.resize(static_cast<std::size_t>(a0.degree()) + 1, mpz_class(0));
            A.back() = 1;
            B.resize(static_cast<std::size_t>(b0.degree()) + 1, mpz_class(0));
            B.back() = 1;
        }
        pj = pj1;
        pj1 *= static_cast<unsigned long>(ctx.p);
    }
    return {A, B};
}

/// Lifts a full mod-p factorization of monic squarefree F to mod p^K.
inline std::vector<ZXPoly> hensel_multi_lift(const ZXPoly& F, std::vector<UniPoly<Fp>> factors,
                                             const FpCtx& ctx, int K) {
    std::vector<ZXPoly> out;
    ZXPoly rest = F;
    mpz_class pK;
    mpz_ui_pow_ui(pK.get_mpz_t(), static_cast<unsigned long>(ctx.p), static_cast<unsigned long>(K));
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
        UniPoly<Fp> cof = UniPoly<Fp>::constant(ctx, Fp(1, ctx.p));
        for (std::size_t j = i + 1; j < factors.size(); ++j) cof = cof * factors[j];
        auto [A, B] = hensel_pair_lift(rest, factors[i], cof, ctx, K);
        out.push_back(A);
        rest = B;
    }
    out.push_back(rest);
    return out;
}

}  // namespace detail

namespace detail {

inline mpz_class zx_eval(const ZXPoly& f, const mpz_class& x) {
    mpz_class acc(0);
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

/// Scales monic rational g to the monic integer polynomial lam^d * g(U/lam).
inline std::pair<ZXPoly, mpz_class> zx_scale_monic(const UniPoly<Rat>& g) {
    const std::int64_t d = g.degree();
    mpz_class lam(1);
    for (std::int64_t i = 0; i < d; ++i)
        lam = lcm_z(lam, g.coeff(static_cast<std::size_t>(i)).den());
    ZXPoly G(static_cast<std::size_t>(d) + 1);
    mpz_class pw(1);
    for (std::int64_t i = d; i >= 0; --i) {
        const Rat c = g.coeff(static_cast<std::size_t>(i));
        G[static_cast<std::size_t>(i)] = c.num() * pw / c.den();
        pw *= lam;
    }
    return {std::move(G), std::move(lam)};
}

}  // namespace detail

/// A rational root of monic g over Q, if one is found. Integer roots of the
/// scaled polynomial divide its constant term; the divisor enumeration is
/// exhaustive whenever the constant term factors under trial division, which
/// covers everything at desk scale (a miss only delays the decision to the
/// bounded factorizer).
inline std::optional<Rat> rational_root(const UniPoly<Rat>& g) {
    assert(g.is_monic() && g.degree() >= 1);
    auto [G, lam] = detail::zx_scale_monic(g);
    if (G[0] == 0) return Rat(0);

    mpz_class m = abs(G[0]);
    std::vector<mpz_class> primes;
    for (mpz_class p(2); p * p <= m && p < 1000000; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) primes.push_back(m);  // remaining cofactor (prime or not; still a divisor)

    mpz_class cauchy(0);
    for (const auto& c : G)
        if (abs(c) > cauchy) cauchy = abs(c);
    cauchy += 1;

    std::vector<mpz_class> divisors{mpz_class(1)};
    for (const auto& p : primes) {
        std::vector<mpz_class> next;
        for (const auto& dvs : divisors) {
            mpz_class v = dvs;
            while (true) {
                next.push_back(v);
                if (abs(G[0]) % (v * p) != 0) break;
                v *= p;
                if (v > cauchy) break;
            }
        }
        divisors = std::move(next);
        if (divisors.size() > 20000) break;  // desk-scale cap; completeness falls to Zassenhaus
    }
    std::sort(divisors.begin(), divisors.end());
    divisors.erase(std::unique(divisors.begin(), divisors.end()), divisors.end());
    for (const auto& dv : divisors) {
        if (dv > cauchy) break;
        if (detail::zx_eval(G, dv) == 0) return Rat(mpq_class(dv, lam));
        if (detail::zx_eval(G, -dv) == 0) return Rat(mpq_class(mpz_class(-dv), lam));
    }
    return std::nullopt;
}

/// One nontrivial monic rational factor of a monic squarefree g over Q, or
/// nullopt when g is irreducible. Classic Zassenhaus: reduce mod a good small
/// prime, Hensel-lift past the Mignotte-style coefficient bound, recombine
/// subsets. Deterministic.
inline std::optional<UniPoly<Rat>> rational_factor_squarefree(const UniPoly<Rat>& g) {
    assert(g.is_monic() && g.degree() >= 2);
    const RatCtx qctx;
    const std::int64_t d = g.degree();
    auto [G, lam] = detail::zx_scale_monic(g);

    // first prime keeping G squarefree
    static const std::uint64_t kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                            43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    FpCtx ctx{0};
    UniPoly<Fp> gbar(FpCtx{3});
    bool found = false;
    for (std::uint64_t p : kPrimes) {
        ctx = FpCtx{p};
        gbar = detail::zx_to_fp(G, ctx);
        if (gbar.degree() != d) continue;  // cannot happen (monic), kept for clarity
        if (gcd(gbar, gbar.derivative()).degree() == 0) {
            found = true;
            break;
        }
    }
    if (!found) {
        // disc(G) happens to be divisible by the whole list; walk odd numbers upward
        for (std::uint64_t p = 101;; p += 2) {
            if (!is_prime_u64(p)) continue;
            ctx = FpCtx{p};
            gbar = detail::zx_to_fp(G, ctx);
            if (gcd(gbar, gbar.derivative()).degree() == 0) break;
        }
    }

    auto modular = factor_fp(gbar.monic(), kDefaultSeed);
    if (modular.size() == 1) return std::nullopt;  // irreducible mod p => irreducible over Q
    std::vector<UniPoly<Fp>> parts;
    parts.reserve(modular.size());
    for (auto& [phi, mult] : modular) {
        assert(mult == 1);
        parts.push_back(phi);
    }

    // coefficient bound for monic factors: 2^d * ||G||_2, lift past 2*bound
    mpz_class norm2(0);
    for (const auto& c : G) norm2 += c * c;
    mpz_class bound = sqrt(norm2) + 1;
    bound <<= static_cast<unsigned>(d);
    mpz_class target = 2 * bound + 1;
    int K = 1;
    mpz_class pK(static_cast<unsigned long>(ctx.p));
    while (pK < target) {
        pK *= static_cast<unsigned long>(ctx.p);
        ++K;
    }
    auto lifted = detail::hensel_multi_lift(G, parts, ctx, K);

    // subset recombination, smallest subsets first
    const std::size_t r = lifted.size();
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m < (1u << r) - 1; ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return __builtin_popcount(a) < __builtin_popcount(b);
    });
    for (std::uint32_t mask : masks) {
        std::int64_t sdeg = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (mask & (1u << i)) sdeg += detail::zx_deg(lifted[i]);
        if (sdeg == 0 || 2 * sdeg > d) continue;
        if (2 * sdeg == d && !(mask & 1u)) continue;  // avoid testing both halves
        detail::ZXPoly cand{mpz_class(1)};
        for (std::size_t i = 0; i < r; ++i) {
            if (mask & (1u << i)) {
                cand = detail::zx_mul(cand, lifted[i]);
                detail::zx_mod_sym(cand, pK);
            }
        }
        auto quot = detail::zx_exact_div_monic(G, cand);
        if (!quot) continue;
        // un-scale: a(T) = cand(lam*T) / lam^(deg cand)
        std::vector<Rat> c;
        c.reserve(cand.size());
        for (std::size_t i = 0; i < cand.size(); ++i) {
            mpz_class lp;
            mpz_pow_ui(lp.get_mpz_t(), lam.get_mpz_t(),
                       static_cast<unsigned long>(cand.size() - 1 - i));
            c.push_back(Rat(mpq_class(mpz_class(cand[i]), lp)));
        }
        return UniPoly<Rat>(qctx, std::move(c));
    }
    return std::nullopt;
}

}  // namespace orthant
