#include <doctest.h>

#include <random>

#include "orthant/coprime_split.hpp"
#include "orthant/factor_fp.hpp"
#include "orthant/squarefree.hpp"
#include "orthant/zpoly.hpp"
#include "util.hpp"

using namespace orthant;
using namespace testutil;

TEST_CASE("ext_gcd pinned examples") {
    // divisor case
    auto [g1, s1, t1] = ext_gcd(uq({-1, 0, 1}), uq({-1, 1}));
    CHECK(g1 == uq({-1, 1}));
    CHECK(s1.is_zero());
    CHECK(t1 == uq({1}));

    // distinct linear factors over Q
    auto [g2, s2, t2] = ext_gcd(uq({-1, 1}), uq({1, 1}));
    CHECK(g2 == uq({1}));
    CHECK(s2 == UniPoly<Rat>(RatCtx{}, {Rat(-1, 2)}));
    CHECK(t2 == UniPoly<Rat>(RatCtx{}, {Rat(1, 2)}));

    // gcd with zero
    auto a = uq({2, 0, 4});
    auto [g3, s3, t3] = ext_gcd(a, UniPoly<Rat>::zero(RatCtx{}));
    CHECK(g3 == a.monic());
    CHECK(s3 == UniPoly<Rat>(RatCtx{}, {Rat(1, 4)}));
    CHECK(t3.is_zero());
}

TEST_CASE("ext_gcd Bezout identity on random pairs, both fields") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> deg(0, 6);
    int nontrivial = 0;
    for (int i = 0; i < 1000; ++i) {
        auto a = random_monic_rat(rng, deg(rng));
        auto b = random_monic_rat(rng, deg(rng));
        auto [g, s, t] = ext_gcd(a, b);
        REQUIRE((s * a + t * b - g).is_zero());
        REQUIRE(g.is_monic());
        REQUIRE((a % g).is_zero());
        REQUIRE((b % g).is_zero());
        if (g.degree() > 0) ++nontrivial;
    }
    for (int i = 0; i < 1000; ++i) {
        auto a = random_monic_fp(rng, 5, deg(rng));
        auto b = random_monic_fp(rng, 5, deg(rng));
        auto [g, s, t] = ext_gcd(a, b);
        REQUIRE((s * a + t * b - g).is_zero());
        REQUIRE((a % g).is_zero());
        REQUIRE((b % g).is_zero());
    }
    CHECK(nontrivial > 0);  // the generator does hit common factors
}

TEST_CASE("squarefree decomposition examples") {
    const RatCtx q;
    auto f = uq({-1, 1}) * uq({-1, 1}) * uq({1, 1});  // (T-1)^2 (T+1)
    auto parts = squarefree_decomposition(f);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first == uq({1, 1}));
    CHECK(parts[0].second == 1);
    CHECK(parts[1].first == uq({-1, 1}));
    CHECK(parts[1].second == 2);

    auto g = uq({1, 0, 1});  // T^2 + 1 already squarefree
    auto parts2 = squarefree_decomposition(g);
    REQUIRE(parts2.size() == 1);
    CHECK(parts2[0].first == g);
    CHECK(parts2[0].second == 1);
}

TEST_CASE("squarefree extracts p-th powers over F_p") {
    // oracle: expand (T - a)^p by repeated multiplication, then decompose
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        const FpCtx ctx{p};
        for (std::int64_t a = 0; a < static_cast<std::int64_t>(p); ++a) {
            auto lin = ufp({-a, 1}, p);
            auto f = UniPoly<Fp>::constant(ctx, Fp(1, p));
            for (std::uint64_t i = 0; i < p; ++i) f = f * lin;
            auto parts = squarefree_decomposition(f);
            REQUIRE(parts.size() == 1);
            CHECK(parts[0].first == lin);
            CHECK(parts[0].second == static_cast<std::int64_t>(p));
        }
    }
}

TEST_CASE("squarefree reassembly and pairwise coprimality") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> deg(1, 3);
    std::uniform_int_distribution<int> mult(1, 3);
    for (int iter = 0; iter < 200; ++iter) {
        const bool rational = iter % 2 == 0;
        if (rational) {
            auto f = UniPoly<Rat>::constant(RatCtx{}, Rat(1));
            for (int k = 0; k < 3; ++k) {
                auto g = random_monic_rat(rng, deg(rng));
                for (int m = mult(rng); m > 0; --m) f = f * g;
            }
            auto parts = squarefree_decomposition(f);
            auto prod = UniPoly<Rat>::constant(RatCtx{}, Rat(1));
            for (const auto& [g, m] : parts) {
                REQUIRE(gcd(g, g.derivative()).degree() == 0);  // squarefree in char 0
                for (std::int64_t i = 0; i < m; ++i) prod = prod * g;
            }
            REQUIRE(prod == f);
            for (std::size_t i = 0; i < parts.size(); ++i)
                for (std::size_t j = i + 1; j < parts.size(); ++j)
                    REQUIRE(gcd(parts[i].first, parts[j].first).is_one());
        } else {
            auto f = UniPoly<Fp>::constant(FpCtx{5}, Fp(1, 5));
            for (int k = 0; k < 3; ++k) {
                auto g = random_monic_fp(rng, 5, deg(rng));
                for (int m = mult(rng); m > 0; --m) f = f * g;
            }
            auto parts = squarefree_decomposition(f);
            auto prod = UniPoly<Fp>::constant(FpCtx{5}, Fp(1, 5));
            for (const auto& [g, m] : parts)
                for (std::int64_t i = 0; i < m; ++i) prod = prod * g;
            REQUIRE(prod == f);
            for (std::size_t i = 0; i < parts.size(); ++i)
                for (std::size_t j = i + 1; j < parts.size(); ++j)
                    REQUIRE(gcd(parts[i].first, parts[j].first).is_one());
        }
    }
}

TEST_CASE("factor_fp pinned examples") {
    auto fs = factor_fp(ufp({1, 0, 1}, 5));  // T^2 + 1 = (T+2)(T+3) mod 5
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].first == ufp({2, 1}, 5));
    CHECK(fs[1].first == ufp({3, 1}, 5));

    auto f3 = factor_fp(ufp({1, 0, 1}, 3));  // irreducible mod 3
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].first == ufp({1, 0, 1}, 3));
    CHECK(f3[0].second == 1);
    CHECK(is_irreducible_fp(f3[0].first));

    auto f2 = factor_fp(ufp({-1, 0, 1}, 2));  // T^2 - 1 = (T+1)^2 mod 2
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].first == ufp({1, 1}, 2));
    CHECK(f2[0].second == 2);
}

TEST_CASE("factor_fp product identity and sieve on random inputs") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::int64_t> deg(1, 6);
    for (std::uint64_t p : {2ull, 5ull, 13ull}) {
        for (int i = 0; i < 60; ++i) {
            auto f = random_monic_fp(rng, p, deg(rng));
            auto fs = factor_fp(f);
            auto prod = UniPoly<Fp>::constant(FpCtx{p}, Fp(1, p));
            for (const auto& [phi, m] : fs) {
                REQUIRE(is_irreducible_fp(phi));
                for (std::int64_t k = 0; k < m; ++k) prod = prod * phi;
            }
            REQUIRE(prod == f);
        }
    }
}

TEST_CASE("factor_fp is deterministic for a fixed seed") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 20; ++i) {
        auto f = random_monic_fp(rng, 13, 6);
        auto a = factor_fp(f, 99);
        auto b = factor_fp(f, 99);
        REQUIRE(a == b);
    }
}

TEST_CASE("coprime_split examples over Q") {
    auto r = coprime_split(uq({-1, 0, 1}));
    REQUIRE(r.split);
    CHECK(r.split->first == uq({-1, 1}));
    CHECK(r.split->second == uq({1, 1}));

    auto cube = uq({-1, 1}) * uq({-1, 1}) * uq({-1, 1});
    auto r2 = coprime_split(cube);
    CHECK(!r2.split);
    CHECK(r2.phi == uq({-1, 1}));
    CHECK(r2.multiplicity == 3);

    auto r3 = coprime_split(uq({1, 0, 1}));
    CHECK(!r3.split);
    CHECK(r3.phi == uq({1, 0, 1}));
    CHECK(r3.multiplicity == 1);
}

TEST_CASE("coprime_split over Q: root extraction and bounded factorization") {
    // (T-1)(T^2-2): rational root route
    auto f = uq({-1, 1}) * uq({-2, 0, 1});
    auto r = coprime_split(f);
    REQUIRE(r.split);
    CHECK((r.split->first * r.split->second - f).is_zero());
    CHECK(gcd(r.split->first, r.split->second).is_one());

    // (T^2-2)(T^2-3): Zassenhaus route
    auto g = uq({-2, 0, 1}) * uq({-3, 0, 1});
    auto r2 = coprime_split(g);
    REQUIRE(r2.split);
    CHECK((r2.split->first * r2.split->second - g).is_zero());
    CHECK(gcd(r2.split->first, r2.split->second).is_one());
    CHECK(r2.split->first.degree() == 2);

    // cyclotomic Phi_5: irreducible, degree within the bound
    auto phi5 = uq({1, 1, 1, 1, 1});
    auto r3 = coprime_split(phi5);
    CHECK(!r3.split);
    CHECK(r3.phi == phi5);
    CHECK(r3.multiplicity == 1);

    // beyond the bound: fails loudly
    CHECK_THROWS_AS(coprime_split(phi5, {.degree_bound = 3}), DegreeBoundExceeded);

    // fractional coefficients exercise the monic integer scaling
    auto h = uq({-1, 2}).monic() * uq({1, 3}).monic();  // (T - 1/2)(T + 1/3)
    auto r4 = coprime_split(h);
    REQUIRE(r4.split);
    CHECK((r4.split->first * r4.split->second - h).is_zero());
}

TEST_CASE("coprime_split over F_p agrees with the full factorization") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<std::int64_t> deg(1, 6);
    for (int i = 0; i < 150; ++i) {
        auto f = random_monic_fp(rng, 5, deg(rng));
        auto r = coprime_split(f);
        auto fs = factor_fp(f);
        if (r.split) {
            REQUIRE(fs.size() >= 2);
            REQUIRE((r.split->first * r.split->second - f).is_zero());
            REQUIRE(gcd(r.split->first, r.split->second).is_one());
            REQUIRE(r.split->first.degree() >= 1);
            REQUIRE(r.split->second.degree() >= 1);
        } else {
            REQUIRE(fs.size() == 1);
            REQUIRE(r.phi == fs[0].first);
            REQUIRE(r.multiplicity == fs[0].second);
        }
    }
}

TEST_CASE("zpoly_mul_trunc pinned examples") {
    auto a = zq("Z - x");
    auto b = zq("Z + x");
    auto p = zpoly_mul_trunc(a, b, 5);
    CHECK(p.same_terms(zq("Z^2 - x^2")));

    auto c = zq("Z - 1", {"x"});
    auto d = zq("Z + 1", {"x"});
    CHECK(zpoly_mul_trunc(c, d, 3).same_terms(zq("Z^2 - 1", {"x"})));

    // cross terms above the order fall away
    auto e = zq("Z - x - x^2/2");
    auto f = zq("Z + x + x^2/2");
    CHECK(zpoly_mul_trunc(e, f, 3).same_terms(zq("Z^2 - x^2")));
}

TEST_CASE("zpoly_mul_trunc agrees with exact multiplication plus truncation") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        auto a = random_zpoly_fp(rng, 5, 2, 2, 6);
        auto b = random_zpoly_fp(rng, 5, 2, 2, 6);
        auto exact = zpoly_mul_exact(a, b);
        for (std::int64_t N : {1, 3, 6, 9}) {
            REQUIRE(zpoly_mul_trunc(a, b, N).same_terms(exact.truncated(N)));
        }
    }
}
