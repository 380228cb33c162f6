#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthant/unipoly.hpp"
#include "orthant/zpoly.hpp"

namespace orthant {

struct LatticeViolation : public InternalError {
    explicit LatticeViolation(const std::string& term)
        : InternalError("LatticeViolation",
                        "lifted factor has a term off the q-lattice: " + term) {}
};

struct CheckReport {
    bool ok = false;
    std::int64_t congruence_order = 0;  // largest M <= N' with F1*F2 == P mod (x)^M
    bool seeds_coprime = false;
    bool lattice_ok = false;
    bool recomposition_ok = false;
    std::int64_t stage_violations = 0;
    std::string first_mismatch;  // empty when the congruence holds
};

template <Field K>
struct Certificate {
    ZPoly<K> f1, f2;
    std::int64_t q = 1;
    ExpVec beta;
    std::int64_t order = 0;  // verified congruence order N'
    std::int64_t lift_order = 0;  // order the substituted world ran at
    CheckReport checks;
};

struct LiftReport {
    std::int64_t stages = 0;
    std::int64_t stage_violations = 0;
};

/// S(x,Z) := P(x_1^q,...,x_n^q, x^beta Z) / x^(d beta), truncated mod (x)^N.
/// Per-term exponent arithmetic q*alpha + j*beta - d*beta; the orthant
/// inequality alpha/(d-j) >=* beta/q makes every entry nonnegative, so a
/// negative entry is a fatal inconsistency. S mod (x) equals P_bar.
template <Field K>
ZPoly<K> substitute_and_normalize(const ZPoly<K>& P, std::int64_t q, const ExpVec& beta,
                                  std::int64_t N) {
    const std::int64_t d = P.degree();
    const std::size_t n = P.nvars();
    assert(beta.size() == n && q >= 1);
    const std::int64_t beta_total = beta.total_degree();

    if (P.trunc()) {
        // a P-term of x-degree >= trunc maps to an S-term of degree
        // >= q*trunc - d*|beta|; everything below N must be fully known
        if (q * *P.trunc() - d * beta_total < N)
            throw TruncationTooSmall("input truncation " + std::to_string(*P.trunc()) +
                                     " supports the substituted world only below order " +
                                     std::to_string(q * *P.trunc() - d * beta_total) +
                                     ", need " + std::to_string(N));
    }

    std::vector<XPoly<K>> lower;
    lower.reserve(static_cast<std::size_t>(d));
    for (std::int64_t j = 0; j < d; ++j) {
        std::vector<typename XPoly<K>::Term> keep;
        for (const auto& [e, coeff] : P.coeff(j).terms()) {
            std::vector<std::int64_t> exps(n);
            for (std::size_t i = 0; i < n; ++i) {
                exps[i] = q * e[i] + (j - d) * beta[i];
                if (exps[i] < 0)
                    throw InternalError("NegativeExponent",
                                        "substitution produced a negative exponent at " + e.str() +
                                            " Z^" + std::to_string(j) +
                                            "; the orthant inequality is violated");
            }
            ExpVec ev(std::move(exps));
            if (ev.total_degree() < N) keep.emplace_back(std::move(ev), coeff);
        }
        lower.push_back(XPoly<K>::from_terms(n, P.ctx(), std::move(keep)));
    }
    return ZPoly<K>(n, P.ctx(), std::move(lower), N);
}

namespace detail {

/// In-place lifting state: current factors (dense, monic), Bezout data for
/// the seeds, running defect D = S - T1*T2 mod (x)^N.
template <Field K>
struct LiftState {
    ZDense<K> target;
    ZDense<K> t1, t2;
    UniPoly<K> bez_s, bez_t;  // s*seed1 + t*seed2 = 1
    std::int64_t stage = 0;
    std::int64_t order = 0;

    LiftState(const typename K::Ctx& ctx) : bez_s(ctx), bez_t(ctx) {}
};

template <Field K>
ZDense<K> unipoly_to_dense(const UniPoly<K>& f, std::size_t nvars) {
    ZDense<K> v;
    v.reserve(static_cast<std::size_t>(f.degree()) + 1);
    for (std::int64_t j = 0; j <= f.degree(); ++j)
        v.push_back(XPoly<K>::constant(nvars, f.ctx(), f.coeff(static_cast<std::size_t>(j))));
    return v;
}

template <Field K>
ZDense<K> zdense_sub(const ZDense<K>& a, const ZDense<K>& b) {
    const std::size_t n = a.front().nvars();
    const auto ctx = a.front().ctx();
    ZDense<K> r(std::max(a.size(), b.size()), XPoly<K>::zero(n, ctx));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

}  // namespace detail

/// Graded Hensel lifting: starting from coprime monic seeds with
/// seed1*seed2 = S mod (x), produces monic T1, T2 of the same degrees with
/// T1*T2 == S mod (x)^N and T_i == seed_i mod (x). The defect at x-degree k
/// is split through the Bezout pair (A reduced modulo seed1 first), so runs
/// are byte-reproducible. The stage invariant T1*T2 == S mod (x)^(k+1) is
/// checked after every stage and violations are counted in the report.
template <Field K>
std::pair<ZPoly<K>, ZPoly<K>> hensel_lift(const ZPoly<K>& S, const UniPoly<K>& seed1,
                                          const UniPoly<K>& seed2, std::int64_t N,
                                          LiftReport* report = nullptr) {
    const std::size_t n = S.nvars();
    const auto ctx = S.ctx();
    const std::int64_t d = S.degree();
    if (!seed1.is_monic() || !seed2.is_monic() || seed1.degree() + seed2.degree() != d)
        throw InternalError("BadSeeds", "seeds must be monic with degrees summing to deg S");
    auto [g, bs, bt] = ext_gcd(seed1, seed2);
    if (!g.is_one())
        throw NotCoprimeSeeds("gcd(seed1, seed2) = " + g.str("Z") + " != 1");
    // S mod (x): constant-in-x parts of the coefficients
    {
        std::vector<K> c0;
        for (std::int64_t j = 0; j < d; ++j) c0.push_back(S.coeff(j).constant_coeff());
        c0.push_back(K::one(ctx));
        UniPoly<K> smod(ctx, std::move(c0));
        if (!(seed1 * seed2 - smod).is_zero())
            throw InternalError("BadSeeds", "seed1*seed2 != S mod (x)");
    }

    detail::LiftState<K> st(ctx);
    st.target = to_dense(S);
    st.t1 = detail::unipoly_to_dense(seed1, n);
    st.t2 = detail::unipoly_to_dense(seed2, n);
    st.bez_s = bs;
    st.bez_t = bt;
    st.order = N;

    const std::int64_t d1 = seed1.degree();
    (void)d1;  // debug assertions only

    // running defect D = S - T1*T2, truncated at N
    ZDense<K> defect = detail::zdense_sub(st.target, zdense_mul_trunc(st.t1, st.t2, N));

    auto defect_low_degree = [&]() -> std::int64_t {
        std::int64_t low = N;
        for (const auto& c : defect)
            if (!c.is_zero()) low = std::min(low, c.low_degree());
        return low;
    };

    for (std::int64_t k = 1; k < N; ++k) {
        st.stage = k;
        // E_k = degree-k part of the defect, bucketed per x-monomial
        std::vector<std::pair<ExpVec, UniPoly<K>>> buckets;
        for (std::size_t j = 0; j < defect.size(); ++j) {
            const auto part = defect[j].homogeneous_part(k);
            for (const auto& [e, coeff] : part.terms()) {
                auto it = std::find_if(buckets.begin(), buckets.end(),
                                       [&](const auto& b) { return b.first == e; });
                if (it == buckets.end()) {
                    buckets.emplace_back(e, UniPoly<K>::zero(ctx));
                    it = std::prev(buckets.end());
                }
                it->second = it->second + UniPoly<K>::monomial(ctx, coeff, j);
            }
        }
        if (buckets.empty()) continue;

        ZDense<K> a_corr(st.t1.size(), XPoly<K>::zero(n, ctx));
        ZDense<K> b_corr(st.t2.size(), XPoly<K>::zero(n, ctx));
        for (auto& [e, e_poly] : buckets) {
            assert(e_poly.degree() < d);
            // solve seed2*a + seed1*b = e_poly with deg a < d1, deg b < d2
            auto a = (st.bez_t * e_poly) % seed1;
            auto b = exact_div(e_poly - a * seed2, seed1);
            assert(a.degree() < d1 && b.degree() < seed2.degree());
            for (std::int64_t i = 0; i <= a.degree(); ++i) {
                const K c = a.coeff(static_cast<std::size_t>(i));
                if (!c.is_zero())
                    a_corr[static_cast<std::size_t>(i)] =
                        a_corr[static_cast<std::size_t>(i)] + XPoly<K>::monomial(n, ctx, e, c);
            }
            for (std::int64_t i = 0; i <= b.degree(); ++i) {
                const K c = b.coeff(static_cast<std::size_t>(i));
                if (!c.is_zero())
                    b_corr[static_cast<std::size_t>(i)] =
                        b_corr[static_cast<std::size_t>(i)] + XPoly<K>::monomial(n, ctx, e, c);
            }
        }

        // D -= T2*A + T1*B + A*B, then T1 += A, T2 += B
        auto t2a = zdense_mul_trunc(st.t2, a_corr, N);
        auto t1b = zdense_mul_trunc(st.t1, b_corr, N);
        auto ab = zdense_mul_trunc(a_corr, b_corr, N);
        defect = detail::zdense_sub(defect, t2a);
        defect = detail::zdense_sub(defect, t1b);
        defect = detail::zdense_sub(defect, ab);
        for (std::size_t i = 0; i < a_corr.size(); ++i) st.t1[i] = st.t1[i] + a_corr[i];
        for (std::size_t i = 0; i < b_corr.size(); ++i) st.t2[i] = st.t2[i] + b_corr[i];

        // stage invariant: T1*T2 == S mod (x)^(k+1)
        if (report) {
            ++report->stages;
            if (defect_low_degree() <= k) ++report->stage_violations;
        } else {
            assert(defect_low_degree() > k);
        }
    }

    return {from_dense<K>(std::move(st.t1), N), from_dense<K>(std::move(st.t2), N)};
}

/// R_i with x^(d_i beta) * T_i(x, Z) = R_i(x, x^beta Z): per term
/// c x^eps Z^j -> c x^(eps + (d_i - j) beta) Z^j. Exponents stay nonnegative
/// for genuine lifts; a violation is surfaced with the offending term.
template <Field K>
ZPoly<K> recompose(const ZPoly<K>& T, const ExpVec& beta) {
    const std::int64_t di = T.degree();
    const std::size_t n = T.nvars();
    std::vector<XPoly<K>> lower;
    lower.reserve(static_cast<std::size_t>(di));
    for (std::int64_t j = 0; j < di; ++j) {
        std::vector<typename XPoly<K>::Term> terms;
        for (const auto& [e, coeff] : T.coeff(j).terms()) {
            std::vector<std::int64_t> exps(n);
            for (std::size_t i = 0; i < n; ++i) {
                exps[i] = e[i] + (di - j) * beta[i];
                if (exps[i] < 0)
                    throw InternalError("RecompositionFailure",
                                        "term " + e.str() + " Z^" + std::to_string(j) +
                                            " cannot absorb x^((d_i - j) beta)");
            }
            terms.emplace_back(ExpVec(std::move(exps)), coeff);
        }
        lower.push_back(XPoly<K>::from_terms(n, T.ctx(), std::move(terms)));
    }
    // every Z^j coefficient gained at least |beta| in degree, so the result
    // is complete one |beta| beyond the input order
    std::optional<std::int64_t> trunc;
    if (T.trunc()) trunc = *T.trunc() + beta.total_degree();
    return ZPoly<K>(n, T.ctx(), std::move(lower), trunc);
}

/// Verifies that every x-exponent of R is divisible by q (up to the carried
/// truncation order) and divides it out: F(x_1^q,...,x_n^q, Z) = R.
template <Field K>
ZPoly<K> descend_lattice(const ZPoly<K>& R, std::int64_t q) {
    assert(q >= 1);
    if (q == 1) return R;
    const std::size_t n = R.nvars();
    std::vector<XPoly<K>> lower;
    lower.reserve(static_cast<std::size_t>(R.degree()));
    for (std::int64_t j = 0; j < R.degree(); ++j) {
        std::vector<typename XPoly<K>::Term> terms;
        for (const auto& [e, coeff] : R.coeff(j).terms()) {
            if (!e.divisible_by(q))
                throw LatticeViolation("x^" + e.str() + " Z^" + std::to_string(j) +
                                       " (q = " + std::to_string(q) + ")");
            terms.emplace_back(e.divided_by(q), coeff);
        }
        lower.push_back(XPoly<K>::from_terms(n, R.ctx(), std::move(terms)));
    }
    std::optional<std::int64_t> trunc;
    if (R.trunc()) trunc = (*R.trunc() + q - 1) / q;
    return ZPoly<K>(n, R.ctx(), std::move(lower), trunc);
}

/// Exact truncated check F1*F2 == P mod (x)^N'. Always returns a report;
/// callers that require success inspect `ok`.
template <Field K>
CheckReport verify_certificate(const ZPoly<K>& P, const ZPoly<K>& F1, const ZPoly<K>& F2,
                               std::int64_t Nprime) {
    CheckReport rep;
    rep.seeds_coprime = true;
    rep.lattice_ok = true;
    rep.recomposition_ok = true;
    if (F1.degree() + F2.degree() != P.degree()) {
        rep.ok = false;
        rep.first_mismatch = "degrees do not sum to deg P";
        return rep;
    }
    auto prod = zpoly_mul_trunc(F1, F2, Nprime);
    auto ptr = P.truncated(Nprime);
    std::int64_t low = Nprime;
    std::string mismatch;
    for (std::int64_t j = 0; j < P.degree(); ++j) {
        auto diff = prod.coeff(j) - ptr.coeff(j);
        if (!diff.is_zero() && diff.low_degree() < low) {
            low = diff.low_degree();
            const auto& t = diff.terms().front();
            mismatch = "Z^" + std::to_string(j) + " x^" + t.first.str() + ": " + t.second.str();
        }
    }
    rep.congruence_order = low;
    rep.ok = (low >= Nprime);
    rep.first_mismatch = rep.ok ? "" : mismatch;
    return rep;
}

/// End-to-end certificate construction from the seed split of P_bar:
/// substitute, lift at order N = q N' + d max(beta), recompose, descend,
/// verify. Clamps N' to what a truncated input supports and records the
/// order actually verified.
template <Field K>
Certificate<K> hensel_certificate(const ZPoly<K>& P, std::int64_t q, const ExpVec& beta,
                                  const UniPoly<K>& seed1, const UniPoly<K>& seed2,
                                  std::int64_t order) {
    const std::int64_t d = P.degree();
    std::int64_t beta_max = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) beta_max = std::max(beta_max, beta[i]);

    std::int64_t Nprime = order;
    if (P.trunc()) {
        // invert the forward budget against the input's truncation
        const std::int64_t n_sub_max = q * *P.trunc() - d * beta.total_degree();
        const std::int64_t reachable = (n_sub_max - d * beta_max) / q;
        Nprime = std::min(Nprime, reachable);
        if (Nprime < 1)
            throw TruncationTooSmall("input truncation " + std::to_string(*P.trunc()) +
                                     " cannot certify any positive order");
    }
    const std::int64_t n_sub = q * Nprime + d * beta_max;

    auto S = substitute_and_normalize(P, q, beta, n_sub);
    LiftReport lift_rep;
    auto [t1, t2] = hensel_lift(S, seed1, seed2, n_sub, &lift_rep);
    auto r1 = recompose(t1, beta);
    auto r2 = recompose(t2, beta);
    auto f1 = descend_lattice(r1, q).truncated(Nprime);
    auto f2 = descend_lattice(r2, q).truncated(Nprime);

    // recomposition exactness: R_i(x, x^beta Z) must reproduce x^(d_i beta) T_i
    // up to the order both sides carry
    auto recomposition_exact = [&](const ZPoly<K>& R, const ZPoly<K>& T) {
        const std::int64_t di = T.degree();
        const std::int64_t cap = R.trunc() ? *R.trunc() : -1;
        for (std::int64_t j = 0; j < di; ++j) {
            std::vector<typename XPoly<K>::Term> terms;
            for (const auto& [e, coeff] : R.coeff(j).terms()) {
                std::vector<std::int64_t> exps(R.nvars());
                for (std::size_t i = 0; i < R.nvars(); ++i) exps[i] = e[i] + j * beta[i];
                terms.emplace_back(ExpVec(std::move(exps)), coeff);
            }
            auto back = XPoly<K>::from_terms(R.nvars(), R.ctx(), std::move(terms));
            std::vector<std::int64_t> shift(R.nvars());
            for (std::size_t i = 0; i < R.nvars(); ++i) shift[i] = di * beta[i];
            auto expect = T.coeff(j).mul_monomial(ExpVec(std::move(shift)), K::one(T.ctx()));
            // both sides gained j*beta; compare below the order R was kept to,
            // which exceeds R's carried truncation by the shared shift
            std::int64_t level = cap < 0 ? -1 : cap + j * beta.total_degree();
            if (back.truncated(level) != expect.truncated(level)) return false;
        }
        return true;
    };

    Certificate<K> cert{f1, f2, q, beta, Nprime, n_sub, {}};
    cert.checks = verify_certificate(P, f1, f2, Nprime);
    cert.checks.seeds_coprime = true;  // established before lifting
    cert.checks.lattice_ok = true;     // descend_lattice would have thrown
    cert.checks.recomposition_ok = recomposition_exact(r1, t1) && recomposition_exact(r2, t2);
    cert.checks.stage_violations = lift_rep.stage_violations;
    cert.checks.ok = cert.checks.ok && cert.checks.recomposition_ok &&
                     cert.checks.stage_violations == 0;
    if (!cert.checks.ok)
        throw InternalError("VerificationFailed",
                            "certificate failed verification at " + cert.checks.first_mismatch);
    return cert;
}

}  // namespace orthant
