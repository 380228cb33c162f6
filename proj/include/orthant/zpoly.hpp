#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthant/unipoly.hpp"
#include "orthant/xpoly.hpp"

namespace orthant {

template <Field K>
struct SupportTerm {
    ExpVec alpha;
    std::int64_t j;
    K coeff;
};

/// Monic polynomial Z^d + a_{d-1}(x) Z^{d-1} + ... + a_0(x) with coefficients
/// in k[x], optionally carried as a truncation mod (x)^N (N counts total
/// x-degree; nullopt = exact polynomial data).
template <Field K>
class ZPoly {
public:
    using Ctx = typename K::Ctx;

    ZPoly(std::size_t nvars, const Ctx& ctx, std::vector<XPoly<K>> lower,
          std::optional<std::int64_t> trunc = std::nullopt)
        : nvars_(nvars), ctx_(ctx), lower_(std::move(lower)), trunc_(trunc) {
        if (lower_.empty())
            throw InternalError("BadZPoly", "Z-degree must be at least 1");
        for (auto& a : lower_) {
            assert(a.nvars() == nvars_);
            if (trunc_) a = a.truncated(*trunc_);
        }
    }

    static ZPoly pure_power(std::size_t nvars, const Ctx& ctx, std::int64_t d,
                            std::optional<std::int64_t> trunc = std::nullopt) {
        assert(d >= 1);
        return ZPoly(nvars, ctx,
                     std::vector<XPoly<K>>(static_cast<std::size_t>(d), XPoly<K>::zero(nvars, ctx)), trunc);
    }

    std::size_t nvars() const { return nvars_; }
    const Ctx& ctx() const { return ctx_; }
    std::int64_t degree() const { return static_cast<std::int64_t>(lower_.size()); }
    std::optional<std::int64_t> trunc() const { return trunc_; }

    /// a_j for j < d (the coefficient of Z^d is the constant 1).
    const XPoly<K>& coeff(std::int64_t j) const {
        assert(j >= 0 && j < degree());
        return lower_[static_cast<std::size_t>(j)];
    }

    bool is_pure_power() const {
        for (const auto& a : lower_)
            if (!a.is_zero()) return false;
        return true;
    }

    /// All nonzero terms (alpha, j, c), including the leading (0, d, 1).
    std::vector<SupportTerm<K>> support() const {
        std::vector<SupportTerm<K>> s;
        for (std::int64_t j = 0; j < degree(); ++j)
            for (const auto& [e, c] : lower_[static_cast<std::size_t>(j)].terms())
                s.push_back({e, j, c});
        s.push_back({ExpVec::zeros(nvars_), degree(), K::one(ctx_)});
        return s;
    }

    ZPoly truncated(std::int64_t N) const {
        std::vector<XPoly<K>> r;
        r.reserve(lower_.size());
        for (const auto& a : lower_) r.push_back(a.truncated(N));
        std::int64_t eff = trunc_ ? std::min(*trunc_, N) : N;
        return ZPoly(nvars_, ctx_, std::move(r), eff);
    }

    /// Dehomogenized polynomial P(1,...,1,Z) in k[Z]; monic of the same degree.
    UniPoly<K> eval_x_one() const {
        std::vector<K> c;
        c.reserve(lower_.size() + 1);
        for (const auto& a : lower_) c.push_back(a.eval_at_one());
        c.push_back(K::one(ctx_));
        return UniPoly<K>(ctx_, std::move(c));
    }

    bool operator==(const ZPoly& o) const {
        return nvars_ == o.nvars_ && lower_ == o.lower_ && trunc_ == o.trunc_;
    }
    bool operator!=(const ZPoly& o) const { return !(*this == o); }

    /// Term-for-term equality ignoring the carried truncation orders.
    bool same_terms(const ZPoly& o) const { return nvars_ == o.nvars_ && lower_ == o.lower_; }

    std::string str(const std::vector<std::string>& names) const {
        std::string out;
        XPoly<K>::append_term(out, ExpVec::zeros(nvars_), K::one(ctx_), degree(), names);
        for (std::int64_t j = degree() - 1; j >= 0; --j)
            for (const auto& [e, c] : lower_[static_cast<std::size_t>(j)].terms())
                XPoly<K>::append_term(out, e, c, j, names);
        return out;
    }

private:
    std::size_t nvars_;
    Ctx ctx_;
    std::vector<XPoly<K>> lower_;  // a_0 .. a_{d-1}
    std::optional<std::int64_t> trunc_;
};

/// Dense-in-Z working form (index = Z-degree, leading coefficient explicit).
/// Used by the lifting internals where intermediates are not monic.
template <Field K>
using ZDense = std::vector<XPoly<K>>;

template <Field K>
ZDense<K> to_dense(const ZPoly<K>& p) {
    ZDense<K> v;
    v.reserve(static_cast<std::size_t>(p.degree()) + 1);
    for (std::int64_t j = 0; j < p.degree(); ++j) v.push_back(p.coeff(j));
    v.push_back(XPoly<K>::one(p.nvars(), p.ctx()));
    return v;
}

template <Field K>
ZPoly<K> from_dense(ZDense<K> v, std::optional<std::int64_t> trunc) {
    assert(v.size() >= 2 && v.back().is_one());
    const std::size_t n = v.front().nvars();
    const auto ctx = v.front().ctx();
    v.pop_back();
    return ZPoly<K>(n, ctx, std::move(v), trunc);
}

template <Field K>
ZDense<K> zdense_mul_trunc(const ZDense<K>& a, const ZDense<K>& b, std::int64_t N) {
    assert(!a.empty() && !b.empty());
    const std::size_t n = a.front().nvars();
    const auto ctx = a.front().ctx();
    ZDense<K> r(a.size() + b.size() - 1, XPoly<K>::zero(n, ctx));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] = r[i + j] + (a[i] * b[j]).truncated(N);
        }
    }
    if (N >= 0)
        for (auto& c : r) c = c.truncated(N);
    return r;
}

/// Truncated product of monic polynomials: every coefficient of the result is
/// reduced mod (x)^N; the result is monic of degree d_A + d_B.
template <Field K>
ZPoly<K> zpoly_mul_trunc(const ZPoly<K>& a, const ZPoly<K>& b, std::int64_t N) {
    assert(a.nvars() == b.nvars());
    auto prod = zdense_mul_trunc(to_dense(a), to_dense(b), N);
    return from_dense<K>(std::move(prod), N >= 0 ? std::optional<std::int64_t>(N) : std::nullopt);
}

/// Exact (untruncated) product; for property tests against the truncated path.
template <Field K>
ZPoly<K> zpoly_mul_exact(const ZPoly<K>& a, const ZPoly<K>& b) {
    assert(a.nvars() == b.nvars());
    auto prod = zdense_mul_trunc(to_dense(a), to_dense(b), -1);
    return from_dense<K>(std::move(prod), std::nullopt);
}

}  // namespace orthant
