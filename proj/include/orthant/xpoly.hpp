#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthant/expvec.hpp"
#include "orthant/field.hpp"

namespace orthant {

/// Sparse multivariate polynomial in the x-variables. Terms are kept sorted
/// in the graded order with no zero coefficients, so equality and printing
/// are canonical.
template <Field K>
class XPoly {
public:
    using Ctx = typename K::Ctx;
    using Term = std::pair<ExpVec, K>;

    XPoly(std::size_t nvars, const Ctx& ctx) : nvars_(nvars), ctx_(ctx) {}

    static XPoly zero(std::size_t nvars, const Ctx& ctx) { return XPoly(nvars, ctx); }
    static XPoly constant(std::size_t nvars, const Ctx& ctx, const K& a) {
        XPoly p(nvars, ctx);
        if (!a.is_zero()) p.terms_.emplace_back(ExpVec::zeros(nvars), a);
        return p;
    }
    static XPoly one(std::size_t nvars, const Ctx& ctx) {
        return constant(nvars, ctx, K::one(ctx));
    }
    static XPoly monomial(std::size_t nvars, const Ctx& ctx, ExpVec e, const K& a) {
        assert(e.size() == nvars);
        XPoly p(nvars, ctx);
        if (!a.is_zero()) p.terms_.emplace_back(std::move(e), a);
        return p;
    }
    static XPoly from_terms(std::size_t nvars, const Ctx& ctx, std::vector<Term> terms) {
        XPoly p(nvars, ctx);
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const Ctx& ctx() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_zero()); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first.is_zero() && terms_[0].second.is_one(); }

    K constant_coeff() const {
        if (!terms_.empty() && terms_.front().first.is_zero()) return terms_.front().second;
        return K::zero(ctx_);
    }

    K coeff(const ExpVec& e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const ExpVec& x) {
            return graded_less(t.first, x);
        });
        if (it != terms_.end() && it->first == e) return it->second;
        return K::zero(ctx_);
    }

    std::int64_t total_degree() const {
        assert(!terms_.empty());
        return terms_.back().first.total_degree();
    }

    std::int64_t low_degree() const {
        assert(!terms_.empty());
        return terms_.front().first.total_degree();
    }

    const Term& lead_term() const {
        assert(!terms_.empty());
        return terms_.back();
    }

    XPoly operator-() const {
        XPoly r(*this);
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    XPoly operator+(const XPoly& o) const {
        assert(nvars_ == o.nvars_);
        XPoly r(nvars_, ctx_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            if (terms_[i].first == o.terms_[j].first) {
                K s = terms_[i].second + o.terms_[j].second;
                if (!s.is_zero()) r.terms_.emplace_back(terms_[i].first, std::move(s));
                ++i;
                ++j;
            } else if (graded_less(terms_[i].first, o.terms_[j].first)) {
                r.terms_.push_back(terms_[i++]);
            } else {
                r.terms_.push_back(o.terms_[j++]);
            }
        }
        while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
        while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
        return r;
    }

    XPoly operator-(const XPoly& o) const { return *this + (-o); }

    XPoly operator*(const XPoly& o) const {
        assert(nvars_ == o.nvars_);
        XPoly r(nvars_, ctx_);
        if (is_zero() || o.is_zero()) return r;
        r.terms_.reserve(terms_.size() * o.terms_.size());
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) r.terms_.emplace_back(ea.plus(eb), ca * cb);
        r.normalize();
        return r;
    }

    XPoly scaled(const K& a) const {
        XPoly r(nvars_, ctx_);
        if (a.is_zero()) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.second = t.second * a;
        return r;
    }

    XPoly mul_monomial(const ExpVec& e, const K& a) const {
        XPoly r(nvars_, ctx_);
        if (a.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& [ee, cc] : terms_) r.terms_.emplace_back(ee.plus(e), cc * a);
        return r;  // order preserved under translation
    }

    /// Drops all terms of total degree >= N. N < 0 means no truncation.
    XPoly truncated(std::int64_t N) const {
        if (N < 0) return *this;
        XPoly r(nvars_, ctx_);
        for (const auto& t : terms_) {
            if (t.first.total_degree() >= N) break;  // sorted by degree
            r.terms_.push_back(t);
        }
        return r;
    }

    /// The homogeneous part of total degree k.
    XPoly homogeneous_part(std::int64_t k) const {
        XPoly r(nvars_, ctx_);
        for (const auto& t : terms_) {
            const std::int64_t d = t.first.total_degree();
            if (d > k) break;
            if (d == k) r.terms_.push_back(t);
        }
        return r;
    }

    bool is_homogeneous() const {
        return terms_.empty() || terms_.front().first.total_degree() == terms_.back().first.total_degree();
    }

    /// Sum of all coefficients, i.e. evaluation at x = (1,...,1).
    K eval_at_one() const {
        K s = K::zero(ctx_);
        for (const auto& t : terms_) s = s + t.second;
        return s;
    }

    /// x_i -> x_i^q on every variable.
    XPoly stretch(std::int64_t q) const {
        XPoly r(nvars_, ctx_);
        r.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_) r.terms_.emplace_back(e.scaled(q), c);
        return r;  // stretching preserves the graded order
    }

    /// Exact multivariate division by a single divisor; nullopt when not divisible.
    std::optional<XPoly> exact_div(const XPoly& g) const {
        assert(!g.is_zero());
        XPoly q(nvars_, ctx_);
        XPoly r(*this);
        const auto& [lg, cg] = g.lead_term();
        const K inv = cg.inverse();
        while (!r.is_zero()) {
            const auto& [lr, cr] = r.lead_term();
            std::vector<std::int64_t> diff(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) {
                diff[i] = lr[i] - lg[i];
                if (diff[i] < 0) return std::nullopt;
            }
            ExpVec m{std::move(diff)};
            const K c = cr * inv;
            q.terms_.emplace_back(m, c);
            r = r - g.mul_monomial(m, c);
        }
        q.normalize();
        return q;
    }

    bool operator==(const XPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const XPoly& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) append_term(out, e, c, -1, names);
        return out;
    }

    /// Appends one printed term "c*x^a*...*Z^j" to `out` (j < 0: no Z part).
    static void append_term(std::string& out, const ExpVec& e, const K& c, std::int64_t zdeg,
                            const std::vector<std::string>& names) {
        std::string coeff = c.str();
        const bool neg = !coeff.empty() && coeff[0] == '-';
        std::string mag = neg ? coeff.substr(1) : coeff;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names.at(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (zdeg > 0) {
            if (!mono.empty()) mono += "*";
            mono += "Z";
            if (zdeg > 1) mono += "^" + std::to_string(zdeg);
        }
        if (mono.empty()) {
            out += mag;
        } else {
            if (mag != "1") out += mag + "*";
            out += mono;
        }
    }

private:
    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return graded_less(a.first, b.first); });
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().first == t.first) {
                merged.back().second = merged.back().second + t.second;
            } else {
                merged.push_back(std::move(t));
            }
        }
        std::erase_if(merged, [](const Term& t) { return t.second.is_zero(); });
        terms_ = std::move(merged);
    }

    std::size_t nvars_;
    Ctx ctx_;
    std::vector<Term> terms_;
};

}  // namespace orthant
