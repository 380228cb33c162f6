#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "orthant/errors.hpp"
#include "orthant/rational.hpp"

namespace orthant {

/// Monomial exponent vector in the x-variables: n nonnegative integers.
class ExpVec {
public:
    ExpVec() = default;
    explicit ExpVec(std::vector<std::int64_t> e) : e_(std::move(e)) {
        for (auto v : e_) {
            if (v < 0)
                throw InternalError("NegativeExponent",
                                    "negative entry in exponent vector: " + str());
        }
    }

    static ExpVec zeros(std::size_t n) { return ExpVec(std::vector<std::int64_t>(n, 0)); }

    std::size_t size() const { return e_.size(); }
    std::int64_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::int64_t>& entries() const { return e_; }

    std::int64_t total_degree() const {
        return std::accumulate(e_.begin(), e_.end(), std::int64_t{0});
    }

    bool is_zero() const {
        for (auto v : e_)
            if (v != 0) return false;
        return true;
    }

    ExpVec plus(const ExpVec& o) const {
        assert(size() == o.size());
        std::vector<std::int64_t> r(e_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.e_[i];
        return ExpVec(std::move(r));
    }

    ExpVec scaled(std::int64_t k) const {
        assert(k >= 0);
        std::vector<std::int64_t> r(e_);
        for (auto& v : r) v *= k;
        return ExpVec(std::move(r));
    }

    bool leq_componentwise(const ExpVec& o) const {
        assert(size() == o.size());
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    bool divisible_by(std::int64_t q) const {
        for (auto v : e_)
            if (v % q != 0) return false;
        return true;
    }

    ExpVec divided_by(std::int64_t q) const {
        std::vector<std::int64_t> r(e_);
        for (auto& v : r) v /= q;
        return ExpVec(std::move(r));
    }

    Rat dot(std::span<const Rat> w) const {
        assert(w.size() == e_.size());
        Rat s(0);
        for (std::size_t i = 0; i < e_.size(); ++i) s += Rat(e_[i]) * w[i];
        return s;
    }

    bool operator==(const ExpVec& o) const { return e_ == o.e_; }
    bool operator!=(const ExpVec& o) const { return e_ != o.e_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e_[i]);
        }
        return s + ")";
    }

private:
    std::vector<std::int64_t> e_;
};

/// Graded term order: ascending total degree; within a degree, x1-heavy
/// monomials first. It is a monomial order (compatible with multiplication),
/// which exact division relies on.
inline bool graded_less(const ExpVec& a, const ExpVec& b) {
    const std::int64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

}  // namespace orthant
