#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orthant/simplex.hpp"
#include "orthant/zpoly.hpp"

namespace orthant {

/// Point with exact nonnegative rational coordinates (a generator d*alpha/(d-j)
/// of the associated polyhedron).
struct RatPoint {
    std::vector<Rat> c;

    std::size_t size() const { return c.size(); }
    const Rat& operator[](std::size_t i) const { return c[i]; }

    Rat dot(const std::vector<Rat>& w) const {
        assert(w.size() == c.size());
        Rat s(0);
        for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * w[i];
        return s;
    }

    bool leq_componentwise(const RatPoint& o) const {
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] > o.c[i]) return false;
        return true;
    }

    bool is_integral() const {
        for (const auto& v : c)
            if (!v.is_integer()) return false;
        return true;
    }

    ExpVec to_expvec() const {
        std::vector<std::int64_t> e;
        e.reserve(c.size());
        for (const auto& v : c) e.push_back(v.to_int64());
        return ExpVec(std::move(e));
    }

    bool operator==(const RatPoint& o) const { return c == o.c; }
    bool operator!=(const RatPoint& o) const { return !(*this == o); }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += c[i].str();
        }
        return s + ")";
    }
};

inline bool lex_less(const RatPoint& a, const RatPoint& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

/// Strictly positive weights on the x-variables, optionally extended by the
/// induced weight on Z (set by omega_extension).
struct WeightVector {
    std::vector<Rat> w;
    std::optional<Rat> w_last;

    explicit WeightVector(std::vector<Rat> weights) : w(std::move(weights)) {
        if (w.empty()) throw InputError("BadWeights", "empty weight vector");
        for (const auto& v : w)
            if (!(v > Rat(0))) throw InputError("BadWeights", "weights must be strictly positive");
    }

    Rat min_weight() const {
        Rat m = w[0];
        for (const auto& v : w)
            if (v < m) m = v;
        return m;
    }
};

struct VertexData {
    RatPoint point;
    std::vector<Rat> witness_omega;  // canonical strict separator: g.w < h.w for all other generators h
};

struct DeltaPolyhedron {
    std::vector<RatPoint> generators;  // multiset, sorted lexicographically
    std::vector<VertexData> vertices;  // sorted lexicographically by point
};

/// Convex-combination-plus-slack certificate that g lies in
/// conv(vertices) + R^n_{>=0}.
struct InsideCertificate {
    std::vector<Rat> lambda;
    std::vector<Rat> slack;
};

/// Lattice points of the Newton polyhedron witnessing a two-dimensional
/// compact face: apex (0,...,0,d) plus support points over two vertices of
/// the associated polyhedron (x-exponents first, Z-degree last).
struct FaceWitness {
    std::vector<std::int64_t> apex;
    std::vector<std::int64_t> b;
    std::vector<std::int64_t> c;
};

// ---- generator / vertex combinatorics (exact; see src/polyhedron.cpp) ----

/// The single componentwise-dominating generator, when the polyhedron is an
/// orthant d*gamma + R^n_{>=0}; nullopt when there are several vertices.
std::optional<RatPoint> orthant_check(const std::vector<RatPoint>& generators);

/// Vertex set of conv(generators) + R^n_{>=0}, each vertex certified by an
/// exact LP witness (maximal separation margin, then lexicographically
/// smallest weight on the optimal face).
DeltaPolyhedron delta_vertices(std::vector<RatPoint> generators);

std::optional<InsideCertificate> inside_certificate(const RatPoint& g,
                                                    const std::vector<VertexData>& vertices);

/// A strictly positive weight supporting both points at the common minimum
/// over all generators (i.e. the segment lies on the boundary), if any.
std::optional<std::vector<Rat>> segment_support(const RatPoint& v1, const RatPoint& v2,
                                                const std::vector<RatPoint>& generators);

// ---- operations on polynomials ----

/// Generators d*alpha/(d-j) of the associated polyhedron, one per support
/// term with j < d (a multiset). Throws DegeneratePolynomial on P = Z^d.
template <Field K>
std::vector<RatPoint> delta_generators(const ZPoly<K>& P) {
    if (P.is_pure_power()) throw DegeneratePolynomial();
    const std::int64_t d = P.degree();
    std::vector<RatPoint> out;
    for (const auto& t : P.support()) {
        if (t.j == d) continue;
        std::vector<Rat> coords;
        coords.reserve(P.nvars());
        for (std::size_t i = 0; i < P.nvars(); ++i)
            coords.push_back(Rat(d * t.alpha[i], d - t.j));
        out.push_back(RatPoint{std::move(coords)});
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

/// omega_{n+1} := min over generators of (g . omega) / d, attached to omega.
template <Field K>
WeightVector omega_extension(const ZPoly<K>& P, const WeightVector& omega) {
    if (omega.w.size() != P.nvars())
        throw InputError("BadWeights", "weight count does not match the variable count");
    auto gens = delta_generators(P);
    Rat mn = gens[0].dot(omega.w);
    for (const auto& g : gens) {
        Rat v = g.dot(omega.w);
        if (v < mn) mn = v;
    }
    WeightVector out = omega;
    out.w_last = mn / Rat(P.degree());
    return out;
}

/// Weighted initial form In_{omega'}(P): the terms of minimal omega'-weight.
/// Quasi-homogeneous; always contains Z^d and at least one term with j < d.
template <Field K>
ZPoly<K> initial_form(const ZPoly<K>& P, const WeightVector& omega) {
    if (!omega.w_last)
        throw InternalError("WeightsNotExtended", "initial_form requires an extended weight vector");
    const std::int64_t d = P.degree();
    const Rat nu = Rat(d) * *omega.w_last;
    if (P.trunc() && Rat(*P.trunc()) * omega.min_weight() <= nu)
        throw TruncationTooSmall(
            "truncation order " + std::to_string(*P.trunc()) +
            " cannot certify the initial form at weight level " + nu.str());
    std::vector<XPoly<K>> lower;
    lower.reserve(static_cast<std::size_t>(d));
    bool has_lower_term = false;
    for (std::int64_t j = 0; j < d; ++j) {
        std::vector<typename XPoly<K>::Term> keep;
        for (const auto& [e, coeff] : P.coeff(j).terms()) {
            if (e.dot(omega.w) + Rat(j) * *omega.w_last == nu) keep.emplace_back(e, coeff);
        }
        has_lower_term |= !keep.empty();
        lower.push_back(XPoly<K>::from_terms(P.nvars(), P.ctx(), std::move(keep)));
    }
    if (!has_lower_term)
        throw InternalError("EmptyInitialForm", "initial form degenerated to Z^d");
    return ZPoly<K>(P.nvars(), P.ctx(), std::move(lower));
}

/// Face witness of the two-vertex case: apex (0,d) plus support points of
/// NP(P) projecting onto two boundary-adjacent vertices of the associated
/// polyhedron. nullopt when the polyhedron has a single vertex.
template <Field K>
std::optional<FaceWitness> face_witness(const ZPoly<K>& P, const DeltaPolyhedron& delta) {
    if (delta.vertices.size() < 2) return std::nullopt;
    const std::int64_t d = P.degree();

    // vertex pairs in canonical order (lex-descending points first)
    std::vector<RatPoint> vs;
    for (const auto& v : delta.vertices) vs.push_back(v.point);
    std::sort(vs.begin(), vs.end(), [](const RatPoint& a, const RatPoint& b) { return lex_less(b, a); });

    auto support_point = [&](const RatPoint& gamma) -> std::vector<std::int64_t> {
        for (std::int64_t j = 0; j < d; ++j) {
            for (const auto& [e, coeff] : P.coeff(j).terms()) {
                bool match = true;
                for (std::size_t i = 0; i < P.nvars(); ++i) {
                    if (Rat(d * e[i], d - j) != gamma[i]) {
                        match = false;
                        break;
                    }
                }
                if (match) {
                    std::vector<std::int64_t> pt(e.entries());
                    pt.push_back(j);
                    return pt;
                }
            }
        }
        throw InternalError("SupportOffLattice",
                            "no support term projects onto vertex " + gamma.str());
    };

    auto gens = delta_generators(P);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (segment_support(vs[i], vs[j], gens)) {
                std::vector<std::int64_t> apex(P.nvars(), 0);
                apex.push_back(d);
                return FaceWitness{apex, support_point(vs[i]), support_point(vs[j])};
            }
        }
    }
    throw InternalError("NoAdjacentVertices",
                        "no boundary segment found between vertices of the associated polyhedron");
}

}  // namespace orthant
