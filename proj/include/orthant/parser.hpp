#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "orthant/field.hpp"
#include "orthant/zpoly.hpp"

namespace orthant {

/// AST for polynomial expressions over the grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := ('-'|'+')* atom ('^' INT)?
///   atom   := INT | IDENT | '(' expr ')'
/// Implicit multiplication is rejected except directly before '('.
/// '/' is only valid with a nonzero constant divisor (rational coefficients).
struct AstNode {
    enum class Kind { Number, Variable, Add, Sub, Mul, Div, Neg, Pow };

    Kind kind;
    std::string text;     // Number: digits; Variable: name
    std::int64_t power = 0;  // Pow
    std::vector<std::unique_ptr<AstNode>> children;
    int line = 0, col = 0;
};

std::unique_ptr<AstNode> parse_expression(const std::string& text);

/// Polynomial in the x-variables and Z during AST expansion (dense in Z).
template <Field K>
struct ExpandedPoly {
    std::vector<XPoly<K>> z_coeffs;  // index = Z-degree; empty = zero

    static ExpandedPoly zero() { return {}; }
};

namespace detail {

template <Field K>
ExpandedPoly<K> ep_add(const ExpandedPoly<K>& a, const ExpandedPoly<K>& b) {
    ExpandedPoly<K> r;
    r.z_coeffs.reserve(std::max(a.z_coeffs.size(), b.z_coeffs.size()));
    for (std::size_t i = 0; i < std::max(a.z_coeffs.size(), b.z_coeffs.size()); ++i) {
        if (i < a.z_coeffs.size() && i < b.z_coeffs.size())
            r.z_coeffs.push_back(a.z_coeffs[i] + b.z_coeffs[i]);
        else if (i < a.z_coeffs.size())
            r.z_coeffs.push_back(a.z_coeffs[i]);
        else
            r.z_coeffs.push_back(b.z_coeffs[i]);
    }
    while (!r.z_coeffs.empty() && r.z_coeffs.back().is_zero()) r.z_coeffs.pop_back();
    return r;
}

template <Field K>
ExpandedPoly<K> ep_mul(const ExpandedPoly<K>& a, const ExpandedPoly<K>& b, std::size_t n,
                       const typename K::Ctx& ctx) {
    ExpandedPoly<K> r;
    if (a.z_coeffs.empty() || b.z_coeffs.empty()) return r;
    r.z_coeffs.assign(a.z_coeffs.size() + b.z_coeffs.size() - 1, XPoly<K>::zero(n, ctx));
    for (std::size_t i = 0; i < a.z_coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.z_coeffs.size(); ++j)
            r.z_coeffs[i + j] = r.z_coeffs[i + j] + a.z_coeffs[i] * b.z_coeffs[j];
    while (!r.z_coeffs.empty() && r.z_coeffs.back().is_zero()) r.z_coeffs.pop_back();
    return r;
}

template <Field K>
ExpandedPoly<K> ep_neg(const ExpandedPoly<K>& a) {
    ExpandedPoly<K> r;
    r.z_coeffs.reserve(a.z_coeffs.size());
    for (const auto& c : a.z_coeffs) r.z_coeffs.push_back(-c);
    return r;
}

template <Field K>
ExpandedPoly<K> expand_ast(const AstNode& node, const std::vector<std::string>& vars,
                           std::size_t n, const typename K::Ctx& ctx) {
    switch (node.kind) {
        case AstNode::Kind::Number: {
            ExpandedPoly<K> r;
            K value = K::zero(ctx);
            for (char ch : node.text) value = value * K::from_int(ctx, 10) + K::from_int(ctx, ch - '0');
            if (!value.is_zero()) r.z_coeffs.push_back(XPoly<K>::constant(n, ctx, value));
            return r;
        }
        case AstNode::Kind::Variable: {
            ExpandedPoly<K> r;
            if (node.text == "Z") {
                r.z_coeffs.push_back(XPoly<K>::zero(n, ctx));
                r.z_coeffs.push_back(XPoly<K>::one(n, ctx));
                return r;
            }
            for (std::size_t i = 0; i < vars.size(); ++i) {
                if (vars[i] == node.text) {
                    std::vector<std::int64_t> e(n, 0);
                    e[i] = 1;
                    r.z_coeffs.push_back(XPoly<K>::monomial(n, ctx, ExpVec(std::move(e)), K::one(ctx)));
                    return r;
                }
            }
            throw InputError("UnknownVariable", "unknown variable '" + node.text + "' (line " +
                                                    std::to_string(node.line) + ", column " +
                                                    std::to_string(node.col) + ")");
        }
        case AstNode::Kind::Add:
            return ep_add(expand_ast<K>(*node.children[0], vars, n, ctx),
                          expand_ast<K>(*node.children[1], vars, n, ctx));
        case AstNode::Kind::Sub:
            return ep_add(expand_ast<K>(*node.children[0], vars, n, ctx),
                          ep_neg(expand_ast<K>(*node.children[1], vars, n, ctx)));
        case AstNode::Kind::Mul:
            return ep_mul(expand_ast<K>(*node.children[0], vars, n, ctx),
                          expand_ast<K>(*node.children[1], vars, n, ctx), n, ctx);
        case AstNode::Kind::Neg:
            return ep_neg(expand_ast<K>(*node.children[0], vars, n, ctx));
        case AstNode::Kind::Div: {
            auto num = expand_ast<K>(*node.children[0], vars, n, ctx);
            auto den = expand_ast<K>(*node.children[1], vars, n, ctx);
            if (den.z_coeffs.size() != 1 || !den.z_coeffs[0].is_constant())
                throw ParseError("division is only allowed by nonzero constants", node.line, node.col);
            const K c = den.z_coeffs[0].constant_coeff();
            if (c.is_zero())
                throw ParseError("division by zero", node.line, node.col);
            const K inv = c.inverse();
            for (auto& z : num.z_coeffs) z = z.scaled(inv);
            return num;
        }
        case AstNode::Kind::Pow: {
            auto base = expand_ast<K>(*node.children[0], vars, n, ctx);
            ExpandedPoly<K> r;
            r.z_coeffs.push_back(XPoly<K>::one(n, ctx));
            for (std::int64_t i = 0; i < node.power; ++i) r = ep_mul(r, base, n, ctx);
            return r;
        }
    }
    throw InternalError("BadAst", "unhandled AST node");
}

}  // namespace detail

/// Collects variable names in order of first occurrence (Z excluded).
void collect_variables(const AstNode& node, std::vector<std::string>& out);

template <Field K>
struct ParsedInput {
    std::vector<std::string> vars;
    ZPoly<K> poly;
    std::int64_t order;
};

/// Expands the AST over the given variable list and validates monicity in Z.
template <Field K>
ZPoly<K> expand_to_zpoly(const AstNode& ast, const std::vector<std::string>& vars,
                         const typename K::Ctx& ctx) {
    const std::size_t n = vars.size();
    if (n == 0) throw InputError("NoVariables", "at least one x-variable is required");
    auto ep = detail::expand_ast<K>(ast, vars, n, ctx);
    if (ep.z_coeffs.size() < 2)
        throw InputError("NotMonicInZ", "polynomial must have degree >= 1 in Z");
    if (!ep.z_coeffs.back().is_one())
        throw InputError("NotMonicInZ", "leading Z-coefficient is " +
                                            ep.z_coeffs.back().str(vars) + ", expected 1");
    ep.z_coeffs.pop_back();
    return ZPoly<K>(n, ctx, std::move(ep.z_coeffs));
}

/// parse + expand in one step, inferring variables when none are supplied.
template <Field K>
ParsedInput<K> parse_poly(const std::string& text, const typename K::Ctx& ctx,
                          std::vector<std::string> vars = {}, std::int64_t order = 16) {
    auto ast = parse_expression(text);
    if (vars.empty()) {
        collect_variables(*ast, vars);
        if (vars.empty()) vars.push_back("x");
    }
    auto poly = expand_to_zpoly<K>(*ast, vars, ctx);
    if (order < poly.degree() + 1)
        throw InputError("BadOrder", "truncation order must be at least deg + 1");
    return {std::move(vars), std::move(poly), order};
}

}  // namespace orthant
