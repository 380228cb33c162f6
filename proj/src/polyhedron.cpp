#include "orthant/polyhedron.hpp"

#include <algorithm>

namespace orthant {

namespace {

std::vector<RatPoint> dedup(std::vector<RatPoint> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

/// max epsilon s.t. sum(omega) = 1, omega_i >= epsilon, and
/// (h - g).omega >= margin_coeff*epsilon for all h != g. Returns the optimal
/// margin and a witness; extra_eq pins coordinates during lex-minimization.
struct MarginLp {
    std::size_t n;
    std::vector<RatPoint> others;
    RatPoint g;

    LpProblem base(bool strict_vs_others) const {
        LpProblem lp;
        lp.nvars = n + 1;  // omega_1..omega_n, epsilon
        lp.objective.assign(n + 1, Rat(0));
        lp.objective[n] = Rat(-1);  // maximize epsilon
        {
            LinearConstraint sum{std::vector<Rat>(n + 1, Rat(0)), Rel::Eq, Rat(1)};
            for (std::size_t i = 0; i < n; ++i) sum.coeffs[i] = Rat(1);
            lp.constraints.push_back(std::move(sum));
        }
        for (std::size_t i = 0; i < n; ++i) {
            LinearConstraint pos{std::vector<Rat>(n + 1, Rat(0)), Rel::Ge, Rat(0)};
            pos.coeffs[i] = Rat(1);
            pos.coeffs[n] = Rat(-1);
            lp.constraints.push_back(std::move(pos));
        }
        for (const auto& h : others) {
            LinearConstraint sep{std::vector<Rat>(n + 1, Rat(0)), Rel::Ge, Rat(0)};
            for (std::size_t i = 0; i < n; ++i) sep.coeffs[i] = h[i] - g[i];
            if (strict_vs_others) sep.coeffs[n] = Rat(-1);
            lp.constraints.push_back(std::move(sep));
        }
        return lp;
    }
};

/// Lexicographically smallest omega on the optimal face at margin eps.
std::vector<Rat> lex_min_witness(const MarginLp& mlp, bool strict, const Rat& eps) {
    LpProblem lp = mlp.base(strict);
    {
        LinearConstraint pin{std::vector<Rat>(mlp.n + 1, Rat(0)), Rel::Eq, eps};
        pin.coeffs[mlp.n] = Rat(1);
        lp.constraints.push_back(std::move(pin));
    }
    std::vector<Rat> witness(mlp.n, Rat(0));
    for (std::size_t i = 0; i < mlp.n; ++i) {
        lp.objective.assign(mlp.n + 1, Rat(0));
        lp.objective[i] = Rat(1);  // minimize omega_i
        auto sol = solve_lp(lp);
        if (sol.status != LpSolution::Status::Optimal)
            throw InternalError("WitnessLp", "witness refinement LP lost feasibility");
        witness[i] = sol.objective;
        LinearConstraint pin{std::vector<Rat>(mlp.n + 1, Rat(0)), Rel::Eq, witness[i]};
        pin.coeffs[i] = Rat(1);
        lp.constraints.push_back(std::move(pin));
    }
    return witness;
}

}  // namespace

std::optional<RatPoint> orthant_check(const std::vector<RatPoint>& generators) {
    assert(!generators.empty());
    const std::size_t n = generators[0].size();
    // a dominating generator must equal the componentwise minimum
    std::vector<Rat> mn(generators[0].c);
    for (const auto& g : generators)
        for (std::size_t i = 0; i < n; ++i)
            if (g[i] < mn[i]) mn[i] = g[i];
    RatPoint cand{std::move(mn)};
    for (const auto& g : generators)
        if (g == cand) return cand;
    return std::nullopt;
}

DeltaPolyhedron delta_vertices(std::vector<RatPoint> generators) {
    assert(!generators.empty());
    DeltaPolyhedron out;
    std::sort(generators.begin(), generators.end(), lex_less);
    out.generators = generators;
    auto unique_gens = dedup(generators);
    const std::size_t n = unique_gens[0].size();

    for (const auto& g : unique_gens) {
        MarginLp mlp{n, {}, g};
        for (const auto& h : unique_gens)
            if (h != g) mlp.others.push_back(h);
        auto sol = solve_lp(mlp.base(true));
        // infeasible = no weight keeps g weakly minimal: strictly dominated
        if (sol.status != LpSolution::Status::Optimal) continue;
        // maximize epsilon = minimize -epsilon, so the margin is -objective
        Rat margin = -sol.objective;
        if (margin > Rat(0)) out.vertices.push_back({g, lex_min_witness(mlp, true, margin)});
    }
    return out;
}

std::optional<InsideCertificate> inside_certificate(const RatPoint& g,
                                                    const std::vector<VertexData>& vertices) {
    assert(!vertices.empty());
    const std::size_t n = g.size();
    const std::size_t m = vertices.size();
    LpProblem lp;
    lp.nvars = m;
    lp.objective.assign(m, Rat(0));
    {
        LinearConstraint sum{std::vector<Rat>(m, Rat(1)), Rel::Eq, Rat(1)};
        lp.constraints.push_back(std::move(sum));
    }
    for (std::size_t i = 0; i < n; ++i) {
        LinearConstraint le{std::vector<Rat>(m, Rat(0)), Rel::Le, g[i]};
        for (std::size_t v = 0; v < m; ++v) le.coeffs[v] = vertices[v].point[i];
        lp.constraints.push_back(std::move(le));
    }
    auto sol = solve_lp(lp);
    if (sol.status != LpSolution::Status::Optimal) return std::nullopt;
    InsideCertificate cert;
    cert.lambda = sol.x;
    cert.slack.assign(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        Rat combo(0);
        for (std::size_t v = 0; v < m; ++v) combo += sol.x[v] * vertices[v].point[i];
        cert.slack[i] = g[i] - combo;
    }
    return cert;
}

std::optional<std::vector<Rat>> segment_support(const RatPoint& v1, const RatPoint& v2,
                                                const std::vector<RatPoint>& generators) {
    const std::size_t n = v1.size();
    MarginLp mlp{n, {}, v1};
    for (const auto& g : generators)
        if (g != v1) mlp.others.push_back(g);
    LpProblem lp = mlp.base(false);  // other generators may sit on the face
    {
        LinearConstraint eq{std::vector<Rat>(n + 1, Rat(0)), Rel::Eq, Rat(0)};
        for (std::size_t i = 0; i < n; ++i) eq.coeffs[i] = v1[i] - v2[i];
        lp.constraints.push_back(std::move(eq));
    }
    auto sol = solve_lp(lp);
    if (sol.status != LpSolution::Status::Optimal) return std::nullopt;  // no common support
    Rat margin = -sol.objective;
    if (!(margin > Rat(0))) return std::nullopt;
    std::vector<Rat> witness(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(n));
    return witness;
}

}  // namespace orthant
