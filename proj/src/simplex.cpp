#include "orthant/simplex.hpp"

#include <cassert>

#include "orthant/errors.hpp"

namespace orthant {

namespace {

// Standard-form tableau: rows = constraints (Ax = b, b >= 0), columns =
// structural + slack/surplus + artificial variables, plus the rhs column.
struct Tableau {
    std::size_t rows = 0, cols = 0;  // cols excludes rhs
    std::vector<std::vector<Rat>> a;  // rows x (cols + 1)
    std::vector<std::size_t> basis;   // basic column per row

    Rat& at(std::size_t r, std::size_t c) { return a[r][c]; }
    Rat& rhs(std::size_t r) { return a[r][cols]; }

    void pivot(std::size_t pr, std::size_t pc) {
        const Rat inv = a[pr][pc].inverse();
        for (auto& v : a[pr]) v = v * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr || a[r][pc].is_zero()) continue;
            const Rat f = a[r][pc];
            for (std::size_t c = 0; c <= cols; ++c) a[r][c] = a[r][c] - f * a[pr][c];
        }
        basis[pr] = pc;
    }
};

/// Minimizes cost over the tableau with Bland's rule. `allowed` masks the
/// columns eligible to enter (artificials are locked out in phase 2).
/// Returns false when unbounded.
bool simplex_min(Tableau& t, std::vector<Rat>& cost, Rat& value,
                 const std::vector<bool>& allowed) {
    // reduced costs kept explicitly: cost row updated by pivots
    auto reduce_cost_row = [&]() {
        for (std::size_t r = 0; r < t.rows; ++r) {
            const std::size_t b = t.basis[r];
            if (cost[b].is_zero()) continue;
            const Rat f = cost[b];
            for (std::size_t c = 0; c <= t.cols; ++c) {
                // cost vector has an extra slot for the objective constant
                Rat& target = (c == t.cols) ? value : cost[c];
                target = target - f * t.a[r][c];
            }
        }
    };
    reduce_cost_row();
    while (true) {
        // Bland: smallest eligible column with negative reduced cost
        std::size_t enter = t.cols;
        for (std::size_t c = 0; c < t.cols; ++c) {
            if (allowed[c] && cost[c] < Rat(0)) {
                enter = c;
                break;
            }
        }
        if (enter == t.cols) return true;  // optimal
        // ratio test, Bland ties by smallest basis column
        std::size_t leave = t.rows;
        Rat best(0);
        for (std::size_t r = 0; r < t.rows; ++r) {
            if (t.a[r][enter] > Rat(0)) {
                Rat ratio = t.rhs(r) / t.a[r][enter];
                if (leave == t.rows || ratio < best ||
                    (ratio == best && t.basis[r] < t.basis[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
        }
        if (leave == t.rows) return false;  // unbounded
        const Rat f = cost[enter];
        t.pivot(leave, enter);
        if (!f.is_zero()) {
            for (std::size_t c = 0; c <= t.cols; ++c) {
                Rat& target = (c == t.cols) ? value : cost[c];
                target = target - f * t.a[leave][c];
            }
        }
    }
}

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
    const std::size_t n = problem.nvars;
    assert(problem.objective.size() == n);

    const std::size_t m = problem.constraints.size();
    std::size_t nslack = 0;
    for (const auto& c : problem.constraints)
        if (c.rel != Rel::Eq) ++nslack;

    Tableau t;
    t.rows = m;
    t.cols = n + nslack + m;  // one artificial per row (unused ones stay zero)
    t.a.assign(m, std::vector<Rat>(t.cols + 1, Rat(0)));
    t.basis.assign(m, 0);

    std::size_t slack_at = n;
    const std::size_t art_at = n + nslack;
    std::vector<bool> is_artificial(t.cols, false);

    for (std::size_t r = 0; r < m; ++r) {
        const auto& c = problem.constraints[r];
        assert(c.coeffs.size() == n);
        bool flip = c.rhs < Rat(0);  // keep rhs nonnegative
        for (std::size_t j = 0; j < n; ++j) t.at(r, j) = flip ? -c.coeffs[j] : c.coeffs[j];
        t.rhs(r) = flip ? -c.rhs : c.rhs;
        Rel rel = c.rel;
        if (flip && rel == Rel::Le) rel = Rel::Ge;
        else if (flip && rel == Rel::Ge) rel = Rel::Le;

        if (rel == Rel::Le) {
            t.at(r, slack_at) = Rat(1);
            t.basis[r] = slack_at++;
        } else if (rel == Rel::Ge) {
            t.at(r, slack_at) = Rat(-1);
            ++slack_at;
            t.at(r, art_at + r) = Rat(1);
            is_artificial[art_at + r] = true;
            t.basis[r] = art_at + r;
        } else {
            t.at(r, art_at + r) = Rat(1);
            is_artificial[art_at + r] = true;
            t.basis[r] = art_at + r;
        }
    }

    std::vector<bool> allow_all(t.cols, true);

    // phase 1: minimize the sum of artificials
    bool have_artificial = false;
    for (std::size_t c = 0; c < t.cols; ++c) have_artificial |= is_artificial[c];
    if (have_artificial) {
        std::vector<Rat> cost(t.cols + 1, Rat(0));
        for (std::size_t c = 0; c < t.cols; ++c)
            if (is_artificial[c]) cost[c] = Rat(1);
        Rat value(0);
        if (!simplex_min(t, cost, value, allow_all))
            throw InternalError("SimplexPhase1", "phase 1 reported unbounded");
        if (!value.is_zero()) return {LpSolution::Status::Infeasible, {}, Rat(0)};
        // drive leftover artificials out of the basis where possible
        for (std::size_t r = 0; r < t.rows; ++r) {
            if (!is_artificial[t.basis[r]]) continue;
            std::size_t pc = t.cols;
            for (std::size_t c = 0; c < art_at; ++c) {
                if (!t.a[r][c].is_zero()) {
                    pc = c;
                    break;
                }
            }
            if (pc != t.cols) t.pivot(r, pc);
            // otherwise the row is redundant (all-zero); harmless to keep
        }
    }

    // phase 2: original objective, artificial columns locked out
    std::vector<bool> allowed(t.cols, true);
    for (std::size_t c = 0; c < t.cols; ++c)
        if (is_artificial[c]) allowed[c] = false;
    std::vector<Rat> cost(t.cols + 1, Rat(0));
    for (std::size_t j = 0; j < n; ++j) cost[j] = problem.objective[j];
    Rat value(0);
    if (!simplex_min(t, cost, value, allowed)) return {LpSolution::Status::Unbounded, {}, Rat(0)};

    std::vector<Rat> x(n, Rat(0));
    for (std::size_t r = 0; r < t.rows; ++r)
        if (t.basis[r] < n) x[t.basis[r]] = t.rhs(r);
    return {LpSolution::Status::Optimal, std::move(x), -value};
}

}  // namespace orthant
