#pragma once

#include <cstdint>
#include <vector>

#include "orthant/rational.hpp"

namespace orthant {

enum class Rel { Le, Ge, Eq };

struct LinearConstraint {
    std::vector<Rat> coeffs;
    Rel rel;
    Rat rhs;
};

/// min objective . x  subject to the constraints and x >= 0 componentwise.
struct LpProblem {
    std::size_t nvars = 0;
    std::vector<Rat> objective;
    std::vector<LinearConstraint> constraints;
};

struct LpSolution {
    enum class Status { Optimal, Infeasible, Unbounded } status;
    std::vector<Rat> x;
    Rat objective;
};

/// Exact two-phase simplex over the rationals with Bland's rule (terminating
/// and deterministic). Built for the tiny polyhedral instances this project
/// solves: a handful of variables, at most a few hundred constraints.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace orthant
