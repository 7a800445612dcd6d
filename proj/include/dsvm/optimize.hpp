#pragma once

#include "dsvm/problem.hpp"
#include "dsvm/types.hpp"

namespace dsvm {

struct NewtonResult {
  Vector x;
  double grad_norm = 0.0;
  int iterations = 0;
};

/// Damped Newton for a smooth strictly convex objective. Armijo backtracking
/// while far from the optimum; near the optimum (small gradient) full Newton
/// steps are taken, since float rounding of objective differences defeats the
/// Armijo test there. Throws NonConvergence past max_iter.
NewtonResult newton_minimize(const LocalObjective& f, Vector x0, double tol = 1e-12,
                             int max_iter = 500);

}  // namespace dsvm
