#pragma once

#include <functional>
#include <vector>

#include "dsvm/loss.hpp"
#include "dsvm/types.hpp"

namespace dsvm {

/// One agent's objective as callable value/gradient/Hessian evaluators.
/// All three are pure functions of the local state.
struct LocalObjective {
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> gradient;
  std::function<Matrix(const Vector&)> hessian;
};

/// The distributed problem: n agents, each holding a strictly convex local
/// objective over a shared m-dimensional decision variable.
struct Problem {
  int dim = 0;  // m
  std::vector<LocalObjective> agents;

  int agent_count() const { return static_cast<int>(agents.size()); }
};

/// SVM problem from per-agent shards (already feature-mapped).
Problem make_svm_problem(std::vector<Shard> shards, const LossConfig& cfg);

/// Quadratic test problem: f_i(x) = 0.5 x'Q_i x + b_i'x.
Problem make_quadratic_problem(std::vector<Matrix> q, std::vector<Vector> b);

/// View of agent i's slice of a stacked vector.
inline Eigen::VectorBlock<const Vector> agent_segment(const Vector& stacked, int i, int m) {
  return stacked.segment(i * m, m);
}

/// Sum of local costs at a stacked state.
double total_cost(const Problem& p, const Vector& stacked_x);

/// Sum over agents of the local gradients, an m-vector.
Vector gradient_sum(const Problem& p, const Vector& stacked_x);

/// Block-diagonal nm x nm matrix of the local Hessians at a stacked state.
Matrix block_hessian(const Problem& p, const Vector& stacked_x);

}  // namespace dsvm
