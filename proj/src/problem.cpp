#include "dsvm/problem.hpp"

#include <memory>

namespace dsvm {

Problem make_svm_problem(std::vector<Shard> shards, const LossConfig& cfg) {
  Problem p;
  if (shards.empty()) throw InvariantViolation("problem: need at least one shard");
  int feature_dim = -1;
  for (const auto& s : shards) {
    if (s.count() > 0) {
      if (feature_dim >= 0 && s.feature_dim() != feature_dim) {
        throw DimensionMismatch("problem: shards disagree on feature dimension");
      }
      feature_dim = s.feature_dim();
    }
  }
  if (feature_dim < 0) feature_dim = 0;
  p.dim = feature_dim + 1;
  p.agents.reserve(shards.size());
  for (auto& s : shards) {
    auto shard = std::make_shared<Shard>(std::move(s));
    p.agents.push_back(LocalObjective{
        [shard, cfg](const Vector& x) { return local_cost(x, *shard, cfg); },
        [shard, cfg](const Vector& x) { return local_gradient(x, *shard, cfg); },
        [shard, cfg](const Vector& x) { return local_hessian(x, *shard, cfg); },
    });
  }
  return p;
}

Problem make_quadratic_problem(std::vector<Matrix> q, std::vector<Vector> b) {
  if (q.empty() || q.size() != b.size()) {
    throw DimensionMismatch("quadratic problem: need matching Q/b lists");
  }
  Problem p;
  p.dim = static_cast<int>(q.front().rows());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].rows() != p.dim || q[i].cols() != p.dim || b[i].size() != p.dim) {
      throw DimensionMismatch("quadratic problem: inconsistent dimensions");
    }
    auto qi = std::make_shared<Matrix>(std::move(q[i]));
    auto bi = std::make_shared<Vector>(std::move(b[i]));
    p.agents.push_back(LocalObjective{
        [qi, bi](const Vector& x) { return 0.5 * x.dot(*qi * x) + bi->dot(x); },
        [qi, bi](const Vector& x) -> Vector { return *qi * x + *bi; },
        [qi, bi](const Vector&) -> Matrix { return *qi; },
    });
  }
  return p;
}

double total_cost(const Problem& p, const Vector& stacked_x) {
  double sum = 0.0;
  for (int i = 0; i < p.agent_count(); ++i) {
    sum += p.agents[i].value(agent_segment(stacked_x, i, p.dim));
  }
  return sum;
}

Vector gradient_sum(const Problem& p, const Vector& stacked_x) {
  Vector g = Vector::Zero(p.dim);
  for (int i = 0; i < p.agent_count(); ++i) {
    g += p.agents[i].gradient(agent_segment(stacked_x, i, p.dim));
  }
  return g;
}

Matrix block_hessian(const Problem& p, const Vector& stacked_x) {
  const int n = p.agent_count();
  const int m = p.dim;
  Matrix h = Matrix::Zero(n * m, n * m);
  for (int i = 0; i < n; ++i) {
    h.block(i * m, i * m, m, m) = p.agents[i].hessian(agent_segment(stacked_x, i, m));
  }
  return h;
}

}  // namespace dsvm
