#include "dsvm/graph.hpp"

#include <cmath>
#include <queue>

#include "dsvm/rng.hpp"

namespace dsvm {

Digraph::Digraph(Matrix weights) : weights_(std::move(weights)) {
  const auto n = weights_.rows();
  if (n == 0 || weights_.cols() != n) {
    throw InvariantViolation("digraph: weight matrix must be square and non-empty");
  }
  if (!weights_.allFinite()) {
    throw InvariantViolation("digraph: weights must be finite");
  }
  if ((weights_.array() < 0.0).any()) {
    throw InvariantViolation("digraph: weights must be non-negative");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (weights_(i, i) != 0.0) {
      throw InvariantViolation("digraph: diagonal must be zero (no self-links)");
    }
    if (weights_.row(i).sum() >= 1.0) {
      throw InvariantViolation("digraph: row sum must be < 1 at node " + std::to_string(i));
    }
  }
  const auto bal = check_weight_balanced(weights_);
  if (!bal.balanced) {
    throw InvariantViolation("digraph: not weight-balanced (max imbalance " +
                             std::to_string(bal.max_imbalance) + ")");
  }
  if (!check_strongly_connected(weights_)) {
    throw InvariantViolation("digraph: not strongly connected");
  }
}

BalanceCheck check_weight_balanced(const Matrix& weights, double tol) {
  BalanceCheck out;
  const auto n = weights.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double imbalance = std::abs(weights.row(i).sum() - weights.col(i).sum());
    out.max_imbalance = std::max(out.max_imbalance, imbalance);
  }
  out.balanced = out.max_imbalance <= tol;
  return out;
}

BalanceCheck check_weight_balanced(const Digraph& g, double tol) {
  return check_weight_balanced(g.weights(), tol);
}

namespace {

// Nodes reachable from `start`. With transpose=false follows link direction
// (weights(i, j) > 0 is an edge j -> i); with transpose=true follows reversed links.
int reachable_count(const Matrix& w, int start, bool transpose) {
  const int n = static_cast<int>(w.rows());
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  int count = 1;
  while (!q.empty()) {
    const int j = q.front();
    q.pop();
    for (int i = 0; i < n; ++i) {
      const double wij = transpose ? w(j, i) : w(i, j);
      if (wij > 0.0 && !seen[i]) {
        seen[i] = 1;
        ++count;
        q.push(i);
      }
    }
  }
  return count;
}

}  // namespace

bool check_strongly_connected(const Matrix& weights) {
  const int n = static_cast<int>(weights.rows());
  if (n == 1) return true;
  return reachable_count(weights, 0, false) == n && reachable_count(weights, 0, true) == n;
}

bool check_strongly_connected(const Digraph& g) { return check_strongly_connected(g.weights()); }

Laplacian build_laplacian(const Digraph& g) {
  Matrix m = g.weights();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    m(i, i) = -g.weights().row(i).sum();
  }
  return Laplacian{std::move(m)};
}

Digraph make_cycle_plus_khop(int n, int k, double weight_lo, double weight_hi, Rng& rng,
                             bool shared_ring_weight) {
  if (n < 3) throw InvariantViolation("cycle+khop: need n >= 3");
  if (k <= 1 || k >= n) throw InvariantViolation("cycle+khop: need 1 < k < n");
  if (weight_lo < 0.0 || weight_hi <= weight_lo || weight_hi > 0.5) {
    throw InvariantViolation("cycle+khop: need 0 <= lo < hi <= 0.5");
  }
  const double w_cycle = rng.uniform_open(weight_lo, weight_hi);
  const double w_hop = shared_ring_weight ? w_cycle : rng.uniform_open(weight_lo, weight_hi);
  Matrix w = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    w(i, (i - 1 + n) % n) += w_cycle;
    w(i, (i - k + n) % n) += w_hop;
  }
  for (int i = 0; i < n; ++i) {
    if (w.row(i).sum() >= 1.0) {
      throw InvariantViolation("cycle+khop: row sums must stay < 1");
    }
  }
  return Digraph(std::move(w));
}

Digraph make_cycle_plus_khop(int n, int k, double weight_lo, double weight_hi, std::uint64_t seed,
                             bool shared_ring_weight) {
  Rng rng(seed);
  return make_cycle_plus_khop(n, k, weight_lo, weight_hi, rng, shared_ring_weight);
}

Digraph permute_nodes(const Digraph& g, const std::vector<int>& perm) {
  const int n = g.size();
  if (static_cast<int>(perm.size()) != n) {
    throw DimensionMismatch("permute_nodes: permutation size mismatch");
  }
  Matrix w(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      w(i, j) = g.weights()(perm[i], perm[j]);
    }
  }
  return Digraph(std::move(w));
}

GraphPair topology_at_interval(const SwitchingSchedule& s, std::int64_t interval) {
  if (interval < 0) throw InvariantViolation("schedule: interval must be >= 0");
  Rng rng(s.seed, static_cast<std::uint64_t>(interval));
  const auto perm = rng.permutation(s.nodes);
  Digraph state = permute_nodes(
      make_cycle_plus_khop(s.nodes, s.hop, s.weight_lo, s.weight_hi, rng, s.shared_ring_weight),
      perm);
  Digraph tracker = permute_nodes(
      make_cycle_plus_khop(s.nodes, s.hop, s.weight_lo, s.weight_hi, rng, s.shared_ring_weight),
      perm);
  return GraphPair{std::move(state), std::move(tracker)};
}

std::int64_t interval_index(const SwitchingSchedule& s, double t) {
  if (t < 0.0) throw InvariantViolation("schedule: time must be >= 0");
  if (s.period <= 0.0) throw InvariantViolation("schedule: period must be positive");
  return static_cast<std::int64_t>(std::floor(t / s.period));
}

GraphPair next_topology(const SwitchingSchedule& s, double t) {
  return topology_at_interval(s, interval_index(s, t));
}

}  // namespace dsvm
