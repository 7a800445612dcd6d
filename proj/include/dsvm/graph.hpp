#pragma once

#include <cstdint>
#include <vector>

#include "dsvm/types.hpp"

namespace dsvm {

/// Weighted digraph over n nodes. weights(i, j) is the weight of the link
/// from node j to node i; zero means no link. Instances are validated on
/// construction and immutable afterwards, so they are safe to share.
///
/// Invariants: non-negative weights, zero diagonal, every row sum < 1,
/// weight-balanced (per-node in-sum equals out-sum within 1e-12), and
/// strongly connected.
class Digraph {
 public:
  static constexpr double kBalanceTol = 1e-12;

  /// Validates all invariants; throws InvariantViolation naming the failed check.
  explicit Digraph(Matrix weights);

  int size() const { return static_cast<int>(weights_.rows()); }
  const Matrix& weights() const { return weights_; }
  double weight(int to, int from) const { return weights_(to, from); }

  /// Total weight of incoming links at node i (row sum).
  double in_sum(int i) const { return weights_.row(i).sum(); }
  /// Total weight of outgoing links at node i (column sum).
  double out_sum(int i) const { return weights_.col(i).sum(); }

 private:
  Matrix weights_;
};

struct BalanceCheck {
  bool balanced = false;
  double max_imbalance = 0.0;
};

/// Reports whether every node's in-weight-sum matches its out-weight-sum
/// within tolerance, along with the worst deviation.
BalanceCheck check_weight_balanced(const Matrix& weights, double tol = Digraph::kBalanceTol);
BalanceCheck check_weight_balanced(const Digraph& g, double tol = Digraph::kBalanceTol);

/// True iff a directed path exists between every ordered node pair.
bool check_strongly_connected(const Matrix& weights);
bool check_strongly_connected(const Digraph& g);

/// Graph Laplacian: off-diagonals are the link weights, diagonal entry i is
/// minus the total incoming weight of node i. Every row sums to zero; for a
/// weight-balanced digraph every column sums to zero as well.
struct Laplacian {
  Matrix matrix;
  int size() const { return static_cast<int>(matrix.rows()); }
};

Laplacian build_laplacian(const Digraph& g);

class Rng;

/// Union of a directed cycle (links i <- i-1 mod n) and a k-hop ring
/// (links i <- i-k mod n). One weight per ring, sampled uniformly from the
/// open interval (weight_lo, weight_hi); uniform per-ring weights preserve
/// balance. With shared_ring_weight both rings use a single draw.
Digraph make_cycle_plus_khop(int n, int k, double weight_lo, double weight_hi, Rng& rng,
                             bool shared_ring_weight = false);
Digraph make_cycle_plus_khop(int n, int k, double weight_lo, double weight_hi, std::uint64_t seed,
                             bool shared_ring_weight = false);

/// Relabels nodes: node i of the result is node perm[i] of g.
Digraph permute_nodes(const Digraph& g, const std::vector<int>& perm);

/// Pair of graphs driving one switching interval: the state graph carries the
/// classifier consensus, the tracker graph carries the gradient-tracker
/// consensus. Same link structure, independent weights.
struct GraphPair {
  Digraph state_graph;
  Digraph tracker_graph;
};

/// Deterministic topology process: every `period` seconds the node labels are
/// re-permuted and ring weights are re-sampled. The pair for interval k is a
/// pure function of (seed, k).
struct SwitchingSchedule {
  double period = 0.05;
  int nodes = 5;
  int hop = 2;
  double weight_lo = 0.0;
  double weight_hi = 0.5;
  bool shared_ring_weight = false;
  std::uint64_t seed = 1;
};

GraphPair topology_at_interval(const SwitchingSchedule& s, std::int64_t interval);
GraphPair next_topology(const SwitchingSchedule& s, double t);
std::int64_t interval_index(const SwitchingSchedule& s, double t);

}  // namespace dsvm
