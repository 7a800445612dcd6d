#pragma once

#include "dsvm/types.hpp"

namespace dsvm {

enum class HingeKind {
  smooth,   // (1/mu) log(1 + exp(mu z)), differentiable surrogate of max{z, 0}
  squared,  // max{z, 0}^2
};

/// Loss parameters. C trades margin width against violations; mu controls the
/// sharpness of the smooth hinge (larger mu hugs max{z,0} more tightly).
struct LossConfig {
  double C = 1.5;
  double mu = 3.0;
  HingeKind hinge = HingeKind::smooth;
};

struct HingeEval {
  double value = 0.0;
  double slope = 0.0;      // d/dz
  double curvature = 0.0;  // d2/dz2
};

/// Smooth hinge (1/mu) log(1 + exp(mu z)) with first and second derivatives.
/// Total function: guarded against overflow for |mu z| > 30, where it returns
/// the asymptotic branches z + exp(-mu z)/mu and exp(mu z)/mu.
HingeEval smooth_hinge(double z, double mu);

/// Squared hinge max{z,0}^2 with derivatives (piecewise).
HingeEval squared_hinge(double z);

/// Quadratic feature map for 2-D inputs: [x1^2, x2^2, sqrt(2) x1 x2].
/// Satisfies the polynomial-kernel identity phi(a)'phi(b) = (a'b)^2.
Vector feature_map_quadratic(const Vector& chi);

/// One agent's slice of the training data. Rows of `points` are already
/// feature-mapped vectors in R^(m-1); labels are +/-1.
struct Shard {
  Matrix points;  // N_i x (m-1)
  Vector labels;  // N_i

  Shard() = default;
  Shard(Matrix pts, Vector lbls);
  int count() const { return static_cast<int>(points.rows()); }
  int feature_dim() const { return static_cast<int>(points.cols()); }
};

/// Classifier parameters: hyperplane normal omega in feature space plus
/// offset nu, packed as x = [omega; nu].
struct Classifier {
  Vector omega;
  double nu = 0.0;

  Vector packed() const;
  static Classifier unpack(const Vector& x);
};

/// Per-agent cost omega'omega + C sum_j hinge(1 - l_j (omega'phi_j + nu)).
double local_cost(const Vector& x, const Shard& shard, const LossConfig& cfg);

/// Analytic gradient of local_cost.
Vector local_gradient(const Vector& x, const Shard& shard, const LossConfig& cfg);

/// Analytic Hessian of local_cost. Symmetric positive semidefinite; the
/// omega block is >= 2 I from the regularizer.
Matrix local_hessian(const Vector& x, const Shard& shard, const LossConfig& cfg);

}  // namespace dsvm
