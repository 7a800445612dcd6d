#include "dsvm/loss.hpp"

#include <cmath>

namespace dsvm {

HingeEval smooth_hinge(double z, double mu) {
  if (mu <= 0.0) throw InvariantViolation("smooth_hinge: mu must be positive");
  const double t = mu * z;
  HingeEval out;
  if (t > 30.0) {
    const double e = std::exp(-t);  // tiny
    out.value = z + e / mu;
    out.slope = 1.0 / (1.0 + e);
    out.curvature = mu * e / ((1.0 + e) * (1.0 + e));
  } else if (t < -30.0) {
    const double e = std::exp(t);  // tiny
    out.value = e / mu;
    out.slope = e / (1.0 + e);
    out.curvature = mu * e / ((1.0 + e) * (1.0 + e));
  } else {
    const double e = std::exp(t);
    const double s = 1.0 / (1.0 + std::exp(-t));
    out.value = std::log1p(e) / mu;
    out.slope = s;
    out.curvature = mu * s * (1.0 - s);
  }
  return out;
}

HingeEval squared_hinge(double z) {
  HingeEval out;
  if (z > 0.0) {
    out.value = z * z;
    out.slope = 2.0 * z;
    out.curvature = 2.0;
  }
  return out;
}

Vector feature_map_quadratic(const Vector& chi) {
  if (chi.size() != 2) throw DimensionMismatch("feature_map_quadratic: input must be 2-D");
  Vector out(3);
  out << chi(0) * chi(0), chi(1) * chi(1), std::sqrt(2.0) * chi(0) * chi(1);
  return out;
}

Shard::Shard(Matrix pts, Vector lbls) : points(std::move(pts)), labels(std::move(lbls)) {
  if (points.rows() != labels.size()) {
    throw DimensionMismatch("shard: point/label count mismatch");
  }
  for (Eigen::Index j = 0; j < labels.size(); ++j) {
    if (labels(j) != 1.0 && labels(j) != -1.0) {
      throw InvariantViolation("shard: labels must be +1 or -1");
    }
  }
}

Vector Classifier::packed() const {
  Vector x(omega.size() + 1);
  x.head(omega.size()) = omega;
  x(omega.size()) = nu;
  return x;
}

Classifier Classifier::unpack(const Vector& x) {
  if (x.size() < 1) throw DimensionMismatch("classifier: empty vector");
  Classifier c;
  c.omega = x.head(x.size() - 1);
  c.nu = x(x.size() - 1);
  return c;
}

namespace {

HingeEval eval_hinge(double z, const LossConfig& cfg) {
  return cfg.hinge == HingeKind::smooth ? smooth_hinge(z, cfg.mu) : squared_hinge(z);
}

void check_dims(const Vector& x, const Shard& shard, const LossConfig& cfg) {
  if (cfg.C <= 0.0) throw InvariantViolation("loss: C must be positive");
  if (x.size() < 1) throw DimensionMismatch("loss: state must have at least one entry");
  if (shard.count() > 0 && shard.feature_dim() != x.size() - 1) {
    throw DimensionMismatch("loss: shard feature dimension does not match classifier");
  }
}

}  // namespace

double local_cost(const Vector& x, const Shard& shard, const LossConfig& cfg) {
  check_dims(x, shard, cfg);
  const auto m = x.size();
  const auto omega = x.head(m - 1);
  const double nu = x(m - 1);
  double cost = omega.squaredNorm();
  for (int j = 0; j < shard.count(); ++j) {
    const double z = 1.0 - shard.labels(j) * (shard.points.row(j).dot(omega) + nu);
    cost += cfg.C * eval_hinge(z, cfg).value;
  }
  return cost;
}

Vector local_gradient(const Vector& x, const Shard& shard, const LossConfig& cfg) {
  check_dims(x, shard, cfg);
  const auto m = x.size();
  const auto omega = x.head(m - 1);
  const double nu = x(m - 1);
  Vector g = Vector::Zero(m);
  g.head(m - 1) = 2.0 * omega;
  for (int j = 0; j < shard.count(); ++j) {
    const double l = shard.labels(j);
    const double z = 1.0 - l * (shard.points.row(j).dot(omega) + nu);
    const double w = -cfg.C * eval_hinge(z, cfg).slope * l;
    g.head(m - 1) += w * shard.points.row(j).transpose();
    g(m - 1) += w;
  }
  return g;
}

Matrix local_hessian(const Vector& x, const Shard& shard, const LossConfig& cfg) {
  check_dims(x, shard, cfg);
  const auto m = x.size();
  const auto omega = x.head(m - 1);
  const double nu = x(m - 1);
  Matrix h = Matrix::Zero(m, m);
  h.topLeftCorner(m - 1, m - 1) = 2.0 * Matrix::Identity(m - 1, m - 1);
  Vector ext(m);
  for (int j = 0; j < shard.count(); ++j) {
    const double l = shard.labels(j);
    const double z = 1.0 - l * (shard.points.row(j).dot(omega) + nu);
    const double w = cfg.C * eval_hinge(z, cfg).curvature * l * l;
    if (w == 0.0) continue;
    ext.head(m - 1) = shard.points.row(j).transpose();
    ext(m - 1) = 1.0;
    h.noalias() += w * ext * ext.transpose();
  }
  return h;
}

}  // namespace dsvm
