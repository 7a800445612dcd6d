#include "dsvm/optimize.hpp"

namespace dsvm {

NewtonResult newton_minimize(const LocalObjective& f, Vector x0, double tol, int max_iter) {
  Vector x = std::move(x0);
  for (int it = 0; it < max_iter; ++it) {
    Vector g = f.gradient(x);
    const double gn = g.norm();
    if (gn <= tol) return NewtonResult{std::move(x), gn, it};

    Matrix h = f.hessian(x);
    h.diagonal().array() += 1e-12;  // keeps the solve well-posed in flat directions
    Vector d = h.ldlt().solve(-g);

    if (gn < 1e-6) {
      x += d;
      continue;
    }
    const double f0 = f.value(x);
    const double slope = g.dot(d);
    double t = 1.0;
    while (t > 1e-14 && f.value(x + t * d) > f0 + 1e-4 * t * slope) t *= 0.5;
    x += t * d;
  }
  const double gn = f.gradient(x).norm();
  if (gn <= tol) return NewtonResult{std::move(x), gn, max_iter};
  throw NonConvergence("newton_minimize: no convergence after " + std::to_string(max_iter) +
                           " iterations (grad norm " + std::to_string(gn) + ")",
                       x);
}

}  // namespace dsvm
