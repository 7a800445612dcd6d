#pragma once

#include <complex>
#include <vector>

#include "dsvm/types.hpp"

namespace dsvm {

/// All eigenvalues of a real square matrix (Schur-based dense solver).
/// Throws NumericalFailure if the iteration does not converge.
ComplexVector eigenvalues(const Matrix& a);

/// Counts of the two spectral clusters the stability argument needs: the
/// zero cluster (|lambda| below a scale-aware tolerance) and the strictly
/// stable cluster (Re lambda below -tol_neg). The structure holds when the
/// zero cluster has exactly m members and everything else is strictly stable.
struct EigenstructureVerdict {
  int size = 0;
  int expected_zero = 0;
  int zero_count = 0;
  int negative_count = 0;
  double tol_zero = 0.0;
  double tol_neg = 0.0;
  bool pass = false;
};

EigenstructureVerdict verify_eigenstructure(const Matrix& m_matrix, int m,
                                            double tol_zero_rel = 1e-7, double tol_neg = 1e-9);
EigenstructureVerdict classify_spectrum(const ComplexVector& eigs, int m, double matrix_inf_norm,
                                        double tol_zero_rel = 1e-7, double tol_neg = 1e-9);

/// First-order drift matrix of the 2m consensus eigenvalues under the
/// coupling perturbation, as a direct formula of (n, H):
///   [[0, 0], [-n I_m, -sum_i H_i]]
/// Its nonzero eigenvalues are those of -sum_i H_i.
Matrix perturbation_derivative_matrix(const Matrix& block_hessian, int n, int m);

/// Optimal matching distance between two spectra: min over pairings of the
/// max pairwise distance. Exact bottleneck assignment (binary search over
/// candidate distances + bipartite matching).
double matching_distance(const ComplexVector& a, const ComplexVector& b);

/// Upper bound on the matching distance between sigma(M) and sigma(M0) for
/// M = M0 + alpha M1, using infinity norms:
///   4 (|M0| + |M|)^(1 - 1/nm) |alpha M1|^(1/nm)
double matching_distance_bound(const Matrix& m0, const Matrix& m_matrix, const Matrix& m1,
                               double alpha);

/// The bound expression whose root in alpha defines the certified coupling
/// limit; branches on gamma < 1 vs gamma >= 1.
double alpha_bound_objective(double alpha, double gamma, int n, int m);

/// Certified upper bound on the coupling alpha: the unique root of
/// alpha_bound_objective(alpha) = lambda_min, found by bracketing and
/// bisection in log-alpha to relative tolerance 1e-10.
/// Throws InvalidSpectrum if lambda_min <= 0.
double certified_alpha_bound(double gamma, double lambda_min, int n, int m);

/// Max absolute row sum of the block Hessian (the gamma entering the bound).
double hessian_gamma(const Matrix& block_hessian);

/// Smallest |Re| among the non-zero eigenvalues of the union of two Laplacian
/// spectra (one zero eigenvalue dropped per Laplacian).
double lambda_min_union(const Matrix& state_laplacian, const Matrix& tracker_laplacian);

/// Basis of the consensus null direction and its companion: columns of v1
/// span the invariant null space of the system matrix, v2 the tracker
/// counterpart used by the perturbation argument. Normalized so that
/// [v1 v2]' [v1 v2] = I_2m.
struct NullSpaceBasis {
  Matrix v1;  // 2nm x m
  Matrix v2;  // 2nm x m
};

NullSpaceBasis make_null_space_basis(int n, int m);

/// ||M v1||_inf for the consensus null basis; near zero for any system matrix
/// assembled from correctly built Laplacians.
double consensus_nullspace_residual(const Matrix& m_matrix, int n, int m);

/// Snapshot of the spectral diagnostics at one (state, topology, alpha).
struct SpectralReport {
  double alpha = 0.0;
  int n = 0;
  int m = 0;
  ComplexVector eigs;
  int zero_multiplicity = 0;
  double gamma = 0.0;
  double lambda_min = 0.0;
  double alpha_bar = 0.0;
  double bound = 0.0;        // matching-distance bound at this alpha
  double matrix_inf_norm = 0.0;
  double nullspace_residual = 0.0;
  bool structure_ok = false;  // zero cluster has multiplicity m, rest strictly stable
};

SpectralReport build_spectral_report(const Matrix& state_laplacian,
                                     const Matrix& tracker_laplacian,
                                     const Matrix& block_hessian, double alpha);

}  // namespace dsvm
