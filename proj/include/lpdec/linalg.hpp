#ifndef LPDEC_LINALG_HPP
#define LPDEC_LINALG_HPP

#include <functional>
#include <utility>

#include "lpdec/types.hpp"

namespace lpdec {

/// The per-iteration normal-equation system: solve N u = v where
/// N = A diag(d2) A^T. N is never materialized by the iterative path; the
/// operator costs two sparse products and one scaling per application.
struct InnerSystem {
  SparseMatrix A;
  Vector d2;  // strictly positive scaling weights, length = A.cols()
  Vector v;   // right-hand side, length = A.rows()

  Eigen::Index dim() const { return A.rows(); }
};

Vector apply_inner(const InnerSystem& sys, const Vector& w);

/// Dense N = A diag(d2) A^T, for the factorization path and test oracles.
Matrix materialize_inner(const InnerSystem& sys);

struct SolveReport {
  int iterations = 0;
  double residual = 0.0;  // final ||v - N u||_2
  bool converged = false;
};

using Preconditioner = std::function<Vector(const Vector&)>;

Preconditioner identity_precond();

/// diag(N)^{-1} application; throws on a zero diagonal entry.
Preconditioner jacobi_precond(const InnerSystem& sys);

/// Preconditioned conjugate gradient from u0 = 0, stopping at
/// ||v - N u|| <= tol * ||v|| or max_iter. Non-finite values abort with
/// NumericError (loss of positive definiteness upstream).
std::pair<Vector, SolveReport> cg_solve(const InnerSystem& sys, const Preconditioner& precond,
                                        double tol, int max_iter);

/// Dense Cholesky path, guarded at dim <= 2000.
Vector cholesky_solve_dense(const InnerSystem& sys);

}  // namespace lpdec

#endif
