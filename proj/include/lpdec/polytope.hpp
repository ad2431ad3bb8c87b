#ifndef LPDEC_POLYTOPE_HPP
#define LPDEC_POLYTOPE_HPP

#include <string>
#include <utility>
#include <vector>

#include "lpdec/codes.hpp"
#include "lpdec/types.hpp"

namespace lpdec {

/// One facet <coeffs, x> <= rhs; coeffs sparse, sorted by index.
struct LinearInequality {
  std::vector<std::pair<int, double>> coeffs;
  double rhs = 0.0;
};

double eval_lhs(const LinearInequality& q, const Vector& x);

/// Inequality description of the relaxed decoding polytope. The box
/// 0 <= x_i <= 1 is implicit and not listed.
struct IneqSystem {
  int n = 0;
  std::vector<LinearInequality> inequalities;
};

bool is_feasible(const IneqSystem& P, const Vector& x, double tol = 1e-9);

/// Equality-form LP data: minimize <c,x> s.t. A x = b, x >= 0.
/// Columns [0, original_n) are the code coordinates; the remainder are
/// slack columns introduced by the embedding. slack_of_row[r] is the
/// slack column owned by row r, or -1 for a row carried as an equality.
struct StandardFormLP {
  SparseMatrix A;
  Vector b;
  Vector c;
  int original_n = 0;
  std::vector<int> slack_of_row;

  Eigen::Index rows() const { return A.rows(); }
  Eigen::Index cols() const { return A.cols(); }
};

/// Bookkeeping for the degree-3 check decomposition.
struct DecompositionMap {
  int original_n = 0;
  int aux_count = 0;
};

/// Facets of conv(C_j) for the single even-parity check on `support`:
/// for each odd subset S, sum_{S} x_i - sum_{support\S} x_i <= |S| - 1.
/// Exactly 2^(deg-1) inequalities; guarded at degree 31.
std::vector<LinearInequality> check_inequalities(const std::vector<int>& support);

/// Union of check_inequalities over all rows of H.
IneqSystem build_polytope(const SparseBinaryMatrix& H);

/// Replaces every check of degree k > max_degree by a chain of k-2
/// degree-3 checks over k-3 fresh auxiliary variables (appended after the
/// original n columns). Projection of the decomposed code onto the first
/// n coordinates is the original code.
std::pair<SparseBinaryMatrix, DecompositionMap> decompose_checks(const SparseBinaryMatrix& H,
                                                                 int max_degree);

/// Embeds min <gamma,x> over P into equality form: one slack per facet,
/// one slack per box upper bound. Exactly-opposite facet pairs (degree-2
/// checks produce them) are merged into a single slack-free equality row
/// so the feasible set keeps a strictly positive point. Dependent equality
/// rows are pruned to full row rank.
StandardFormLP to_standard_form(const IneqSystem& P, const Vector& gamma);

/// Rounds to {0, 1/2, 1} with a tie band of width tau around 1/2.
/// Entries must lie in [-tau, 1 + tau].
Vector round_iterate(const Vector& x, double tau_round);

bool is_binary_rounding(const Vector& rounded);
BinaryWord to_binary_word(const Vector& rounded);

/// Indices of rows that survive rank-revealing elimination (pivot
/// threshold 1e-10), in original order.
std::vector<int> independent_rows(const Matrix& dense, double pivot_tol = 1e-10);

/// Exhaustive basic-feasible-solution oracle over Eq-form LPs built by
/// to_standard_form. Enumeration runs once per polytope; evaluating a cost
/// vector is then a scan over stored vertices. Guarded at N <= 60, k <= 60.
class DenseLpOracle {
 public:
  explicit DenseLpOracle(const StandardFormLP& lp);

  const std::vector<Vector>& vertices() const { return vertices_; }

  /// Minimum-cost vertex; ties broken by lexicographically smallest x.
  std::pair<Vector, double> minimize(const Vector& c) const;

 private:
  std::vector<Vector> vertices_;
  Eigen::Index cols_ = 0;
};

/// One-shot oracle call with the LP's own cost vector.
std::pair<Vector, double> lp_oracle_dense(const StandardFormLP& lp);

std::string to_json(const IneqSystem& P);
std::string to_json(const StandardFormLP& lp);

}  // namespace lpdec

#endif
