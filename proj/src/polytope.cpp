#include "lpdec/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace lpdec {

double eval_lhs(const LinearInequality& q, const Vector& x) {
  double v = 0.0;
  for (const auto& [i, a] : q.coeffs) v += a * x(i);
  return v;
}

bool is_feasible(const IneqSystem& P, const Vector& x, double tol) {
  if (x.size() != P.n) throw std::invalid_argument("point dimension does not match polytope");
  for (int i = 0; i < P.n; ++i)
    if (x(i) < -tol || x(i) > 1.0 + tol) return false;
  for (const auto& q : P.inequalities)
    if (eval_lhs(q, x) > q.rhs + tol) return false;
  return true;
}

std::vector<LinearInequality> check_inequalities(const std::vector<int>& support) {
  const int d = static_cast<int>(support.size());
  if (d < 1) throw std::invalid_argument("empty check support");
  if (d > 31) throw std::invalid_argument("check degree  " + std::to_string(d) +
                                          " exceeds facet enumeration guard (decompose first)");
  std::vector<LinearInequality> out;
  out.reserve(std::size_t{1} << (d - 1));
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << d); ++mask) {
    const int odd = std::popcount(mask) & 1;
    if (!odd) continue;
    LinearInequality q;
    q.coeffs.reserve(d);
    for (int t = 0; t < d; ++t)
      q.coeffs.emplace_back(support[t], ((mask >> t) & 1) ? 1.0 : -1.0);
    q.rhs = static_cast<double>(std::popcount(mask) - 1);
    out.push_back(std::move(q));
  }
  return out;
}

IneqSystem build_polytope(const SparseBinaryMatrix& H) {
  IneqSystem P;
  P.n = H.n;
  for (const auto& row : H.rows) {
    auto facets = check_inequalities(row);
    P.inequalities.insert(P.inequalities.end(), std::make_move_iterator(facets.begin()),
                          std::make_move_iterator(facets.end()));
  }
  return P;
}

std::pair<SparseBinaryMatrix, DecompositionMap> decompose_checks(const SparseBinaryMatrix& H,
                                                                 int max_degree) {
  if (max_degree < 3) throw std::invalid_argument("max_degree must be at least 3");
  std::vector<std::vector<int>> rows;
  int next_aux = H.n;
  for (const auto& row : H.rows) {
    const int k = static_cast<int>(row.size());
    if (k <= max_degree) {
      rows.push_back(row);
      continue;
    }
    // chain: {x1,x2,a1}, {a_{i-1}, x_{i+1}, a_i}, ..., {a_{k-3}, x_{k-1}, x_k}
    const int aux0 = next_aux;
    next_aux += k - 3;
    rows.push_back({row[0], row[1], aux0});
    for (int i = 1; i + 1 < k - 2; ++i) rows.push_back({aux0 + i - 1, row[i + 1], aux0 + i});
    rows.push_back({aux0 + k - 4, row[k - 2], row[k - 1]});
  }
  DecompositionMap map{H.n, next_aux - H.n};
  return {make_parity_check(static_cast<int>(rows.size()), next_aux, std::move(rows)), map};
}

std::vector<int> independent_rows(const Matrix& dense, double pivot_tol) {
  // greedy modified Gram-Schmidt: a row survives iff it adds rank
  std::vector<int> kept;
  std::vector<Vector> basis;
  for (Eigen::Index r = 0; r < dense.rows(); ++r) {
    Vector v = dense.row(r).transpose();
    const double scale = v.norm();
    if (scale == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) v -= q.dot(v) * q;
    if (v.norm() > pivot_tol * scale) {
      basis.push_back(v / v.norm());
      kept.push_back(static_cast<int>(r));
    }
  }
  return kept;
}

namespace {

struct SignedKey {
  std::vector<std::pair<int, double>> coeffs;  // sign-normalized
  double rhs;
  bool flipped;
};

SignedKey normalize(const LinearInequality& q) {
  SignedKey k{q.coeffs, q.rhs, false};
  if (!k.coeffs.empty() && k.coeffs.front().second < 0) {
    for (auto& [i, a] : k.coeffs) a = -a;
    k.rhs = -k.rhs;
    k.flipped = true;
  }
  return k;
}

std::string key_string(const SignedKey& k) {
  std::string s;
  for (const auto& [i, a] : k.coeffs) {
    s += std::to_string(i);
    s += ':';
    s += std::to_string(a);
    s += ';';
  }
  s += '|';
  s += std::to_string(k.rhs);
  return s;
}

}  // namespace

StandardFormLP to_standard_form(const IneqSystem& P, const Vector& gamma) {
  if (gamma.size() != P.n) throw std::invalid_argument("cost length does not match polytope dimension");
  const int n = P.n;
  const int R = static_cast<int>(P.inequalities.size());

  // Pair up exactly-opposite facets (degree-2 checks emit them). A pair
  // {a.x <= b, -a.x <= -b} pins a.x = b; keeping both as slack rows would
  // leave the equality-form feasible set without any strictly positive
  // point, which breaks interior-point starts.
  std::unordered_map<std::string, std::vector<std::pair<int, bool>>> groups;
  for (int r = 0; r < R; ++r) {
    const auto key = normalize(P.inequalities[r]);
    groups[key_string(key)].emplace_back(r, key.flipped);
  }
  std::vector<char> as_equality(R, 0), dropped(R, 0);
  for (auto& [_, members] : groups) {
    std::vector<int> pos, neg;
    for (auto [r, flipped] : members) (flipped ? neg : pos).push_back(r);
    const std::size_t pairs = std::min(pos.size(), neg.size());
    for (std::size_t t = 0; t < pairs; ++t) {
      as_equality[pos[t]] = 1;
      dropped[neg[t]] = 1;
    }
  }

  // column layout: x (n) | facet slacks | box slacks (n)
  std::vector<int> slack_col(R, -1);
  int next_col = n;
  for (int r = 0; r < R; ++r)
    if (!as_equality[r] && !dropped[r]) slack_col[r] = next_col++;
  const int box_base = next_col;
  const int N = box_base + n;

  // prune dependent equality rows (duplicate merged facets, cycles of
  // degree-2 constraints); slack-owning rows are independent by their
  // private column.
  std::vector<int> eq_rows;
  for (int r = 0; r < R; ++r)
    if (as_equality[r]) eq_rows.push_back(r);
  std::vector<char> eq_keep(eq_rows.size(), 1);
  if (!eq_rows.empty()) {
    Matrix E(static_cast<Eigen::Index>(eq_rows.size()), n + 1);
    E.setZero();
    for (std::size_t t = 0; t < eq_rows.size(); ++t) {
      for (const auto& [i, a] : P.inequalities[eq_rows[t]].coeffs) E(static_cast<Eigen::Index>(t), i) = a;
      E(static_cast<Eigen::Index>(t), n) = P.inequalities[eq_rows[t]].rhs;
    }
    const auto kept = independent_rows(E.leftCols(n));
    std::fill(eq_keep.begin(), eq_keep.end(), 0);
    for (int t : kept) eq_keep[t] = 1;
    // a dropped equality row must be consistent with the kept ones
    const auto kept_aug = independent_rows(E);
    if (kept_aug.size() != kept.size())
      throw NumericError("inconsistent merged equality rows (formulation bug)");
  }

  StandardFormLP lp;
  std::vector<Triplet> trips;
  std::vector<double> b;
  auto add_row = [&](int slack) {
    lp.slack_of_row.push_back(slack);
    return static_cast<int>(b.size());
  };

  std::size_t eq_cursor = 0;
  for (int r = 0; r < R; ++r) {
    if (dropped[r]) continue;
    if (as_equality[r]) {
      const bool keep = eq_keep[eq_cursor++];
      if (!keep) continue;
      const int row = add_row(-1);
      b.push_back(P.inequalities[r].rhs);
      for (const auto& [i, a] : P.inequalities[r].coeffs) trips.emplace_back(row, i, a);
    } else {
      const int row = add_row(slack_col[r]);
      b.push_back(P.inequalities[r].rhs);
      for (const auto& [i, a] : P.inequalities[r].coeffs) trips.emplace_back(row, i, a);
      trips.emplace_back(row, slack_col[r], 1.0);
    }
  }
  for (int i = 0; i < n; ++i) {
    const int row = add_row(box_base + i);
    b.push_back(1.0);
    trips.emplace_back(row, i, 1.0);
    trips.emplace_back(row, box_base + i, 1.0);
  }

  const int k = static_cast<int>(b.size());
  lp.A.resize(k, N);
  lp.A.setFromTriplets(trips.begin(), trips.end());
  lp.A.makeCompressed();
  lp.b = Eigen::Map<const Vector>(b.data(), k);
  lp.c = Vector::Zero(N);
  lp.c.head(n) = gamma;
  lp.original_n = n;
  return lp;
}

Vector round_iterate(const Vector& x, double tau_round) {
  Vector out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double v = x(i);
    if (v < -tau_round || v > 1.0 + tau_round)
      throw std::invalid_argument("iterate entry " + std::to_string(v) + " outside [0,1] band");
    if (v < 0.5 - tau_round)
      out(i) = 0.0;
    else if (v > 0.5 + tau_round)
      out(i) = 1.0;
    else
      out(i) = 0.5;
  }
  return out;
}

bool is_binary_rounding(const Vector& rounded) {
  for (Eigen::Index i = 0; i < rounded.size(); ++i)
    if (rounded(i) == 0.5) return false;
  return true;
}

BinaryWord to_binary_word(const Vector& rounded) {
  BinaryWord w(static_cast<std::size_t>(rounded.size()));
  for (Eigen::Index i = 0; i < rounded.size(); ++i) {
    if (rounded(i) != 0.0 && rounded(i) != 1.0)
      throw std::invalid_argument("rounded vector is not binary");
    w[static_cast<std::size_t>(i)] = rounded(i) == 1.0 ? 1 : 0;
  }
  return w;
}

// ---------------------------------------------------------------------------
// Basic-feasible-solution enumeration.
//
// Choosing a basis of A (column subset of size k) is the same as choosing
// the N-k nonbasic columns. Every row owns at most one private slack
// column, so once the nonbasic set is fixed the basic values follow from
// the tight rows restricted to the structural (non-slack) columns — a
// system of size at most original_n instead of k. That reduction is what
// makes the full enumeration affordable at desk scale.
// ---------------------------------------------------------------------------

namespace {

constexpr double kFeasTol = 1e-9;
constexpr double kPivotTol = 1e-12;

struct OracleRow {
  std::vector<std::pair<int, double>> struct_coeffs;  // (structural slot, coeff)
  double rhs = 0.0;
  int slack_col = -1;
  double slack_coef = 1.0;
};

std::string vertex_key(const Vector& v) {
  std::string s;
  s.reserve(static_cast<std::size_t>(v.size()) * 8);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const long long q = std::llround(v(i) * 1e9);
    s.append(reinterpret_cast<const char*>(&q), sizeof(q));
  }
  return s;
}

bool lex_less(const Vector& a, const Vector& b, double tol) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i) - tol) return true;
    if (a(i) > b(i) + tol) return false;
  }
  return false;
}

}  // namespace

DenseLpOracle::DenseLpOracle(const StandardFormLP& lp) {
  const int N = static_cast<int>(lp.cols());
  const int k = static_cast<int>(lp.rows());
  if (N > 60 || k > 60)
    throw std::invalid_argument("oracle guard: LP size " + std::to_string(N) + "x" +
                                std::to_string(k) + " exceeds 60");
  if (static_cast<int>(lp.slack_of_row.size()) != k)
    throw std::invalid_argument("oracle requires slack bookkeeping from to_standard_form");
  cols_ = N;

  // classify columns
  std::vector<int> slack_owner(N, -1);  // column -> row owning it as slack
  for (int r = 0; r < k; ++r)
    if (lp.slack_of_row[r] >= 0) slack_owner[lp.slack_of_row[r]] = r;
  std::vector<int> struct_slot(N, -1), slot_col;
  for (int j = 0; j < N; ++j)
    if (slack_owner[j] < 0) {
      struct_slot[j] = static_cast<int>(slot_col.size());
      slot_col.push_back(j);
    }
  const int p = static_cast<int>(slot_col.size());
  const int z = N - k;  // nonbasic count
  if (z < 0) throw std::invalid_argument("LP has more rows than columns");

  const Matrix dense = Matrix(lp.A);
  std::vector<OracleRow> rows(k);
  std::vector<int> always_tight;
  for (int r = 0; r < k; ++r) {
    rows[r].rhs = lp.b(r);
    rows[r].slack_col = lp.slack_of_row[r];
    if (rows[r].slack_col >= 0)
      rows[r].slack_coef = dense(r, rows[r].slack_col);
    else
      always_tight.push_back(r);
    for (int j = 0; j < N; ++j) {
      if (j == rows[r].slack_col) continue;
      if (dense(r, j) != 0.0) {
        if (struct_slot[j] < 0)
          throw std::invalid_argument("slack column appears in a foreign row");
        rows[r].struct_coeffs.emplace_back(struct_slot[j], dense(r, j));
      }
    }
  }

  std::unordered_set<std::string> seen;
  std::vector<char> slot_nonbasic(p, 0);
  std::vector<int> tight, unknown_of_slot(p, -1), slot_of_unknown(p, -1);
  Matrix M(p, p);
  Vector rhs(p), sol(p), xs(p);

  auto try_subset = [&](const std::vector<int>& Z) {
    std::fill(slot_nonbasic.begin(), slot_nonbasic.end(), 0);
    tight = always_tight;
    for (int col : Z) {
      if (struct_slot[col] >= 0)
        slot_nonbasic[struct_slot[col]] = 1;
      else
        tight.push_back(slack_owner[col]);
    }
    int q = 0;
    for (int s = 0; s < p; ++s)
      if (!slot_nonbasic[s]) {
        unknown_of_slot[s] = q;
        slot_of_unknown[q] = s;
        ++q;
      } else {
        unknown_of_slot[s] = -1;
      }
    if (static_cast<int>(tight.size()) != q) return;  // non-square basis, never happens

    M.topLeftCorner(q, q).setZero();
    for (int e = 0; e < q; ++e) {
      const auto& row = rows[tight[e]];
      rhs(e) = row.rhs;
      for (const auto& [slot, a] : row.struct_coeffs)
        if (!slot_nonbasic[slot]) M(e, unknown_of_slot[slot]) = a;
    }

    // in-place partial-pivot elimination on [M | rhs]
    for (int d = 0; d < q; ++d) {
      int piv = d;
      for (int r2 = d + 1; r2 < q; ++r2)
        if (std::abs(M(r2, d)) > std::abs(M(piv, d))) piv = r2;
      if (std::abs(M(piv, d)) < kPivotTol) return;  // singular basis
      if (piv != d) {
        M.row(piv).head(q).swap(M.row(d).head(q));
        std::swap(rhs(piv), rhs(d));
      }
      for (int r2 = d + 1; r2 < q; ++r2) {
        const double f = M(r2, d) / M(d, d);
        if (f == 0.0) continue;
        M.row(r2).segment(d, q - d) -= f * M.row(d).segment(d, q - d);
        rhs(r2) -= f * rhs(d);
      }
    }
    for (int r2 = q - 1; r2 >= 0; --r2) {
      double acc = rhs(r2);
      for (int c2 = r2 + 1; c2 < q; ++c2) acc -= M(r2, c2) * sol(c2);
      sol(r2) = acc / M(r2, r2);
    }

    for (int s = 0; s < p; ++s) xs(s) = slot_nonbasic[s] ? 0.0 : sol(unknown_of_slot[s]);
    for (int s = 0; s < p; ++s)
      if (xs(s) < -kFeasTol) return;

    Vector v = Vector::Zero(N);
    for (int s = 0; s < p; ++s) v(slot_col[s]) = xs(s);
    for (int r = 0; r < k; ++r) {
      const auto& row = rows[r];
      if (row.slack_col < 0) continue;
      double acc = row.rhs;
      for (const auto& [slot, a] : row.struct_coeffs) acc -= a * xs(slot);
      const double val = acc / row.slack_coef;
      if (val < -kFeasTol) return;
      v(row.slack_col) = std::max(val, 0.0);
    }
    if (seen.insert(vertex_key(v)).second) vertices_.push_back(std::move(v));
  };

  // walk all column subsets of size z (complements of the bases)
  std::vector<int> Z(z);
  for (int t = 0; t < z; ++t) Z[t] = t;
  if (z == 0) {
    try_subset(Z);
  } else {
    while (true) {
      try_subset(Z);
      int t = z - 1;
      while (t >= 0 && Z[t] == N - z + t) --t;
      if (t < 0) break;
      ++Z[t];
      for (int u = t + 1; u < z; ++u) Z[u] = Z[u - 1] + 1;
    }
  }
}

std::pair<Vector, double> DenseLpOracle::minimize(const Vector& c) const {
  if (c.size() != cols_) throw std::invalid_argument("cost dimension mismatch");
  if (vertices_.empty()) throw std::runtime_error("infeasible LP: no basic feasible solution");
  const Vector* best = nullptr;
  double best_cost = 0.0;
  for (const auto& v : vertices_) {
    const double cost = c.dot(v);
    if (!best || cost < best_cost - 1e-12) {
      best = &v;
      best_cost = cost;
    } else if (cost <= best_cost + 1e-12 && lex_less(v, *best, 1e-9)) {
      best = &v;
      best_cost = std::min(best_cost, cost);
    }
  }
  return {*best, best_cost};
}

std::pair<Vector, double> lp_oracle_dense(const StandardFormLP& lp) {
  DenseLpOracle oracle(lp);
  return oracle.minimize(lp.c);
}

std::string to_json(const IneqSystem& P) {
  nlohmann::json j;
  j["n"] = P.n;
  auto& arr = j["inequalities"] = nlohmann::json::array();
  for (const auto& q : P.inequalities) {
    nlohmann::json e;
    e["rhs"] = q.rhs;
    auto& cf = e["coeffs"] = nlohmann::json::array();
    for (const auto& [i, a] : q.coeffs) cf.push_back({i, a});
    arr.push_back(std::move(e));
  }
  return j.dump();
}

std::string to_json(const StandardFormLP& lp) {
  nlohmann::json j;
  j["rows"] = lp.rows();
  j["cols"] = lp.cols();
  j["original_n"] = lp.original_n;
  j["b"] = std::vector<double>(lp.b.data(), lp.b.data() + lp.b.size());
  j["c"] = std::vector<double>(lp.c.data(), lp.c.data() + lp.c.size());
  auto& trip = j["A"] = nlohmann::json::array();
  for (int r = 0; r < lp.A.outerSize(); ++r)
    for (SparseMatrix::InnerIterator it(lp.A, r); it; ++it)
      trip.push_back({it.row(), it.col(), it.value()});
  return j.dump();
}

}  // namespace lpdec
