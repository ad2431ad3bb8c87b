#include "lpdec/codes.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "lpdec/rng.hpp"

namespace lpdec {

int SparseBinaryMatrix::max_row_degree() const {
  int d = 0;
  for (const auto& r : rows) d = std::max<int>(d, static_cast<int>(r.size()));
  return d;
}

std::vector<std::vector<int>> SparseBinaryMatrix::column_supports() const {
  std::vector<std::vector<int>> cols(n);
  for (int j = 0; j < m; ++j)
    for (int i : rows[j]) cols[i].push_back(j);
  return cols;
}

SparseBinaryMatrix make_parity_check(int m, int n, std::vector<std::vector<int>> rows) {
  if (m <= 0 || n <= 0) throw std::invalid_argument("parity-check dimensions must be positive");
  if (static_cast<int>(rows.size()) != m) throw std::invalid_argument("row count does not match m");
  for (auto& r : rows) {
    if (r.empty()) throw std::invalid_argument("empty check row");
    std::sort(r.begin(), r.end());
    if (std::adjacent_find(r.begin(), r.end()) != r.end())
      throw std::invalid_argument("duplicate index in check row");
    if (r.front() < 0 || r.back() >= n) throw std::invalid_argument("column index out of range");
  }
  return SparseBinaryMatrix{m, n, std::move(rows)};
}

namespace {

std::vector<int> parse_int_line(const std::string& line, int lineno, int expect_count) {
  std::istringstream ss(line);
  std::vector<int> out;
  long long v;
  while (ss >> v) out.push_back(static_cast<int>(v));
  std::string trailing;
  if (ss.bad() || (ss.clear(), ss >> trailing))
    throw ParseError("non-numeric token '" + trailing + "'", lineno);
  if (expect_count >= 0 && static_cast<int>(out.size()) != expect_count)
    throw ParseError("expected " + std::to_string(expect_count) + " entries, found " +
                         std::to_string(out.size()),
                     lineno);
  return out;
}

std::string next_line(std::istream& in, int& lineno) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("unexpected end of input", lineno + 1);
  ++lineno;
  return line;
}

}  // namespace

SparseBinaryMatrix parse_alist(std::istream& in) {
  int lineno = 0;
  const auto header = parse_int_line(next_line(in, lineno), lineno, 2);
  const int n = header[0], m = header[1];
  if (n <= 0 || m <= 0) throw ParseError("dimensions must be positive", lineno);

  const auto maxdeg = parse_int_line(next_line(in, lineno), lineno, 2);
  const int max_col = maxdeg[0], max_row = maxdeg[1];
  if (max_col <= 0 || max_row <= 0) throw ParseError("max degrees must be positive", lineno);

  const auto col_deg = parse_int_line(next_line(in, lineno), lineno, n);
  const auto row_deg = parse_int_line(next_line(in, lineno), lineno, m);
  for (int i = 0; i < n; ++i)
    if (col_deg[i] < 1 || col_deg[i] > max_col)
      throw ParseError("column degree " + std::to_string(col_deg[i]) + " outside [1, max]", lineno - 1);
  for (int j = 0; j < m; ++j)
    if (row_deg[j] < 1 || row_deg[j] > max_row)
      throw ParseError("row degree " + std::to_string(row_deg[j]) + " outside [1, max]", lineno);

  // support lines: declared-degree real entries, then zero padding
  auto read_support = [&](int count, int degree, int max_deg, int index_bound) {
    const auto entries = parse_int_line(next_line(in, lineno), lineno, max_deg);
    std::vector<int> support;
    for (int t = 0; t < max_deg; ++t) {
      if (t < degree) {
        if (entries[t] < 1 || entries[t] > index_bound)
          throw ParseError("index " + std::to_string(entries[t]) + " out of range [1, " +
                               std::to_string(index_bound) + "]",
                           lineno);
        support.push_back(entries[t] - 1);
      } else if (entries[t] != 0) {
        throw ParseError("expected zero padding, found " + std::to_string(entries[t]), lineno);
      }
    }
    (void)count;
    return support;
  };

  std::vector<std::vector<int>> col_support(n);
  for (int i = 0; i < n; ++i) col_support[i] = read_support(i, col_deg[i], max_col, m);

  std::vector<std::vector<int>> rows(m);
  for (int j = 0; j < m; ++j) rows[j] = read_support(j, row_deg[j], max_row, n);

  // cross-check the two support blocks
  std::vector<std::vector<int>> rows_from_cols(m);
  for (int i = 0; i < n; ++i)
    for (int j : col_support[i]) rows_from_cols[j].push_back(i);
  for (int j = 0; j < m; ++j) {
    auto sorted_row = rows[j];
    std::sort(sorted_row.begin(), sorted_row.end());
    std::sort(rows_from_cols[j].begin(), rows_from_cols[j].end());
    if (sorted_row != rows_from_cols[j])
      throw ParseError("row/column support blocks disagree at check " + std::to_string(j + 1), lineno);
  }

  return make_parity_check(m, n, std::move(rows));
}

SparseBinaryMatrix parse_alist_text(const std::string& text) {
  std::istringstream ss(text);
  return parse_alist(ss);
}

SparseBinaryMatrix load_alist_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_alist(in);
}

std::string serialize_alist(const SparseBinaryMatrix& H) {
  const auto cols = H.column_supports();
  int max_col = 0;
  for (const auto& c : cols) max_col = std::max<int>(max_col, static_cast<int>(c.size()));
  const int max_row = H.max_row_degree();

  std::ostringstream out;
  auto emit = [&out](const std::vector<int>& v) {
    for (std::size_t t = 0; t < v.size(); ++t) out << (t ? " " : "") << v[t];
    out << '\n';
  };

  out << H.n << ' ' << H.m << '\n' << max_col << ' ' << max_row << '\n';
  std::vector<int> degs(H.n);
  for (int i = 0; i < H.n; ++i) degs[i] = static_cast<int>(cols[i].size());
  emit(degs);
  degs.assign(H.m, 0);
  for (int j = 0; j < H.m; ++j) degs[j] = H.row_degree(j);
  emit(degs);

  auto emit_padded = [&](const std::vector<int>& support, int width) {
    std::vector<int> line(width, 0);
    for (std::size_t t = 0; t < support.size(); ++t) line[t] = support[t] + 1;
    emit(line);
  };
  for (int i = 0; i < H.n; ++i) emit_padded(cols[i], max_col);
  for (int j = 0; j < H.m; ++j) emit_padded(H.rows[j], max_row);
  return out.str();
}

bool is_codeword(const SparseBinaryMatrix& H, const BinaryWord& x) {
  if (static_cast<int>(x.size()) != H.n) throw std::invalid_argument("word length does not match code length");
  for (const auto& row : H.rows) {
    int parity = 0;
    for (int i : row) parity ^= (x[i] & 1);
    if (parity) return false;
  }
  return true;
}

namespace {

// Row-echelon form of H over GF(2), packed 64 columns per word.
struct Gf2Echelon {
  int n;
  std::vector<std::vector<std::uint64_t>> rows;  // reduced rows
  std::vector<int> pivot_col;                    // per reduced row

  explicit Gf2Echelon(const SparseBinaryMatrix& H) : n(H.n) {
    const int words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> work;
    work.reserve(H.m);
    for (const auto& r : H.rows) {
      std::vector<std::uint64_t> bits(words, 0);
      for (int i : r) bits[i / 64] |= (1ULL << (i % 64));
      work.push_back(std::move(bits));
    }
    std::vector<char> used(work.size(), 0);
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      for (std::size_t j = 0; j < work.size(); ++j) {
        if (!used[j] && (work[j][col / 64] >> (col % 64)) & 1) {
          pivot = static_cast<int>(j);
          break;
        }
      }
      if (pivot < 0) continue;
      used[pivot] = 1;
      pivot_col.push_back(col);
      rows.push_back(work[pivot]);
      for (std::size_t j = 0; j < work.size(); ++j) {
        if (static_cast<int>(j) != pivot && ((work[j][col / 64] >> (col % 64)) & 1)) {
          for (int w = 0; w < words; ++w) work[j][w] ^= work[pivot][w];
        }
      }
    }
  }

  int rank() const { return static_cast<int>(rows.size()); }
};

}  // namespace

int gf2_rank(const SparseBinaryMatrix& H) { return Gf2Echelon(H).rank(); }

std::vector<BinaryWord> enumerate_codewords(const SparseBinaryMatrix& H) {
  const Gf2Echelon ech(H);
  const int free_dim = H.n - ech.rank();
  if (free_dim > 20)
    throw std::invalid_argument("codeword enumeration guard: dimension " + std::to_string(free_dim) +
                                " exceeds 20");

  std::vector<char> is_pivot(H.n, 0);
  for (int c : ech.pivot_col) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int i = 0; i < H.n; ++i)
    if (!is_pivot[i]) free_cols.push_back(i);

  std::vector<BinaryWord> out;
  out.reserve(std::size_t{1} << free_dim);
  BinaryWord x(H.n, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_dim); ++mask) {
    std::fill(x.begin(), x.end(), 0);
    for (int t = 0; t < free_dim; ++t)
      if ((mask >> t) & 1) x[free_cols[t]] = 1;
    // back-substitute pivots: row is pivot_col + tail of free columns
    for (int r = ech.rank() - 1; r >= 0; --r) {
      int parity = 0;
      for (int i = ech.pivot_col[r] + 1; i < H.n; ++i)
        if ((ech.rows[r][i / 64] >> (i % 64)) & 1) parity ^= x[i];
      x[ech.pivot_col[r]] = static_cast<std::uint8_t>(parity);
    }
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double word_cost(const Vector& gamma, const BinaryWord& x) {
  double cost = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) cost += gamma(static_cast<Eigen::Index>(i));
  return cost;
}

std::pair<BinaryWord, double> ml_decode_exhaustive(const SparseBinaryMatrix& H, const Vector& gamma) {
  if (gamma.size() != H.n) throw std::invalid_argument("llr length does not match code length");
  const auto words = enumerate_codewords(H);
  const BinaryWord* best = &words.front();
  double best_cost = word_cost(gamma, words.front());
  for (const auto& w : words) {
    const double c = word_cost(gamma, w);
    if (c < best_cost) {  // strict: first (lexicographically smallest) wins ties
      best_cost = c;
      best = &w;
    }
  }
  return {*best, best_cost};
}

SparseBinaryMatrix gen_regular_ldpc(int n, int wc, int wr, std::uint64_t seed) {
  if (wc < 2 || wr < 2) throw std::invalid_argument("degrees must be at least 2");
  if ((static_cast<long long>(n) * wc) % wr != 0)
    throw std::invalid_argument("n*wc must be divisible by wr");
  const int m = static_cast<int>(static_cast<long long>(n) * wc / wr);
  const int sockets = n * wc;

  SplitMix64 rng(seed);
  std::vector<int> perm(sockets);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    for (int i = 0; i < sockets; ++i) perm[i] = i;
    for (int i = sockets - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.next_below(static_cast<std::uint64_t>(i) + 1)]);

    // socket t of variable i = t-th edge; lands on check perm[...] / wr
    std::vector<std::vector<int>> rows(m);
    bool collision = false;
    for (int i = 0; i < n && !collision; ++i) {
      for (int t = 0; t < wc; ++t) {
        const int check = perm[i * wc + t] / wr;
        auto& row = rows[check];
        if (std::find(row.begin(), row.end(), i) != row.end()) {
          collision = true;
          break;
        }
        row.push_back(i);
      }
    }
    if (!collision) return make_parity_check(m, n, std::move(rows));
  }
  throw std::runtime_error("socket permutation failed to avoid duplicate edges");
}

}  // namespace lpdec
