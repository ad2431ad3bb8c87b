#ifndef LPDEC_CODES_HPP
#define LPDEC_CODES_HPP

#include <iosfwd>
#include <utility>
#include <vector>

#include "lpdec/types.hpp"

namespace lpdec {

/// Parity-check matrix H over GF(2), stored by row support.
/// Rows are sorted, duplicate-free and non-empty; indices live in [0, n).
struct SparseBinaryMatrix {
  int m = 0;  // checks
  int n = 0;  // variables
  std::vector<std::vector<int>> rows;

  int row_degree(int j) const { return static_cast<int>(rows[j].size()); }
  int max_row_degree() const;
  std::vector<std::vector<int>> column_supports() const;

  bool operator==(const SparseBinaryMatrix&) const = default;
};

/// Validates the invariants above; throws std::invalid_argument on violation.
SparseBinaryMatrix make_parity_check(int m, int n, std::vector<std::vector<int>> rows);

/// Reads the alist interchange format (1-based indices, zero padding).
SparseBinaryMatrix parse_alist(std::istream& in);
SparseBinaryMatrix parse_alist_text(const std::string& text);
SparseBinaryMatrix load_alist_file(const std::string& path);

/// Canonical alist form: single-space separators, padded support lines,
/// trailing newline. parse_alist round-trips this bit-exactly.
std::string serialize_alist(const SparseBinaryMatrix& H);

/// True iff every check of H has even overlap with the support of x.
bool is_codeword(const SparseBinaryMatrix& H, const BinaryWord& x);

/// Rank of H over GF(2).
int gf2_rank(const SparseBinaryMatrix& H);

/// All 2^(n - rank) codewords in lexicographic order.
/// Guarded: requires n - rank <= 20.
std::vector<BinaryWord> enumerate_codewords(const SparseBinaryMatrix& H);

/// Exhaustive minimizer of <gamma, x> over the code; ties go to the
/// lexicographically smallest word. Same guard as enumerate_codewords.
std::pair<BinaryWord, double> ml_decode_exhaustive(const SparseBinaryMatrix& H, const Vector& gamma);

/// (wc, wr)-regular Gallager-style construction via a seeded socket
/// permutation; duplicate edges are repaired by re-permutation.
SparseBinaryMatrix gen_regular_ldpc(int n, int wc, int wr, std::uint64_t seed);

double word_cost(const Vector& gamma, const BinaryWord& x);

}  // namespace lpdec

#endif
