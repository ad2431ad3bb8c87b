#ifndef LPDEC_TYPES_HPP
#define LPDEC_TYPES_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpdec {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using Triplet = Eigen::Triplet<double>;

/// Length-n word over {0,1}; index i is bit i of the code coordinate.
using BinaryWord = std::vector<std::uint8_t>;

/// Raised by text-format readers; carries the 1-based offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + std::move(msg)), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Numeric failure inside a solver (non-finite value, factorization breakdown).
class NumericError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lpdec

#endif
