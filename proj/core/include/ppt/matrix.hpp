#ifndef PPT_MATRIX_HPP
#define PPT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <variant>
#include <vector>

#include "ppt/rational.hpp"

namespace ppt {

using Column = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  /// Appends a row; on an empty 0x0 matrix the row fixes the column count.
  void append_row(std::span<const Rational> values);
  void append_rows(const Matrix& other);

  Matrix transpose() const;
  Column operator*(std::span<const Rational> x) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct UniqueSolution {
  Column x;
};
struct NoSolution {};
struct InfinitelyMany {
  Column particular;
  std::vector<Column> nullspace;
};
using SolveResult = std::variant<UniqueSolution, NoSolution, InfinitelyMany>;

/// Gauss-Jordan elimination over the rationals. Throws InputError when
/// rhs.size() != a.rows().
SolveResult solve_linear(const Matrix& a, std::span<const Rational> rhs);

std::size_t rank(const Matrix& a);

/// Basis of {x : a x = 0}; one vector per free column of the reduced
/// row echelon form, so the basis is independent by construction.
std::vector<Column> nullspace(const Matrix& a);

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
Echelon row_reduce(Matrix a);

}  // namespace ppt

#endif  // PPT_MATRIX_HPP
