#include "ppt/matrix.hpp"

#include <utility>

#include "ppt/errors.hpp"

namespace ppt {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  for (const auto& r : rows) append_row(std::vector<Rational>(r));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void Matrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw InputError("append_row: row length does not match column count");
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::append_rows(const Matrix& other) {
  for (std::size_t r = 0; r < other.rows(); ++r) append_row(other.row(r));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Column Matrix::operator*(std::span<const Rational> x) const {
  if (x.size() != cols_) throw InputError("matrix-vector product: shape mismatch");
  Column y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0) acc += (*this)(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

Echelon row_reduce(Matrix a) {
  Echelon result;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && sgn(a(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(pivot, k), a(lead, k));

    const Rational inv = 1 / a(lead, c);
    for (std::size_t k = c; k < cols; ++k) a(lead, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || sgn(a(r, c)) == 0) continue;
      const Rational factor = a(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (sgn(a(lead, k)) != 0) a(r, k) -= factor * a(lead, k);
    }
    result.pivots.push_back(c);
    ++lead;
  }
  result.reduced = std::move(a);
  return result;
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivots.size(); }

namespace {

std::vector<Column> nullspace_from_echelon(const Echelon& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Column> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Column x(cols);
    x[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace

std::vector<Column> nullspace(const Matrix& a) { return nullspace_from_echelon(row_reduce(a), a.cols()); }

SolveResult solve_linear(const Matrix& a, std::span<const Rational> rhs) {
  if (rhs.size() != a.rows()) throw InputError("solve_linear: rhs length does not match row count");
  const std::size_t n = a.cols();
  Matrix augmented(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = a(r, c);
    augmented(r, n) = rhs[r];
  }
  const Echelon e = row_reduce(std::move(augmented));
  if (!e.pivots.empty() && e.pivots.back() == n) return NoSolution{};

  Column particular(n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) particular[e.pivots[r]] = e.reduced(r, n);
  if (e.pivots.size() == n) return UniqueSolution{std::move(particular)};

  // Drop the rhs column before reading off the homogeneous solutions.
  Echelon homogeneous{Matrix(e.reduced.rows(), n), e.pivots};
  for (std::size_t r = 0; r < e.reduced.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) homogeneous.reduced(r, c) = e.reduced(r, c);
  return InfinitelyMany{std::move(particular), nullspace_from_echelon(homogeneous, n)};
}

}  // namespace ppt
