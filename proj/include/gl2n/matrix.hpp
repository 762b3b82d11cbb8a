#pragma once

// Numeric matrices over Q and matrices over U(gl_n), which realise
// U(gl_n) (x) gl_n as Mat_n(U(gl_n)).

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "gl2n/pbw.hpp"
#include "gl2n/scalar.hpp"

namespace gl2n {

/// Dense exact rational matrix. Entries are addressed 0-based with at(r, c).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  /// E_{row,col} of size n x n, 1-based like the generators e_{row,col}.
  static RationalMatrix unit(std::size_t n, std::size_t row, std::size_t col);
  static RationalMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const;

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const RationalMatrix& b);

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Scalar& c);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Scalar& c) { return a *= c; }
  friend RationalMatrix operator*(const Scalar& c, RationalMatrix a) { return a *= c; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Scalar trace(const RationalMatrix& m);
Scalar determinant(const RationalMatrix& m);
/// Throws SingularMatrix.
RationalMatrix inverse(const RationalMatrix& m);
std::size_t matrix_rank(const RationalMatrix& m);
/// Reduced row echelon form with zero rows removed.
RationalMatrix row_basis(const RationalMatrix& m);
/// Basis of {v : m v = 0}, one column per basis vector.
RationalMatrix null_space(const RationalMatrix& m);
RationalMatrix stack_rows(const std::vector<RationalMatrix>& blocks);

/// n x n matrix with entries in U(gl_n).
class UeaMatrix {
 public:
  explicit UeaMatrix(Rank n = 1);

  static UeaMatrix identity(Rank n);
  /// Entries of m as constants of U(gl_n), n = m.rows().
  static UeaMatrix embed(const RationalMatrix& m);
  /// a (x) I.
  static UeaMatrix scalar(const UeaElement& a);

  Rank rank() const noexcept { return rank_; }
  UeaElement& at(std::size_t r, std::size_t c) { return entries_[r * rank_ + c]; }
  const UeaElement& at(std::size_t r, std::size_t c) const { return entries_[r * rank_ + c]; }

  UeaMatrix& operator+=(const UeaMatrix& o);
  UeaMatrix& operator-=(const UeaMatrix& o);
  UeaMatrix& operator*=(const Scalar& c);

  friend UeaMatrix operator+(UeaMatrix a, const UeaMatrix& b) { return a += b; }
  friend UeaMatrix operator-(UeaMatrix a, const UeaMatrix& b) { return a -= b; }
  friend UeaMatrix operator*(UeaMatrix a, const Scalar& c) { return a *= c; }
  friend UeaMatrix operator*(const UeaMatrix& a, const UeaMatrix& b);
  friend bool operator==(const UeaMatrix&, const UeaMatrix&) = default;

 private:
  Rank rank_;
  std::vector<UeaElement> entries_;
};

/// Entrywise-UEA matrix product; factor order inside each entry is preserved.
UeaMatrix mat_mul(const UeaMatrix& a, const UeaMatrix& b);
/// M . N for numeric N, without embedding N.
UeaMatrix mat_mul(const UeaMatrix& a, const RationalMatrix& b);
UeaMatrix mat_mul(const RationalMatrix& a, const UeaMatrix& b);

UeaElement mat_trace(const UeaMatrix& m);
/// tr(M . N) for numeric N.
UeaElement trace_product(const UeaMatrix& m, const RationalMatrix& n);

/// sum_{ij} A_ij e_ij: the image of a numeric matrix in U(gl_n).
UeaElement to_uea(const RationalMatrix& a);

/// F = (e_{j,i})_{i,j}.
UeaMatrix f_matrix(Rank n);
/// F^m for m >= 1. Results are cached per (n, m).
UeaMatrix f_power(Rank n, std::uint32_t m);
/// Gelfand invariant tr(F^k), k >= 1.
UeaElement gelfand(Rank n, std::uint32_t k);

/// Algebra map generated by A -> A (x) I - 1 (x) A^T.
UeaMatrix psi(const UeaElement& a);
/// Algebra map generated by A -> A (x) I + 1 (x) A.
UeaMatrix phi(const UeaElement& a);

}  // namespace gl2n
