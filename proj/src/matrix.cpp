#include "gl2n/matrix.hpp"

#include <memory>
#include <string>
#include <utility>

#include "gl2n/errors.hpp"
#include "gl2n/memo.hpp"

namespace gl2n {

// ---------------------------------------------------------------------------
// RationalMatrix

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::vector<std::vector<Scalar>> tmp;
  for (const auto& r : rows) tmp.emplace_back(r);
  *this = from_rows(tmp);
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::unit(std::size_t n, std::size_t row, std::size_t col) {
  if (row < 1 || col < 1 || row > n || col > n) {
    throw InvalidArgument("matrix unit E[" + std::to_string(row) + "," + std::to_string(col) +
                          "] outside size " + std::to_string(n));
  }
  RationalMatrix m(n, n);
  m.at(row - 1, col - 1) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InvalidArgument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

RationalMatrix RationalMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows,
                                     std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw InvalidArgument("block out of range");
  RationalMatrix b(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) b.at(i, j) = at(r0 + i, c0 + j);
  }
  return b;
}

void RationalMatrix::set_block(std::size_t r0, std::size_t c0, const RationalMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw InvalidArgument("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b.at(i, j);
  }
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw InvalidArgument("matrix shape mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw InvalidArgument("matrix shape mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Scalar& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix shape mismatch in *");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

Scalar trace(const RationalMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("trace of a non-square matrix");
  Scalar t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    }
    const Scalar inv = 1 / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const Scalar f = m.at(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Scalar determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("determinant of a non-square matrix");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a.at(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a.at(r, col) == 0) continue;
      const Scalar f = a.at(r, col) / a.at(col, col);
      for (std::size_t j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, RationalMatrix::identity(n));
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots.back() >= n) throw SingularMatrix("matrix is singular");
  return aug.block(0, n, n, n);
}

std::size_t matrix_rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  return rref(a).size();
}

RationalMatrix row_basis(const RationalMatrix& m) {
  RationalMatrix a = m;
  const auto pivots = rref(a);
  return a.block(0, 0, pivots.size(), a.cols());
}

RationalMatrix null_space(const RationalMatrix& m) {
  RationalMatrix a = m;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  RationalMatrix basis(a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis.at(f, k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis.at(pivots[r], k) = -a.at(r, f);
  }
  return basis;
}

RationalMatrix stack_rows(const std::vector<RationalMatrix>& blocks) {
  std::size_t rows = 0;
  const std::size_t cols = blocks.empty() ? 0 : blocks.front().cols();
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw InvalidArgument("stack_rows: column mismatch");
    rows += b.rows();
  }
  RationalMatrix out(rows, cols);
  std::size_t r = 0;
  for (const auto& b : blocks) {
    out.set_block(r, 0, b);
    r += b.rows();
  }
  return out;
}

// ---------------------------------------------------------------------------
// UeaMatrix

UeaMatrix::UeaMatrix(Rank n) : rank_(n), entries_(std::size_t{n} * n, UeaElement(n)) {}

UeaMatrix UeaMatrix::identity(Rank n) { return scalar(UeaElement::constant(n, 1)); }

UeaMatrix UeaMatrix::embed(const RationalMatrix& m) {
  if (!m.is_square() || m.rows() == 0) throw InvalidArgument("embed needs a square matrix");
  const auto n = static_cast<Rank>(m.rows());
  UeaMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = UeaElement::constant(n, m.at(i, j));
  }
  return out;
}

UeaMatrix UeaMatrix::scalar(const UeaElement& a) {
  UeaMatrix out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out.at(i, i) = a;
  return out;
}

UeaMatrix& UeaMatrix::operator+=(const UeaMatrix& o) {
  if (o.rank_ != rank_) throw RankMismatch("UeaMatrix +");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

UeaMatrix& UeaMatrix::operator-=(const UeaMatrix& o) {
  if (o.rank_ != rank_) throw RankMismatch("UeaMatrix -");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

UeaMatrix& UeaMatrix::operator*=(const Scalar& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

UeaMatrix operator*(const UeaMatrix& a, const UeaMatrix& b) { return mat_mul(a, b); }

UeaMatrix mat_mul(const UeaMatrix& a, const UeaMatrix& b) {
  if (a.rank() != b.rank()) throw RankMismatch("mat_mul: rank mismatch");
  const Rank n = a.rank();
  UeaMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b.at(k, j).is_zero()) continue;
        out.at(i, j) += mul(aik, b.at(k, j));
      }
    }
  }
  return out;
}

UeaMatrix mat_mul(const UeaMatrix& a, const RationalMatrix& b) {
  if (b.rows() != a.rank() || b.cols() != a.rank()) throw RankMismatch("mat_mul: size mismatch");
  const Rank n = a.rank();
  UeaMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (b.at(k, j) != 0) out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return out;
}

UeaMatrix mat_mul(const RationalMatrix& a, const UeaMatrix& b) {
  if (a.rows() != b.rank() || a.cols() != b.rank()) throw RankMismatch("mat_mul: size mismatch");
  const Rank n = b.rank();
  UeaMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out.at(i, j) += b.at(k, j) * a.at(i, k);
    }
  }
  return out;
}

UeaElement mat_trace(const UeaMatrix& m) {
  UeaElement t(m.rank());
  for (std::size_t i = 0; i < m.rank(); ++i) t += m.at(i, i);
  return t;
}

UeaElement trace_product(const UeaMatrix& m, const RationalMatrix& n) {
  if (n.rows() != m.rank() || n.cols() != m.rank()) throw RankMismatch("trace_product: size");
  UeaElement t(m.rank());
  for (std::size_t i = 0; i < m.rank(); ++i) {
    for (std::size_t j = 0; j < m.rank(); ++j) {
      if (n.at(j, i) != 0) t += m.at(i, j) * n.at(j, i);
    }
  }
  return t;
}

UeaElement to_uea(const RationalMatrix& a) {
  if (!a.is_square() || a.rows() == 0) throw InvalidArgument("to_uea needs a square matrix");
  const auto n = static_cast<Rank>(a.rows());
  UeaElement out(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) {
      out.add_term(Monomial::of(n, {i, j}), a.at(i - 1, j - 1));
    }
  }
  return out;
}

UeaMatrix f_matrix(Rank n) {
  UeaMatrix f(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) f.at(i - 1, j - 1) = UeaElement::generator(n, j, i);
  }
  return f;
}

namespace {

using MatrixPtr = std::shared_ptr<const UeaMatrix>;

struct FPowerKey {
  Rank n;
  std::uint32_t m;
  friend bool operator==(const FPowerKey&, const FPowerKey&) = default;
};
struct FPowerKeyHash {
  std::size_t operator()(const FPowerKey& k) const noexcept {
    return (std::size_t{k.n} << 32) ^ k.m;
  }
};

MemoCache<FPowerKey, MatrixPtr, FPowerKeyHash>& f_power_cache() {
  static MemoCache<FPowerKey, MatrixPtr, FPowerKeyHash> cache;
  static const bool registered = [] {
    detail::register_memo_clearer([] { f_power_cache().clear(); });
    return true;
  }();
  (void)registered;
  return cache;
}

enum class HomKind { psi, phi };

MemoCache<Monomial, MatrixPtr, MonomialHash>& hom_cache(HomKind kind) {
  static MemoCache<Monomial, MatrixPtr, MonomialHash> psi_cache;
  static MemoCache<Monomial, MatrixPtr, MonomialHash> phi_cache;
  static const bool registered = [] {
    detail::register_memo_clearer([] {
      hom_cache(HomKind::psi).clear();
      hom_cache(HomKind::phi).clear();
    });
    return true;
  }();
  (void)registered;
  return kind == HomKind::psi ? psi_cache : phi_cache;
}

// Image of a single generator e_ij: e_ij I - E_ji (psi) or e_ij I + E_ij (phi).
UeaMatrix generator_image(HomKind kind, Rank n, Generator g) {
  UeaMatrix out = UeaMatrix::scalar(UeaElement::generator(n, g));
  if (kind == HomKind::psi) {
    out.at(g.col - 1, g.row - 1) -= UeaElement::constant(n, 1);
  } else {
    out.at(g.row - 1, g.col - 1) += UeaElement::constant(n, 1);
  }
  return out;
}

// Generator images multiplied in PBW factor order: hom(m' x) = hom(m') . hom(x).
MatrixPtr monomial_image(HomKind kind, const Monomial& m) {
  const auto last = m.last_slot();
  if (!last) return std::make_shared<const UeaMatrix>(UeaMatrix::identity(m.rank()));
  auto& cache = hom_cache(kind);
  if (auto hit = cache.find(m)) return *hit;
  const auto head = monomial_image(kind, m.decremented(*last));
  auto out = std::make_shared<const UeaMatrix>(
      mat_mul(*head, generator_image(kind, m.rank(), Generator::from_slot(m.rank(), *last))));
  cache.insert(m, out);
  return out;
}

UeaMatrix homomorphism(HomKind kind, const UeaElement& a) {
  UeaMatrix out(a.rank());
  for (const auto& [m, c] : a.terms()) {
    if (c == 1) {
      out += *monomial_image(kind, m);
    } else {
      out += *monomial_image(kind, m) * c;
    }
  }
  return out;
}

// (X^T . Y^T)^T; with X = (E^{m-1})^T and Y = E^T this yields (E^m)^T.
UeaMatrix transpose_product(const UeaMatrix& x, const UeaMatrix& y) {
  const Rank n = x.rank();
  UeaMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out.at(j, i) += mul(x.at(k, i), y.at(j, k));
    }
  }
  return out;
}

}  // namespace

UeaMatrix f_power(Rank n, std::uint32_t m) {
  if (m < 1) throw InvalidArgument("f_power needs m >= 1");
  auto& cache = f_power_cache();
  const FPowerKey key{n, m};
  if (auto hit = cache.find(key)) return **hit;
  UeaMatrix out = m == 1 ? f_matrix(n) : transpose_product(f_power(n, m - 1), f_matrix(n));
  cache.insert(key, std::make_shared<const UeaMatrix>(out));
  return out;
}

UeaElement gelfand(Rank n, std::uint32_t k) {
  if (k < 1) throw InvalidArgument("gelfand needs k >= 1");
  return mat_trace(f_power(n, k));
}

UeaMatrix psi(const UeaElement& a) { return homomorphism(HomKind::psi, a); }

UeaMatrix phi(const UeaElement& a) { return homomorphism(HomKind::phi, a); }

}  // namespace gl2n
