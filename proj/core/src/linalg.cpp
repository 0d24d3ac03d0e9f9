#include "rbx/linalg.hpp"

#include <sstream>

#include "rbx/error.hpp"

namespace rbx {

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(const Field& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = field.one();
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorCode::dimension_mismatch, "vector lengths differ");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorCode::dimension_mismatch, "vector lengths differ");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const FieldElement& c, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x = c * x;
  return r;
}

FieldElement dot_product(const Vector& a, const Vector& b) {
  if (a.size() != b.size() || a.empty()) fail(ErrorCode::dimension_mismatch, "dot product");
  FieldElement s = a.front().field().zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

std::string to_string(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].to_string();
  }
  return out;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorCode::dimension_mismatch, "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.embed(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(const Field& field, const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(field, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Matrix Matrix::from_ints(const Field& field, const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorCode::dimension_mismatch, "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.from_int(rows[i][j]);
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  if (v.size() != rows_) fail(ErrorCode::dimension_mismatch, "column length");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = field_.embed(v[i]);
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) fail(ErrorCode::dimension_mismatch, "apply: vector length");
  Vector r = zero_vector(field_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const auto& a = (*this)(i, j);
      if (!a.is_zero()) r[i] += a * v[j];
    }
  }
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorCode::dimension_mismatch, "matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorCode::dimension_mismatch, "matrix difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) fail(ErrorCode::dimension_mismatch, "matrix product");
  Matrix r(lhs.field_, lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const auto& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const auto& b = rhs(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  }
  return r;
}

Matrix operator*(const FieldElement& c, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.data_) x = c * x;
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
}

std::string Matrix::hex() const {
  if (!field_.is_finite()) return to_string();
  std::uint64_t q = field_.order();
  std::size_t width = 1;
  for (std::uint64_t top = q - 1; top >= 16; top /= 16) ++width;
  std::ostringstream os;
  os << std::hex;
  for (const auto& x : data_) {
    std::ostringstream digit;
    digit << std::hex << x.encoding();
    std::string s = digit.str();
    os << std::string(width - s.size(), '0') << s;
  }
  return os.str();
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ';';
    out += rbx::to_string(row(i));
  }
  return out + "]";
}

// ----------------------------------------------------------- elimination

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    }
    FieldElement inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      FieldElement factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return rref(copy).size();
}

RankNullspace rank_nullspace(const Matrix& m) {
  Matrix e = m;
  auto pivots = rref(e);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(m.field(), m.cols(), free);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e(r, free);
    vectors.push_back(std::move(v));
  }
  return {pivots.size(), Subspace::span(m.field(), m.cols(), vectors)};
}

Subspace kernel(const Matrix& m) { return rank_nullspace(m).nullspace; }

Subspace column_space(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return Subspace::span(m.field(), m.rows(), cols);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) fail(ErrorCode::dimension_mismatch, "solve: rhs length");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = m.field().embed(b[i]);
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::dimension_mismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

FieldElement determinant(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::dimension_mismatch, "determinant of non-square matrix");
  Matrix e = m;
  FieldElement det = m.field().one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && e(pivot, c).is_zero()) ++pivot;
    if (pivot == n) return m.field().zero();
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(e(pivot, j), e(c, j));
      det = -det;
    }
    det *= e(c, c);
    FieldElement inv = e(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (e(i, c).is_zero()) continue;
      FieldElement factor = e(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) e(i, j) -= factor * e(c, j);
    }
  }
  return det;
}

// -------------------------------------------------------------- Subspace

Subspace::Subspace(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}

Subspace Subspace::span(const Field& field, std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s(field, ambient);
  if (vectors.empty()) return s;
  Matrix m = Matrix::from_rows(field, vectors, ambient);
  s.pivots_ = rref(m);
  for (std::size_t r = 0; r < s.pivots_.size(); ++r) s.basis_.push_back(m.row(r));
  return s;
}

Subspace Subspace::whole(const Field& field, std::size_t ambient) {
  std::vector<Vector> vectors;
  for (std::size_t i = 0; i < ambient; ++i) vectors.push_back(unit_vector(field, ambient, i));
  return span(field, ambient, vectors);
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) fail(ErrorCode::dimension_mismatch, "subspace ambient dimension");
  Vector coords;
  Vector rest = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    FieldElement c = field_.embed(rest[pivots_[r]]);
    coords.push_back(c);
    if (!c.is_zero()) rest = sub(rest, scale(c, basis_[r]));
  }
  if (!rbx::is_zero(rest)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail(ErrorCode::dimension_mismatch, "subspace ambient dimension");
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail(ErrorCode::dimension_mismatch, "subspace ambient dimension");
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(field_, ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail(ErrorCode::dimension_mismatch, "subspace ambient dimension");
  if (basis_.empty() || other.basis_.empty()) return Subspace(field_, ambient_);
  // Solve sum a_i u_i - sum b_j w_j = 0 and map the a-part back.
  const std::size_t k = basis_.size();
  const std::size_t l = other.basis_.size();
  Matrix m(field_, ambient_, k + l);
  for (std::size_t i = 0; i < k; ++i) m.set_column(i, basis_[i]);
  for (std::size_t j = 0; j < l; ++j) m.set_column(k + j, scale(-field_.one(), other.basis_[j]));
  std::vector<Vector> vectors;
  const Subspace relations = kernel(m);
  for (const auto& coeffs : relations.basis()) {
    Vector v = zero_vector(field_, ambient_);
    for (std::size_t i = 0; i < k; ++i) {
      if (!coeffs[i].is_zero()) v = add(v, scale(coeffs[i], basis_[i]));
    }
    vectors.push_back(std::move(v));
  }
  return span(field_, ambient_, vectors);
}

std::vector<Vector> Subspace::complement_basis() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto c : pivots_) is_pivot[c] = true;
  std::vector<Vector> out;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (!is_pivot[i]) out.push_back(unit_vector(field_, ambient_, i));
  }
  return out;
}

bool operator==(const Subspace& lhs, const Subspace& rhs) {
  return lhs.ambient_ == rhs.ambient_ && lhs.basis_ == rhs.basis_;
}

std::string Subspace::to_string() const {
  std::string out = "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += "; ";
    out += rbx::to_string(basis_[i]);
  }
  return out + "}";
}

}  // namespace rbx
