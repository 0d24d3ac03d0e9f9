#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rbx/field.hpp"

namespace rbx {

using Vector = std::vector<FieldElement>;

Vector zero_vector(const Field& field, std::size_t n);
Vector unit_vector(const Field& field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const FieldElement& c, const Vector& v);
FieldElement dot_product(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

/// Dense row-major matrix over a single field.
class Matrix {
public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_rows(const Field& field, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const Field& field, const std::vector<Vector>& cols, std::size_t rows);
  static Matrix from_ints(const Field& field, const std::vector<std::vector<long>>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);

  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator*(const FieldElement& c, const Matrix& m);
  Matrix operator-() const;

  friend bool operator==(const Matrix& lhs, const Matrix& rhs);

  /// Entries of a finite-field matrix in row-major order as base-|F| digits,
  /// printed in hex; used as a compact stable key.
  std::string hex() const;
  std::string to_string() const;

private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

/// A subspace of F^n held by its reduced row-echelon basis, so equality of
/// subspaces is equality of bases.
class Subspace {
public:
  Subspace() = default;
  Subspace(Field field, std::size_t ambient);

  static Subspace span(const Field& field, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace whole(const Field& field, std::size_t ambient);

  const Field& field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Standard basis vectors at the non-pivot positions; together with the
  /// basis they span the ambient space.
  std::vector<Vector> complement_basis() const;
  /// Coordinates of v in the echelon basis; nullopt when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& lhs, const Subspace& rhs);
  std::string to_string() const;

private:
  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(const Matrix& m);

struct RankNullspace {
  std::size_t rank = 0;
  Subspace nullspace;
};
RankNullspace rank_nullspace(const Matrix& m);

Subspace kernel(const Matrix& m);
Subspace column_space(const Matrix& m);

std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);
FieldElement determinant(const Matrix& m);

}  // namespace rbx
