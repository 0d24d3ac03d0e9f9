#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rbx/field.hpp"
#include "rbx/linalg.hpp"

namespace rbx {

/// b_i * b_j contributes c * b_k.
struct StructureConstant {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  FieldElement c;
};

/// x^2 - t(x) x + n(x) 1 = 0 with n(x) = x^T N x.
struct QuadraticStructure {
  Vector trace;
  Matrix norm;

  FieldElement t(const Vector& x) const;
  FieldElement n(const Vector& x) const;
  /// n(x + y) - n(x) - n(y).
  FieldElement f(const Vector& x, const Vector& y) const;
};

class Algebra {
public:
  struct Options {
    std::optional<Vector> unit;
    std::optional<std::vector<int>> grading;
    std::optional<QuadraticStructure> quadratic;
    /// A linear functional used for the trace form when no quadratic
    /// structure is present (matrix algebras of any size).
    std::optional<Vector> trace;
  };

  Algebra(std::string name, Field field, std::vector<std::string> labels,
          std::vector<StructureConstant> constants, Options options = {});

  const std::string& name() const noexcept { return name_; }
  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<StructureConstant>& constants() const noexcept { return constants_; }
  const std::optional<Vector>& unit() const noexcept { return options_.unit; }
  const std::optional<std::vector<int>>& grading() const noexcept { return options_.grading; }
  const std::optional<QuadraticStructure>& quadratic() const noexcept { return options_.quadratic; }
  const std::optional<Vector>& trace() const noexcept { return options_.trace; }
  const Options& options() const noexcept { return options_; }

  /// Coefficients of b_i * b_j.
  const Vector& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Vector multiply(const Vector& x, const Vector& y) const;
  Vector basis_vector(std::size_t i) const { return unit_vector(field_, dim(), i); }
  /// Index of the basis label, or throws InvalidSpec.
  std::size_t index_of(const std::string& label) const;

  Matrix left_multiplication(const Vector& x) const;
  Matrix right_multiplication(const Vector& x) const;

  bool is_commutative() const;
  bool is_associative() const;
  bool has_same_structure(const Algebra& other) const;

private:
  std::string name_;
  Field field_;
  std::vector<std::string> labels_;
  std::vector<StructureConstant> constants_;
  Options options_;
  std::vector<Vector> table_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct Element {
  AlgebraPtr algebra;
  Vector coeffs;
};

Element make_element(const AlgebraPtr& a, Vector coeffs);
/// Throws AlgebraMismatch unless both factors live in the same algebra.
Element multiply(const Element& x, const Element& y);

// Builders. Basis orders: matrix(n) e11, e12, ..., enn; jordan 1, e1..en;
// grassmann2 1, e1, e2, e12; kaplansky3 e, x, y; sl2 h, e, f.
AlgebraPtr matrix_algebra(const Field& field, std::size_t n);
AlgebraPtr jordan_form(const Field& field, const std::vector<FieldElement>& diagonal);
AlgebraPtr grassmann2(const Field& field);
AlgebraPtr kaplansky3(const Field& field);
AlgebraPtr cayley_dickson(const Field& field, const std::vector<FieldElement>& alphas);
AlgebraPtr sl2(const Field& field);
AlgebraPtr termwise_power(const Field& field, std::size_t k);

/// "matrix:2", "jordan:1,1,1", "grassmann2", "kaplansky3",
/// "cayley-dickson:-1,-1", "sl2", "termwise:3".
AlgebraPtr build_algebra(const Field& field, const std::string& spec);

/// The transpose map of matrix(n) in its basis; an anti-automorphism.
Matrix matrix_transpose(const Field& field, std::size_t n);

enum class DerivedVariant { plus, minus };
AlgebraPtr derived_algebra(const Algebra& a, DerivedVariant variant);

bool check_subalgebra(const Algebra& a, const Subspace& s);
/// Throws MissingStructure when there is no quadratic structure, or when a
/// unit is needed but absent.
bool verify_quadratic(const Algebra& a);
bool check_automorphism(const Algebra& a, const Matrix& m);
bool check_antiautomorphism(const Algebra& a, const Matrix& m);
bool check_unit(const Algebra& a);

struct BilinearForm {
  Matrix gram;
  FieldElement operator()(const Vector& x, const Vector& y) const;
};

/// B(x, y) = t(xy) for the algebra's trace functional.
BilinearForm trace_form(const Algebra& a);

}  // namespace rbx
