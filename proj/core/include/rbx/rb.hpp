#pragma once

#include <optional>
#include <string>

#include "rbx/algebra.hpp"
#include "rbx/linalg.hpp"

namespace rbx {

/// Column convention: R(b_j) = sum_i matrix(i, j) b_i.
struct LinearOperator {
  AlgebraPtr algebra;
  Matrix matrix;

  Vector apply(const Vector& x) const { return matrix.apply(x); }
  Vector image_of(std::size_t j) const { return matrix.column(j); }
};

LinearOperator make_operator(const AlgebraPtr& a, Matrix m);
LinearOperator zero_operator(const AlgebraPtr& a);
LinearOperator scalar_operator(const AlgebraPtr& a, const FieldElement& c);
/// Operator given by the images of some basis elements (by label); the rest
/// map to zero.
LinearOperator operator_from_images(const AlgebraPtr& a,
                                    const std::vector<std::pair<std::string, Vector>>& images);

bool check_rb(const LinearOperator& op, const FieldElement& weight);

/// A LinearOperator known to satisfy the identity for its weight.
class RBOperator {
public:
  /// Throws NotRB.
  static RBOperator validate(LinearOperator op, const FieldElement& weight);

  const LinearOperator& op() const noexcept { return op_; }
  const AlgebraPtr& algebra() const noexcept { return op_.algebra; }
  const Matrix& matrix() const noexcept { return op_.matrix; }
  const FieldElement& weight() const noexcept { return weight_; }

  friend bool operator==(const RBOperator& lhs, const RBOperator& rhs) {
    return lhs.op_.matrix == rhs.op_.matrix && lhs.weight_ == rhs.weight_;
  }

private:
  RBOperator(LinearOperator op, FieldElement weight) : op_(std::move(op)), weight_(std::move(weight)) {}

  LinearOperator op_;
  FieldElement weight_;
};

/// -R - weight * id.
RBOperator apply_phi(const RBOperator& r);
/// weight^{-1} R with weight 1; throws ZeroWeight.
RBOperator normalize_weight(const RBOperator& r);
/// psi^{-1} R psi; throws NotAutomorphism.
RBOperator conjugate(const RBOperator& r, const Matrix& psi);

struct Decomposition {
  Subspace a1;
  Subspace a2;
};

/// Zero on a1, -weight on a2; throws InvalidDecomposition.
RBOperator split_op(const AlgebraPtr& a, const Decomposition& d, const FieldElement& weight);

struct SplittingResult {
  bool splitting = false;
  /// (ker R, Im R) when splitting.
  std::optional<Decomposition> witness;
};
SplittingResult is_splitting(const LinearOperator& op, const FieldElement& weight);
inline SplittingResult is_splitting(const RBOperator& r) { return is_splitting(r.op(), r.weight()); }

/// Left multiplication by e, where e^2 = -lambda e; throws NotQuasiIdempotent.
LinearOperator left_mult_op(const AlgebraPtr& a, const Vector& e, const FieldElement& lambda);

/// d(xy) = d(x)y + x d(y) + weight d(x)d(y) on all basis pairs.
bool check_derivation_weight(const LinearOperator& d, const FieldElement& weight);
/// Throws NotDerivation or NotInvertible.
RBOperator rb_from_inverse_derivation(const LinearOperator& d, const FieldElement& weight);

/// The algebra structure induced on a subalgebra, in the coordinates of its
/// echelon basis. Throws InvalidSpec when s is not closed.
AlgebraPtr subalgebra(const Algebra& a, const Subspace& s, const std::string& name);

struct RBTriple {
  Subspace s;
  Subspace i;
  /// Column k is D applied to the k-th echelon basis vector of s.
  Matrix d;
};

/// Throws NonzeroWeight.
RBTriple rb_to_triple(const RBOperator& r);
bool check_triple(const Algebra& a, const RBTriple& t);
/// Throws InvalidTriple.
RBOperator triple_to_rb(const AlgebraPtr& a, const RBTriple& t);

struct ZeroUnitBuild {
  std::optional<RBOperator> op;
  /// "unit", "square" or "norm" when rejected.
  std::string rejection;
};
/// Accepts maps with R(1) = 0, R^2 = 0 and n vanishing on Im R. Requires a
/// commutative unital quadratic algebra (MissingStructure / InvalidSpec).
ZeroUnitBuild lemma4_build(const AlgebraPtr& a, const LinearOperator& r);

enum class UnitCase { I, II, III, none, not_applicable };
std::string to_string(UnitCase c);

struct Diagnostics {
  FieldElement weight;
  /// R(1); absent for algebras without a unit.
  std::optional<Vector> r_one;
  std::optional<bool> r_one_scalar;
  std::size_t kernel_dim = 0;
  std::size_t image_dim = 0;
  /// R(R + weight id) = 0.
  bool splitting = false;
  bool square_zero = false;
  /// n(R(x)) = 0 for all traceless x; quadratic algebras only.
  std::optional<bool> norm_vanishes_on_traceless;
  /// Weight-one normal form of a non-splitting operator on a unital
  /// quadratic algebra: R(1) = a 1 + p, t(p) = 0.
  UnitCase unit_case = UnitCase::not_applicable;
  /// Every element of Im R has singular left multiplication (every element
  /// when the image is small and the field finite, else an echelon basis);
  /// unital associative algebras only.
  std::optional<bool> degenerate_image;
};

/// Throws NotRB.
Diagnostics diagnostics(const LinearOperator& op, const FieldElement& weight);

bool is_degenerate(const Algebra& a, const Vector& x);

// Named fixtures on M2 over any field.
LinearOperator m_operator(const AlgebraPtr& m2, int which);
LinearOperator example14(const AlgebraPtr& m2);

}  // namespace rbx
