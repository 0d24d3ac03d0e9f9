#pragma once

#include <utility>
#include <vector>

#include "rbx/algebra.hpp"
#include "rbx/rb.hpp"

namespace rbx {

/// sum_i a_i (x) b_i. Equality is decided on the dim x dim coefficient
/// matrix T with r = sum_{p,q} T(p,q) b_p (x) b_q.
struct Tensor2 {
  AlgebraPtr algebra;
  std::vector<std::pair<Vector, Vector>> terms;

  Matrix coefficients() const;
  bool operator==(const Tensor2& other) const { return coefficients() == other.coefficients(); }
};

/// Tensor with one term per nonzero row of T: b_p (x) (row p).
Tensor2 tensor_from_coefficients(const AlgebraPtr& a, const Matrix& t);

/// dim^3 expansions, flattened as index (i * dim + j) * dim + k.
/// r13 r12 - r12 r23 + r23 r13. Throws NotAssociative.
std::vector<FieldElement> aybe_expansion(const Tensor2& r);
/// r12 r13 - r23 r12 - r13 r32, with r32 = sum 1 (x) b_i (x) a_i.
std::vector<FieldElement> naybe_expansion(const Tensor2& r);

bool check_aybe(const Tensor2& r);
bool check_naybe(const Tensor2& r);

/// x -> sum a_i x b_i. Throws NotAssociative.
LinearOperator op_from_tensor_sandwich(const Tensor2& r);

/// A symmetric, nondegenerate, associative bilinear form on an algebra.
class AssociativeForm {
public:
  /// Throws DegenerateForm when singular, InvalidSpec when not symmetric or
  /// not associative.
  static AssociativeForm make(const AlgebraPtr& a, BilinearForm form);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const BilinearForm& form() const noexcept { return form_; }
  const Matrix& gram() const noexcept { return form_.gram; }
  const Matrix& gram_inverse() const noexcept { return gram_inverse_; }

private:
  AssociativeForm(AlgebraPtr a, BilinearForm form, Matrix inv)
      : algebra_(std::move(a)), form_(std::move(form)), gram_inverse_(std::move(inv)) {}

  AlgebraPtr algebra_;
  BilinearForm form_;
  Matrix gram_inverse_;
};

bool check_associative_form(const Algebra& a, const BilinearForm& b);

/// x -> sum a_i B(b_i, x).
LinearOperator op_from_tensor_form(const Tensor2& r, const AssociativeForm& phi);
/// Inverse of op_from_tensor_form.
Tensor2 tensor_from_op(const LinearOperator& op, const AssociativeForm& phi);

/// e11 (x) e12 - e12 (x) e11 + e33 (x) e34 - e34 (x) e33 on matrix(4).
Tensor2 example16_tensor(const AlgebraPtr& m4);

}  // namespace rbx
