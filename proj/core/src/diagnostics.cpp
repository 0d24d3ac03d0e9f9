#include "rbx/error.hpp"
#include "rbx/rb.hpp"

namespace rbx {

std::string to_string(UnitCase c) {
  switch (c) {
    case UnitCase::I: return "I";
    case UnitCase::II: return "II";
    case UnitCase::III: return "III";
    case UnitCase::none: return "none";
    case UnitCase::not_applicable: return "not-applicable";
  }
  return "?";
}

bool is_degenerate(const Algebra& a, const Vector& x) {
  return rank(a.left_multiplication(x)) < a.dim();
}

namespace {

UnitCase classify_unit_case(const RBOperator& r) {
  const Algebra& a = *r.algebra();
  if (!a.quadratic() || !a.unit() || r.weight().is_zero()) return UnitCase::not_applicable;
  if (a.field().characteristic() == 2) return UnitCase::not_applicable;
  RBOperator n = normalize_weight(r);
  if (is_splitting(n).splitting) return UnitCase::not_applicable;
  const auto& q = *a.quadratic();
  const Field& F = a.field();
  const Vector& one = *a.unit();
  FieldElement t1 = q.t(one);
  if (t1.is_zero()) return UnitCase::not_applicable;
  Vector r1 = n.op().apply(one);
  FieldElement alpha = q.t(r1) / t1;
  Vector p = sub(r1, scale(alpha, one));
  Vector rp = n.op().apply(p);
  const FieldElement half = F.from_int(2).inverse();
  const FieldElement quarter = half * half;
  auto matches = [&](const FieldElement& a0, const FieldElement& c0) {
    return alpha == a0 && rp == sub(scale(c0, one), scale(half, p));
  };
  if (matches(-half, quarter)) return UnitCase::I;
  if (matches(half, -quarter)) return UnitCase::II;
  if (matches(-F.from_int(3) * half, -quarter)) return UnitCase::III;
  return UnitCase::none;
}

}  // namespace

Diagnostics diagnostics(const LinearOperator& op, const FieldElement& weight) {
  RBOperator r = RBOperator::validate(op, weight);
  const Algebra& a = *op.algebra;
  const Field& F = a.field();
  Diagnostics d;
  d.weight = r.weight();
  if (a.unit()) {
    d.r_one = op.apply(*a.unit());
    d.r_one_scalar = Subspace::span(F, a.dim(), {*a.unit()}).contains(*d.r_one);
  }
  auto rn = rank_nullspace(op.matrix);
  d.image_dim = rn.rank;
  d.kernel_dim = rn.nullspace.dim();
  d.splitting = is_splitting(r).splitting;
  d.square_zero = (op.matrix * op.matrix).is_zero();
  if (a.quadratic()) {
    const auto& q = *a.quadratic();
    // Traceless part: kernel of t as a 1 x n matrix.
    Matrix t(F, 1, a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) t(0, j) = q.trace[j];
    Subspace a0 = kernel(t);
    std::vector<Vector> images;
    for (const auto& x : a0.basis()) images.push_back(op.apply(x));
    bool vanish = true;
    for (std::size_t k = 0; k < images.size() && vanish; ++k) {
      for (std::size_t l = k; l < images.size() && vanish; ++l) {
        vanish = (k == l ? q.n(images[k]) : q.f(images[k], images[l])).is_zero();
      }
    }
    d.norm_vanishes_on_traceless = vanish;
  }
  d.unit_case = classify_unit_case(r);
  if (a.unit() && a.is_associative()) {
    Subspace im = column_space(op.matrix);
    bool degenerate = true;
    const bool enumerate = F.is_finite() && im.dim() <= 12 &&
                           [&] {
                             std::uint64_t total = 1;
                             for (std::size_t k = 0; k < im.dim(); ++k) total *= F.order();
                             return total <= 4096;
                           }();
    if (enumerate) {
      std::uint64_t total = 1;
      for (std::size_t k = 0; k < im.dim(); ++k) total *= F.order();
      for (std::uint64_t code = 0; code < total && degenerate; ++code) {
        Vector x = zero_vector(F, a.dim());
        std::uint64_t c = code;
        for (std::size_t k = 0; k < im.dim(); ++k) {
          x = add(x, scale(F.element(c % F.order()), im.basis()[k]));
          c /= F.order();
        }
        degenerate = is_degenerate(a, x);
      }
    } else {
      for (const auto& x : im.basis()) degenerate = degenerate && is_degenerate(a, x);
    }
    d.degenerate_image = degenerate;
  }
  return d;
}

}  // namespace rbx
