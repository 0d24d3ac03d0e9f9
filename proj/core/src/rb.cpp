#include "rbx/rb.hpp"

#include "rbx/error.hpp"

namespace rbx {

LinearOperator make_operator(const AlgebraPtr& a, Matrix m) {
  if (m.rows() != a->dim() || m.cols() != a->dim()) {
    fail(ErrorCode::dimension_mismatch, "operator matrix must be " + std::to_string(a->dim()) + "x" +
                                            std::to_string(a->dim()));
  }
  if (!(m.field() == a->field())) fail(ErrorCode::field_mismatch, "operator and algebra fields differ");
  return {a, std::move(m)};
}

LinearOperator zero_operator(const AlgebraPtr& a) { return {a, Matrix(a->field(), a->dim(), a->dim())}; }

LinearOperator scalar_operator(const AlgebraPtr& a, const FieldElement& c) {
  return {a, a->field().embed(c) * Matrix::identity(a->field(), a->dim())};
}

LinearOperator operator_from_images(const AlgebraPtr& a,
                                    const std::vector<std::pair<std::string, Vector>>& images) {
  LinearOperator op = zero_operator(a);
  for (const auto& [label, v] : images) op.matrix.set_column(a->index_of(label), v);
  return op;
}

bool check_rb(const LinearOperator& op, const FieldElement& weight_in) {
  const Algebra& a = *op.algebra;
  const std::size_t n = a.dim();
  const FieldElement weight = a.field().embed(weight_in);
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(op.image_of(j));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = a.multiply(cols[i], cols[j]);
      Vector arg = add(a.multiply(cols[i], a.basis_vector(j)), a.multiply(a.basis_vector(i), cols[j]));
      if (!weight.is_zero()) arg = add(arg, scale(weight, a.product(i, j)));
      if (!(lhs == op.apply(arg))) return false;
    }
  }
  return true;
}

RBOperator RBOperator::validate(LinearOperator op, const FieldElement& weight) {
  FieldElement w = op.algebra->field().embed(weight);
  if (!check_rb(op, w)) fail(ErrorCode::not_rb, "not a Rota-Baxter operator of weight " + w.to_string());
  return RBOperator(std::move(op), std::move(w));
}

RBOperator apply_phi(const RBOperator& r) {
  const Field& F = r.algebra()->field();
  Matrix m = -r.matrix() - r.weight() * Matrix::identity(F, r.matrix().rows());
  return RBOperator::validate({r.algebra(), std::move(m)}, r.weight());
}

RBOperator normalize_weight(const RBOperator& r) {
  if (r.weight().is_zero()) fail(ErrorCode::zero_weight, "cannot normalize weight 0");
  Matrix m = r.weight().inverse() * r.matrix();
  return RBOperator::validate({r.algebra(), std::move(m)}, r.algebra()->field().one());
}

RBOperator conjugate(const RBOperator& r, const Matrix& psi) {
  if (!check_automorphism(*r.algebra(), psi)) fail(ErrorCode::not_automorphism, "conjugating map is not an automorphism");
  Matrix m = *inverse(psi) * r.matrix() * psi;
  return RBOperator::validate({r.algebra(), std::move(m)}, r.weight());
}

RBOperator split_op(const AlgebraPtr& a, const Decomposition& d, const FieldElement& weight) {
  const Field& F = a->field();
  const std::size_t n = a->dim();
  if (d.a1.ambient() != n || d.a2.ambient() != n) fail(ErrorCode::invalid_decomposition, "ambient dimension");
  if (d.a1.dim() + d.a2.dim() != n || d.a1.intersect(d.a2).dim() != 0) {
    fail(ErrorCode::invalid_decomposition, "subspaces do not form a direct sum");
  }
  if (!check_subalgebra(*a, d.a1) || !check_subalgebra(*a, d.a2)) {
    fail(ErrorCode::invalid_decomposition, "summand is not a subalgebra");
  }
  std::vector<Vector> basis = d.a1.basis();
  basis.insert(basis.end(), d.a2.basis().begin(), d.a2.basis().end());
  Matrix b = Matrix::from_columns(F, basis, n);
  Matrix target(F, n, n);
  const FieldElement w = F.embed(weight);
  for (std::size_t k = d.a1.dim(); k < n; ++k) target.set_column(k, scale(-w, basis[k]));
  return RBOperator::validate({a, target * *inverse(b)}, w);
}

SplittingResult is_splitting(const LinearOperator& op, const FieldElement& weight) {
  const Field& F = op.algebra->field();
  const Matrix& m = op.matrix;
  Matrix shifted = m + F.embed(weight) * Matrix::identity(F, m.rows());
  SplittingResult result;
  result.splitting = (m * shifted).is_zero();
  if (result.splitting) result.witness = Decomposition{kernel(m), column_space(m)};
  return result;
}

LinearOperator left_mult_op(const AlgebraPtr& a, const Vector& e_in, const FieldElement& lambda) {
  Vector e = e_in;
  for (auto& x : e) x = a->field().embed(x);
  if (!(a->multiply(e, e) == scale(-a->field().embed(lambda), e))) {
    fail(ErrorCode::not_quasi_idempotent, "e^2 != -lambda e");
  }
  return {a, a->left_multiplication(e)};
}

bool check_derivation_weight(const LinearOperator& d, const FieldElement& weight_in) {
  const Algebra& a = *d.algebra;
  const FieldElement weight = a.field().embed(weight_in);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vector di = d.image_of(i), dj = d.image_of(j);
      Vector rhs = add(a.multiply(di, a.basis_vector(j)), a.multiply(a.basis_vector(i), dj));
      if (!weight.is_zero()) rhs = add(rhs, scale(weight, a.multiply(di, dj)));
      if (!(d.apply(a.product(i, j)) == rhs)) return false;
    }
  }
  return true;
}

RBOperator rb_from_inverse_derivation(const LinearOperator& d, const FieldElement& weight) {
  if (!check_derivation_weight(d, weight)) fail(ErrorCode::not_derivation, "not a derivation of the given weight");
  auto inv = inverse(d.matrix);
  if (!inv) fail(ErrorCode::not_invertible, "derivation is not invertible");
  return RBOperator::validate({d.algebra, *inv}, weight);
}

AlgebraPtr subalgebra(const Algebra& a, const Subspace& s, const std::string& name) {
  if (!check_subalgebra(a, s)) fail(ErrorCode::invalid_spec, "subspace is not a subalgebra");
  std::vector<StructureConstant> sc;
  const auto& basis = s.basis();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    labels.push_back("s" + std::to_string(i + 1));
    // Keep original labels for coordinate vectors.
    std::size_t nonzero = 0, at = 0;
    for (std::size_t k = 0; k < basis[i].size(); ++k) {
      if (!basis[i][k].is_zero()) {
        ++nonzero;
        at = k;
      }
    }
    if (nonzero == 1 && basis[i][at].is_one()) labels.back() = a.labels()[at];
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Vector coords = *s.coordinates(a.multiply(basis[i], basis[j]));
      for (std::size_t k = 0; k < coords.size(); ++k) {
        if (!coords[k].is_zero()) sc.push_back({i, j, k, coords[k]});
      }
    }
  }
  Algebra::Options options;
  if (a.unit() && s.contains(*a.unit())) options.unit = *s.coordinates(*a.unit());
  if (a.grading()) {
    std::vector<int> g;
    bool homogeneous = true;
    for (const auto& v : basis) {
      int deg = -1;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        if (deg == -1) deg = (*a.grading())[k];
        else if (deg != (*a.grading())[k]) homogeneous = false;
      }
      g.push_back(deg < 0 ? 0 : deg);
    }
    if (homogeneous) options.grading = g;
  }
  return std::make_shared<Algebra>(name, a.field(), labels, std::move(sc), std::move(options));
}

// ------------------------------------------------------------- triples

RBTriple rb_to_triple(const RBOperator& r) {
  if (!r.weight().is_zero()) fail(ErrorCode::nonzero_weight, "triples correspond to weight 0");
  const Field& F = r.algebra()->field();
  const std::size_t n = r.algebra()->dim();
  RBTriple t;
  t.s = column_space(r.matrix());
  t.i = kernel(r.matrix());
  // R restricted to the standard complement of ker R is injective onto Im R.
  std::vector<Vector> complement = t.i.complement_basis();
  Matrix c = Matrix::from_columns(F, complement, n);
  Matrix rc = r.matrix() * c;
  t.d = Matrix(F, n, t.s.dim());
  for (std::size_t k = 0; k < t.s.dim(); ++k) {
    auto y = solve(rc, t.s.basis()[k]);
    t.d.set_column(k, c.apply(*y));
  }
  return t;
}

bool check_triple(const Algebra& a, const RBTriple& t) {
  const std::size_t n = a.dim();
  if (t.s.ambient() != n || t.i.ambient() != n || t.d.rows() != n || t.d.cols() != t.s.dim()) return false;
  if (!check_subalgebra(a, t.s)) return false;
  for (const auto& s : t.s.basis()) {
    for (const auto& x : t.i.basis()) {
      if (!t.i.contains(a.multiply(s, x)) || !t.i.contains(a.multiply(x, s))) return false;
    }
  }
  auto D = [&](const Vector& s) { return t.d.apply(*t.s.coordinates(s)); };
  for (const auto& x : t.s.basis()) {
    for (const auto& y : t.s.basis()) {
      Vector defect = sub(sub(D(a.multiply(x, y)), a.multiply(D(x), y)), a.multiply(x, D(y)));
      if (!t.i.contains(defect)) return false;
    }
  }
  Subspace ds = column_space(t.d.cols() ? t.d : Matrix(a.field(), n, 1));
  if (t.d.cols() && ds.dim() != t.s.dim()) return false;
  return ds.dim() + t.i.dim() == n && ds.sum(t.i).dim() == n;
}

RBOperator triple_to_rb(const AlgebraPtr& a, const RBTriple& t) {
  if (!check_triple(*a, t)) fail(ErrorCode::invalid_triple, "triple invariants fail");
  const Field& F = a->field();
  const std::size_t n = a->dim();
  std::vector<Vector> basis, images;
  for (std::size_t k = 0; k < t.s.dim(); ++k) {
    basis.push_back(t.d.column(k));
    images.push_back(t.s.basis()[k]);
  }
  for (const auto& v : t.i.basis()) {
    basis.push_back(v);
    images.push_back(zero_vector(F, n));
  }
  Matrix b = Matrix::from_columns(F, basis, n);
  Matrix target = Matrix::from_columns(F, images, n);
  return RBOperator::validate({a, target * *inverse(b)}, F.zero());
}

ZeroUnitBuild lemma4_build(const AlgebraPtr& a, const LinearOperator& r) {
  if (!a->quadratic() || !a->unit()) fail(ErrorCode::missing_structure, "needs a unital quadratic algebra");
  if (!a->is_commutative()) fail(ErrorCode::invalid_spec, "needs a commutative algebra");
  const auto& q = *a->quadratic();
  ZeroUnitBuild out;
  if (!is_zero(r.apply(*a->unit()))) {
    out.rejection = "unit";
    return out;
  }
  if (!(r.matrix * r.matrix).is_zero()) {
    out.rejection = "square";
    return out;
  }
  Subspace im = column_space(r.matrix);
  for (std::size_t k = 0; k < im.dim(); ++k) {
    for (std::size_t l = k; l < im.dim(); ++l) {
      const FieldElement v = k == l ? q.n(im.basis()[k]) : q.f(im.basis()[k], im.basis()[l]);
      if (!v.is_zero()) {
        out.rejection = "norm";
        return out;
      }
    }
  }
  out.op = RBOperator::validate(r, a->field().zero());
  return out;
}

LinearOperator m_operator(const AlgebraPtr& m2, int which) {
  const Field& F = m2->field();
  auto e = [&](std::size_t i) { return unit_vector(F, 4, i); };
  switch (which) {
    case 1: return operator_from_images(m2, {{"e21", e(1)}});
    case 2: return operator_from_images(m2, {{"e21", e(0)}});
    case 3: return operator_from_images(m2, {{"e21", e(0)}, {"e22", e(1)}});
    case 4: return operator_from_images(m2, {{"e21", scale(-F.one(), e(0))}, {"e11", e(1)}});
    default: fail(ErrorCode::invalid_spec, "operator index must be 1..4");
  }
}

LinearOperator example14(const AlgebraPtr& m2) {
  const Field& F = m2->field();
  return operator_from_images(m2, {{"e22", unit_vector(F, 4, 0)}, {"e21", scale(-F.one(), unit_vector(F, 4, 2))}});
}

}  // namespace rbx
