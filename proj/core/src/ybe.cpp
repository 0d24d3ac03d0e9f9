#include "rbx/ybe.hpp"

#include "rbx/error.hpp"

namespace rbx {

Matrix Tensor2::coefficients() const {
  const Field& F = algebra->field();
  const std::size_t n = algebra->dim();
  Matrix t(F, n, n);
  for (const auto& [a, b] : terms) {
    if (a.size() != n || b.size() != n) fail(ErrorCode::dimension_mismatch, "tensor leg length");
    for (std::size_t p = 0; p < n; ++p) {
      if (a[p].is_zero()) continue;
      for (std::size_t q = 0; q < n; ++q) {
        if (!b[q].is_zero()) t(p, q) += F.embed(a[p]) * F.embed(b[q]);
      }
    }
  }
  return t;
}

Tensor2 tensor_from_coefficients(const AlgebraPtr& a, const Matrix& t) {
  Tensor2 r{a, {}};
  for (std::size_t p = 0; p < t.rows(); ++p) {
    Vector row = t.row(p);
    if (!is_zero(row)) r.terms.emplace_back(a->basis_vector(p), std::move(row));
  }
  return r;
}

namespace {

struct Entry {
  std::size_t p, q;
  FieldElement c;
};

std::vector<Entry> nonzero_entries(const Matrix& t) {
  std::vector<Entry> out;
  for (std::size_t p = 0; p < t.rows(); ++p) {
    for (std::size_t q = 0; q < t.cols(); ++q) {
      if (!t(p, q).is_zero()) out.push_back({p, q, t(p, q)});
    }
  }
  return out;
}

class Cube {
public:
  Cube(const Field& f, std::size_t n) : n_(n), data_(n * n * n, f.zero()) {}

  /// Adds c * (u (x) v (x) w) where exactly one of the legs is a general
  /// vector and the other two are basis indices.
  void add_first(const FieldElement& c, const Vector& u, std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (!u[i].is_zero()) at(i, j, k) += c * u[i];
    }
  }
  void add_second(const FieldElement& c, std::size_t i, const Vector& v, std::size_t k) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!v[j].is_zero()) at(i, j, k) += c * v[j];
    }
  }
  void add_third(const FieldElement& c, std::size_t i, std::size_t j, const Vector& w) {
    for (std::size_t k = 0; k < n_; ++k) {
      if (!w[k].is_zero()) at(i, j, k) += c * w[k];
    }
  }

  std::vector<FieldElement> release() { return std::move(data_); }

private:
  FieldElement& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }

  std::size_t n_;
  std::vector<FieldElement> data_;
};

bool all_zero(const std::vector<FieldElement>& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace

std::vector<FieldElement> aybe_expansion(const Tensor2& r) {
  const Algebra& a = *r.algebra;
  if (!a.is_associative()) fail(ErrorCode::not_associative, a.name() + " is not associative");
  const auto entries = nonzero_entries(r.coefficients());
  Cube cube(a.field(), a.dim());
  for (const auto& x : entries) {
    for (const auto& y : entries) {
      const FieldElement c = x.c * y.c;
      // x = (p, q), y = (p', q')
      cube.add_first(c, a.product(x.p, y.p), y.q, x.q);    // r13 r12
      cube.add_second(-c, x.p, a.product(x.q, y.p), y.q);  // - r12 r23
      cube.add_third(c, y.p, x.p, a.product(x.q, y.q));    // r23 r13
    }
  }
  return cube.release();
}

std::vector<FieldElement> naybe_expansion(const Tensor2& r) {
  const Algebra& a = *r.algebra;
  const auto entries = nonzero_entries(r.coefficients());
  Cube cube(a.field(), a.dim());
  for (const auto& x : entries) {
    for (const auto& y : entries) {
      const FieldElement c = x.c * y.c;
      cube.add_first(c, a.product(x.p, y.p), x.q, y.q);    // r12 r13
      cube.add_second(-c, y.p, a.product(x.p, y.q), x.q);  // - r23 r12
      cube.add_third(-c, x.p, y.q, a.product(x.q, y.p));   // - r13 r32
    }
  }
  return cube.release();
}

bool check_aybe(const Tensor2& r) { return all_zero(aybe_expansion(r)); }
bool check_naybe(const Tensor2& r) { return all_zero(naybe_expansion(r)); }

LinearOperator op_from_tensor_sandwich(const Tensor2& r) {
  const Algebra& a = *r.algebra;
  if (!a.is_associative()) fail(ErrorCode::not_associative, a.name() + " is not associative");
  const auto entries = nonzero_entries(r.coefficients());
  LinearOperator op = zero_operator(r.algebra);
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Vector col = zero_vector(a.field(), a.dim());
    for (const auto& e : entries) {
      col = add(col, scale(e.c, a.multiply(a.product(e.p, j), a.basis_vector(e.q))));
    }
    op.matrix.set_column(j, col);
  }
  return op;
}

bool check_associative_form(const Algebra& a, const BilinearForm& b) {
  const Matrix& g = b.gram;
  if (g.rows() != a.dim() || g.cols() != a.dim()) return false;
  if (!(g == g.transpose())) return false;
  if (rank(g) != a.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (!(b(a.product(i, j), a.basis_vector(k)) == b(a.basis_vector(i), a.product(j, k)))) return false;
      }
    }
  }
  return true;
}

AssociativeForm AssociativeForm::make(const AlgebraPtr& a, BilinearForm form) {
  const Matrix& g = form.gram;
  if (g.rows() != a->dim() || g.cols() != a->dim()) fail(ErrorCode::dimension_mismatch, "Gram matrix size");
  auto inv = inverse(g);
  if (!inv) fail(ErrorCode::degenerate_form, "bilinear form is degenerate");
  if (!check_associative_form(*a, form)) fail(ErrorCode::invalid_spec, "form is not symmetric and associative");
  return AssociativeForm(a, std::move(form), std::move(*inv));
}

LinearOperator op_from_tensor_form(const Tensor2& r, const AssociativeForm& phi) {
  return make_operator(r.algebra, r.coefficients() * phi.gram());
}

Tensor2 tensor_from_op(const LinearOperator& op, const AssociativeForm& phi) {
  return tensor_from_coefficients(op.algebra, op.matrix * phi.gram_inverse());
}

Tensor2 example16_tensor(const AlgebraPtr& m4) {
  if (m4->dim() != 16) fail(ErrorCode::invalid_spec, "needs the 4x4 matrix algebra");
  auto e = [&](const char* label) { return m4->basis_vector(m4->index_of(label)); };
  const FieldElement minus = -m4->field().one();
  return Tensor2{m4,
                 {{e("e11"), e("e12")},
                  {scale(minus, e("e12")), e("e11")},
                  {e("e33"), e("e34")},
                  {scale(minus, e("e34")), e("e33")}}};
}

}  // namespace rbx
