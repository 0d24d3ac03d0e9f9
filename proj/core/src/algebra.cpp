#include "rbx/algebra.hpp"

#include "rbx/error.hpp"

namespace rbx {

FieldElement QuadraticStructure::t(const Vector& x) const {
  FieldElement s = norm.field().zero();
  for (std::size_t i = 0; i < x.size(); ++i) s += trace[i] * x[i];
  return s;
}

FieldElement QuadraticStructure::n(const Vector& x) const {
  FieldElement s = norm.field().zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!x[j].is_zero() && !norm(i, j).is_zero()) s += x[i] * norm(i, j) * x[j];
    }
  }
  return s;
}

FieldElement QuadraticStructure::f(const Vector& x, const Vector& y) const {
  return n(add(x, y)) - n(x) - n(y);
}

Algebra::Algebra(std::string name, Field field, std::vector<std::string> labels,
                 std::vector<StructureConstant> constants, Options options)
    : name_(std::move(name)),
      field_(field),
      labels_(std::move(labels)),
      constants_(std::move(constants)),
      options_(std::move(options)) {
  const std::size_t n = dim();
  if (n == 0) fail(ErrorCode::invalid_spec, "algebra of dimension 0");
  table_.assign(n * n, zero_vector(field_, n));
  for (auto& sc : constants_) {
    if (sc.i >= n || sc.j >= n || sc.k >= n) fail(ErrorCode::invalid_spec, "structure constant index out of range");
    sc.c = field_.embed(sc.c);
    table_[sc.i * n + sc.j][sc.k] += sc.c;
  }
  auto check_len = [&](const std::optional<Vector>& v, const char* what) {
    if (v && v->size() != n) fail(ErrorCode::invalid_spec, std::string(what) + " has wrong length");
  };
  check_len(options_.unit, "unit");
  check_len(options_.trace, "trace");
  if (options_.grading) {
    if (options_.grading->size() != n) fail(ErrorCode::invalid_spec, "grading has wrong length");
    for (int g : *options_.grading) {
      if (g != 0 && g != 1) fail(ErrorCode::invalid_spec, "grading entries must be 0 or 1");
    }
  }
  if (options_.quadratic) {
    const auto& q = *options_.quadratic;
    if (q.trace.size() != n || q.norm.rows() != n || q.norm.cols() != n) {
      fail(ErrorCode::invalid_spec, "quadratic structure has wrong size");
    }
    if (!(q.norm == q.norm.transpose())) fail(ErrorCode::invalid_spec, "norm matrix must be symmetric");
    if (!options_.trace) options_.trace = q.trace;
  }
  if (options_.unit && !check_unit(*this)) fail(ErrorCode::invalid_spec, "unit law fails");
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) fail(ErrorCode::dimension_mismatch, "multiply: vector length");
  Vector r = zero_vector(field_, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Vector& p = table_[i * n + j];
      FieldElement c = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!p[k].is_zero()) r[k] += c * p[k];
      }
    }
  }
  return r;
}

std::size_t Algebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  fail(ErrorCode::invalid_spec, "no basis element '" + label + "' in " + name_);
}

Matrix Algebra::left_multiplication(const Vector& x) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, multiply(x, basis_vector(j)));
  return m;
}

Matrix Algebra::right_multiplication(const Vector& x) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, multiply(basis_vector(j), x));
  return m;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i + 1; j < dim(); ++j) {
      if (!(product(i, j) == product(j, i))) return false;
    }
  }
  return true;
}

bool Algebra::is_associative() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      for (std::size_t k = 0; k < dim(); ++k) {
        if (!(multiply(product(i, j), basis_vector(k)) == multiply(basis_vector(i), product(j, k)))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool Algebra::has_same_structure(const Algebra& other) const {
  return field_ == other.field_ && dim() == other.dim() && table_ == other.table_;
}

Element make_element(const AlgebraPtr& a, Vector coeffs) {
  if (coeffs.size() != a->dim()) fail(ErrorCode::dimension_mismatch, "element length");
  for (auto& c : coeffs) c = a->field().embed(c);
  return {a, std::move(coeffs)};
}

Element multiply(const Element& x, const Element& y) {
  if (x.algebra != y.algebra && !x.algebra->has_same_structure(*y.algebra)) {
    fail(ErrorCode::algebra_mismatch, x.algebra->name() + " vs " + y.algebra->name());
  }
  return {x.algebra, x.algebra->multiply(x.coeffs, y.coeffs)};
}

AlgebraPtr derived_algebra(const Algebra& a, DerivedVariant variant) {
  std::vector<StructureConstant> sc;
  const FieldElement sign = variant == DerivedVariant::plus ? a.field().one() : -a.field().one();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vector v = add(a.product(i, j), scale(sign, a.product(j, i)));
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (!v[k].is_zero()) sc.push_back({i, j, k, v[k]});
      }
    }
  }
  Algebra::Options options;
  options.grading = a.grading();
  std::string suffix = variant == DerivedVariant::plus ? "(+)" : "(-)";
  return std::make_shared<Algebra>(a.name() + suffix, a.field(), a.labels(), std::move(sc), std::move(options));
}

bool check_subalgebra(const Algebra& a, const Subspace& s) {
  if (s.ambient() != a.dim()) fail(ErrorCode::dimension_mismatch, "subspace ambient dimension");
  for (const auto& u : s.basis()) {
    for (const auto& v : s.basis()) {
      if (!s.contains(a.multiply(u, v))) return false;
    }
  }
  return true;
}

bool check_unit(const Algebra& a) {
  if (!a.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vector b = a.basis_vector(i);
    if (!(a.multiply(*a.unit(), b) == b) || !(a.multiply(b, *a.unit()) == b)) return false;
  }
  return true;
}

bool verify_quadratic(const Algebra& a) {
  if (!a.quadratic()) fail(ErrorCode::missing_structure, a.name() + " has no quadratic structure");
  const auto& q = *a.quadratic();
  const Field& F = a.field();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vector x = a.basis_vector(i);
    for (std::size_t j = i; j < a.dim(); ++j) {
      Vector y = a.basis_vector(j);
      // i == j: x^2 - t(x) x + n(x) 1; otherwise the bilinearized form.
      Vector lhs = i == j ? a.product(i, i) : add(a.product(i, j), a.product(j, i));
      Vector rhs = add(scale(q.t(x), y), i == j ? zero_vector(F, a.dim()) : scale(q.t(y), x));
      FieldElement scalar = i == j ? q.n(x) : q.f(x, y);
      if (!scalar.is_zero()) {
        if (!a.unit()) fail(ErrorCode::missing_structure, a.name() + " has no unit");
        rhs = sub(rhs, scale(scalar, *a.unit()));
      }
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

namespace {

bool preserves_grading(const Algebra& a, const Matrix& m) {
  if (!a.grading()) return true;
  const auto& g = *a.grading();
  for (std::size_t j = 0; j < a.dim(); ++j) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (g[i] != g[j] && !m(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool multiplicative(const Algebra& a, const Matrix& m, bool reversed) {
  std::vector<Vector> images;
  for (std::size_t j = 0; j < a.dim(); ++j) images.push_back(m.column(j));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vector lhs = m.apply(a.product(i, j));
      Vector rhs = reversed ? a.multiply(images[j], images[i]) : a.multiply(images[i], images[j]);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

}  // namespace

bool check_automorphism(const Algebra& a, const Matrix& m) {
  if (m.rows() != a.dim() || m.cols() != a.dim()) return false;
  return preserves_grading(a, m) && multiplicative(a, m, false) && inverse(m).has_value();
}

bool check_antiautomorphism(const Algebra& a, const Matrix& m) {
  if (m.rows() != a.dim() || m.cols() != a.dim()) return false;
  return preserves_grading(a, m) && multiplicative(a, m, true) && inverse(m).has_value();
}

FieldElement BilinearForm::operator()(const Vector& x, const Vector& y) const {
  return dot_product(x, gram.apply(y));
}

BilinearForm trace_form(const Algebra& a) {
  if (!a.trace()) fail(ErrorCode::missing_structure, a.name() + " has no trace functional");
  const Vector& t = *a.trace();
  Matrix g(a.field(), a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) g(i, j) = dot_product(t, a.product(i, j));
  }
  return {g};
}

}  // namespace rbx
