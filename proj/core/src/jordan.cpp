#include "rbx/jordan.hpp"

#include <algorithm>
#include <map>

#include "rbx/error.hpp"

namespace rbx {

namespace {

using Var = std::pair<std::size_t, std::size_t>;
using Key = std::vector<Var>;

/// Exact square root in `k` of an element of the spec field.
FieldElement root_in(const Field& k, const FieldElement& x) {
  if (k.kind() == FieldKind::rationals) {
    const mpq_class& q = x.rational();
    if (q < 0 || !mpz_perfect_square_p(q.get_num().get_mpz_t()) || !mpz_perfect_square_p(q.get_den().get_mpz_t())) {
      fail(ErrorCode::no_square_root, x.to_string() + " has no rational square root");
    }
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den().get_mpz_t());
    return k.from_rational(mpq_class(num, den));
  }
  auto r = k.embed(x).sqrt();
  if (!r) fail(ErrorCode::no_square_root, x.to_string() + " is not a square in " + k.to_string());
  return *r;
}

bool has_root(const Field& k, const FieldElement& x) {
  try {
    root_in(k, x);
    return true;
  } catch (const Error&) {
    return false;
  }
}

JordanFormSpec spec_of(const RBOperator& r) {
  auto diag = detect_jordan_form(*r.algebra());
  if (!diag) fail(ErrorCode::not_applicable, r.algebra()->name() + " is not a Jordan algebra of a diagonal form");
  return {r.algebra()->field(), *diag, r.weight()};
}

/// sqrt(d_0 = 1), sqrt(d_1), ... in k.
std::vector<FieldElement> diagonal_roots(const JordanFormSpec& spec, const Field& k) {
  std::vector<FieldElement> roots{k.one()};
  for (const auto& d : spec.diagonal) roots.push_back(root_in(k, d));
  return roots;
}

struct Classified {
  NormalizedMatrix nm;
  std::vector<FieldElement> roots;
};

std::optional<Classified> normalize_in(const RBOperator& r, const JordanFormSpec& spec, const Field& k) {
  if (r.weight().is_zero()) fail(ErrorCode::zero_weight, "normalization needs a nonzero weight");
  const Matrix& m = r.matrix();
  const std::size_t dim = m.rows();
  bool scalar_unit_image = true;
  for (std::size_t i = 1; i < dim; ++i) scalar_unit_image = scalar_unit_image && m(i, 0).is_zero();
  if (scalar_unit_image) return std::nullopt;

  Classified out;
  out.roots = diagonal_roots(spec, k);
  Matrix rbar(k, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) rbar(i, j) = out.roots[i] / out.roots[j] * k.embed(m(i, j));
  }
  std::optional<int> z;
  for (std::size_t s = 1; s < dim; ++s) {
    if (rbar(s, 0).is_zero()) continue;
    FieldElement ratio = rbar(0, s) / rbar(s, 0);
    int zs = ratio.is_one() ? 1 : (ratio == -k.one() ? -1 : 0);
    if (zs == 0 || (z && *z != zs)) fail(ErrorCode::not_applicable, "first row and column are not proportional by a sign");
    z = zs;
  }
  const FieldElement w = k.embed(r.weight());
  const FieldElement half = k.from_int(2).inverse();
  const FieldElement& r00 = rbar(0, 0);
  JordanCase label;
  if (*z == 1 && r00 == -w * half) {
    label = JordanCase::I;
  } else if (*z == -1 && r00 == w * half) {
    label = JordanCase::IIa;
  } else if (*z == -1 && r00 == -k.from_int(3) * w * half) {
    label = JordanCase::IIb;
  } else {
    fail(ErrorCode::not_applicable, "normalized corner entry matches no case");
  }
  out.nm = NormalizedMatrix{std::move(rbar), *z, label};
  return out;
}

void add_term(std::map<Key, FieldElement>& poly, Key key, const FieldElement& c) {
  if (c.is_zero()) return;
  std::sort(key.begin(), key.end());
  auto it = poly.find(key);
  if (it == poly.end()) {
    poly.emplace(std::move(key), c);
  } else {
    it->second += c;
  }
}

Polynomial finish(std::string series, std::size_t target, const std::map<Key, FieldElement>& poly) {
  Polynomial p{std::move(series), target, {}};
  for (const auto& [key, c] : poly) {
    if (!c.is_zero()) p.terms.push_back({c, key});
  }
  return p;
}

std::string pair_tag(std::size_t a, std::size_t b) {
  std::string tag = a == b ? (a == 0 ? "00" : "ss") : (a == 0 ? "0k" : "kl");
  return tag + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

PolynomialSystem raw_system(const JordanFormSpec& spec) {
  AlgebraPtr a = spec.algebra();
  const std::size_t dim = a->dim();
  const FieldElement w = spec.field.embed(spec.weight);
  PolynomialSystem sys{spec, false, 1, {}};
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = x; y < dim; ++y) {
      for (std::size_t m = 0; m < dim; ++m) {
        std::map<Key, FieldElement> poly;
        // R(b_x) R(b_y)
        for (std::size_t i = 0; i < dim; ++i) {
          for (std::size_t j = 0; j < dim; ++j) add_term(poly, {{i, x}, {j, y}}, a->product(i, j)[m]);
        }
        // - R(R(b_x) b_y + b_x R(b_y))
        for (std::size_t i = 0; i < dim; ++i) {
          for (std::size_t k = 0; k < dim; ++k) {
            add_term(poly, {{i, x}, {m, k}}, -a->product(i, y)[k]);
            add_term(poly, {{i, y}, {m, k}}, -a->product(x, i)[k]);
          }
        }
        // - weight R(b_x b_y)
        for (std::size_t k = 0; k < dim; ++k) add_term(poly, {{m, k}}, -w * a->product(x, y)[k]);
        sys.equations.push_back(finish(pair_tag(x, y), m, poly));
      }
    }
  }
  return sys;
}

PolynomialSystem reduced_system(const JordanFormSpec& spec, int z) {
  if (z != 1 && z != -1) fail(ErrorCode::invalid_spec, "z must be +1 or -1");
  const Field& F = spec.field;
  const std::size_t n = spec.n();
  const FieldElement w = F.embed(spec.weight);
  const FieldElement half = F.from_int(2).inverse();
  const FieldElement zf = F.from_int(z);
  const FieldElement one = F.one();
  PolynomialSystem sys{spec, true, z, {}};
  auto emit = [&](std::string series, std::size_t target, const std::map<Key, FieldElement>& poly) {
    sys.equations.push_back(finish(std::move(series), target, poly));
  };
  for (std::size_t k = 1; k <= n; ++k) {
    std::map<Key, FieldElement> p;
    add_term(p, {{k, k}}, one);
    add_term(p, {}, w * half);
    emit("diag", k, p);
  }
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t l = k + 1; l <= n; ++l) {
      std::map<Key, FieldElement> p;
      add_term(p, {{k, l}}, one);
      add_term(p, {{l, k}}, one);
      emit("skew(" + std::to_string(k) + "," + std::to_string(l) + ")", 0, p);
    }
  }
  for (std::size_t k = 1; k <= n; ++k) {
    std::map<Key, FieldElement> p;
    add_term(p, {{0, k}}, one);
    add_term(p, {{k, 0}}, -zf);
    emit("sign", k, p);
  }
  {
    std::map<Key, FieldElement> p;
    add_term(p, {{0, 0}}, F.from_int(2) * (one + zf));
    add_term(p, {}, (one + zf) * w);
    emit("corner", 0, p);
  }
  {
    std::map<Key, FieldElement> p;
    for (std::size_t q = 1; q <= n; ++q) add_term(p, {{q, 0}, {q, 0}}, one - F.from_int(2) * zf);
    add_term(p, {{0, 0}, {0, 0}}, -one);
    add_term(p, {{0, 0}}, -w);
    emit("00", 0, p);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    std::map<Key, FieldElement> p;
    for (std::size_t q = 1; q <= n; ++q) add_term(p, {{q, i}, {q, 0}}, one);
    add_term(p, {{0, i}}, w * zf * half);
    emit("0k", i, p);
  }
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t l = k; l <= n; ++l) {
      std::map<Key, FieldElement> p;
      for (std::size_t q = 1; q <= n; ++q) add_term(p, {{q, k}, {q, l}}, one);
      add_term(p, {{0, k}, {0, l}}, -one);
      emit(k == l ? "ss(" + std::to_string(k) + ")" : "kl(" + std::to_string(k) + "," + std::to_string(l) + ")", 0, p);
    }
  }
  return sys;
}

}  // namespace

std::optional<std::vector<FieldElement>> detect_jordan_form(const Algebra& a) {
  if (a.dim() < 2 || !a.unit() || !(*a.unit() == a.basis_vector(0))) return std::nullopt;
  std::vector<FieldElement> diag;
  for (std::size_t i = 1; i < a.dim(); ++i) diag.push_back(a.product(i, i)[0]);
  try {
    if (jordan_form(a.field(), diag)->has_same_structure(a)) return diag;
  } catch (const Error&) {
  }
  return std::nullopt;
}

PolynomialSystem gen_system(const JordanFormSpec& spec, bool reduced, int z) {
  if (spec.diagonal.empty()) fail(ErrorCode::invalid_spec, "empty diagonal");
  return reduced ? reduced_system(spec, z) : raw_system(spec);
}

std::string PolynomialSystem::to_text() const {
  std::string out = "system kind=" + std::string(reduced ? "reduced" : "raw") + " n=" + std::to_string(spec.n()) + " d=";
  for (std::size_t i = 0; i < spec.n(); ++i) out += (i ? "," : "") + spec.diagonal[i].to_string();
  out += " weight=" + spec.field.embed(spec.weight).to_string() + " field=" + spec.field.to_string();
  if (reduced) out += " z=" + std::to_string(z);
  out += "\n";
  const std::string var = reduced ? "rbar_{" : "r_{";
  for (const auto& eq : equations) {
    out += "series=" + eq.series + " target=" + std::to_string(eq.target) + ": ";
    if (eq.terms.empty()) out += "0";
    for (std::size_t t = 0; t < eq.terms.size(); ++t) {
      if (t) out += " + ";
      out += eq.terms[t].coeff.to_string();
      for (const auto& [i, j] : eq.terms[t].vars) out += "·" + var + std::to_string(i) + "," + std::to_string(j) + "}";
    }
    out += "\n";
  }
  return out;
}

FieldElement evaluate(const Polynomial& p, const Matrix& r) {
  const Field& k = r.field();
  FieldElement sum = k.zero();
  for (const auto& term : p.terms) {
    FieldElement v = k.embed(term.coeff);
    for (const auto& [i, j] : term.vars) v *= r(i, j);
    sum += v;
  }
  return sum;
}

std::vector<FieldElement> residuals(const PolynomialSystem& system, const Matrix& r) {
  const std::size_t dim = system.spec.n() + 1;
  if (r.rows() != dim || r.cols() != dim) fail(ErrorCode::dimension_mismatch, "matrix size does not match the system");
  std::vector<FieldElement> out;
  for (const auto& eq : system.equations) out.push_back(evaluate(eq, r));
  return out;
}

bool satisfies(const PolynomialSystem& system, const Matrix& r) {
  for (const auto& v : residuals(system, r)) {
    if (!v.is_zero()) return false;
  }
  return true;
}

std::string to_string(JordanCase c) {
  switch (c) {
    case JordanCase::I: return "I";
    case JordanCase::IIa: return "IIa";
    case JordanCase::IIb: return "IIb";
  }
  return "?";
}

JordanCase parse_jordan_case(const std::string& text) {
  if (text == "I") return JordanCase::I;
  if (text == "IIa") return JordanCase::IIa;
  if (text == "IIb") return JordanCase::IIb;
  fail(ErrorCode::parse_error, "unknown case '" + text + "'");
}

Field jordan_work_field(const JordanFormSpec& spec, bool need_i) {
  const Field& F = spec.field;
  bool ok = true;
  for (const auto& d : spec.diagonal) ok = ok && has_root(F, d);
  if (need_i) ok = ok && has_root(F, -F.one());
  if (ok) return F;
  if (F.kind() == FieldKind::rationals) fail(ErrorCode::no_square_root, "required square roots are irrational");
  Field k = F.with_square_roots();
  for (const auto& d : spec.diagonal) root_in(k, d);
  return k;
}

std::optional<NormalizedMatrix> normalize_and_classify(const RBOperator& r) {
  JordanFormSpec spec = spec_of(r);
  if (r.weight().is_zero()) fail(ErrorCode::zero_weight, "normalization needs a nonzero weight");
  auto c = normalize_in(r, spec, jordan_work_field(spec, false));
  if (!c) return std::nullopt;
  return c->nm;
}

std::string case_label(const RBOperator& r) {
  const Algebra& a = *r.algebra();
  if (!r.weight().is_zero() && detect_jordan_form(a)) {
    try {
      auto nm = normalize_and_classify(r);
      return nm ? to_string(nm->label) : "none";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::no_square_root) throw;
    }
  }
  return to_string(diagnostics(r.op(), r.weight()).unit_case);
}

bool is_valid_witness(const Matrix& m, const FieldElement& weight) {
  if (m.rows() != m.cols()) return false;
  if (!(m.transpose() == -m)) return false;
  const Field& k = m.field();
  const FieldElement w = k.embed(weight);
  const FieldElement c = w * w * k.from_int(4).inverse();
  return m * m == c * Matrix::identity(k, m.rows());
}

SkewWitness rb_to_skew(const RBOperator& r) {
  JordanFormSpec spec = spec_of(r);
  const Field k = jordan_work_field(spec, true);
  auto c = normalize_in(r, spec, k);
  if (!c) fail(ErrorCode::not_applicable, "R(1) is a scalar multiple of the unit");
  Matrix rbar = c->nm.rbar;
  const std::size_t dim = rbar.rows();
  if (c->nm.label == JordanCase::I) {
    for (std::size_t j = 0; j < dim; ++j) rbar(0, j) = -rbar(0, j);
  }
  const FieldElement i = root_in(k, -k.one());
  Matrix m(k, dim, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      if (a == b) continue;
      m(a, b) = (a == 0 || b == 0) ? i * rbar(a, b) : rbar(a, b);
    }
  }
  if (!is_valid_witness(m, r.weight())) fail(ErrorCode::invalid_witness, "constructed matrix is not a witness");
  return {std::move(m), k.characteristic() == 3 ? -1 : 1};
}

RBOperator skew_to_rb(const JordanFormSpec& spec, const SkewWitness& w, JordanCase label) {
  const Field& F = spec.field;
  const Field k = jordan_work_field(spec, true);
  const std::size_t dim = spec.n() + 1;
  if (w.m.rows() != dim || w.m.cols() != dim) fail(ErrorCode::invalid_witness, "witness has the wrong size");
  if (dim % 2 != 0) fail(ErrorCode::invalid_witness, "odd-sized witnesses cannot square to a nonzero scalar");
  Matrix m(k, dim, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) m(a, b) = k.embed(w.m(a, b));
  }
  if (!(m.transpose() == -m)) fail(ErrorCode::invalid_witness, "witness is not skew-symmetric");
  bool zero_row = true;
  for (std::size_t b = 1; b < dim; ++b) zero_row = zero_row && m(0, b).is_zero();
  if (zero_row) fail(ErrorCode::zero_first_row, "first row of the witness vanishes");
  if (!is_valid_witness(m, spec.weight)) fail(ErrorCode::invalid_witness, "M^2 differs from weight^2/4 E");

  const FieldElement wt = k.embed(spec.weight);
  const FieldElement half = k.from_int(2).inverse();
  const FieldElement i_inv = root_in(k, -k.one()).inverse();
  Matrix rbar(k, dim, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      if (a == b) {
        rbar(a, b) = -wt * half;
      } else {
        rbar(a, b) = (a == 0 || b == 0) ? m(a, b) * i_inv : m(a, b);
      }
    }
  }
  switch (label) {
    case JordanCase::IIa: rbar(0, 0) = wt * half; break;
    case JordanCase::IIb: rbar(0, 0) = -k.from_int(3) * wt * half; break;
    case JordanCase::I:
      rbar(0, 0) = wt * half;
      for (std::size_t b = 0; b < dim; ++b) rbar(0, b) = -rbar(0, b);
      break;
  }
  auto roots = diagonal_roots(spec, k);
  Matrix r(F, dim, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      auto v = (roots[b] / roots[a] * rbar(a, b)).to_base_field();
      if (!v || !(v->field() == F)) fail(ErrorCode::invalid_witness, "operator entries leave the base field");
      r(a, b) = *v;
    }
  }
  return RBOperator::validate(make_operator(spec.algebra(), std::move(r)), spec.weight);
}

RBOperator ex10(const Field& field, const std::vector<FieldElement>& diagonal, const FieldElement& weight) {
  if (diagonal.size() < 3 || diagonal.size() % 2 == 0) {
    fail(ErrorCode::constraint_violated, "needs an odd number (>= 3) of diagonal entries");
  }
  const std::size_t dim = diagonal.size() + 1;
  auto d = [&](std::size_t i) { return field.embed(diagonal[i - 1]); };
  Matrix l(field, dim, dim);
  const FieldElement sd1 = root_in(field, d(1));
  l(0, 0) = field.from_int(-3);
  l(0, 1) = sd1;
  l(1, 0) = -sd1.inverse();
  for (std::size_t i = 1; i < dim; ++i) l(i, i) = -field.one();
  for (std::size_t i = 2; i + 1 < dim; i += 2) {
    FieldElement s = root_in(field, -d(i) / d(i + 1));
    l(i, i + 1) = d(i + 1) / d(i) * s;
    l(i + 1, i) = -s;
  }
  const FieldElement w = field.embed(weight);
  Matrix r = w * field.from_int(2).inverse() * l;
  return RBOperator::validate(make_operator(jordan_form(field, diagonal), std::move(r)), w);
}

RBOperator ex11() {
  const Field F = Field::prime(5);
  std::vector<FieldElement> d(3, F.one());
  Matrix m = Matrix::from_columns(F,
                                  {{F.from_int(4), F.from_int(4), F.from_int(3), F.from_int(3)},
                                   {F.from_int(1), F.from_int(3), F.from_int(4), F.from_int(1)},
                                   {F.from_int(2), F.from_int(1), F.from_int(3), F.from_int(2)},
                                   {F.from_int(2), F.from_int(4), F.from_int(3), F.from_int(3)}},
                                  4);
  return RBOperator::validate(make_operator(jordan_form(F, d), std::move(m)), F.from_int(-1));
}

RBOperator ex12() {
  const Field F = Field::prime(13);
  std::vector<FieldElement> d(3, F.one());
  auto v = [&](long a, long b, long c, long e) {
    return Vector{F.from_int(a), F.from_int(b), F.from_int(c), F.from_int(e)};
  };
  Matrix m = Matrix::from_columns(F, {v(7, 7, 7, 9), v(7, 7, 7, 9), v(7, 6, 7, 4), v(9, 4, 9, 7)}, 4);
  return RBOperator::validate(make_operator(jordan_form(F, d), std::move(m)), F.from_int(-1));
}

RBOperator ex13(const Field& field, const std::vector<FieldElement>& diagonal, const FieldElement& k_in,
                const FieldElement& l_in, const std::vector<FieldElement>& alpha_in, const FieldElement& weight) {
  if (diagonal.size() != 2) fail(ErrorCode::invalid_spec, "needs a 2-entry diagonal");
  if (alpha_in.size() != 3) fail(ErrorCode::invalid_spec, "needs three alpha coefficients");
  const FieldElement k = field.embed(k_in), l = field.embed(l_in), w = field.embed(weight);
  Vector alpha;
  for (const auto& x : alpha_in) alpha.push_back(field.embed(x));
  const FieldElement d1 = field.embed(diagonal[0]), d2 = field.embed(diagonal[1]);
  if (k.is_zero() && l.is_zero()) fail(ErrorCode::constraint_violated, "k and l both vanish");
  if (is_zero(alpha)) fail(ErrorCode::constraint_violated, "alpha vanishes");
  if (!(alpha[0] * alpha[0] - d1 * alpha[1] * alpha[1] - d2 * alpha[2] * alpha[2]).is_zero()) {
    fail(ErrorCode::constraint_violated, "image is not isotropic");
  }
  if (!(k * alpha[1] + l * alpha[2] + w).is_zero()) fail(ErrorCode::constraint_violated, "k a1 + l a2 + weight != 0");
  Matrix m(field, 3, 3);
  m.set_column(1, scale(k, alpha));
  m.set_column(2, scale(l, alpha));
  return RBOperator::validate(make_operator(jordan_form(field, diagonal), std::move(m)), w);
}

}  // namespace rbx
