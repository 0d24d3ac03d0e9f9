#include <sstream>

#include "rbx/algebra.hpp"
#include "rbx/error.hpp"

namespace rbx {

namespace {

void push(std::vector<StructureConstant>& sc, std::size_t i, std::size_t j, std::size_t k, FieldElement c) {
  if (!c.is_zero()) sc.push_back({i, j, k, std::move(c)});
}

std::vector<FieldElement> parse_scalar_list(const Field& field, const std::string& text) {
  std::vector<FieldElement> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(field.parse_element(item));
  return out;
}

Vector cd_conj(const Vector& x, std::size_t level) {
  if (level == 0) return x;
  const std::size_t half = x.size() / 2;
  Vector a(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(half));
  Vector b(x.begin() + static_cast<std::ptrdiff_t>(half), x.end());
  Vector out = cd_conj(a, level - 1);
  for (auto& v : b) out.push_back(-v);
  return out;
}

// (a, b)(c, d) = (ac + alpha d conj(b), conj(a) d + c b)
Vector cd_mul(const Vector& x, const Vector& y, const std::vector<FieldElement>& alphas, std::size_t level) {
  if (level == 0) return {x[0] * y[0]};
  const std::size_t half = x.size() / 2;
  auto lo = [half](const Vector& v) { return Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(half)); };
  auto hi = [half](const Vector& v) { return Vector(v.begin() + static_cast<std::ptrdiff_t>(half), v.end()); };
  const Vector a = lo(x), b = hi(x), c = lo(y), d = hi(y);
  Vector first = add(cd_mul(a, c, alphas, level - 1),
                     scale(alphas[level - 1], cd_mul(d, cd_conj(b, level - 1), alphas, level - 1)));
  Vector second = add(cd_mul(cd_conj(a, level - 1), d, alphas, level - 1), cd_mul(c, b, alphas, level - 1));
  first.insert(first.end(), second.begin(), second.end());
  return first;
}

}  // namespace

AlgebraPtr matrix_algebra(const Field& field, std::size_t n) {
  if (n == 0) fail(ErrorCode::invalid_spec, "matrix algebra of size 0");
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) labels.push_back("e" + std::to_string(i) + std::to_string(j));
  }
  std::vector<StructureConstant> sc;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) sc.push_back({i * n + j, j * n + l, i * n + l, field.one()});
    }
  }
  Algebra::Options options;
  Vector unit = zero_vector(field, n * n);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = field.one();
  options.unit = unit;
  options.trace = unit;
  if (n == 2 && field.characteristic() != 2) {
    Matrix norm(field, 4, 4);
    FieldElement half = field.from_int(2).inverse();
    norm(0, 3) = norm(3, 0) = half;
    norm(1, 2) = norm(2, 1) = -half;
    options.quadratic = QuadraticStructure{unit, norm};
  }
  return std::make_shared<Algebra>("M" + std::to_string(n), field, labels, std::move(sc), std::move(options));
}

AlgebraPtr jordan_form(const Field& field, const std::vector<FieldElement>& diagonal) {
  if (diagonal.empty()) fail(ErrorCode::invalid_spec, "jordan_form needs at least one diagonal entry");
  const std::size_t n = diagonal.size();
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<StructureConstant> sc;
  sc.push_back({0, 0, 0, field.one()});
  std::string name = "J" + std::to_string(n + 1) + "(";
  for (std::size_t i = 1; i <= n; ++i) {
    FieldElement d = field.embed(diagonal[i - 1]);
    if (d.is_zero()) fail(ErrorCode::invalid_spec, "zero diagonal entry");
    sc.push_back({0, i, i, field.one()});
    sc.push_back({i, 0, i, field.one()});
    sc.push_back({i, i, 0, d});
    name += (i > 1 ? "," : "") + d.to_string();
  }
  name += ")";
  Algebra::Options options;
  options.unit = unit_vector(field, n + 1, 0);
  Vector trace = zero_vector(field, n + 1);
  trace[0] = field.from_int(2);
  Matrix norm(field, n + 1, n + 1);
  norm(0, 0) = field.one();
  for (std::size_t i = 1; i <= n; ++i) norm(i, i) = -field.embed(diagonal[i - 1]);
  options.quadratic = QuadraticStructure{trace, norm};
  return std::make_shared<Algebra>(name, field, labels, std::move(sc), std::move(options));
}

AlgebraPtr grassmann2(const Field& field) {
  std::vector<StructureConstant> sc;
  for (std::size_t i = 0; i < 4; ++i) {
    sc.push_back({0, i, i, field.one()});
    if (i) sc.push_back({i, 0, i, field.one()});
  }
  sc.push_back({1, 2, 3, field.one()});
  sc.push_back({2, 1, 3, -field.one()});
  Algebra::Options options;
  options.unit = unit_vector(field, 4, 0);
  Vector trace = zero_vector(field, 4);
  trace[0] = field.from_int(2);
  Matrix norm(field, 4, 4);
  norm(0, 0) = field.one();
  options.quadratic = QuadraticStructure{trace, norm};
  return std::make_shared<Algebra>("Gr2", field, std::vector<std::string>{"1", "e1", "e2", "e12"},
                                   std::move(sc), std::move(options));
}

AlgebraPtr kaplansky3(const Field& field) {
  const FieldElement half = field.from_int(2).inverse();
  std::vector<StructureConstant> sc{
      {0, 0, 0, field.one()}, {0, 1, 1, half}, {1, 0, 1, half}, {0, 2, 2, half},
      {2, 0, 2, half},        {1, 2, 0, half}, {2, 1, 0, -half},
  };
  Algebra::Options options;
  options.grading = std::vector<int>{0, 1, 1};
  Vector trace = unit_vector(field, 3, 0);
  options.quadratic = QuadraticStructure{trace, Matrix(field, 3, 3)};
  return std::make_shared<Algebra>("K3", field, std::vector<std::string>{"e", "x", "y"}, std::move(sc),
                                   std::move(options));
}

AlgebraPtr cayley_dickson(const Field& field, const std::vector<FieldElement>& alphas_in) {
  if (alphas_in.empty()) fail(ErrorCode::invalid_spec, "cayley_dickson needs at least one parameter");
  if (alphas_in.size() > 5) fail(ErrorCode::invalid_spec, "cayley_dickson supports at most 5 doublings");
  std::vector<FieldElement> alphas;
  std::string name = "CD(";
  for (std::size_t i = 0; i < alphas_in.size(); ++i) {
    alphas.push_back(field.embed(alphas_in[i]));
    if (alphas.back().is_zero()) fail(ErrorCode::invalid_spec, "zero doubling parameter");
    name += (i ? "," : "") + alphas.back().to_string();
  }
  name += ")";
  const std::size_t level = alphas.size();
  const std::size_t n = std::size_t{1} << level;
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 1; i < n; ++i) labels.push_back("u" + std::to_string(i));
  std::vector<StructureConstant> sc;
  std::vector<Vector> squares;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector p = cd_mul(unit_vector(field, n, i), unit_vector(field, n, j), alphas, level);
      for (std::size_t k = 0; k < n; ++k) push(sc, i, j, k, p[k]);
      if (i == j) squares.push_back(p);
    }
  }
  Algebra::Options options;
  options.unit = unit_vector(field, n, 0);
  Vector trace = zero_vector(field, n);
  trace[0] = field.from_int(2);
  Matrix norm(field, n, n);
  norm(0, 0) = field.one();
  // b^2 = -n(b) 1 for the traceless basis elements.
  for (std::size_t i = 1; i < n; ++i) norm(i, i) = -squares[i][0];
  options.quadratic = QuadraticStructure{trace, norm};
  return std::make_shared<Algebra>(name, field, labels, std::move(sc), std::move(options));
}

AlgebraPtr sl2(const Field& field) {
  const FieldElement one = field.one();
  const FieldElement two = field.from_int(2);
  std::vector<StructureConstant> sc;
  push(sc, 0, 1, 1, two);
  push(sc, 1, 0, 1, -two);
  push(sc, 0, 2, 2, -two);
  push(sc, 2, 0, 2, two);
  push(sc, 1, 2, 0, one);
  push(sc, 2, 1, 0, -one);
  return std::make_shared<Algebra>("sl2", field, std::vector<std::string>{"h", "e", "f"}, std::move(sc));
}

AlgebraPtr termwise_power(const Field& field, std::size_t k) {
  if (k == 0) fail(ErrorCode::invalid_spec, "termwise_power(0)");
  std::vector<std::string> labels;
  std::vector<StructureConstant> sc;
  Vector unit = zero_vector(field, k);
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back("b" + std::to_string(i + 1));
    sc.push_back({i, i, i, field.one()});
    unit[i] = field.one();
  }
  Algebra::Options options;
  options.unit = unit;
  return std::make_shared<Algebra>("F^" + std::to_string(k), field, labels, std::move(sc), std::move(options));
}

AlgebraPtr build_algebra(const Field& field, const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto need_arg = [&] {
    if (arg.empty()) fail(ErrorCode::invalid_spec, "builder '" + kind + "' needs parameters");
  };
  auto count = [&]() -> std::size_t {
    need_arg();
    try {
      std::size_t used = 0;
      long v = std::stol(arg, &used);
      if (used != arg.size() || v <= 0) throw std::invalid_argument(arg);
      return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
      fail(ErrorCode::invalid_spec, "bad size '" + arg + "'");
    }
  };
  if (kind == "matrix") return matrix_algebra(field, count());
  if (kind == "jordan") {
    need_arg();
    return jordan_form(field, parse_scalar_list(field, arg));
  }
  if (kind == "grassmann2") return grassmann2(field);
  if (kind == "kaplansky3") return kaplansky3(field);
  if (kind == "cayley-dickson") {
    need_arg();
    return cayley_dickson(field, parse_scalar_list(field, arg));
  }
  if (kind == "sl2") return sl2(field);
  if (kind == "termwise") return termwise_power(field, count());
  fail(ErrorCode::invalid_spec, "unknown algebra builder '" + spec + "'");
}

Matrix matrix_transpose(const Field& field, std::size_t n) {
  Matrix m(field, n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(j * n + i, i * n + j) = field.one();
  }
  return m;
}

}  // namespace rbx
