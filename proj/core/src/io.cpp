#include "rbx/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "rbx/error.hpp"

namespace rbx {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

/// Non-blank lines that are not comments.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] != '#') out.push_back({number, line});
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  fail(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto end = s.find(sep, pos);
    out.push_back(s.substr(pos, end == std::string::npos ? std::string::npos : end - pos));
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

/// Keyword followed by key=value tokens.
std::map<std::string, std::string> header(const Line& line, const std::string& keyword, std::size_t skip,
                                          std::vector<std::string>* positional = nullptr) {
  auto t = tokens(line.text);
  if (t.empty() || t[0] != keyword) parse_fail(line.number, "expected '" + keyword + "' header");
  if (t.size() < 1 + skip) parse_fail(line.number, "header too short");
  std::map<std::string, std::string> kv;
  for (std::size_t k = 1; k < t.size(); ++k) {
    if (k <= skip) {
      if (positional) positional->push_back(t[k]);
      continue;
    }
    const auto eq = t[k].find('=');
    if (eq == std::string::npos || eq == 0) parse_fail(line.number, "expected key=value, got '" + t[k] + "'");
    if (!kv.emplace(t[k].substr(0, eq), t[k].substr(eq + 1)).second) {
      parse_fail(line.number, "duplicate key " + t[k].substr(0, eq));
    }
  }
  return kv;
}

const std::string& require(const std::map<std::string, std::string>& kv, const std::string& key, std::size_t line) {
  auto it = kv.find(key);
  if (it == kv.end()) parse_fail(line, "missing " + key + "=");
  return it->second;
}

FieldElement element(const Field& f, const std::string& s, std::size_t line) {
  try {
    return f.parse_element(s);
  } catch (const Error& e) {
    parse_fail(line, "bad element '" + s + "': " + e.what());
  }
}

Vector vector_of(const Field& f, const std::string& s, std::size_t n, std::size_t line) {
  auto parts = split(s, ',');
  if (parts.size() != n) parse_fail(line, "expected " + std::to_string(n) + " entries");
  Vector v;
  for (const auto& p : parts) v.push_back(element(f, p, line));
  return v;
}

std::size_t index_of(const std::string& s, std::size_t n, std::size_t line) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (...) {
    parse_fail(line, "bad index '" + s + "'");
  }
  if (pos != s.size() || v >= n) parse_fail(line, "bad index '" + s + "'");
  return v;
}

std::string vector_text(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
  return out;
}

void check_name(const std::string& name) {
  if (name.empty() || name.find_first_of(" \t\n") != std::string::npos) {
    fail(ErrorCode::invalid_spec, "algebra name must be a single token");
  }
}

}  // namespace

std::string write_algebra(const Algebra& a) {
  check_name(a.name());
  std::ostringstream os;
  const std::size_t n = a.dim();
  os << "algebra " << a.name() << " field=" << a.field().to_string() << " dim=" << n << '\n';
  os << "basis";
  for (const auto& l : a.labels()) os << ' ' << l;
  os << '\n';
  if (a.unit()) os << "unit=" << vector_text(*a.unit()) << '\n';
  if (a.grading()) {
    os << "grading=";
    for (std::size_t i = 0; i < n; ++i) os << (i ? "," : "") << (*a.grading())[i];
    os << '\n';
  }
  if (a.quadratic()) {
    const auto& q = *a.quadratic();
    os << "quadratic-trace=" << vector_text(q.trace) << '\n';
    os << "quadratic-norm=";
    for (std::size_t i = 0; i < n; ++i) os << (i ? ";" : "") << vector_text(q.norm.row(i));
    os << '\n';
  }
  if (a.trace() && !(a.quadratic() && *a.trace() == a.quadratic()->trace)) {
    os << "trace=" << vector_text(*a.trace()) << '\n';
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& v = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!v[k].is_zero()) os << i << ' ' << j << ' ' << k << ' ' << v[k].to_string() << '\n';
      }
    }
  }
  return os.str();
}

AlgebraPtr read_algebra(std::string_view text, bool allow_char2) {
  auto lines = content_lines(text);
  if (lines.empty()) fail(ErrorCode::parse_error, "empty algebra file");
  std::vector<std::string> pos;
  auto kv = header(lines[0], "algebra", 1, &pos);
  if (pos.empty()) parse_fail(lines[0].number, "missing algebra name");
  Field F;
  try {
    F = Field::parse(require(kv, "field", lines[0].number), allow_char2);
  } catch (const Error& e) {
    parse_fail(lines[0].number, e.what());
  }
  const std::size_t n = index_of(require(kv, "dim", lines[0].number), 1u << 16, lines[0].number);
  if (n == 0) parse_fail(lines[0].number, "dim must be positive");
  if (lines.size() < 2) parse_fail(lines[0].number, "missing basis line");
  auto basis = tokens(lines[1].text);
  if (basis.empty() || basis[0] != "basis" || basis.size() != n + 1) {
    parse_fail(lines[1].number, "expected 'basis' followed by " + std::to_string(n) + " labels");
  }
  std::vector<std::string> labels(basis.begin() + 1, basis.end());

  Algebra::Options options;
  std::optional<Vector> qtrace;
  std::optional<Matrix> qnorm;
  std::vector<StructureConstant> sc;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const auto& line = lines[k];
    auto t = tokens(line.text);
    const auto eq = t[0].find('=');
    if (eq != std::string::npos) {
      if (t.size() != 1 || !sc.empty()) parse_fail(line.number, "misplaced option line");
      const std::string key = t[0].substr(0, eq), value = t[0].substr(eq + 1);
      if (key == "unit") {
        options.unit = vector_of(F, value, n, line.number);
      } else if (key == "trace") {
        options.trace = vector_of(F, value, n, line.number);
      } else if (key == "quadratic-trace") {
        qtrace = vector_of(F, value, n, line.number);
      } else if (key == "quadratic-norm") {
        auto rows = split(value, ';');
        if (rows.size() != n) parse_fail(line.number, "norm needs " + std::to_string(n) + " rows");
        Matrix m(F, n, n);
        for (std::size_t i = 0; i < n; ++i) {
          Vector r = vector_of(F, rows[i], n, line.number);
          for (std::size_t j = 0; j < n; ++j) m(i, j) = r[j];
        }
        qnorm = std::move(m);
      } else if (key == "grading") {
        std::vector<int> g;
        for (const auto& p : split(value, ',')) {
          if (p != "0" && p != "1") parse_fail(line.number, "grading entries are 0 or 1");
          g.push_back(p == "1");
        }
        if (g.size() != n) parse_fail(line.number, "grading has wrong length");
        options.grading = std::move(g);
      } else {
        parse_fail(line.number, "unknown option " + key);
      }
      continue;
    }
    if (t.size() != 4) parse_fail(line.number, "expected 'i j k c'");
    sc.push_back({index_of(t[0], n, line.number), index_of(t[1], n, line.number), index_of(t[2], n, line.number),
                  element(F, t[3], line.number)});
  }
  if (qtrace.has_value() != qnorm.has_value()) {
    fail(ErrorCode::parse_error, "quadratic-trace and quadratic-norm come together");
  }
  if (qtrace) options.quadratic = QuadraticStructure{*qtrace, *qnorm};
  try {
    return std::make_shared<Algebra>(pos[0], F, std::move(labels), std::move(sc), std::move(options));
  } catch (const Error& e) {
    fail(ErrorCode::parse_error, std::string("invalid algebra: ") + e.what());
  }
}

std::string write_operator(const LinearOperator& op, const FieldElement& weight) {
  const Algebra& a = *op.algebra;
  check_name(a.name());
  std::ostringstream os;
  os << "operator algebra=" << a.name() << " weight=" << a.field().embed(weight).to_string()
     << " convention=columns\n";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) os << (j ? " " : "") << op.matrix(i, j).to_string();
    os << '\n';
  }
  return os.str();
}

OperatorFile read_operator(std::string_view text, const AlgebraPtr& a) {
  auto lines = content_lines(text);
  if (lines.empty()) fail(ErrorCode::parse_error, "empty operator file");
  auto kv = header(lines[0], "operator", 0);
  const std::size_t h = lines[0].number;
  if (require(kv, "algebra", h) != a->name()) {
    fail(ErrorCode::algebra_mismatch, "operator is for algebra " + kv["algebra"] + ", not " + a->name());
  }
  if (auto it = kv.find("convention"); it != kv.end() && it->second != "columns") {
    parse_fail(h, "only convention=columns is supported");
  }
  for (const auto& [key, value] : kv) {
    if (key != "algebra" && key != "weight" && key != "convention") parse_fail(h, "unknown key " + key);
  }
  const Field& F = a->field();
  FieldElement w = element(F, require(kv, "weight", h), h);
  const std::size_t n = a->dim();
  if (lines.size() != n + 1) parse_fail(h, "expected " + std::to_string(n) + " matrix rows");
  Matrix m(F, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto t = tokens(lines[i + 1].text);
    if (t.size() != n) parse_fail(lines[i + 1].number, "expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = element(F, t[j], lines[i + 1].number);
  }
  return {make_operator(a, std::move(m)), std::move(w)};
}

std::string write_tensor(const Tensor2& r) {
  check_name(r.algebra->name());
  std::ostringstream os;
  os << "tensor algebra=" << r.algebra->name() << " terms=" << r.terms.size() << '\n';
  for (const auto& [a, b] : r.terms) os << "a=" << vector_text(a) << " ; b=" << vector_text(b) << '\n';
  return os.str();
}

Tensor2 read_tensor(std::string_view text, const AlgebraPtr& a) {
  auto lines = content_lines(text);
  if (lines.empty()) fail(ErrorCode::parse_error, "empty tensor file");
  auto kv = header(lines[0], "tensor", 0);
  const std::size_t h = lines[0].number;
  if (require(kv, "algebra", h) != a->name()) {
    fail(ErrorCode::algebra_mismatch, "tensor is for algebra " + kv["algebra"] + ", not " + a->name());
  }
  const std::size_t k = index_of(require(kv, "terms", h), 1u << 20, h);
  if (lines.size() != k + 1) parse_fail(h, "expected " + std::to_string(k) + " term lines");
  Tensor2 r{a, {}};
  for (std::size_t t = 1; t <= k; ++t) {
    auto parts = tokens(lines[t].text);
    if (parts.size() != 3 || parts[1] != ";" || parts[0].rfind("a=", 0) != 0 || parts[2].rfind("b=", 0) != 0) {
      parse_fail(lines[t].number, "expected 'a=<vector> ; b=<vector>'");
    }
    r.terms.emplace_back(vector_of(a->field(), parts[0].substr(2), a->dim(), lines[t].number),
                         vector_of(a->field(), parts[2].substr(2), a->dim(), lines[t].number));
  }
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::parse_error, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::parse_error, "cannot write " + path);
  out << text;
}

}  // namespace rbx
