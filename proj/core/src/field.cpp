#include "rbx/field.hpp"

#include <cctype>
#include <charconv>
#include <ostream>
#include <vector>

#include "rbx/error.hpp"

namespace rbx {

namespace {

constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 31;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) fail(ErrorCode::division_by_zero, "inverse of zero");
  return powmod(a, p - 2, p);
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r = value % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

bool is_residue(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return true;
  if (p == 2) return true;
  return powmod(a, (p - 1) / 2, p) == 1;
}

/// Tonelli-Shanks; caller guarantees that `a` is a square mod odd p.
std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  std::uint64_t q = p - 1;
  std::uint64_t s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  std::uint64_t z = 2;
  while (is_residue(z, p)) ++z;
  std::uint64_t m = s;
  std::uint64_t c = powmod(z, q, p);
  std::uint64_t t = powmod(a, q, p);
  std::uint64_t r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_unsigned(std::string_view s, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    fail(ErrorCode::parse_error, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

/// "[-]digits[/digits]" as an exact rational.
mpq_class parse_fraction(std::string_view s) {
  s = trim(s);
  if (s.empty()) fail(ErrorCode::parse_error, "empty scalar");
  std::string text(s);
  if (text.front() == '+') text.erase(0, 1);
  auto valid = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t start = t.front() == '-' ? 1 : 0;
    if (start == t.size()) return false;
    bool slash = false;
    for (std::size_t i = start; i < t.size(); ++i) {
      if (t[i] == '/') {
        if (slash || i == start || i + 1 == t.size()) return false;
        slash = true;
      } else if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
        return false;
      }
    }
    return true;
  };
  if (!valid(text)) fail(ErrorCode::parse_error, "bad scalar '" + text + "'");
  mpq_class q(text, 10);
  if (q.get_den() == 0) fail(ErrorCode::division_by_zero, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Field

Field Field::rationals() { return Field{}; }

Field Field::prime(std::uint64_t p, bool allow_char2) {
  if (p >= kMaxCharacteristic) fail(ErrorCode::invalid_field, "characteristic too large");
  if (!is_prime(p)) fail(ErrorCode::invalid_field, std::to_string(p) + " is not prime");
  if (p == 2 && !allow_char2) {
    fail(ErrorCode::invalid_field, "characteristic 2 requires the explicit override");
  }
  Field f;
  f.kind_ = FieldKind::prime;
  f.p_ = p;
  return f;
}

Field Field::quadratic_extension(std::uint64_t p, std::uint64_t a) {
  if (p >= kMaxCharacteristic) fail(ErrorCode::invalid_field, "characteristic too large");
  if (!is_prime(p) || p == 2) fail(ErrorCode::invalid_field, "extension needs an odd prime");
  a %= p;
  if (is_residue(a, p)) {
    fail(ErrorCode::invalid_field, std::to_string(a) + " is a square mod " + std::to_string(p));
  }
  Field f;
  f.kind_ = FieldKind::quadratic_extension;
  f.p_ = p;
  f.a_ = a;
  return f;
}

Field Field::parse(std::string_view text, bool allow_char2) {
  text = trim(text);
  if (text == "Q") return rationals();
  if (text.size() < 2 || text.front() != 'F') {
    fail(ErrorCode::parse_error, "unknown field '" + std::string(text) + "'");
  }
  text.remove_prefix(1);
  auto open = text.find('(');
  if (open == std::string_view::npos) return prime(parse_unsigned(text, "prime"), allow_char2);
  std::string_view p_text = text.substr(0, open);
  std::string_view rest = text.substr(open);
  if (rest.size() < 7 || rest.substr(0, 5) != "(sqrt" || rest.back() != ')') {
    fail(ErrorCode::parse_error, "bad extension field '" + std::string(text) + "'");
  }
  std::string_view a_text = rest.substr(5, rest.size() - 6);
  return quadratic_extension(parse_unsigned(p_text, "prime"), parse_unsigned(a_text, "non-residue"));
}

std::uint64_t Field::order() const {
  switch (kind_) {
    case FieldKind::rationals: fail(ErrorCode::unsupported_field, "Q is infinite");
    case FieldKind::prime: return p_;
    case FieldKind::quadratic_extension: return p_ * p_;
  }
  return 0;
}

Field Field::base_field() const {
  if (kind_ == FieldKind::quadratic_extension) {
    Field f;
    f.kind_ = FieldKind::prime;
    f.p_ = p_;
    return f;
  }
  return *this;
}

Field Field::with_square_roots() const {
  switch (kind_) {
    case FieldKind::rationals:
      fail(ErrorCode::unsupported_field, "square roots over Q are not supported");
    case FieldKind::quadratic_extension: return *this;
    case FieldKind::prime: {
      if (p_ == 2) return *this;
      std::uint64_t a = 2;
      while (is_residue(a, p_)) ++a;
      return quadratic_extension(p_, a);
    }
  }
  return *this;
}

FieldElement Field::zero() const {
  FieldElement x;
  x.field_ = *this;
  return x;
}

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(std::int64_t value) const {
  FieldElement x;
  x.field_ = *this;
  if (kind_ == FieldKind::rationals) {
    x.q_ = mpq_class(mpz_class(static_cast<long>(value)));
  } else {
    auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = value % p;
    if (r < 0) r += p;
    x.u_ = static_cast<std::uint64_t>(r);
  }
  return x;
}

FieldElement Field::from_rational(const mpq_class& value) const {
  FieldElement x;
  x.field_ = *this;
  if (kind_ == FieldKind::rationals) {
    x.q_ = value;
    x.q_.canonicalize();
    return x;
  }
  std::uint64_t num = reduce(value.get_num(), p_);
  std::uint64_t den = reduce(value.get_den(), p_);
  if (den == 0) fail(ErrorCode::division_by_zero, "denominator vanishes mod p");
  x.u_ = mulmod(num, invmod(den, p_), p_);
  return x;
}

FieldElement Field::from_parts(std::uint64_t u, std::uint64_t v) const {
  if (kind_ != FieldKind::quadratic_extension && v % (p_ == 0 ? 1 : p_) != 0) {
    fail(ErrorCode::unsupported_field, "from_parts needs an extension field");
  }
  if (kind_ == FieldKind::rationals) fail(ErrorCode::unsupported_field, "from_parts over Q");
  FieldElement x;
  x.field_ = *this;
  x.u_ = u % p_;
  x.v_ = kind_ == FieldKind::quadratic_extension ? v % p_ : 0;
  return x;
}

FieldElement Field::element(std::uint64_t encoding) const {
  if (encoding >= order()) fail(ErrorCode::invalid_spec, "element index out of range");
  return from_parts(encoding % p_, encoding / p_);
}

FieldElement Field::parse_element(std::string_view text) const {
  text = trim(text);
  if (text.empty()) fail(ErrorCode::parse_error, "empty element");
  if (kind_ != FieldKind::quadratic_extension) {
    if (text.find('s') != std::string_view::npos) {
      fail(ErrorCode::parse_error, "'" + std::string(text) + "' uses s outside an extension field");
    }
    return from_rational(parse_fraction(text));
  }
  // Terms separated by top-level signs: rational constants and [c*]s.
  FieldElement total = zero();
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = pos + 1;
    while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
    std::string_view term = trim(text.substr(pos, end - pos));
    bool negative = false;
    if (!term.empty() && (term.front() == '+' || term.front() == '-')) {
      negative = term.front() == '-';
      term = trim(term.substr(1));
    }
    if (term.empty()) fail(ErrorCode::parse_error, "bad element '" + std::string(text) + "'");
    FieldElement value;
    if (term.back() == 's') {
      std::string_view coeff = trim(term.substr(0, term.size() - 1));
      FieldElement c = one();
      if (!coeff.empty()) {
        if (coeff.back() != '*') fail(ErrorCode::parse_error, "bad element '" + std::string(text) + "'");
        c = from_rational(parse_fraction(coeff.substr(0, coeff.size() - 1)));
      }
      value = c * from_parts(0, 1);
    } else {
      value = from_rational(parse_fraction(term));
    }
    total += negative ? -value : value;
    pos = end;
  }
  return total;
}

FieldElement Field::embed(const FieldElement& x) const {
  if (x.field() == *this) return x;
  if (kind_ == FieldKind::quadratic_extension && x.field() == base_field()) {
    return from_parts(x.residue(), 0);
  }
  fail(ErrorCode::field_mismatch, "cannot embed " + x.field().to_string() + " into " + to_string());
}

std::string Field::to_string() const {
  switch (kind_) {
    case FieldKind::rationals: return "Q";
    case FieldKind::prime: return "F" + std::to_string(p_);
    case FieldKind::quadratic_extension:
      return "F" + std::to_string(p_) + "(sqrt" + std::to_string(a_) + ")";
  }
  return "?";
}

// ---------------------------------------------------------- FieldElement

void FieldElement::require_same_field(const FieldElement& rhs) const {
  if (!(field_ == rhs.field_)) {
    fail(ErrorCode::field_mismatch, field_.to_string() + " vs " + rhs.field_.to_string());
  }
}

bool FieldElement::is_zero() const {
  if (field_.kind() == FieldKind::rationals) return q_ == 0;
  return u_ == 0 && v_ == 0;
}

bool FieldElement::is_one() const {
  if (field_.kind() == FieldKind::rationals) return q_ == 1;
  return u_ == 1 % field_.characteristic() && v_ == 0;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (field_.kind() == FieldKind::rationals) {
    r.q_ = -q_;
  } else {
    const auto p = field_.characteristic();
    r.u_ = (p - u_) % p;
    r.v_ = (p - v_) % p;
  }
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (field_.kind() == FieldKind::rationals) {
    q_ += rhs.q_;
  } else {
    const auto p = field_.characteristic();
    u_ = (u_ + rhs.u_) % p;
    v_ = (v_ + rhs.v_) % p;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) { return *this += -rhs; }

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_field(rhs);
  switch (field_.kind()) {
    case FieldKind::rationals: q_ *= rhs.q_; break;
    case FieldKind::prime: u_ = mulmod(u_, rhs.u_, field_.characteristic()); break;
    case FieldKind::quadratic_extension: {
      const auto p = field_.characteristic();
      const auto a = field_.nonresidue();
      std::uint64_t u = (mulmod(u_, rhs.u_, p) + mulmod(a, mulmod(v_, rhs.v_, p), p)) % p;
      std::uint64_t v = (mulmod(u_, rhs.v_, p) + mulmod(v_, rhs.u_, p)) % p;
      u_ = u;
      v_ = v;
      break;
    }
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorCode::division_by_zero, "inverse of zero");
  FieldElement r = *this;
  switch (field_.kind()) {
    case FieldKind::rationals: r.q_ = 1 / q_; r.q_.canonicalize(); break;
    case FieldKind::prime: r.u_ = invmod(u_, field_.characteristic()); break;
    case FieldKind::quadratic_extension: {
      const auto p = field_.characteristic();
      const auto a = field_.nonresidue();
      std::uint64_t norm = (mulmod(u_, u_, p) + p - mulmod(a, mulmod(v_, v_, p), p)) % p;
      std::uint64_t inv = invmod(norm, p);
      r.u_ = mulmod(u_, inv, p);
      r.v_ = mulmod((p - v_) % p, inv, p);
      break;
    }
  }
  return r;
}

FieldElement FieldElement::pow(std::int64_t exponent) const {
  FieldElement base = exponent < 0 ? inverse() : *this;
  auto e = static_cast<std::uint64_t>(exponent < 0 ? -exponent : exponent);
  FieldElement result = field_.one();
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

std::optional<FieldElement> FieldElement::sqrt() const {
  const auto p = field_.characteristic();
  std::optional<FieldElement> root;
  switch (field_.kind()) {
    case FieldKind::rationals:
      fail(ErrorCode::unsupported_field, "square roots over Q are not supported");
    case FieldKind::prime: {
      if (!is_residue(u_, p)) return std::nullopt;
      root = field_.from_int(static_cast<std::int64_t>(sqrt_mod(u_, p)));
      break;
    }
    case FieldKind::quadratic_extension: {
      const auto a = field_.nonresidue();
      if (v_ == 0) {
        if (is_residue(u_, p)) {
          root = field_.from_parts(sqrt_mod(u_, p), 0);
        } else {
          // u/a is a square because both u and a are non-squares.
          root = field_.from_parts(0, sqrt_mod(mulmod(u_, invmod(a, p), p), p));
        }
        break;
      }
      // (c + d s)^2 = u + v s  with  c^2 - a d^2 = +-sqrt(u^2 - a v^2).
      std::uint64_t norm = (mulmod(u_, u_, p) + p - mulmod(a, mulmod(v_, v_, p), p)) % p;
      if (!is_residue(norm, p)) return std::nullopt;
      std::uint64_t n = sqrt_mod(norm, p);
      std::uint64_t half = invmod(2, p);
      for (std::uint64_t candidate : {(u_ + n) % p, (u_ + p - n) % p}) {
        std::uint64_t c2 = mulmod(candidate, half, p);
        if (c2 == 0 || !is_residue(c2, p)) continue;
        std::uint64_t c = sqrt_mod(c2, p);
        std::uint64_t d = mulmod(v_, invmod(mulmod(2, c, p), p), p);
        FieldElement r = field_.from_parts(c, d);
        if (r * r == *this) {
          root = r;
          break;
        }
      }
      if (!root) return std::nullopt;
      break;
    }
  }
  FieldElement other = -*root;
  return other.encoding() < root->encoding() ? other : *root;
}

std::uint64_t FieldElement::encoding() const {
  if (field_.kind() == FieldKind::rationals) {
    fail(ErrorCode::unsupported_field, "rationals have no finite encoding");
  }
  return u_ + v_ * field_.characteristic();
}

std::optional<FieldElement> FieldElement::to_base_field() const {
  if (field_.kind() != FieldKind::quadratic_extension) return *this;
  if (v_ != 0) return std::nullopt;
  return field_.base_field().from_int(static_cast<std::int64_t>(u_));
}

std::string FieldElement::to_string() const {
  switch (field_.kind()) {
    case FieldKind::rationals: {
      if (q_.get_den() == 1) return q_.get_num().get_str();
      return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }
    case FieldKind::prime: return std::to_string(u_);
    case FieldKind::quadratic_extension:
      return std::to_string(u_) + "+" + std::to_string(v_) + "*s";
  }
  return "?";
}

bool operator==(const FieldElement& lhs, const FieldElement& rhs) {
  if (!(lhs.field_ == rhs.field_)) return false;
  if (lhs.field_.kind() == FieldKind::rationals) return lhs.q_ == rhs.q_;
  return lhs.u_ == rhs.u_ && lhs.v_ == rhs.v_;
}

bool FieldElement::canonical_less(const FieldElement& lhs, const FieldElement& rhs) {
  lhs.require_same_field(rhs);
  if (lhs.field_.kind() == FieldKind::rationals) return lhs.q_ < rhs.q_;
  return lhs.encoding() < rhs.encoding();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

}  // namespace rbx
