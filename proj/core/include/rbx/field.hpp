#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rbx {

enum class FieldKind { rationals, prime, quadratic_extension };

class FieldElement;

/// The base field of a computation: Q, a prime field F_p, or F_p(s) with
/// s^2 = a for a quadratic non-residue a.
///
/// Text form: "Q", "F5", "F7(sqrt3)".
class Field {
public:
  Field() = default;

  static Field rationals();
  /// Rejects p = 2 unless `allow_char2` is set.
  static Field prime(std::uint64_t p, bool allow_char2 = false);
  static Field quadratic_extension(std::uint64_t p, std::uint64_t a);
  static Field parse(std::string_view text, bool allow_char2 = false);

  FieldKind kind() const noexcept { return kind_; }
  std::uint64_t characteristic() const noexcept { return p_; }
  std::uint64_t nonresidue() const noexcept { return a_; }
  bool is_finite() const noexcept { return kind_ != FieldKind::rationals; }
  std::uint64_t order() const;

  /// F_p for an extension, the field itself otherwise.
  Field base_field() const;
  /// Smallest extension in which every element of the base field has a
  /// square root: F_p(s) with the least non-residue, or the field itself if
  /// it already is an extension. Throws UnsupportedField for Q.
  Field with_square_roots() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t value) const;
  FieldElement from_rational(const mpq_class& value) const;
  /// u + v*s in an extension field.
  FieldElement from_parts(std::uint64_t u, std::uint64_t v) const;
  /// The element with the given canonical encoding; finite fields only.
  FieldElement element(std::uint64_t encoding) const;
  FieldElement parse_element(std::string_view text) const;
  /// Image of an element of the base field (or of this field) in this field.
  FieldElement embed(const FieldElement& x) const;

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

private:
  FieldKind kind_ = FieldKind::rationals;
  std::uint64_t p_ = 0;
  std::uint64_t a_ = 0;
};

/// An exact scalar. Canonical form: reduced fraction with positive
/// denominator over Q, residues in [0, p) otherwise, so equality is
/// structural.
class FieldElement {
public:
  FieldElement() = default;

  const Field& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);
  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
  friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

  FieldElement inverse() const;
  FieldElement pow(std::int64_t exponent) const;

  /// A root r with r*r == *this, or nullopt. Of the two roots the one with
  /// the smaller encoding is returned. Throws UnsupportedField over Q.
  std::optional<FieldElement> sqrt() const;

  /// u + v*p for finite fields (v = 0 for prime fields).
  std::uint64_t encoding() const;
  std::uint64_t residue() const noexcept { return u_; }
  std::uint64_t residue_s() const noexcept { return v_; }
  const mpq_class& rational() const noexcept { return q_; }

  /// The same value viewed in the base field when it lies there.
  std::optional<FieldElement> to_base_field() const;

  std::string to_string() const;

  friend bool operator==(const FieldElement& lhs, const FieldElement& rhs);

  /// Total order used for canonical (lexicographic) representatives:
  /// numeric over Q, by encoding over finite fields.
  static bool canonical_less(const FieldElement& lhs, const FieldElement& rhs);

private:
  friend class Field;
  void require_same_field(const FieldElement& rhs) const;

  Field field_;
  std::uint64_t u_ = 0;
  std::uint64_t v_ = 0;
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

bool is_prime(std::uint64_t n);

}  // namespace rbx
