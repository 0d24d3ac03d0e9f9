#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rbx/algebra.hpp"
#include "rbx/rb.hpp"

namespace rbx {

enum class SearchStrategy {
  /// Column-by-column backtracking with linear consistency pruning.
  pruned,
  /// Every matrix, filtered by a direct check. Guarded by dim^2 log2 p <= 26.
  raw,
};

struct EnumSpec {
  AlgebraPtr algebra;
  FieldElement weight;
  /// Orbit moves beyond conjugation.
  bool use_transpose = false;
  bool use_scaling = false;
  /// Independent slices of the first column, each run on its own thread.
  std::size_t chunks = 1;
  SearchStrategy strategy = SearchStrategy::pruned;
  /// Anti-automorphism used by the transpose move; defaults to the matrix
  /// transpose on matrix algebras and the identity on commutative ones.
  std::optional<Matrix> antiautomorphism;
};

/// Throws InvalidSpec (scaling with nonzero weight, transpose without an
/// anti-automorphism), UnsupportedField (not a prime field).
void validate(const EnumSpec& spec);

/// Every RB-operator of the given weight, in lexicographic order of the
/// row-major entries. Throws SearchSpaceTooLarge.
std::vector<LinearOperator> enumerate_rb(const EnumSpec& spec);

/// Every automorphism; for graded algebras only grading-preserving ones.
std::vector<Matrix> enumerate_automorphisms(const AlgebraPtr& a, std::size_t chunks = 1,
                                            SearchStrategy strategy = SearchStrategy::pruned);

/// Every derivation of the given weight.
std::vector<Matrix> enumerate_derivations(const AlgebraPtr& a, const FieldElement& weight, std::size_t chunks = 1,
                                          SearchStrategy strategy = SearchStrategy::pruned);

/// Matrix transpose on matrix algebras, identity on commutative algebras.
std::optional<Matrix> default_antiautomorphism(const Algebra& a);

/// Row-major order on entry encodings.
bool lex_less(const Matrix& lhs, const Matrix& rhs);

struct OrbitTags {
  bool splitting = false;
  /// "zero", "scalar", "other", or "none" without a unit.
  std::string r_one;
  /// Jordan case (I, IIa, IIb) on Jordan algebras of bilinear form, the
  /// unit case otherwise.
  std::string unit_case;
  bool square_zero = false;

  std::string to_string() const;
};

struct Orbit {
  Matrix representative;
  std::size_t size = 0;
  OrbitTags tags;
  /// Indices into the classified list.
  std::vector<std::size_t> members;
};

struct OrbitReport {
  std::size_t total = 0;
  std::vector<Orbit> orbits;

  /// "orbit k: size=<s> rep=<hex> tags=<...>" lines, then "total=<n> orbits=<m>".
  std::string to_text() const;
};

/// Partition of `ops` under the group generated by conjugation with `autos`
/// plus the moves enabled in `spec`. Representatives are the least matrix of
/// the whole orbit, even when `ops` is not closed.
OrbitReport orbit_classify(const std::vector<LinearOperator>& ops, const std::vector<Matrix>& autos,
                           const EnumSpec& spec);

}  // namespace rbx
