#pragma once

// Word-packed F_p arithmetic shared by the search and orbit code.

#include <cstdint>
#include <optional>
#include <vector>

#include "rbx/algebra.hpp"
#include "rbx/search.hpp"

namespace rbx::packed {

using Word = std::uint32_t;
/// Row-major n x n matrix of residues.
using Packed = std::vector<Word>;

struct Context {
  explicit Context(const Algebra& a);

  std::uint64_t p;
  std::size_t n;
  /// c[(i * n + j) * n + k] = coefficient of b_k in b_i b_j.
  std::vector<Word> c;
  std::vector<Word> inv;

  Word add(Word x, Word y) const { return static_cast<Word>((std::uint64_t(x) + y) % p); }
  Word sub(Word x, Word y) const { return static_cast<Word>((std::uint64_t(x) + p - y) % p); }
  Word mul(Word x, Word y) const { return static_cast<Word>(std::uint64_t(x) * y % p); }
  Word pow(Word x, std::uint64_t e) const;
  Word inverse(Word x) const;
  void product(const Word* x, const Word* y, Word* out) const;
};

Packed multiply(const Context& ctx, const Packed& a, const Packed& b);
std::size_t rank(const Context& ctx, Packed m, std::size_t rows, std::size_t cols);
std::optional<Packed> inverse(const Context& ctx, const Packed& m);
Packed pack(const Matrix& m);
Matrix unpack(const Field& f, std::size_t n, const Packed& x);

enum class Kind { rb, automorphism, derivation };

/// Sorted solutions of the chosen equation family.
std::vector<Packed> search(const Algebra& a, Kind kind, const FieldElement& weight, std::size_t chunks,
                           SearchStrategy strategy);

}  // namespace rbx::packed
