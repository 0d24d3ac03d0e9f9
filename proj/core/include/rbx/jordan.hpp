#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbx/algebra.hpp"
#include "rbx/rb.hpp"

namespace rbx {

/// J_{n+1}(f) with f = diag(d_1..d_n), together with a weight.
struct JordanFormSpec {
  Field field;
  std::vector<FieldElement> diagonal;
  FieldElement weight;

  std::size_t n() const noexcept { return diagonal.size(); }
  AlgebraPtr algebra() const { return jordan_form(field, diagonal); }
};

/// Diagonal of a jordan_form algebra, recognized from its structure constants.
std::optional<std::vector<FieldElement>> detect_jordan_form(const Algebra& a);

struct Monomial {
  FieldElement coeff;
  /// Zero, one or two variables r_{i,j}, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> vars;
};

struct Polynomial {
  std::string series;
  std::size_t target = 0;
  std::vector<Monomial> terms;
};

struct PolynomialSystem {
  JordanFormSpec spec;
  bool reduced = false;
  int z = 1;
  std::vector<Polynomial> equations;

  std::string to_text() const;
};

/// Raw system: one polynomial per unordered basis pair and projection, the
/// coefficient of b_m in R(x)R(y) - R(R(x)y + xR(y) + weight xy). Reduced
/// system: the normalized equations in the barred variables for sign z,
/// including the normalization constraints.
PolynomialSystem gen_system(const JordanFormSpec& spec, bool reduced, int z = 1);

FieldElement evaluate(const Polynomial& p, const Matrix& r);
std::vector<FieldElement> residuals(const PolynomialSystem& system, const Matrix& r);
bool satisfies(const PolynomialSystem& system, const Matrix& r);

enum class JordanCase { I, IIa, IIb };
std::string to_string(JordanCase c);
JordanCase parse_jordan_case(const std::string& text);

struct NormalizedMatrix {
  /// Entries sqrt(d_i)/sqrt(d_j) r_ij over a field holding the roots.
  Matrix rbar;
  int z = 1;
  JordanCase label = JordanCase::I;
};

/// Field used for the normalized and skew data: the base field when it
/// already holds sqrt(d_i) (and sqrt(-1) if `need_i`), else its quadratic
/// extension. Throws NoSquareRoot over Q when a root is irrational.
Field jordan_work_field(const JordanFormSpec& spec, bool need_i);

/// nullopt when R(1) lies in F 1. Throws ZeroWeight, NoSquareRoot.
std::optional<NormalizedMatrix> normalize_and_classify(const RBOperator& r);

/// Jordan case on a Jordan algebra of bilinear form with nonzero weight ("none"
/// when R(1) is scalar), the unit case of `diagnostics` elsewhere.
std::string case_label(const RBOperator& r);

struct SkewWitness {
  Matrix m;
  /// +1 for S = weight/2 E + M, -1 for Q = -weight/2 E + M (char 3).
  int shift_sign = 1;
};

/// Throws NotApplicable when R(1) is scalar, NoSquareRoot.
SkewWitness rb_to_skew(const RBOperator& r);
/// Throws InvalidWitness, ZeroFirstRow, NoSquareRoot.
RBOperator skew_to_rb(const JordanFormSpec& spec, const SkewWitness& w, JordanCase c = JordanCase::IIa);
bool is_valid_witness(const Matrix& m, const FieldElement& weight);

// Fixtures. `ex10` takes d_1..d_{2n-1}.
RBOperator ex10(const Field& field, const std::vector<FieldElement>& diagonal, const FieldElement& weight);
RBOperator ex11();
RBOperator ex12();
/// R(1) = 0, R(e1) = k a, R(e2) = l a with a = a0 + a1 e1 + a2 e2.
RBOperator ex13(const Field& field, const std::vector<FieldElement>& diagonal, const FieldElement& k,
                const FieldElement& l, const std::vector<FieldElement>& alpha, const FieldElement& weight);

}  // namespace rbx
