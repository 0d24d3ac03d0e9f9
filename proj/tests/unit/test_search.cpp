#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "rbx/claims.hpp"
#include "rbx/error.hpp"
#include "rbx/search.hpp"

using namespace rbx;

namespace {

const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);

// Weight-0 RB-operators on M2(F2), counted once by oracle::brute_rb.
constexpr std::size_t kM2F2WeightZero = 28;

std::vector<FieldElement> ints(const Field& f, std::initializer_list<long> xs) {
  std::vector<FieldElement> v;
  for (long x : xs) v.push_back(f.from_int(x));
  return v;
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::parse_error;
}

std::vector<Matrix> matrices(const std::vector<LinearOperator>& ops) {
  std::vector<Matrix> out;
  for (const auto& op : ops) out.push_back(op.matrix);
  return out;
}

std::set<std::string> keys(const std::vector<Matrix>& ms) {
  std::set<std::string> out;
  for (const auto& m : ms) out.insert(m.hex());
  return out;
}

struct Config {
  AlgebraPtr algebra;
  FieldElement weight;
};

// every builder configuration with p^(dim^2) <= 2^20
std::vector<Config> small_configs() {
  std::vector<Config> out;
  const Field f2 = Field::prime(2, true);
  for (const auto& a : {matrix_algebra(f2, 2), grassmann2(f2), termwise_power(f2, 4)})
    for (long w : {0, 1}) out.push_back({a, f2.from_int(w)});
  for (const auto& a : {jordan_form(F3, ints(F3, {1, 1})), jordan_form(F3, ints(F3, {1, 2})), kaplansky3(F3),
                        termwise_power(F3, 3), sl2(F3)})
    for (long w : {0, 1, 2}) out.push_back({a, F3.from_int(w)});
  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    const Field f = Field::prime(p);
    for (long w : {0, 1, -1}) {
      out.push_back({termwise_power(f, 1), f.from_int(w)});
      out.push_back({termwise_power(f, 2), f.from_int(w)});
    }
  }
  return out;
}

}  // namespace

TEST(Enumerate, OneDimensional) {
  for (std::uint64_t p : {3, 5, 7}) {
    const Field f = Field::prime(p);
    const auto a = termwise_power(f, 1);
    const auto w0 = enumerate_rb({a, f.zero()});
    ASSERT_EQ(w0.size(), 1u);
    EXPECT_TRUE(w0[0].matrix.is_zero());
    const auto w1 = matrices(enumerate_rb({a, f.one()}));
    EXPECT_EQ(w1, (std::vector<Matrix>{Matrix(f, 1, 1), -Matrix::identity(f, 1)}));
  }
}

TEST(Enumerate, M2OverF2AgainstBruteForce) {
  const Field f2 = Field::prime(2, true);
  const auto m2 = matrix_algebra(f2, 2);
  const auto pruned = matrices(enumerate_rb({m2, f2.zero()}));
  const auto brute = oracle::brute_rb(*m2, f2.zero());
  EXPECT_EQ(pruned, brute);
  EXPECT_EQ(pruned.size(), kM2F2WeightZero);
}

TEST(Enumerate, BruteForceOracleSubset) {
  for (const auto& c : {Config{jordan_form(F3, ints(F3, {1, 1})), F3.one()}, Config{kaplansky3(F3), F3.zero()},
                        Config{sl2(F3), F3.zero()}, Config{termwise_power(F5, 2), F5.one()}}) {
    EXPECT_EQ(matrices(enumerate_rb({c.algebra, c.weight})), oracle::brute_rb(*c.algebra, c.weight)) << c.algebra->name();
  }
}

TEST(Enumerate, PrunedEqualsRawOnSmallConfigs) {
  for (const auto& c : small_configs()) {
    EnumSpec spec{c.algebra, c.weight};
    const auto pruned = matrices(enumerate_rb(spec));
    spec.strategy = SearchStrategy::raw;
    const auto raw = matrices(enumerate_rb(spec));
    EXPECT_EQ(pruned, raw) << c.algebra->name() << " w=" << c.weight;
    for (const auto& m : pruned) EXPECT_TRUE(oracle::rb(*c.algebra, m, c.weight));
  }
}

TEST(Enumerate, LexicographicOrder) {
  const auto ops = enumerate_rb({matrix_algebra(F3, 2), F3.zero()});
  for (std::size_t k = 1; k < ops.size(); ++k) EXPECT_TRUE(lex_less(ops[k - 1].matrix, ops[k].matrix));
}

TEST(Enumerate, DeterministicAcrossChunks) {
  for (const auto& a : {matrix_algebra(F3, 2), grassmann2(F3), kaplansky3(F5)}) {
    for (long w : {0, 1}) {
      EnumSpec spec{a, a->field().from_int(w)};
      const auto one = matrices(enumerate_rb(spec));
      spec.chunks = 2;
      EXPECT_EQ(matrices(enumerate_rb(spec)), one);
      spec.chunks = 1000;
      EXPECT_EQ(matrices(enumerate_rb(spec)), one);
    }
    EXPECT_EQ(enumerate_automorphisms(a, 3), enumerate_automorphisms(a, 1));
  }
}

TEST(Enumerate, Guards) {
  EnumSpec raw{matrix_algebra(F5, 2), F5.zero()};
  raw.strategy = SearchStrategy::raw;
  EXPECT_EQ(code_of([&] { enumerate_rb(raw); }), ErrorCode::search_space_too_large);
  const auto big = termwise_power(F3, 9);
  EXPECT_EQ(code_of([&] { enumerate_rb({big, F3.zero()}); }), ErrorCode::search_space_too_large);
  EXPECT_EQ(code_of([&] { enumerate_rb({matrix_algebra(Field::rationals(), 2), Field::rationals().zero()}); }),
            ErrorCode::unsupported_field);
  EnumSpec scaled{matrix_algebra(F3, 2), F3.one()};
  scaled.use_scaling = true;
  EXPECT_EQ(code_of([&] { validate(scaled); }), ErrorCode::invalid_spec);
  EnumSpec transposed{jordan_form(F3, ints(F3, {1, 1})), F3.one()};
  transposed.use_transpose = true;
  EXPECT_EQ(code_of([&] { validate(transposed); }), ErrorCode::invalid_spec);
}

TEST(Automorphisms, Counts) {
  EXPECT_EQ(enumerate_automorphisms(matrix_algebra(F3, 2)).size(), 24u);
  EXPECT_EQ(enumerate_automorphisms(grassmann2(F3)).size(), 432u);
}

TEST(Automorphisms, MatchBruteForceFilter) {
  for (const auto& a : {kaplansky3(F3), jordan_form(F3, ints(F3, {1, 1})), sl2(F3)}) {
    std::vector<Matrix> brute;
    Matrix m(F3, 3, 3);
    for (std::uint64_t code = 0; code < 19683; ++code) {
      std::uint64_t c = code;
      for (std::size_t k = 9; k-- > 0; c /= 3) m(k / 3, k % 3) = F3.element(c % 3);
      if (check_automorphism(*a, m)) brute.push_back(m);
    }
    const auto found = enumerate_automorphisms(a);
    EXPECT_EQ(found, brute) << a->name();
    EXPECT_EQ(enumerate_automorphisms(a, 1, SearchStrategy::raw), brute) << a->name();
  }
  // the graded filter keeps e fixed up to sign
  for (const auto& m : enumerate_automorphisms(kaplansky3(F3))) {
    EXPECT_TRUE(m(1, 0).is_zero());
    EXPECT_TRUE(m(2, 0).is_zero());
  }
}

TEST(Automorphisms, InnerOnMatrixAlgebra) {
  // every automorphism of M2(F3) fixes the unit and preserves the trace
  const auto m2 = matrix_algebra(F3, 2);
  for (const auto& psi : enumerate_automorphisms(m2)) {
    EXPECT_EQ(psi.apply(*m2->unit()), *m2->unit());
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(dot_product(*m2->trace(), psi.column(j)), (*m2->trace())[j]);
  }
}

TEST(Orbits, FiveClassesOnM2) {
  const auto m2 = matrix_algebra(F3, 2);
  std::vector<LinearOperator> ops{zero_operator(m2)};
  for (int k = 1; k <= 4; ++k) ops.push_back(m_operator(m2, k));
  EnumSpec spec{m2, F3.zero()};
  spec.use_transpose = spec.use_scaling = true;
  const OrbitReport report = orbit_classify(ops, enumerate_automorphisms(m2), spec);
  EXPECT_EQ(report.orbits.size(), 5u);
  EXPECT_EQ(report.total, 5u);
  std::size_t sum = 0;
  for (const auto& o : report.orbits) sum += o.size;
  EXPECT_EQ(sum, 5u);
}

TEST(Orbits, Grassmann) {
  const auto gr = grassmann2(F3);
  EnumSpec spec{gr, F3.one()};
  const auto ops = enumerate_rb(spec);
  const OrbitReport report = orbit_classify(ops, enumerate_automorphisms(gr), spec);
  std::size_t sum = 0;
  for (const auto& o : report.orbits) {
    EXPECT_TRUE(o.tags.splitting);
    sum += o.size;
    // representative is the least member
    for (std::size_t j : o.members) EXPECT_FALSE(lex_less(ops[j].matrix, o.representative));
  }
  EXPECT_EQ(sum, ops.size());
  const std::string text = report.to_text();
  EXPECT_NE(text.find("orbit 1: size="), std::string::npos);
  EXPECT_NE(text.find("total=" + std::to_string(ops.size()) + " orbits=" + std::to_string(report.orbits.size())),
            std::string::npos);
}

TEST(Orbits, SingleZero) {
  const auto m2 = matrix_algebra(F3, 2);
  const OrbitReport report = orbit_classify({zero_operator(m2)}, enumerate_automorphisms(m2), {m2, F3.zero()});
  ASSERT_EQ(report.orbits.size(), 1u);
  EXPECT_EQ(report.orbits[0].size, 1u);
  EXPECT_TRUE(report.orbits[0].representative.is_zero());
}

TEST(Orbits, RejectsNonRb) {
  const auto m2 = matrix_algebra(F3, 2);
  EXPECT_EQ(code_of([&] { orbit_classify({scalar_operator(m2, F3.one())}, {}, {m2, F3.zero()}); }), ErrorCode::not_rb);
}

TEST(SearchProperty, Closure) {
  struct Case {
    AlgebraPtr a;
    FieldElement w;
  };
  for (const auto& c : {Case{matrix_algebra(F3, 2), F3.zero()}, Case{matrix_algebra(F3, 2), F3.one()},
                        Case{grassmann2(F3), F3.one()}, Case{grassmann2(F3), F3.zero()}, Case{kaplansky3(F3), F3.one()},
                        Case{jordan_form(F5, ints(F5, {1, 1})), F5.one()}}) {
    const auto ops = enumerate_rb({c.a, c.w});
    const auto set = keys(matrices(ops));
    const auto autos = enumerate_automorphisms(c.a);
    for (const auto& op : ops) {
      const RBOperator r = RBOperator::validate(op, c.w);
      EXPECT_TRUE(set.count(apply_phi(r).matrix().hex()));
      for (const auto& psi : autos) EXPECT_TRUE(set.count(conjugate(r, psi).matrix().hex()));
      if (c.w.is_zero())
        for (std::uint64_t s = 2; s < c.a->field().order(); ++s)
          EXPECT_TRUE(set.count((c.a->field().element(s) * op.matrix).hex()));
    }
  }
}

TEST(Derivations, InvertibleOnGrassmann) {
  const auto gr = grassmann2(F3);
  const auto ds = enumerate_derivations(gr, F3.one());
  std::size_t invertible = 0;
  for (const auto& d : ds) {
    EXPECT_TRUE(check_derivation_weight(make_operator(gr, d), F3.one()));
    if (inverse(d)) {
      ++invertible;
      EXPECT_EQ(d, -Matrix::identity(F3, 4));
    }
  }
  EXPECT_EQ(invertible, 1u);
}

TEST(Claims, Listed) {
  ClaimParams t5;
  t5.p = 5;
  t5.weight = "1";
  const PassReport r5 = verify_claim("T5-k3", t5);
  EXPECT_TRUE(r5.pass) << r5.to_text();
  EXPECT_EQ(r5.summary, "pass: all splitting");

  ClaimParams p2;
  p2.p = 5;
  EXPECT_TRUE(verify_claim("P2-k3-weight0", p2).pass);

  ClaimParams c5;
  c5.p = 3;
  c5.weight = "1";
  EXPECT_TRUE(verify_claim("C5-no-invertible-derivations", c5).pass);
}

TEST(Claims, ExhaustiveScale) {
  ClaimParams f3;
  f3.weight = "1";
  EXPECT_TRUE(verify_claim("T4-gr2", f3).pass);
  EXPECT_TRUE(verify_claim("T5-k3", f3).pass);
  EXPECT_TRUE(verify_claim("T2-even-splitting", f3).pass);
  ClaimParams f5 = f3;
  f5.p = 5;
  EXPECT_TRUE(verify_claim("T2-even-splitting", f5).pass);
  EXPECT_TRUE(verify_claim("P1-gr2-weight0", ClaimParams{}).pass);
  EXPECT_TRUE(verify_claim("P2-k3-weight0", ClaimParams{}).pass);
  const PassReport t6 = verify_claim("T6-soundness", ClaimParams{});
  EXPECT_TRUE(t6.pass) << t6.to_text();
}

TEST(Claims, Unknown) {
  EXPECT_EQ(code_of([&] { verify_claim("nope", ClaimParams{}); }), ErrorCode::invalid_spec);
  EXPECT_EQ(claim_ids().size(), 7u);
}
