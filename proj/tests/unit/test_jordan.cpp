#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rbx/error.hpp"
#include "rbx/jordan.hpp"
#include "rbx/search.hpp"

using namespace rbx;

namespace {

const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);
const Field F13 = Field::prime(13);

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

JordanFormSpec spec_of(const RBOperator& r) {
  return {r.matrix().field(), *detect_jordan_form(*r.algebra()), r.weight()};
}

// E - 2 v v^T / (v^T v)
Matrix reflection(const Vector& v) {
  const Field& f = v.front().field();
  const FieldElement vv = dot_product(v, v);
  Matrix h = Matrix::identity(f, v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) h(i, j) -= f.from_int(2) * v[i] * v[j] / vv;
  return h;
}

// Random skew M over F13 with M^2 = (w^2/4) E: an orthogonal conjugate of a
// block-diagonal witness.
Matrix random_witness(const FieldElement& w, std::size_t dim) {
  const Field& f = w.field();
  const FieldElement a = w / f.from_int(2) * *f.from_int(-1).sqrt();
  Matrix m(f, dim, dim);
  for (std::size_t b = 0; b + 1 < dim; b += 2) {
    m(b, b + 1) = a;
    m(b + 1, b) = -a;
  }
  Matrix o = Matrix::identity(f, dim);
  for (int k = 0; k < 6; ++k) {
    Vector v = oracle::random_vector(f, dim);
    if (dot_product(v, v).is_zero()) continue;
    o = reflection(v) * o;
  }
  return o * m * o.transpose();
}

}  // namespace

TEST(GenSystem, RawResidualsVanishOnRbOperators) {
  const RBOperator r = ex11();
  const PolynomialSystem raw = gen_system(spec_of(r), false);
  for (const auto& x : residuals(raw, r.matrix())) EXPECT_TRUE(x.is_zero());
  EXPECT_TRUE(satisfies(raw, Matrix(F5, 4, 4)));
  EXPECT_TRUE(satisfies(raw, -r.weight() * Matrix::identity(F5, 4)));
  EXPECT_FALSE(satisfies(raw, F5.from_int(2) * Matrix::identity(F5, 4)));
}

TEST(GenSystem, TextFormat) {
  const JordanFormSpec spec{F5, ints(F5, {1, 1}), F5.one()};
  const std::string text = gen_system(spec, false).to_text();
  EXPECT_NE(text.find("r_{0,0}"), std::string::npos);
  EXPECT_NE(text.find("series="), std::string::npos);
  EXPECT_NE(text.find("target="), std::string::npos);
  EXPECT_EQ(text, gen_system(spec, false).to_text());
  EXPECT_FALSE(gen_system(spec, true).to_text().empty());
}

TEST(GenSystem, ReducedSystemHoldsOnNormalizedExamples) {
  for (const RBOperator& r : {ex11(), ex12()}) {
    const auto nm = normalize_and_classify(r);
    ASSERT_TRUE(nm.has_value());
    const PolynomialSystem reduced = gen_system(spec_of(r), true, nm->z);
    EXPECT_TRUE(satisfies(reduced, nm->rbar));
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(normalize_and_classify(ex11())->label, JordanCase::IIb);
  EXPECT_EQ(normalize_and_classify(ex12())->label, JordanCase::I);
  EXPECT_EQ(normalize_and_classify(ex10(F5, ints(F5, {1, 1, 1}), F5.one()))->label, JordanCase::IIb);
  const auto j = jordan_form(F5, ints(F5, {1, 1}));
  EXPECT_FALSE(normalize_and_classify(RBOperator::validate(zero_operator(j), F5.one())).has_value());
  EXPECT_EQ(code_of([&] { normalize_and_classify(RBOperator::validate(zero_operator(j), F5.zero())); }),
            ErrorCode::zero_weight);
}

TEST(Classify, NormalizedInvariants) {
  for (const RBOperator& r : {ex11(), ex12(), ex10(F5, ints(F5, {1, 1, 1}), F5.one())}) {
    const auto nm = *normalize_and_classify(r);
    const Matrix& rb = nm.rbar;
    const Field& k = rb.field();
    const FieldElement half = k.embed(r.weight()) / k.from_int(2);
    for (std::size_t a = 1; a < rb.rows(); ++a) {
      EXPECT_EQ(rb(a, a), -half);
      EXPECT_EQ(rb(0, a), k.from_int(nm.z) * rb(a, 0));
      for (std::size_t b = 1; b < rb.rows(); ++b)
        if (a != b) EXPECT_EQ(rb(a, b), -rb(b, a));
    }
  }
}

TEST(Skew, Examples) {
  const RBOperator r11 = ex11();
  const SkewWitness w11 = rb_to_skew(r11);
  const Matrix& m = w11.m;
  EXPECT_EQ(m.transpose(), -m);
  const Field& k5 = m.field();
  EXPECT_EQ(m * m, k5.from_int(4) * Matrix::identity(k5, 4));

  const SkewWitness w12 = rb_to_skew(ex12());
  const Field& k13 = w12.m.field();
  EXPECT_EQ(w12.m.transpose(), -w12.m);
  EXPECT_EQ(w12.m * w12.m, k13.from_int(10) * Matrix::identity(k13, 4));

  const auto j = jordan_form(F5, ints(F5, {1, 1, 1}));
  EXPECT_EQ(code_of([&] { rb_to_skew(RBOperator::validate(scalar_operator(j, F5.one()), -F5.one())); }),
            ErrorCode::not_applicable);
}

TEST(Skew, RoundTripExamples) {
  const RBOperator r11 = ex11();
  EXPECT_EQ(skew_to_rb(spec_of(r11), rb_to_skew(r11), JordanCase::IIb), r11);
  const RBOperator r12 = ex12();
  EXPECT_EQ(skew_to_rb(spec_of(r12), rb_to_skew(r12), JordanCase::I), r12);
}

TEST(Skew, Rejections) {
  const JordanFormSpec spec{F13, ints(F13, {1, 1, 1}), F13.from_int(-1)};
  Matrix m = rb_to_skew(ex12()).m;
  Matrix zero_row = m;
  for (std::size_t b = 0; b < 4; ++b) zero_row(0, b) = zero_row(b, 0) = F13.zero();
  EXPECT_EQ(code_of([&] { skew_to_rb(spec, {zero_row, 1}); }), ErrorCode::zero_first_row);
  Matrix not_skew = m;
  not_skew(1, 2) += F13.one();
  EXPECT_EQ(code_of([&] { skew_to_rb(spec, {not_skew, 1}); }), ErrorCode::invalid_witness);
  const JordanFormSpec odd{F13, ints(F13, {1, 1}), F13.one()};
  EXPECT_EQ(code_of([&] { skew_to_rb(odd, {Matrix(F13, 3, 3), 1}); }), ErrorCode::invalid_witness);
}

TEST(JordanExamples, Fixtures) {
  const RBOperator r11 = ex11();
  EXPECT_FALSE(is_splitting(r11).splitting);
  const RBOperator r12 = ex12();
  EXPECT_EQ(r12.matrix().field(), F13);
  EXPECT_TRUE(is_splitting(r12).splitting);
  EXPECT_EQ(r12.matrix().column(0), r12.matrix().column(1));
  EXPECT_EQ(r12.matrix().column(0), (Vector{F13.from_int(7), F13.from_int(7), F13.from_int(7), F13.from_int(9)}));

  const RBOperator r13 = ex13(F5, ints(F5, {1, 1}), F5.from_int(4), F5.zero(), ints(F5, {1, 1, 0}), F5.one());
  Matrix expect(F5, 3, 3);
  expect(0, 1) = expect(1, 1) = F5.from_int(4);
  EXPECT_EQ(r13.matrix(), expect);
  EXPECT_TRUE(oracle::rb(*r13.algebra(), expect, F5.one()));
  EXPECT_TRUE(is_splitting(r13).splitting);

  EXPECT_EQ(code_of([&] { ex13(F5, ints(F5, {1, 1}), F5.one(), F5.zero(), ints(F5, {1, 1, 0}), F5.one()); }),
            ErrorCode::constraint_violated);
  EXPECT_EQ(code_of([&] { ex13(F5, ints(F5, {1, 1}), F5.from_int(4), F5.zero(), ints(F5, {1, 2, 0}), F5.one()); }),
            ErrorCode::constraint_violated);

  const RBOperator r10 = ex10(F5, ints(F5, {1, 1, 1}), F5.one());
  EXPECT_FALSE(is_splitting(r10).splitting);
  EXPECT_TRUE(oracle::rb(*r10.algebra(), r10.matrix(), F5.one()));
  EXPECT_EQ(code_of([&] { ex10(F5, ints(F5, {1, 1}), F5.one()); }), ErrorCode::constraint_violated);
}

TEST(JordanProperty, RawSystemEquivalence) {
  const JordanFormSpec spec{F5, ints(F5, {1, 1}), F5.one()};
  const auto j = spec.algebra();
  const PolynomialSystem raw = gen_system(spec, false);
  for (int k = 0; k < 200; ++k) {
    const Matrix m = oracle::random_matrix(F5, 3, 3);
    EXPECT_EQ(satisfies(raw, m), oracle::rb(*j, m, F5.one()));
  }
  for (const auto& op : enumerate_rb({j, F5.one()})) EXPECT_TRUE(satisfies(raw, op.matrix));
}

TEST(JordanProperty, SkewRoundTripRandomWitnesses) {
  int done = 0;
  std::uniform_int_distribution<int> pick(0, 5);
  const long squares[] = {1, 4, 9, 3, 12, 10};
  for (int attempt = 0; done < 50 && attempt < 500; ++attempt) {
    const FieldElement w = F13.element(1 + oracle::rng()() % 12);
    const JordanFormSpec spec{F13, ints(F13, {squares[pick(oracle::rng())], squares[pick(oracle::rng())],
                                              squares[pick(oracle::rng())]}),
                              w};
    const Matrix m = random_witness(w, 4);
    ASSERT_TRUE(is_valid_witness(m, w));
    bool zero_row = true;
    for (std::size_t b = 1; b < 4; ++b) zero_row = zero_row && m(0, b).is_zero();
    if (zero_row) continue;
    for (JordanCase c : {JordanCase::IIa, JordanCase::IIb, JordanCase::I}) {
      const RBOperator r = skew_to_rb(spec, {m, 1}, c);
      EXPECT_TRUE(oracle::rb(*r.algebra(), r.matrix(), w));
      EXPECT_EQ(normalize_and_classify(r)->label, c);
      const SkewWitness back = rb_to_skew(r);
      EXPECT_EQ(back.m, m);
      EXPECT_EQ(skew_to_rb(spec, back, c), r);
    }
    ++done;
  }
  EXPECT_EQ(done, 50);
}

TEST(JordanProperty, WitnessesHaveEvenSize) {
  for (const RBOperator& r : {ex11(), ex12(), ex10(F5, ints(F5, {1, 1, 1}), F5.one())})
    EXPECT_EQ(rb_to_skew(r).m.rows() % 2, 0u);
}

TEST(JordanProperty, CaseLabelsOnEnumeratedOperators) {
  // every weight-1 operator on J3 over F3 and F5 is splitting with R(1) = 0 up to phi
  for (const Field& f : {F3, F5}) {
    const auto j = jordan_form(f, ints(f, {1, 1}));
    for (const auto& op : enumerate_rb({j, f.one()})) {
      const RBOperator r = RBOperator::validate(op, f.one());
      EXPECT_TRUE(is_splitting(r).splitting);
      const Vector unit = *j->unit();
      EXPECT_TRUE(is_zero(r.op().apply(unit)) || is_zero(apply_phi(r).op().apply(unit)));
    }
  }
}
