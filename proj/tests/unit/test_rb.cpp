#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rbx/error.hpp"
#include "rbx/jordan.hpp"
#include "rbx/rb.hpp"
#include "rbx/search.hpp"

using namespace rbx;

namespace {

const Field Q = Field::rationals();
const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);

Vector ints(const Field& f, std::initializer_list<long> xs) {
  Vector v;
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

struct Fixture {
  std::string name;
  RBOperator r;
};

RBOperator k3_operator(const Field& f, long a, long b) {
  const auto k3 = kaplansky3(f);
  return RBOperator::validate(operator_from_images(k3, {{"y", ints(f, {a, b, 0})}}), f.zero());
}

std::vector<Fixture> fixtures() {
  std::vector<Fixture> out;
  const auto m2 = matrix_algebra(Q, 2);
  for (int k = 1; k <= 4; ++k) out.push_back({"M" + std::to_string(k), RBOperator::validate(m_operator(m2, k), Q.zero())});
  out.push_back({"ex14", RBOperator::validate(example14(m2), Q.one())});
  out.push_back({"ex11", ex11()});
  out.push_back({"ex12", ex12()});
  out.push_back({"ex13", ex13(F5, ints(F5, {1, 1}), F5.from_int(4), F5.zero(), ints(F5, {1, 1, 0}), F5.one())});
  out.push_back({"ex10", ex10(F5, ints(F5, {1, 1, 1}), F5.one())});
  const auto gr = grassmann2(F3);
  out.push_back({"gr2-split", split_op(gr, {Subspace::span(F3, 4, {gr->basis_vector(0), gr->basis_vector(1)}),
                                            Subspace::span(F3, 4, {gr->basis_vector(2), gr->basis_vector(3)})},
                                       F3.one())});
  out.push_back({"k3", k3_operator(F5, 2, 3)});
  const auto sl = sl2(Field::prime(7));
  const Field f7 = Field::prime(7);
  out.push_back({"sl2", RBOperator::validate(
                            operator_from_images(sl, {{"f", scale(f7.from_int(2).inverse(), sl->basis_vector(0))}}),
                            f7.zero())});
  out.push_back({"zero-m2", RBOperator::validate(zero_operator(m2), Q.from_int(3))});
  out.push_back({"trivial-m2", RBOperator::validate(scalar_operator(m2, Q.from_int(-3)), Q.from_int(3))});
  // every weight-0 operator on M2(F3) as a family
  EnumSpec spec{matrix_algebra(F3, 2), F3.zero()};
  int k = 0;
  for (auto& op : enumerate_rb(spec)) out.push_back({"m2f3-" + std::to_string(k++), RBOperator::validate(op, F3.zero())});
  return out;
}

const std::vector<Fixture>& all() {
  static const std::vector<Fixture> f = fixtures();
  return f;
}

}  // namespace

TEST(CheckRb, Examples) {
  const RBOperator r = ex11();
  EXPECT_EQ(r.matrix().field(), F5);
  EXPECT_EQ(r.weight(), F5.from_int(-1));
  EXPECT_EQ(r.matrix().column(0), ints(F5, {4, 4, 3, 3}));
  EXPECT_TRUE(check_rb(r.op(), F5.from_int(-1)));
  EXPECT_TRUE(oracle::rb(*r.algebra(), r.matrix(), F5.from_int(-1)));

  const auto m2 = matrix_algebra(Q, 2);
  for (long w : {0, 1, -7}) EXPECT_TRUE(check_rb(zero_operator(m2), Q.from_int(w)));
  EXPECT_TRUE(check_rb(zero_operator(kaplansky3(F5)), F5.from_int(2)));
  EXPECT_FALSE(check_rb(scalar_operator(m2, Q.one()), Q.zero()));
  const LinearOperator m1 = operator_from_images(m2, {{"e21", m2->basis_vector(1)}});
  EXPECT_EQ(m1.matrix, m_operator(m2, 1).matrix);
  EXPECT_TRUE(check_rb(m1, Q.zero()));
}

TEST(CheckRb, AgreesWithOracleOnRandomMatrices) {
  const auto j = jordan_form(F3, ints(F3, {1, 1}));
  const auto m2 = matrix_algebra(F3, 2);
  for (int k = 0; k < 300; ++k) {
    for (const auto& a : {j, m2}) {
      const Matrix m = oracle::random_matrix(F3, a->dim(), a->dim());
      const FieldElement w = oracle::random_element(F3);
      EXPECT_EQ(check_rb(make_operator(a, m), w), oracle::rb(*a, m, w));
    }
  }
}

TEST(Phi, Examples) {
  const auto m2 = matrix_algebra(Q, 2);
  const RBOperator z = RBOperator::validate(zero_operator(m2), Q.one());
  const RBOperator p = apply_phi(z);
  EXPECT_EQ(p.matrix(), -Matrix::identity(Q, 4));
  EXPECT_EQ(p.weight(), Q.one());
  EXPECT_EQ(apply_phi(apply_phi(ex11())), ex11());

  const auto gr = grassmann2(Q);
  const Subspace a1 = Subspace::span(Q, 4, {gr->basis_vector(0), gr->basis_vector(1)});
  const Subspace a2 = Subspace::span(Q, 4, {gr->basis_vector(2), gr->basis_vector(3)});
  const FieldElement w = Q.from_int(3);
  // swapping the roles of the two subalgebras
  EXPECT_EQ(apply_phi(split_op(gr, {a1, a2}, w)), split_op(gr, {a2, a1}, w));
}

TEST(NormalizeWeight, Examples) {
  const auto m2 = matrix_algebra(Q, 2);
  // -w id at w = -1 is the identity; scaled by 1/w it becomes -id, trivial at weight 1
  const RBOperator trivial = RBOperator::validate(scalar_operator(m2, Q.one()), Q.from_int(-1));
  const RBOperator n = normalize_weight(trivial);
  EXPECT_EQ(n.matrix(), -Matrix::identity(Q, 4));
  EXPECT_TRUE(n.weight().is_one());
  EXPECT_TRUE(oracle::rb(*m2, -Matrix::identity(Q, 4), Q.one()));
  EXPECT_FALSE(oracle::rb(*m2, -Matrix::identity(Q, 4), Q.from_int(-1)));

  const RBOperator e = normalize_weight(ex11());
  EXPECT_EQ(e.matrix(), F5.from_int(4) * ex11().matrix());
  EXPECT_TRUE(oracle::rb(*e.algebra(), e.matrix(), F5.one()));

  const RBOperator z = normalize_weight(RBOperator::validate(zero_operator(m2), Q.from_int(2)));
  EXPECT_TRUE(z.matrix().is_zero());
  EXPECT_TRUE(z.weight().is_one());

  EXPECT_EQ(code_of([&] { normalize_weight(RBOperator::validate(zero_operator(m2), Q.zero())); }), ErrorCode::zero_weight);
}

TEST(Conjugate, Examples) {
  const auto m2 = matrix_algebra(Q, 2);
  const RBOperator r = RBOperator::validate(m_operator(m2, 2), Q.zero());
  EXPECT_EQ(conjugate(r, Matrix::identity(Q, 4)), r);

  // x -> s x s^-1 with s the permutation matrix swapping indices 1 and 2: e_ij -> e_{s(i)s(j)}.
  Matrix swap(Q, 4, 4);
  swap(3, 0) = swap(2, 1) = swap(1, 2) = swap(0, 3) = Q.one();
  const RBOperator c = conjugate(r, swap);
  const Matrix expect = *inverse(swap) * r.matrix() * swap;
  EXPECT_EQ(c.matrix(), expect);
  EXPECT_TRUE(oracle::rb(*m2, c.matrix(), Q.zero()));
  EXPECT_EQ(c.matrix(), operator_from_images(m2, {{"e12", m2->basis_vector(3)}}).matrix);

  // inner automorphisms x -> g x g^-1 for a few g
  const RBOperator m1 = RBOperator::validate(m_operator(m2, 1), Q.zero());
  for (const auto& g : {Matrix::from_ints(Q, {{1, 1}, {0, 1}}), Matrix::from_ints(Q, {{2, 1}, {3, 5}}),
                        Matrix::from_ints(Q, {{0, 1}, {1, 1}})}) {
    const Matrix gi = *inverse(g);
    Matrix psi(Q, 4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
      Matrix unit(Q, 2, 2);
      unit(j / 2, j % 2) = Q.one();
      const Matrix img = g * unit * gi;
      for (std::size_t i = 0; i < 4; ++i) psi(i, j) = img(i / 2, i % 2);
    }
    EXPECT_TRUE(oracle::rb(*m2, conjugate(m1, psi).matrix(), Q.zero()));
  }

  EXPECT_EQ(code_of([&] { conjugate(r, matrix_transpose(Q, 2)); }), ErrorCode::not_automorphism);
}

TEST(SplitOp, Examples) {
  const auto gr = grassmann2(Q);
  const Subspace a1 = Subspace::span(Q, 4, {gr->basis_vector(0), gr->basis_vector(1)});
  const Subspace a2 = Subspace::span(Q, 4, {gr->basis_vector(2), gr->basis_vector(3)});
  const RBOperator p = split_op(gr, {a1, a2}, Q.one());
  Matrix expect(Q, 4, 4);
  expect(2, 2) = expect(3, 3) = -Q.one();
  EXPECT_EQ(p.matrix(), expect);
  EXPECT_TRUE(oracle::rb(*gr, p.matrix(), Q.one()));

  const auto m2 = matrix_algebra(Q, 2);
  const Subspace upper = Subspace::span(Q, 4, {m2->basis_vector(0), m2->basis_vector(1), m2->basis_vector(3)});
  const Subspace lower = Subspace::span(Q, 4, {m2->basis_vector(2)});
  EXPECT_TRUE(oracle::rb(*m2, split_op(m2, {upper, lower}, Q.one()).matrix(), Q.one()));

  const Subspace one = Subspace::span(Q, 4, {gr->basis_vector(0)});
  EXPECT_EQ(code_of([&] { split_op(gr, {one, one}, Q.one()); }), ErrorCode::invalid_decomposition);
  // direct, but e1 e2 = e12 leaves the second summand
  const Subspace top = Subspace::span(Q, 4, {gr->basis_vector(0), gr->basis_vector(3)});
  const Subspace bad = Subspace::span(Q, 4, {gr->basis_vector(1), gr->basis_vector(2)});
  EXPECT_EQ(code_of([&] { split_op(gr, {top, bad}, Q.one()); }), ErrorCode::invalid_decomposition);
}

TEST(IsSplitting, Examples) {
  const RBOperator r12 = ex12();
  const Field& f13 = r12.matrix().field();
  const auto s = is_splitting(r12);
  ASSERT_TRUE(s.splitting);
  // kernel vectors checked by direct multiplication in the linalg tests
  EXPECT_EQ(s.witness->a1, Subspace::span(f13, 4, {ints(f13, {1, -1, 0, 0}), ints(f13, {0, 0, 1, 5})}));
  EXPECT_EQ(s.witness->a2, Subspace::span(f13, 4, {ints(f13, {1, 0, 1, 0}), ints(f13, {0, 1, 0, 5})}));

  EXPECT_FALSE(is_splitting(ex11()).splitting);

  const auto m2 = matrix_algebra(Q, 2);
  const auto z = is_splitting(zero_operator(m2), Q.one());
  ASSERT_TRUE(z.splitting);
  EXPECT_EQ(z.witness->a1, Subspace::whole(Q, 4));
  EXPECT_EQ(z.witness->a2.dim(), 0u);
}

TEST(LeftMult, Examples) {
  const auto m2 = matrix_algebra(Q, 2);
  const LinearOperator l = left_mult_op(m2, m2->basis_vector(0), -Q.one());
  EXPECT_TRUE(oracle::rb(*m2, l.matrix, -Q.one()));
  const auto s = is_splitting(l, -Q.one());
  ASSERT_TRUE(s.splitting);
  EXPECT_EQ(s.witness->a1, Subspace::span(Q, 4, {m2->basis_vector(2), m2->basis_vector(3)}));
  EXPECT_EQ(s.witness->a2, Subspace::span(Q, 4, {m2->basis_vector(0), m2->basis_vector(1)}));
  // R^2 + lambda R = 0
  EXPECT_EQ(l.matrix * l.matrix, l.matrix);

  const LinearOperator z = left_mult_op(m2, zero_vector(Q, 4), Q.from_int(5));
  EXPECT_TRUE(z.matrix.is_zero());
  EXPECT_TRUE(check_rb(z, Q.from_int(-2)));

  const LinearOperator id = left_mult_op(m2, *m2->unit(), -Q.one());
  EXPECT_EQ(id.matrix, Matrix::identity(Q, 4));
  EXPECT_TRUE(check_rb(id, -Q.one()));

  EXPECT_EQ(code_of([&] { left_mult_op(m2, m2->basis_vector(1), Q.one()); }), ErrorCode::not_quasi_idempotent);
}

TEST(Derivations, Examples) {
  const auto m2 = matrix_algebra(Q, 2);
  EXPECT_TRUE(check_derivation_weight(zero_operator(m2), Q.from_int(4)));
  EXPECT_TRUE(check_derivation_weight(scalar_operator(m2, -Q.one()), Q.one()));

  const auto gr = grassmann2(Q);
  const auto sub = subalgebra(*gr, Subspace::span(Q, 4, {gr->basis_vector(1), gr->basis_vector(2), gr->basis_vector(3)}), "gr2+");
  Matrix d(Q, 3, 3);
  d(0, 0) = d(1, 1) = Q.one();
  d(2, 2) = Q.from_int(2);
  EXPECT_TRUE(check_derivation_weight(make_operator(sub, d), Q.zero()));

  const RBOperator r = rb_from_inverse_derivation(make_operator(sub, d), Q.zero());
  Matrix dinv = Matrix::identity(Q, 3);
  dinv(2, 2) = Q.parse_element("1/2");
  EXPECT_EQ(r.matrix(), dinv);
  EXPECT_TRUE(oracle::rb(*sub, dinv, Q.zero()));

  const RBOperator minus = rb_from_inverse_derivation(scalar_operator(m2, -Q.one()), Q.one());
  EXPECT_EQ(minus.matrix(), -Matrix::identity(Q, 4));

  Matrix nil(Q, 3, 3);
  nil(2, 0) = Q.one();
  EXPECT_EQ(code_of([&] { rb_from_inverse_derivation(make_operator(sub, nil), Q.zero()); }), ErrorCode::not_invertible);
  Matrix notder = Matrix::identity(Q, 3);
  EXPECT_EQ(code_of([&] { rb_from_inverse_derivation(make_operator(sub, notder), Q.zero()); }), ErrorCode::not_derivation);
}

TEST(Triples, Sl2Example) {
  const Field f7 = Field::prime(7);
  const auto sl = sl2(f7);
  const RBOperator r = RBOperator::validate(
      operator_from_images(sl, {{"f", scale(f7.from_int(2).inverse(), sl->basis_vector(0))}}), f7.zero());
  const RBTriple t = rb_to_triple(r);
  EXPECT_EQ(t.s, Subspace::span(f7, 3, {sl->basis_vector(0)}));
  EXPECT_EQ(t.i, Subspace::span(f7, 3, {sl->basis_vector(0), sl->basis_vector(1)}));
  EXPECT_TRUE(check_triple(*sl, t));
  // D(h) agrees with [e + f, h] modulo I
  const Vector ad = sl->multiply(add(sl->basis_vector(1), sl->basis_vector(2)), sl->basis_vector(0));
  EXPECT_TRUE(t.i.contains(sub(t.d.column(0), ad)));
  EXPECT_EQ(triple_to_rb(sl, t), r);
}

TEST(Triples, M1Example) {
  const auto m2 = matrix_algebra(Q, 2);
  const RBOperator r = RBOperator::validate(m_operator(m2, 1), Q.zero());
  const RBTriple t = rb_to_triple(r);
  EXPECT_EQ(t.s, Subspace::span(Q, 4, {m2->basis_vector(1)}));
  EXPECT_EQ(t.i, Subspace::span(Q, 4, {m2->basis_vector(0), m2->basis_vector(1), m2->basis_vector(3)}));
  EXPECT_TRUE(t.i.contains(sub(t.d.column(0), m2->basis_vector(2))));
  EXPECT_EQ(triple_to_rb(m2, t), r);
}

TEST(Triples, ZeroOperator) {
  const auto m2 = matrix_algebra(Q, 2);
  const RBTriple t = rb_to_triple(RBOperator::validate(zero_operator(m2), Q.zero()));
  EXPECT_EQ(t.s.dim(), 0u);
  EXPECT_EQ(t.i, Subspace::whole(Q, 4));
  EXPECT_TRUE(triple_to_rb(m2, t).matrix().is_zero());
  EXPECT_EQ(code_of([&] { rb_to_triple(RBOperator::validate(zero_operator(m2), Q.one())); }), ErrorCode::nonzero_weight);
}

TEST(Triples, InvalidTriple) {
  const auto m2 = matrix_algebra(Q, 2);
  RBTriple t = rb_to_triple(RBOperator::validate(m_operator(m2, 1), Q.zero()));
  t.d = Matrix(Q, 4, 1);
  EXPECT_EQ(code_of([&] { triple_to_rb(m2, t); }), ErrorCode::invalid_triple);
}

TEST(ZeroUnitBuild, Build) {
  const auto j = jordan_form(F5, ints(F5, {1, 1}));
  const Vector v = ints(F5, {0, 1, 2});
  const auto ok = lemma4_build(j, operator_from_images(j, {{"e1", scale(F5.from_int(3), v)}, {"e2", v}}));
  ASSERT_TRUE(ok.op.has_value());
  EXPECT_TRUE(oracle::rb(*j, ok.op->matrix(), F5.zero()));

  const auto bad = lemma4_build(j, operator_from_images(j, {{"e2", ints(F5, {1, 2, 0})}}));
  EXPECT_FALSE(bad.op.has_value());
  EXPECT_EQ(bad.rejection, "norm");

  const auto unit = lemma4_build(j, operator_from_images(j, {{"1", v}}));
  EXPECT_EQ(unit.rejection, "unit");
  const auto square = lemma4_build(j, operator_from_images(j, {{"e1", ints(F5, {0, 0, 1})}, {"e2", ints(F5, {0, 1, 0})}}));
  EXPECT_FALSE(square.op.has_value());

  EXPECT_TRUE(lemma4_build(j, zero_operator(j)).op.has_value());
}

TEST(ZeroUnitBuild, AgreesWithOracleExhaustively) {
  // R(1) = 0 and R(e1), R(e2) arbitrary: accepted exactly when RB of weight 0.
  const auto j = jordan_form(F3, ints(F3, {1, 1}));
  for (std::uint64_t code = 0; code < 729; ++code) {
    Matrix m(F3, 3, 3);
    std::uint64_t c = code;
    for (std::size_t k = 0; k < 6; ++k, c /= 3) m(k % 3, 1 + k / 3) = F3.element(c % 3);
    EXPECT_EQ(lemma4_build(j, make_operator(j, m)).op.has_value(), oracle::rb(*j, m, F3.zero()));
  }
}

TEST(Diagnostics, Examples) {
  const auto m2 = matrix_algebra(Q, 2);
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(diagnostics(m_operator(m2, k), Q.zero()).square_zero, k != 4);

  const Diagnostics d = diagnostics(example14(m2), Q.one());
  EXPECT_EQ(d.unit_case, UnitCase::II);
  const FieldElement half = Q.parse_element("1/2");
  const Vector unit = *m2->unit();
  const Vector p = sub(*d.r_one, scale(half, unit));
  EXPECT_TRUE(m2->quadratic()->t(p).is_zero());
  EXPECT_EQ(example14(m2).apply(p), sub(scale(Q.parse_element("-1/4"), unit), scale(half, p)));

  const Diagnostics z = diagnostics(zero_operator(m2), Q.zero());
  EXPECT_TRUE(is_zero(*z.r_one));
  EXPECT_EQ(z.kernel_dim, 4u);

  EXPECT_EQ(code_of([&] { diagnostics(scalar_operator(m2, Q.one()), Q.zero()); }), ErrorCode::not_rb);
}

TEST(RbProperty, PhiInvolution) {
  for (const auto& f : all()) {
    const RBOperator p = apply_phi(f.r);
    EXPECT_TRUE(oracle::rb(*p.algebra(), p.matrix(), p.weight())) << f.name;
    EXPECT_EQ(apply_phi(p), f.r) << f.name;
  }
}

TEST(RbProperty, TransportToDerivedAlgebras) {
  for (const auto& f : all()) {
    for (auto v : {DerivedVariant::plus, DerivedVariant::minus}) {
      const auto d = derived_algebra(*f.r.algebra(), v);
      EXPECT_TRUE(oracle::rb(*d, f.r.matrix(), f.r.weight())) << f.name;
    }
  }
}

TEST(RbProperty, SplitOpAndIsSplittingAreInverse) {
  for (const auto& f : all()) {
    const auto s = is_splitting(f.r);
    const Matrix& m = f.r.matrix();
    const Matrix shifted = m + f.r.weight() * Matrix::identity(m.field(), m.rows());
    EXPECT_EQ(s.splitting, (m * shifted).is_zero()) << f.name;
    if (!s.splitting || f.r.weight().is_zero()) continue;
    const RBOperator back = split_op(f.r.algebra(), *s.witness, f.r.weight());
    EXPECT_EQ(back, f.r) << f.name;
    const auto again = is_splitting(back);
    EXPECT_EQ(again.witness->a1, s.witness->a1);
    EXPECT_EQ(again.witness->a2, s.witness->a2);
  }
  // from decompositions: Gr2 over F3, all pairs of complementary subalgebras spanned by basis vectors
  const auto gr = grassmann2(F3);
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<Vector> u, w;
    for (std::size_t i = 0; i < 4; ++i) (mask >> i & 1 ? u : w).push_back(gr->basis_vector(i));
    const Subspace a1 = Subspace::span(F3, 4, u), a2 = Subspace::span(F3, 4, w);
    if (!check_subalgebra(*gr, a1) || !check_subalgebra(*gr, a2)) continue;
    const RBOperator p = split_op(gr, {a1, a2}, F3.one());
    const Matrix& m = p.matrix();
    EXPECT_TRUE((m * (m + Matrix::identity(F3, 4))).is_zero());
    const auto s = is_splitting(p);
    ASSERT_TRUE(s.splitting);
    EXPECT_EQ(s.witness->a1, a1);
    EXPECT_EQ(s.witness->a2, a2);
  }
}

TEST(RbProperty, UnitOutsideImageAtWeightZero) {
  for (const auto& f : all()) {
    if (!f.r.weight().is_zero() || !f.r.algebra()->unit()) continue;
    EXPECT_FALSE(column_space(f.r.matrix()).contains(*f.r.algebra()->unit())) << f.name;
  }
}

TEST(RbProperty, NoNonzeroEigenvalueOnQuasiIdempotents) {
  for (const auto& f : all()) {
    const Algebra& a = *f.r.algebra();
    if (!f.r.weight().is_zero() || !a.field().is_finite() || a.field().order() > 7 || a.dim() > 4) continue;
    const std::uint64_t p = a.field().order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < a.dim(); ++i) total *= p;
    for (std::uint64_t code = 1; code < total; ++code) {
      Vector e;
      for (std::uint64_t c = code, i = 0; i < a.dim(); ++i, c /= p) e.push_back(a.field().element(c % p));
      const Vector sq = oracle::mul(a, e, e);
      // e^2 = alpha e with alpha != 0
      std::optional<FieldElement> alpha;
      bool proportional = true;
      for (std::size_t i = 0; i < e.size() && proportional; ++i) {
        if (e[i].is_zero()) {
          proportional = sq[i].is_zero();
        } else {
          const FieldElement q = sq[i] / e[i];
          if (alpha && *alpha != q) proportional = false;
          alpha = q;
        }
      }
      if (!proportional || alpha->is_zero()) continue;
      const Vector re = oracle::act(f.r.matrix(), e);
      for (std::uint64_t l = 1; l < p; ++l) EXPECT_NE(re, scale(a.field().element(l), e)) << f.name;
    }
  }
}

TEST(RbProperty, TripleRoundTrip) {
  for (const auto& f : all()) {
    if (!f.r.weight().is_zero()) continue;
    const RBTriple t = rb_to_triple(f.r);
    EXPECT_TRUE(check_triple(*f.r.algebra(), t)) << f.name;
    EXPECT_EQ(t.s, column_space(f.r.matrix()));
    EXPECT_EQ(t.i, kernel(f.r.matrix()));
    const RBOperator back = triple_to_rb(f.r.algebra(), t);
    EXPECT_EQ(back, f.r) << f.name;
    const RBTriple t2 = rb_to_triple(back);
    EXPECT_EQ(t2.s, t.s);
    EXPECT_EQ(t2.i, t.i);
  }
}

TEST(RbProperty, DerivationInverse) {
  // invertible RB-operators give derivations and back
  for (const auto& f : all()) {
    const auto inv = inverse(f.r.matrix());
    if (!inv) continue;
    const LinearOperator d = make_operator(f.r.algebra(), *inv);
    EXPECT_TRUE(check_derivation_weight(d, f.r.weight())) << f.name;
    EXPECT_EQ(rb_from_inverse_derivation(d, f.r.weight()), f.r);
  }
}

TEST(RbProperty, ZeroUnitImpliesSquareZero) {
  for (const auto& f : all()) {
    const auto& unit = f.r.algebra()->unit();
    if (!f.r.weight().is_zero() || !unit || !is_zero(f.r.op().apply(*unit))) continue;
    EXPECT_TRUE((f.r.matrix() * f.r.matrix()).is_zero()) << f.name;
    EXPECT_TRUE(kernel(f.r.matrix()).contains(column_space(f.r.matrix()))) << f.name;
  }
}

TEST(RbProperty, ZeroUnitNonzeroWeightKernel) {
  for (const auto& f : all()) {
    const auto& unit = f.r.algebra()->unit();
    if (f.r.weight().is_zero() || !unit || !is_zero(f.r.op().apply(*unit))) continue;
    EXPECT_GE(kernel(f.r.matrix()).dim(), 2u) << f.name;
  }
}

TEST(RbProperty, K3NormalFormExhaustive) {
  for (long a = 0; a < 5; ++a)
    for (long b = 0; b < 5; ++b) {
      const auto k3 = kaplansky3(F5);
      EXPECT_TRUE(oracle::rb(*k3, operator_from_images(k3, {{"y", ints(F5, {a, b, 0})}}).matrix, F5.zero()));
    }
}
