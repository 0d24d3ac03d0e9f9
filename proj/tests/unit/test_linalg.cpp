#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rbx/jordan.hpp"
#include "rbx/linalg.hpp"

using namespace rbx;

namespace {

Vector ints(const Field& f, std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(f.from_int(x));
  return v;
}

}  // namespace

TEST(Linalg, IdentityRankNullspace) {
  const Field f5 = Field::prime(5);
  const auto rn = rank_nullspace(Matrix::identity(f5, 3));
  EXPECT_EQ(rn.rank, 3u);
  EXPECT_EQ(rn.nullspace.dim(), 0u);
}

TEST(Linalg, ZeroRankNullspace) {
  const Field q = Field::rationals();
  const auto rn = rank_nullspace(Matrix(q, 2, 2));
  EXPECT_EQ(rn.rank, 0u);
  EXPECT_EQ(rn.nullspace, Subspace::whole(q, 2));
}

TEST(Linalg, Ex12Nullspace) {
  const RBOperator r = ex12();
  const Field& f = r.matrix().field();
  const auto rn = rank_nullspace(r.matrix());
  EXPECT_EQ(rn.rank, 2u);
  // Both kernel vectors checked by direct multiplication.
  const Vector k1 = ints(f, {1, -1, 0, 0}), k2 = ints(f, {0, 0, 1, 5});
  EXPECT_TRUE(oracle::all_zero(oracle::act(r.matrix(), k1)));
  EXPECT_TRUE(oracle::all_zero(oracle::act(r.matrix(), k2)));
  EXPECT_EQ(rn.nullspace, Subspace::span(f, 4, {k1, k2}));
  EXPECT_FALSE(rn.nullspace.contains(ints(f, {0, 0, 1, -5})));
}

TEST(Linalg, Solve) {
  const Field f5 = Field::prime(5);
  const Vector b = ints(f5, {1, 2, 3});
  EXPECT_EQ(*solve(Matrix::identity(f5, 3), b), b);
  EXPECT_FALSE(solve(Matrix(f5, 3, 3), b).has_value());
  EXPECT_EQ(*solve(Matrix::from_ints(f5, {{2}}), ints(f5, {3})), ints(f5, {4}));
}

TEST(Linalg, SubspaceOperations) {
  const Field f5 = Field::prime(5);
  EXPECT_EQ(Subspace::span(f5, 2, {ints(f5, {1, 1})}), Subspace::span(f5, 2, {ints(f5, {2, 2})}));
  const Subspace x = Subspace::span(f5, 2, {ints(f5, {1, 0})});
  const Subspace y = Subspace::span(f5, 2, {ints(f5, {0, 1})});
  EXPECT_EQ(x.intersect(y).dim(), 0u);
  EXPECT_TRUE(x.sum(y).contains(ints(f5, {3, 4})));
}

TEST(Linalg, Ex12KernelPlusImage) {
  const RBOperator r = ex12();
  const Subspace k = kernel(r.matrix()), im = column_space(r.matrix());
  EXPECT_EQ(k.sum(im), Subspace::whole(r.matrix().field(), 4));
  EXPECT_EQ(k.intersect(im).dim(), 0u);
  const Field& f = r.matrix().field();
  EXPECT_EQ(im, Subspace::span(f, 4, {ints(f, {1, 0, 1, 0}), ints(f, {0, 1, 0, 5})}));
}

TEST(Linalg, InverseAndDeterminant) {
  const Field q = Field::rationals();
  const Matrix m = Matrix::from_ints(q, {{2, 1}, {7, 4}});
  EXPECT_EQ(determinant(m), q.one());
  EXPECT_EQ(m * *inverse(m), Matrix::identity(q, 2));
  EXPECT_FALSE(inverse(Matrix::from_ints(q, {{1, 2}, {2, 4}})).has_value());
}

TEST(LinalgProperty, RankOfTranspose) {
  const Field f5 = Field::prime(5);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  for (int k = 0; k < 100; ++k) {
    const Matrix m = oracle::random_matrix(f5, size(oracle::rng()), size(oracle::rng()));
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(LinalgProperty, RankPlusNullity) {
  const Field f7 = Field::prime(7);
  for (int k = 0; k < 50; ++k) {
    const Matrix m = oracle::random_matrix(f7, 4, 5);
    const auto rn = rank_nullspace(m);
    EXPECT_EQ(rn.rank + rn.nullspace.dim(), 5u);
    for (const auto& v : rn.nullspace.basis()) EXPECT_TRUE(oracle::all_zero(oracle::act(m, v)));
  }
}

TEST(LinalgProperty, DimensionFormula) {
  const Field f3 = Field::prime(3);
  std::uniform_int_distribution<int> count(0, 4);
  for (int k = 0; k < 100; ++k) {
    std::vector<Vector> u, w;
    for (int i = count(oracle::rng()); i > 0; --i) u.push_back(oracle::random_vector(f3, 5));
    for (int i = count(oracle::rng()); i > 0; --i) w.push_back(oracle::random_vector(f3, 5));
    const Subspace s1 = Subspace::span(f3, 5, u), s2 = Subspace::span(f3, 5, w);
    EXPECT_EQ(s1.sum(s2).dim() + s1.intersect(s2).dim(), s1.dim() + s2.dim());
  }
}

TEST(LinalgProperty, EchelonIdempotent) {
  const Field f5 = Field::prime(5);
  for (int k = 0; k < 50; ++k) {
    Matrix m = oracle::random_matrix(f5, 4, 6);
    const auto pivots = rref(m);
    Matrix again = m;
    EXPECT_EQ(rref(again), pivots);
    EXPECT_EQ(again, m);
    const Subspace s = Subspace::span(f5, 6, {m.row(0), m.row(1), m.row(2), m.row(3)});
    EXPECT_EQ(Subspace::span(f5, 6, s.basis()), s);
  }
}
