#include "doctest.h"

#include <cstdlib>

#include "ncspace/matrix.hpp"

using namespace ncspace;

namespace {
Mat from_ints(const FieldPtr& F, std::vector<std::vector<long long>> rows) {
  Mat m(F, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = F->from_int(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  return m;
}

// membership of v in the row space spanned by basis (over the same field)
bool in_span(const std::vector<Vec>& basis, const Vec& v, const FieldPtr& F) {
  Mat m(F, static_cast<int>(basis.size()) + 1, static_cast<int>(v.size()));
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = basis[i][j];
  Mat top(F, static_cast<int>(basis.size()), static_cast<int>(v.size()));
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) top.at(static_cast<int>(i), static_cast<int>(j)) = basis[i][j];
  for (size_t j = 0; j < v.size(); ++j) m.at(static_cast<int>(basis.size()), static_cast<int>(j)) = v[j];
  return rank_of(m) == rank_of(top);
}
}  // namespace

TEST_CASE("rref: projector over Q") {
  auto F = Field::rationals();
  Mat m = from_ints(F, {{1, 0}, {0, 0}});
  auto r = rref(m);
  CHECK(r.rank == 1);
  REQUIRE(r.kernel.size() == 1);
  CHECK(r.kernel[0][0].is_zero());
  CHECK(r.kernel[0][1].is_one());
}

TEST_CASE("rref: identity over F5 has trivial kernel") {
  auto F = Field::prime(5);
  auto r = rref(Mat::identity(F, 3));
  CHECK(r.rank == 3);
  CHECK(r.kernel.empty());
}

TEST_CASE("rref: row permutation preserves rank and kernel span") {
  std::srand(4242);
  auto F = Field::prime(5);
  for (int trial = 0; trial < 30; ++trial) {
    int rows = 2 + std::rand() % 4, cols = 2 + std::rand() % 4;
    Mat m(F, rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = F->from_int(std::rand() % 5);
    Mat p(F, rows, cols);
    std::vector<int> perm(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) perm[static_cast<size_t>(i)] = i;
    for (int i = rows - 1; i > 0; --i) std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(std::rand() % (i + 1))]);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) p.at(i, j) = m.at(perm[static_cast<size_t>(i)], j);
    auto rm = rref(m), rp = rref(p);
    CHECK(rm.rank == rp.rank);
    REQUIRE(rm.kernel.size() == rp.kernel.size());
    for (const auto& v : rm.kernel) CHECK(in_span(rp.kernel, v, F));
    for (const auto& v : rp.kernel) CHECK(in_span(rm.kernel, v, F));
  }
}

TEST_CASE("rref: rank + kernel dimension = columns") {
  std::srand(99);
  auto F = Field::extension_of_fp(2, IntPoly::from_ints({1, 1, 1}));
  for (int trial = 0; trial < 20; ++trial) {
    int rows = 1 + std::rand() % 5, cols = 1 + std::rand() % 5;
    Mat m(F, rows, cols);
    auto elems = F->enumerate();
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = elems[static_cast<size_t>(std::rand() % 4)];
    auto r = rref(m);
    CHECK(r.rank + static_cast<int>(r.kernel.size()) == cols);
    // every kernel vector is annihilated
    for (const auto& v : r.kernel) {
      for (int i = 0; i < rows; ++i) {
        Scalar acc = F->zero();
        for (int j = 0; j < cols; ++j) acc += m.at(i, j) * v[static_cast<size_t>(j)];
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("char_poly: mu3 adjacency matrix") {
  auto F = Field::rationals();
  Mat m = from_ints(F, {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
  CHECK(char_poly(m) == IntPoly::from_ints({-4, 9, -6, 1}));
}

TEST_CASE("char_poly: curve-order reference adjacency") {
  auto F = Field::rationals();
  Mat m = from_ints(F, {{1, 2, 1}, {1, 1, 2}, {2, 1, 1}});
  CHECK(char_poly(m) == IntPoly::from_ints({-4, -3, -3, 1}));
  Mat m2 = from_ints(F, {{2, 2, 1}, {1, 2, 2}, {2, 1, 2}});
  // the char-3 reference matrix: lambda^3 - 6 lambda^2 + 6 lambda - 5
  CHECK(char_poly(m2) == IntPoly::from_ints({-5, 6, -6, 1}));
}

TEST_CASE("char_poly: nilpotent and empty") {
  auto F = Field::rationals();
  CHECK(char_poly(from_ints(F, {{0, 0}, {0, 0}})) == IntPoly::from_ints({0, 0, 1}));
  CHECK_THROWS_AS(char_poly(Mat(F, 2, 3)), ShapeError);
}

TEST_CASE("char_poly invariant under integer permutation similarity") {
  std::srand(31337);
  auto F = Field::rationals();
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + std::rand() % 4;
    Mat m(F, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = F->from_int(std::rand() % 7 - 3);
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(std::rand() % (i + 1))]);
    Mat pm(F, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) pm.at(i, j) = m.at(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    CHECK(char_poly(m) == char_poly(pm));
  }
}

TEST_CASE("smith_index: diagonal and identity lattices") {
  CHECK(smith_index({{BigInt(2), BigInt(0)}, {BigInt(0), BigInt(3)}}) == BigInt(6));
  CHECK(smith_index({{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)}}) == BigInt(1));
  CHECK(smith_index({{BigInt(-2), BigInt(0)}, {BigInt(0), BigInt(3)}}) == BigInt(6));
}

TEST_CASE("smith_index: the (sqrt2, 1) coordinate lattice in Z[sqrt2] is everything") {
  // generators: sqrt2*(1, theta) -> (0,1),(2,0); 1*(1,theta) -> (1,0),(0,1)
  CHECK(smith_index({{BigInt(0), BigInt(2), BigInt(1), BigInt(0)},
                     {BigInt(1), BigInt(0), BigInt(0), BigInt(1)}}) == BigInt(1));
}

TEST_CASE("smith_index: deficient rank raises RankError") {
  CHECK_THROWS_AS(smith_index({{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}}), RankError);
}

TEST_CASE("smith_index on random triangular products matches determinant") {
  std::srand(555);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + std::rand() % 4;
    // build unimodular U * diag(d) so the index is |prod d|
    std::vector<std::vector<BigInt>> m(static_cast<size_t>(n), std::vector<BigInt>(static_cast<size_t>(n), BigInt(0)));
    BigInt det(1);
    for (int i = 0; i < n; ++i) {
      long long d = 1 + std::rand() % 5;
      det *= BigInt(d);
      m[static_cast<size_t>(i)][static_cast<size_t>(i)] = BigInt(d);
      for (int j = i + 1; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = BigInt(std::rand() % 9 - 4);
    }
    CHECK(smith_index(m) == det);
  }
}

TEST_CASE("complex embeddings of Q, Q(sqrt2), Q(zeta3)") {
  auto q = complex_embeddings(Field::rationals());
  REQUIRE(q.size() == 1);
  CHECK(std::abs(q[0](Field::rationals()->from_rational(Rational(BigInt(3), BigInt(2)))) -
                 std::complex<double>(1.5, 0)) < 1e-12);

  auto F2 = Field::extension_of_q(IntPoly::from_ints({-2, 0, 1}));
  auto e2 = complex_embeddings(F2);
  REQUIRE(e2.size() == 2);
  CHECK(e2[0].theta.real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(e2[1].theta.real() == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
  CHECK(e2[0].theta.imag() == 0.0);

  auto F3 = Field::extension_of_q(IntPoly::from_ints({1, 1, 1}));
  auto e3 = complex_embeddings(F3);
  REQUIRE(e3.size() == 2);
  for (const auto& e : e3) {
    CHECK(e.theta.real() == doctest::Approx(-0.5).epsilon(1e-9));
    CHECK(std::abs(e.theta.imag()) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-9));
  }
  CHECK_THROWS_AS(complex_embeddings(Field::prime(5)), NoEmbeddings);
}

TEST_CASE("matrix product and shape errors") {
  auto F = Field::prime(5);
  Mat a = from_ints(F, {{1, 2}, {3, 4}});
  Mat b = from_ints(F, {{0, 1}, {1, 0}});
  CHECK(a * b == from_ints(F, {{2, 1}, {4, 3}}));
  CHECK_THROWS_AS(a * Mat(F, 3, 2), ShapeError);
}
