#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wtoric/root_system.hpp"

#include <random>

using namespace wtoric;

namespace {

std::mt19937 rng(7321);

Scalar random_entry() {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  return Scalar(Rational(num(rng), den(rng)));
}

Matrix random_matrix(int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = random_entry();
  return m;
}

Matrix a2_gram() {
  Matrix g(2, 2);
  g << Scalar(2), Scalar(-1), Scalar(-1), Scalar(2);
  return g;
}

// The 2 x 6 coefficient matrix of the hexagon's linear forms in the paper's
// edge order (reproduced independently by the pipeline golden test).
Matrix hexagon_j_matrix() {
  Matrix m(2, 6);
  const int r1[6] = {1, 0, -1, -1, 0, 1};
  const int r2[6] = {0, 1, 1, 0, -1, -1};
  for (int j = 0; j < 6; ++j) {
    m(0, j) = Scalar(r1[j]);
    m(1, j) = Scalar(r2[j]);
  }
  return m;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
  Matrix ab(a.rows() + b.rows(), a.cols());
  ab.topRows(a.rows()) = a;
  ab.bottomRows(b.rows()) = b;
  const int ra = rref(a).rank;
  const int rb = rref(b).rank;
  const int rab = rref(ab).rank;
  return ra == rb && ra == rab;
}

} // namespace

TEST_CASE("gram form validation") {
  CHECK_NOTHROW(GramForm(a2_gram()));
  Matrix bad(2, 2);
  bad << Scalar(1), Scalar(2), Scalar(2), Scalar(1);  // indefinite
  CHECK_THROWS_AS(GramForm{bad}, Error);
  Matrix asym(2, 2);
  asym << Scalar(1), Scalar(1), Scalar(0), Scalar(1);
  CHECK_THROWS_AS(GramForm{asym}, Error);
}

TEST_CASE("inner products in A2 and I2(5)") {
  const RootSystem a2 = build_root_system("A2");
  CHECK(inner_product(a2.simple_roots[0], a2.simple_roots[0], a2.gram) == Scalar(2));
  CHECK(inner_product(a2.simple_roots[0], a2.simple_roots[1], a2.gram) == Scalar(-1));

  const RootSystem i5 = build_root_system("I2(5)");
  const Scalar expect(Rational(-1, 2), Rational(-1, 2), 5);  // -2cos(pi/5)
  CHECK(inner_product(i5.simple_roots[0], i5.simple_roots[1], i5.gram) == expect);
  CHECK(inner_product(i5.simple_roots[1], i5.simple_roots[0], i5.gram) == expect);

  Vector wrong = Vector::Constant(3, Scalar(1));
  CHECK_THROWS_AS(inner_product(wrong, wrong, i5.gram), Error);
}

TEST_CASE("rref basics") {
  Matrix id = Matrix::Identity(2, 2);
  RrefResult r = rref(id);
  CHECK(r.rank == 2);
  CHECK(mat_eq(r.reduced, id));

  Matrix dep(2, 2);
  dep << Scalar(1), Scalar(1), Scalar(2), Scalar(2);
  r = rref(dep);
  CHECK(r.rank == 1);
  Matrix want(2, 2);
  want << Scalar(1), Scalar(1), Scalar(0), Scalar(0);
  CHECK(mat_eq(r.reduced, want));
  CHECK(r.pivot_columns == std::vector<int>{0});

  CHECK(rref(hexagon_j_matrix()).rank == 2);
}

TEST_CASE("rref properties on random matrices") {
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m = random_matrix(4, 5);
    RrefResult r = rref(m);
    CHECK(same_row_space(m, r.reduced));
    RrefResult again = rref(r.reduced);
    CHECK(again.rank == r.rank);
    CHECK(mat_eq(again.reduced, r.reduced));  // idempotent
  }
}

TEST_CASE("solve") {
  Matrix id = Matrix::Identity(3, 3);
  Vector b(3);
  b << Scalar(3), Scalar(-1), Scalar(Rational(1, 2));
  auto x = solve(id, b);
  REQUIRE(x.has_value());
  CHECK(vec_eq(*x, b));

  // dependent columns, consistent system: verify by substitution
  Matrix dep(2, 3);
  dep << Scalar(1), Scalar(2), Scalar(3), Scalar(2), Scalar(4), Scalar(6);
  Vector rhs(2);
  rhs << Scalar(6), Scalar(12);
  auto y = solve(dep, rhs);
  REQUIRE(y.has_value());
  CHECK(vec_eq((dep * (*y)).eval(), rhs));

  // inconsistent input is a value, not an error
  Vector bad(2);
  bad << Scalar(6), Scalar(13);
  CHECK(!solve(dep, bad).has_value());

  for (int trial = 0; trial < 40; ++trial) {
    Matrix a = random_matrix(3, 4);
    Vector v(4);
    for (int i = 0; i < 4; ++i) v(i) = random_entry();
    Vector rhs2 = a * v;
    auto sol = solve(a, rhs2);
    REQUIRE(sol.has_value());
    CHECK(vec_eq((a * (*sol)).eval(), rhs2));
  }
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(Matrix::Identity(3, 3)).empty());

  Matrix zero = Matrix::Constant(3, 3, Scalar(0));
  auto k = kernel_basis(zero);
  REQUIRE(k.size() == 3);
  for (int i = 0; i < 3; ++i) {
    Vector e = Vector::Constant(3, Scalar(0));
    e(i) = Scalar(1);
    CHECK(vec_eq(k[i], e));
  }

  // rank-nullity on the hexagon matrix: rank 2 over 6 columns
  auto hk = kernel_basis(hexagon_j_matrix());
  CHECK(hk.size() == 4);
  for (const Vector& v : hk) {
    CHECK(is_zero_vector((hexagon_j_matrix() * v).eval()));
  }
}

TEST_CASE("determinant and content") {
  CHECK(determinant(a2_gram()) == Scalar(3));
  Matrix rot(2, 2);
  rot << Scalar(0), Scalar(-1), Scalar(1), Scalar(0);
  CHECK(determinant(rot) == Scalar(1));

  Vector v(2);
  v << Scalar(Rational(2, 3)), Scalar(Rational(1, 3));
  CHECK(vector_content(v) == Rational(1, 3));
  Vector q(2);
  q << Scalar(Rational(1, 2), Rational(3, 2), 5), Scalar(Rational(0), Rational(1, 2), 5);
  CHECK(vector_content(q) == Rational(1, 2));
}
