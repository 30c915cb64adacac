#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unordered_set>

#include "ctk/mat.hpp"

using namespace ctk::gf;
using namespace ctk::grp;

TEST_CASE("construction, identity, and entry access") {
  const Field& f5 = Field::get(5, 1);
  Mat z = Mat::zero(f5, 3);
  CHECK(z.n == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(z.at(i, j) == 0);

  Mat id = Mat::identity(f5, 3);
  CHECK(id.is_identity());
  CHECK(id.is_scalar());
  CHECK_FALSE(z.is_identity());

  CHECK_THROWS_AS(Mat(f5, kMaxN + 1), MatError);
  CHECK_THROWS_AS(Mat(f5, 0), MatError);
}

TEST_CASE("arithmetic matches hand-computed values over GF(7)") {
  const Field& f7 = Field::get(7, 1);
  Mat a = mat_from_ints(f7, 2, {1, 2, 3, 4});
  Mat b = mat_from_ints(f7, 2, {0, 1, 1, 0});
  CHECK(a * b == mat_from_ints(f7, 2, {2, 1, 4, 3}));
  CHECK(a + b == mat_from_ints(f7, 2, {1, 3, 4, 4}));
  CHECK(a - b == mat_from_ints(f7, 2, {1, 1, 2, 4}));
  CHECK(a.scaled(3) == mat_from_ints(f7, 2, {3, 6, 2, 5}));
  CHECK(a.transpose() == mat_from_ints(f7, 2, {1, 3, 2, 4}));
  // det(a) = 1*4 - 2*3 = -2 = 5 mod 7
  CHECK(a.det() == 5);
  CHECK(a.rank() == 2);
  CHECK(mat_from_ints(f7, 2, {1, 2, 2, 4}).rank() == 1);
}

TEST_CASE("inverse, powers, and multiplicative order") {
  const Field& f3 = Field::get(3, 1);
  Mat a = mat_from_ints(f3, 2, {1, 1, 0, 1});
  Mat ai = a.inverse();
  CHECK(a * ai == Mat::identity(f3, 2));
  CHECK(a.pow(3) == Mat::identity(f3, 2));
  CHECK(a.pow(-1) == ai);
  CHECK(a.pow(0) == Mat::identity(f3, 2));
  CHECK(a.order() == 3);

  Mat s = mat_from_ints(f3, 2, {0, 1, 2, 0});  // det = -2 = 1, order 4
  CHECK(s.order() == 4);
  CHECK(s.pow(4) == Mat::identity(f3, 2));

  Mat sing = mat_from_ints(f3, 2, {1, 1, 1, 1});
  CHECK_THROWS_AS(sing.inverse(), MatError);
}

TEST_CASE("conjugation is a left action preserving order") {
  const Field& f5 = Field::get(5, 1);
  Mat g = mat_from_ints(f5, 2, {1, 2, 0, 1});
  Mat h = mat_from_ints(f5, 2, {2, 0, 1, 3});
  Mat x = mat_from_ints(f5, 2, {0, 4, 1, 0});
  CHECK(g.conj(x) == g * x * g.inverse());
  CHECK((g * h).conj(x) == g.conj(h.conj(x)));
  CHECK(g.conj(x).order() == x.order());
}

TEST_CASE("entry-wise Frobenius over GF(9)") {
  const Field& f9 = Field::get(3, 2);
  Fq t = f9.generator();
  Mat m = Mat::zero(f9, 2);
  m.set(0, 0, t);
  m.set(1, 1, f9.add(t, 1));
  Mat mf = m.entry_frobenius(1);
  CHECK(mf.at(0, 0) == f9.pow(t, 3));
  CHECK(mf.at(1, 1) == f9.pow(f9.add(t, 1), 3));
  CHECK(mf.entry_frobenius(1) == m);  // Frobenius has order 2 on GF(9)
}

TEST_CASE("total order, hashing, and antidiagonal helper") {
  const Field& f2 = Field::get(2, 1);
  Mat a = mat_from_ints(f2, 2, {0, 1, 1, 0});
  Mat b = mat_from_ints(f2, 2, {1, 0, 0, 1});
  CHECK(a < b);
  CHECK_FALSE(b < a);
  CHECK(a != b);

  std::unordered_set<Mat, MatHash> s{a, b, a};
  CHECK(s.size() == 2);

  CHECK(antidiag_ones(f2, 2) == a);
  Mat j3 = antidiag_ones(Field::get(3, 1), 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(j3.at(i, j) == (i + j == 2 ? 1 : 0));
}
