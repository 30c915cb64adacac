#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ctk/gf.hpp"

using namespace ctk::gf;

TEST_CASE("make_field basics") {
  const Field& f3 = Field::get(3, 1);
  CHECK(f3.q() == 3);
  CHECK(f3.order(f3.generator()) == 2);

  const Field& f9 = Field::get(3, 2);
  CHECK(f9.q() == 9);
  CHECK(f9.order(f9.generator()) == 8);

  CHECK_THROWS_AS(Field(4, 1), FieldError);
  CHECK_THROWS_AS(Field(3, 0), FieldError);
  CHECK_THROWS_AS(Field(3, 7), FieldError);
}

TEST_CASE("GF(4) least modulus is x^2 = x + 1 and table matches brute force") {
  const Field& f4 = Field::get(2, 2);
  // modulus x^2 + x + 1, little-endian (1,1,1)
  CHECK(f4.modulus() == std::vector<int>{1, 1, 1});
  // brute-force multiplication table via polynomial arithmetic mod (1,1,1):
  // elements 0,1,x,x+1 have value indices 0,1,2,3
  int expect[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  for (Fq a = 0; a < 4; ++a)
    for (Fq b = 0; b < 4; ++b) CHECK(f4.mul(a, b) == Fq(expect[a][b]));
}

TEST_CASE("field axioms, exhaustively for q <= 81") {
  for (auto [p, m] : {std::pair{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 6},
                      {3, 1}, {3, 2}, {3, 4}, {5, 1}, {7, 1}, {7, 2}}) {
    const Field& f = Field::get(p, m);
    INFO("GF(", f.q(), ")");
    for (Fq a = 0; a < f.q(); ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (Fq b = 0; b < f.q(); ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
      }
    }
    // associativity and distributivity sampled
    for (Fq a = 0; a < f.q(); a += 2)
      for (Fq b = 1; b < f.q(); b += 3)
        for (Fq c = 0; c < f.q(); c += 3) {
          CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
  }
}

TEST_CASE("frobenius") {
  const Field& f3 = Field::get(3, 1);
  for (Fq a = 0; a < 3; ++a) CHECK(f3.frobenius(a, 1) == a);

  const Field& f9 = Field::get(3, 2);
  Fq g = f9.generator();
  CHECK(f9.frobenius(g, 1) == f9.pow(g, 3));
  CHECK(f9.frobenius(g, 2) == g);

  const Field& f4 = Field::get(2, 2);
  for (Fq a = 0; a < 4; ++a)
    for (Fq b = 0; b < 4; ++b)
      CHECK(f4.mul(f4.add(a, b), f4.add(a, b)) ==
            f4.add(f4.mul(a, a), f4.mul(b, b)));

  // ring automorphism on all pairs, q <= 81
  for (auto [p, m] : {std::pair{2, 2}, {2, 4}, {3, 2}, {3, 4}, {2, 6}}) {
    const Field& f = Field::get(p, m);
    for (int k = 1; k < f.m(); ++k)
      for (Fq a = 0; a < f.q(); ++a)
        for (Fq b = 0; b < f.q(); ++b) {
          CHECK(f.frobenius(f.add(a, b), k) ==
                f.add(f.frobenius(a, k), f.frobenius(b, k)));
          CHECK(f.frobenius(f.mul(a, b), k) ==
                f.mul(f.frobenius(a, k), f.frobenius(b, k)));
        }
  }
}

TEST_CASE("coefficient round trip") {
  for (auto [p, m] : {std::pair{2, 2}, {3, 2}, {5, 1}, {2, 4}}) {
    const Field& f = Field::get(p, m);
    for (Fq a = 0; a < f.q(); ++a) CHECK(f.from_coeffs(f.coeffs(a)) == a);
  }
}

TEST_CASE("subfield embedding GF(q) in GF(q^2)") {
  for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    const Field& s = Field::get(p, m);
    const Field& b = Field::get(p, 2 * m);
    SubfieldEmbedding emb(s, b);
    // multiplicative too (additive is checked at construction)
    for (Fq x = 0; x < s.q(); ++x)
      for (Fq y = 0; y < s.q(); ++y)
        CHECK(emb(s.mul(x, y)) == b.mul(emb(x), emb(y)));
    // the fixed field has exactly q elements, all hit by the embedding
    int fixed = 0;
    for (Fq x = 0; x < b.q(); ++x)
      if (emb.in_subfield(x)) ++fixed;
    CHECK(fixed == int(s.q()));
    CHECK(emb(s.one()) == b.one());
  }
  CHECK_THROWS_AS(SubfieldEmbedding(Field::get(2, 1), Field::get(2, 3)),
                  FieldError);
}

TEST_CASE("hermitian pairs") {
  // q=2: |U^F| = q^3 = 8
  CHECK(hermitian_pairs(Field::get(2, 2), 2).size() == 8);
  // q=3: 27 pairs
  CHECK(hermitian_pairs(Field::get(3, 2), 3).size() == 27);
  // q=4: 64 pairs
  CHECK(hermitian_pairs(Field::get(2, 4), 4).size() == 64);
  // xi = 0 has exactly q solutions (kernel of the trace map)
  for (int q : {2, 3, 4}) {
    auto [p, m] = factor_prime_power(q);
    auto pairs = hermitian_pairs(Field::get(p, 2 * m), q);
    int zero_xi = 0;
    for (auto& [xi, eta] : pairs)
      if (xi == 0) ++zero_xi;
    CHECK(zero_xi == q);
  }
  CHECK_THROWS_AS(hermitian_pairs(Field::get(3, 1), 3), FieldError);
  CHECK_THROWS_AS(hermitian_pairs(Field::get(3, 2), 2), FieldError);
}

TEST_CASE("deterministic modulus across constructions") {
  Field a(3, 2), b(3, 2);
  CHECK(a.modulus() == b.modulus());
  CHECK(a.generator() == b.generator());
}
