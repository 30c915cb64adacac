#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ctk/grp.hpp"

using namespace ctk;
using namespace ctk::grp;

TEST_CASE("group spec parsing") {
  auto s = GroupSpec::parse("sp4:9");
  CHECK(s.family == Family::Sp);
  CHECK(s.n == 4);
  CHECK(s.q == 9);
  CHECK(!s.mod_center);
  CHECK(s.str() == "sp4:9");

  auto z = GroupSpec::parse("su3:4/z");
  CHECK(z.family == Family::SU);
  CHECK(z.mod_center);
  CHECK(z.str() == "su3:4/z");

  CHECK_THROWS_AS(GroupSpec::parse("xx2:3"), GrpError);
  CHECK_THROWS_AS(GroupSpec::parse("sp3:3"), GrpError);
  CHECK_THROWS_AS(GroupSpec::parse("sl2"), GrpError);
}

TEST_CASE("matrix basics") {
  const gf::Field& f5 = gf::Field::get(5, 1);
  Mat a = mat_from_ints(f5, 2, {1, 2, 3, 4});
  CHECK(a.det() == f5.from_int(1 * 4 - 2 * 3));
  Mat ai = a.inverse();
  CHECK((a * ai).is_identity());
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.pow(-1) == ai);
  Mat t = mat_from_ints(f5, 2, {1, 1, 0, 1});
  CHECK(t.order() == 5);
}

TEST_CASE("orders by closure enumeration") {
  CHECK(make_group("sl2:2").enumerate().size() == 6);
  CHECK(make_group("sl2:3").enumerate().size() == 24);
  CHECK(make_group("sl2:4").enumerate().size() == 60);
  CHECK(make_group("sl2:5").enumerate().size() == 120);
  CHECK(make_group("su3:2").enumerate().size() == 216);
  auto sp43 = make_group("sp4:3");
  CHECK(sp43.enumerate().size() == 51840);
  CHECK(sp43.order_verified);
  CHECK(make_group("sp4:3/z").enumerate().size() == 25920);
  CHECK(make_group("su4:2").enumerate().size() == 25920);
}

TEST_CASE("membership closed under product and inverse, random pairs") {
  std::mt19937_64 rng(12345);
  for (const char* name : {"sl2:7", "sp4:3", "su3:3"}) {
    auto G = make_group(name);
    const auto& els = G.enumerate();
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    for (int k = 0; k < 10000; ++k) {
      const Mat& a = els[pick(rng)];
      const Mat& b = els[pick(rng)];
      CHECK(G.member(a * b));
      CHECK(G.member(a.inverse()));
    }
  }
}

TEST_CASE("symplectic form and Steinberg map invariants") {
  auto sp = make_group("sp4:3");
  for (const Mat& g : sp.enumerate())
    REQUIRE(g.transpose() * *sp.form * g == *sp.form);

  auto su = make_group("su3:2");
  for (const Mat& g : su.enumerate()) {
    REQUIRE(su.steinberg(g) == g);
    REQUIRE(su.steinberg(su.steinberg(g)) == g);  // entrywise q^2-power = id
  }
}

TEST_CASE("conj_orbit") {
  auto G = make_group("sl2:7");
  Mat x = mat_from_ints(*G.F, 2, {1, 1, 0, 1});
  // self-conjugation fixes x
  std::vector<Mat> self{x};
  auto o1 = conj_orbit(G, self, x);
  CHECK(o1 == std::vector<Mat>{x});
  // transvection class size 24 = |G| / |centralizer|
  auto full = conj_orbit(G, G.gens, x);
  CHECK(full.size() == 24);
  auto c = centralizer(G, x);
  CHECK(full.size() * c.size() == G.enumerate().size());
  // orbit independent of generator order
  auto shuffled = G.gens;
  std::reverse(shuffled.begin(), shuffled.end());
  CHECK(conj_orbit(G, shuffled, x) == full);
}

TEST_CASE("conjugacy classes partition the group") {
  for (const char* name : {"sl2:3", "sl2:5", "su3:2", "sp4:3/z"}) {
    auto G = make_group(name);
    auto classes = conjugacy_classes(G);
    std::size_t total = 0, order = G.enumerate().size();
    for (auto& c : classes) {
      total += c.members.size();
      CHECK(order % c.members.size() == 0);
      CHECK(c.rep == c.members.front());
      CHECK(std::is_sorted(c.members.begin(), c.members.end()));
    }
    CHECK(total == order);
  }
}

TEST_CASE("orbit-stabilizer across all classes of Sp(4,3)") {
  auto G = make_group("sp4:3");
  auto classes = conjugacy_classes(G);
  std::size_t order = G.enumerate().size();
  for (auto& c : classes) {
    auto cent = centralizer(G, c.rep);
    CHECK(c.members.size() * cent.size() == order);
  }
}

TEST_CASE("central quotient representatives") {
  auto G = make_group("sp4:3");
  CHECK(G.center_scalars.size() == 2);
  const auto& els = G.enumerate();
  Mat minus = Mat::identity(*G.F, 4).scaled(G.F->minus_one());
  std::unordered_set<Mat, MatHash> reps;
  for (const Mat& x : els) {
    Mat r = G.central_quotient_rep(x);
    CHECK(r == G.central_quotient_rep(minus * x));  // constant on cosets
    reps.insert(r);
  }
  CHECK(reps.size() == els.size() / 2);  // injective across cosets
  Mat id = Mat::identity(*G.F, 4);
  CHECK(G.central_quotient_rep(id) == id);
}

TEST_CASE("is_conjugate") {
  auto G = make_group("sl2:5");
  Mat a = mat_from_ints(*G.F, 2, {1, 1, 0, 1});
  CHECK(is_conjugate(G, a, a) == Tri::True);
  // s_beta-conjugate of x_beta(1) is x_{-beta}(-1); they are conjugate in
  // the 120-element group
  Mat s = mat_from_ints(*G.F, 2, {0, 1, -1, 0});
  Mat b = s.conj(a);
  CHECK(b == mat_from_ints(*G.F, 2, {1, 0, -1, 1}));
  CHECK(is_conjugate(G, a, b) == Tri::True);
  // different order elements are never conjugate
  Mat d = mat_from_ints(*G.F, 2, {2, 0, 0, 3});
  CHECK(is_conjugate(G, a, d) == Tri::False);
  // tiny cap reports inconclusive, never false
  CHECK(is_conjugate(G, a, b, 3) == Tri::Inconclusive);
}

TEST_CASE("su generator sets verify the order formula") {
  CHECK(make_group("su3:3").enumerate().size() == 6048);
  CHECK(make_group("su3:4").enumerate().size() == 62400);
}

TEST_CASE("ambient GL for PGL conjugation") {
  auto G = make_group("gl2:5/z");
  CHECK(G.center_scalars.size() == 4);
  CHECK(G.enumerate().size() == 120);  // PGL2(5)
}
