#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <set>

#include "ctk/lie.hpp"

using namespace ctk;
using namespace ctk::lie;

namespace {

Root rt(std::initializer_list<int> v) { return Root(v); }

std::vector<std::pair<Kind, int>> all_supported(int max_rank) {
  std::vector<std::pair<Kind, int>> out;
  for (int l = 1; l <= max_rank; ++l) out.push_back({Kind::A, l});
  for (int l = 2; l <= max_rank; ++l) out.push_back({Kind::B, l});
  for (int l = 2; l <= max_rank; ++l) out.push_back({Kind::C, l});
  for (int l = 3; l <= max_rank; ++l) out.push_back({Kind::D, l});
  for (int l = 6; l <= std::min(8, max_rank); ++l) out.push_back({Kind::E, l});
  if (max_rank >= 4) out.push_back({Kind::F, 4});
  if (max_rank >= 2) out.push_back({Kind::G, 2});
  return out;
}

}  // namespace

TEST_CASE("root system construction examples") {
  auto a2 = build_root_system(Kind::A, 2);
  CHECK(a2.roots.size() == 6);
  CHECK(a2.roots[a2.highest_root] == rt({1, 1}));
  CHECK(!a2.highest_short_root.has_value());

  auto g2 = build_root_system(Kind::G, 2);
  CHECK(g2.roots.size() == 12);

  auto b3 = build_root_system(Kind::B, 3);
  CHECK(b3.roots.size() == 18);
  REQUIRE(b3.highest_short_root.has_value());
  CHECK(b3.roots[*b3.highest_short_root] == rt({1, 1, 1}));
  CHECK(b3.roots[b3.highest_root] == rt({1, 2, 2}));

  CHECK_THROWS_AS(build_root_system(Kind::E, 5), LieError);
  CHECK_THROWS_AS(build_root_system(Kind::F, 3), LieError);
  CHECK_THROWS_AS(build_root_system(Kind::D, 2), LieError);
}

TEST_CASE("cartan conventions pinned") {
  // cartan[i][j] = <alpha_j, alpha_i^vee>, 0-based Bourbaki numbering
  CHECK(build_root_system(Kind::B, 3).cartan[2][1] == -2);
  CHECK(build_root_system(Kind::B, 3).cartan[1][2] == -1);
  CHECK(build_root_system(Kind::C, 3).cartan[1][2] == -2);
  CHECK(build_root_system(Kind::C, 3).cartan[2][1] == -1);
  CHECK(build_root_system(Kind::G, 2).cartan[0][1] == -3);
  CHECK(build_root_system(Kind::F, 4).cartan[2][1] == -2);
}

TEST_CASE("closure invariants for every supported type of rank <= 8") {
  for (auto [k, l] : all_supported(8)) {
    auto rs = build_root_system(k, l);
    std::set<Root> set(rs.roots.begin(), rs.roots.end());
    for (const Root& r : rs.roots) {
      Root neg = r;
      for (int& c : neg) c = -c;
      CHECK(set.count(neg) == 1);  // closed under negation
    }
    CHECK(rs.positives.size() * 2 == rs.roots.size());
    for (int idx : rs.positives)
      for (int c : rs.roots[idx]) CHECK(c >= 0);
    // simple reflections permute the root set
    for (int i = 0; i < l; ++i)
      for (const Root& r : rs.roots)
        CHECK(set.count(rs.reflect(i, r)) == 1);
  }
}

TEST_CASE("longest element and is_minus_one") {
  for (auto [k, l] : all_supported(8)) {
    auto rs = build_root_system(k, l);
    auto w0 = longest_element(rs);
    CHECK(w0.letters.size() == rs.positives.size());
    // w0 sends every positive root to a negative one, and w0^2 = id on roots
    WeylWord sq;
    sq.letters = w0.letters;
    sq.letters.insert(sq.letters.end(), w0.letters.begin(), w0.letters.end());
    for (const Root& r : rs.roots) {
      if (rs.is_positive(r)) CHECK(!rs.is_positive(weyl_act_root(rs, w0, r)));
      CHECK(weyl_act_root(rs, sq, r) == r);
    }
    bool expect = (k == Kind::A && l == 1) || k == Kind::B || k == Kind::C ||
                  (k == Kind::D && l % 2 == 0) ||
                  (k == Kind::E && (l == 7 || l == 8)) || k == Kind::F ||
                  k == Kind::G;
    CHECK(is_minus_one(rs) == expect);
  }
}

TEST_CASE("eval_root") {
  auto b3 = build_root_system(Kind::B, 3);
  const gf::Field& f5 = gf::Field::get(5, 1);
  TorusElem id = torus_identity(b3, f5);
  for (const Root& r : b3.roots) CHECK(eval_root(b3, r, id) == f5.from_int(1));

  // t = alpha_3^vee(-1): alpha_2(t) = (-1)^{<alpha_2, alpha_3^vee>}
  // = (-1)^{-2} = 1 (derived from the Cartan matrix; the pairing of the
  // middle long root with the short coroot is -2)
  TorusElem t = id;
  t.exponents[2] = f5.minus_one();
  CHECK(eval_root(b3, b3.simple(1), t) == f5.from_int(1));
  CHECK(eval_root(b3, b3.simple(2), t) == f5.from_int(1));  // (-1)^2
  // alpha_1 pairs trivially with alpha_3^vee
  CHECK(eval_root(b3, b3.simple(0), t) == f5.from_int(1));
  // in fact alpha_3^vee(-1) is the tabulated central element: all roots 1
  for (const Root& r : b3.roots) CHECK(eval_root(b3, r, t) == f5.from_int(1));
  // a non-central example: alpha_2^vee(-1) gives alpha_3 the value
  // (-1)^{<alpha_3, alpha_2^vee>} = (-1)^{-1} = -1
  TorusElem t2 = id;
  t2.exponents[1] = f5.minus_one();
  CHECK(eval_root(b3, b3.simple(2), t2) == f5.minus_one());
}

TEST_CASE("weyl action on torus elements") {
  auto c2 = build_root_system(Kind::C, 2);
  const gf::Field& f9 = gf::Field::get(3, 2);
  auto w0 = longest_element(c2);
  REQUIRE(is_minus_one(c2));
  for (gf::Fq a = 1; a < f9.q(); ++a)
    for (gf::Fq b = 1; b < f9.q(); ++b) {
      TorusElem t{&f9, {a, b}};
      // identity word fixes t
      CHECK(weyl_act_torus(c2, WeylWord{}, t) == t);
      // w0 = -1 inverts every exponent
      CHECK(weyl_act_torus(c2, w0, t) == torus_inverse(t));
      // compatibility: alpha(w(t)) = (w^{-1} alpha)(t) for simple reflections
      for (int i = 0; i < 2; ++i) {
        WeylWord si{{i}};
        TorusElem st = weyl_act_torus(c2, si, t);
        for (const Root& r : c2.roots)
          CHECK(eval_root(c2, r, st) ==
                eval_root(c2, c2.reflect(i, r), t));
      }
    }
}

TEST_CASE("noncentral torus elements admit a moving simple root, C2/GF(5)") {
  auto c2 = build_root_system(Kind::C, 2);
  const gf::Field& f5 = gf::Field::get(5, 1);
  gf::Fq one = f5.from_int(1);
  for (gf::Fq a = 1; a < 5; ++a)
    for (gf::Fq b = 1; b < 5; ++b) {
      TorusElem t{&f5, {a, b}};
      bool central = true;
      for (int i = 0; i < 2; ++i)
        if (eval_root(c2, c2.simple(i), t) != one) central = false;
      if (central) continue;
      bool found = false;
      for (int i = 0; i < 2; ++i) {
        WeylWord si{{i}};
        if (!(weyl_act_torus(c2, si, t) == t) &&
            eval_root(c2, c2.simple(i), t) != one)
          found = true;
      }
      CHECK(found);
    }
}

TEST_CASE("phi_t") {
  auto c2 = build_root_system(Kind::C, 2);
  const gf::Field& f5 = gf::Field::get(5, 1);
  // alpha_1^vee(-1) is the central element of Sp4: full system survives
  TorusElem zc{&f5, {f5.minus_one(), f5.from_int(1)}};
  auto full = phi_t(c2, zc);
  CHECK(full.root_indices.size() == c2.roots.size());
  CHECK(subsystem_type_string(full) == "B2");  // rank-2 doubly laced label

  // split torus element with two eigenvalue groups: long roots survive
  TorusElem t{&f5, {f5.from_int(1), f5.minus_one()}};
  auto sub = phi_t(c2, t);
  CHECK(sub.root_indices.size() == 4);
  CHECK(subsystem_type_string(sub) == "A1xA1");

  // B3 with t = a1^vee(-1) a2^vee(-1) a3^vee(xi), xi^2 = -1: type B2
  auto b3 = build_root_system(Kind::B, 3);
  const gf::Field& f9 = gf::Field::get(3, 2);
  gf::Fq xi = f9.pow(f9.generator(), 2);
  REQUIRE(f9.mul(xi, xi) == f9.minus_one());
  TorusElem tb{&f9, {f9.minus_one(), f9.minus_one(), xi}};
  CHECK(subsystem_type_string(phi_t(b3, tb)) == "B2");

  // generic element: empty subsystem
  TorusElem tg{&f9, {f9.generator(), f9.pow(f9.generator(), 3)}};
  auto a2 = build_root_system(Kind::A, 2);
  CHECK(subsystem_type_string(phi_t(a2, tg)) == "0");
}

TEST_CASE("center tables, split forms") {
  auto check_one = [](Kind k, int l, long long q, long long order) {
    auto g = center_table(k, l, q, 1);
    REQUIRE(g.size() == 1);
    CHECK(g[0].order == order);
  };
  for (long long q : {3, 5, 7, 9}) {
    check_one(Kind::B, 2, q, 2);
    check_one(Kind::B, 3, q, 2);
    check_one(Kind::C, 3, q, 2);
    check_one(Kind::C, 4, q, 2);
    check_one(Kind::E, 7, q, 2);
    // D4: Z/2 x Z/2
    auto d4 = center_table(Kind::D, 4, q, 1);
    REQUIRE(d4.size() == 2);
    CHECK(d4[0].order == 2);
    CHECK(d4[1].order == 2);
    CHECK(!(d4[0].z == d4[1].z));
    // D5: cyclic of order gcd(4, q-1+2) -> 4 when q=1 mod 4, else 2
    auto d5 = center_table(Kind::D, 5, q, 1);
    REQUIRE(d5.size() == 1);
    CHECK(d5[0].order == (q % 4 == 1 ? 4 : 2));
  }
  // E6: order 3 iff q = 1 mod 3
  CHECK(center_table(Kind::E, 6, 7, 1).size() == 1);
  CHECK(center_table(Kind::E, 6, 7, 1)[0].order == 3);
  CHECK(center_table(Kind::E, 6, 5, 1).empty());
  // E8, F4, G2: always trivial
  CHECK(center_table(Kind::E, 8, 5, 1).empty());
  CHECK(center_table(Kind::F, 4, 4, 1).empty());
  CHECK(center_table(Kind::G, 2, 2, 1).empty());
  // outside coverage
  CHECK_THROWS_AS(center_table(Kind::B, 2, 4, 1), LieError);
  CHECK_THROWS_AS(center_table(Kind::A, 3, 5, 1), LieError);
}

TEST_CASE("center tables, twisted forms") {
  // 2A_l: cyclic of order d = gcd(q+1, l+1)
  auto su32 = center_table(Kind::A, 2, 2, 2);
  REQUIRE(su32.size() == 1);
  CHECK(su32[0].order == 3);
  auto su43 = center_table(Kind::A, 3, 3, 2);
  REQUIRE(su43.size() == 1);
  CHECK(su43[0].order == 4);
  CHECK(center_table(Kind::A, 4, 2, 2).empty());   // gcd(3,5) = 1
  CHECK(center_table(Kind::A, 2, 3, 2).empty());   // gcd(4,3) = 1
  // 2D
  auto d43 = center_table(Kind::D, 4, 3, 2);
  REQUIRE(d43.size() == 1);
  CHECK(d43[0].order == 2);
  CHECK(center_table(Kind::D, 5, 2, 2).empty());
  // 2E6
  auto e62 = center_table(Kind::E, 6, 2, 2);
  REQUIRE(e62.size() == 1);
  CHECK(e62[0].order == 3);
  CHECK(center_table(Kind::E, 6, 3, 2).empty());
  // 3D4 trivial; triality only exists for D4
  CHECK(center_table(Kind::D, 4, 3, 3).empty());
  CHECK(center_table(Kind::D, 4, 2, 3).empty());
  CHECK_THROWS_AS(center_table(Kind::D, 5, 3, 3), LieError);
  CHECK_THROWS_AS(center_table(Kind::B, 3, 3, 2), LieError);
}

TEST_CASE("golden files pin the conventions") {
  for (const char* name : {"A2", "B3", "C2", "D4", "E6", "F4", "G2"}) {
    Kind k = kind_from_char(name[0]);
    int l = name[1] - '0';
    auto rs = build_root_system(k, l);
    auto w0 = longest_element(rs);
    nlohmann::json j;
    j["type"] = std::string(1, name[0]);
    j["rank"] = l;
    j["cartan"] = rs.cartan;
    j["roots"] = rs.roots;
    j["w0"] = w0.letters;
    std::ifstream in(std::string(CTK_DATA_DIR) + "/rootsys/" + name + ".json");
    REQUIRE(in.good());
    nlohmann::json want = nlohmann::json::parse(in);
    CHECK(j == want);
  }
}
