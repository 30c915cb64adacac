#include "ctk/witness.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "ctk/jordan.hpp"
#include "ctk/rack.hpp"

namespace ctk::witness {
namespace {

using gf::Field;
using gf::Fq;
using grp::GroupHandle;
using grp::Mat;
using grp::MatHash;

struct Ctx {
  WitnessReport* rep = nullptr;
  bool strict = false;
  bool fast = true;
  bool slow = false;

  void claim(const std::string& name, bool ok, std::string detail = "") {
    rep->claims.push_back({name, ok, std::move(detail)});
    if (!ok) {
      rep->pass = false;
      if (strict)
        throw ClaimFailed("claim failed in " + rep->id + ": " + name +
                          (rep->claims.back().detail.empty()
                               ? ""
                               : " (" + rep->claims.back().detail + ")"));
    }
  }
  void assume(std::string note) { rep->assumptions.push_back(std::move(note)); }
};

Mat mk(const Field& F, int n, const std::vector<Fq>& vals) {
  Mat m(F, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, vals[i * n + j]);
  return m;
}

// breadth-first conjugation orbit under explicit generators, plain matrices
struct OrbitRes {
  std::vector<Mat> elems;  // sorted
  bool capped = false;
};
OrbitRes plain_orbit(const std::vector<Mat>& gens, const Mat& x,
                     std::size_t cap = 200000) {
  std::vector<std::pair<Mat, Mat>> acts;
  for (const Mat& g : gens) {
    Mat gi = g.inverse();
    acts.push_back({g, gi});
    if (gi != g) acts.push_back({gi, g});
  }
  std::unordered_set<Mat, MatHash> seen{x};
  std::deque<Mat> bfs{x};
  OrbitRes res;
  while (!bfs.empty()) {
    Mat y = bfs.front();
    bfs.pop_front();
    for (const auto& [g, gi] : acts) {
      Mat z = g * y * gi;
      if (seen.insert(z).second) {
        if (seen.size() > cap) {
          res.capped = true;
          break;
        }
        bfs.push_back(z);
      }
    }
    if (res.capped) break;
  }
  res.elems.assign(seen.begin(), seen.end());
  std::sort(res.elems.begin(), res.elems.end());
  return res;
}

bool sorted_disjoint(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  std::vector<Mat> inter;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(inter));
  return inter.empty();
}

bool upper_triangular(const Mat& m) {
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < i; ++j)
      if (m.at(i, j) != 0) return false;
  return true;
}

// lexicographically least scalar multiple, for quotient-level disjointness
Mat scalar_min(const Mat& m, const std::vector<Mat>& scalars) {
  Mat best = m;
  for (const Mat& z : scalars) {
    Mat c = z * m;
    if (c < best) best = c;
  }
  return best;
}

std::vector<Mat> scalar_min_set(const std::vector<Mat>& ms,
                                const std::vector<Mat>& scalars) {
  std::vector<Mat> out;
  out.reserve(ms.size());
  for (const Mat& m : ms) out.push_back(scalar_min(m, scalars));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// frozen coset-shape predicate for the rank-2 symplectic Borel
// ---------------------------------------------------------------------------

struct CosetShape {
  bool upper = true;
  int zi = 1, zj = 2;  // entry that vanishes on T*V elements
  int ni = 1, nj = 2, di = 1, dj = 1;
};

CosetShape load_coset_shape() {
  std::ifstream in(std::string(CTK_DATA_DIR) + "/sp4_coset_shape.json");
  if (!in) throw WitnessError("cannot open sp4_coset_shape.json");
  nlohmann::json j;
  in >> j;
  CosetShape s;
  s.upper = j.at("upper_triangular").get<bool>();
  s.zi = j.at("v_zero_entry")[0].get<int>();
  s.zj = j.at("v_zero_entry")[1].get<int>();
  s.ni = j.at("coord_num")[0].get<int>();
  s.nj = j.at("coord_num")[1].get<int>();
  s.di = j.at("coord_den")[0].get<int>();
  s.dj = j.at("coord_den")[1].get<int>();
  return s;
}

// coset coordinate of an upper-triangular Borel element; the element lies in
// T*x2(c)*V where c is the returned value (0 means T*V)
Fq coset_coord(const CosetShape& s, const Mat& m) {
  const Field& F = *m.F;
  return F.div(m.at(s.ni, s.nj), m.at(s.di, s.dj));
}

// rank-2 symplectic root subgroup elements in the antidiagonal-form
// realization (first simple root short in the chosen numbering)
Mat sp4_x_a1(const Field& F, Fq v) {
  Mat m = Mat::identity(F, 4);
  m.set(0, 1, v);
  m.set(2, 3, F.neg(v));
  return m;
}
Mat sp4_x_a2(const Field& F, Fq v) {
  Mat m = Mat::identity(F, 4);
  m.set(1, 2, v);
  return m;
}
Mat sp4_x_a12(const Field& F, Fq v) {  // a1 + a2
  Mat m = Mat::identity(F, 4);
  m.set(0, 2, v);
  m.set(1, 3, v);
  return m;
}
Mat sp4_x_2a12(const Field& F, Fq v) {  // 2a1 + a2
  Mat m = Mat::identity(F, 4);
  m.set(0, 3, v);
  return m;
}

// ---------------------------------------------------------------------------
// W-SP4-9: mixed class with a nontrivial coset obstruction in Sp4(9)
// ---------------------------------------------------------------------------

void run_sp4_9(Ctx& c) {
  if (!c.fast) return;
  auto G = grp::make_group("sp4:9");
  const Field& F = *G.F;
  CosetShape shape = load_coset_shape();
  Fq m1 = F.minus_one();

  Mat sigma = mk(F, 4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
  Mat xa1 = sp4_x_a1(F, 1);
  c.claim("conjugators are symplectic", G.member(sigma) && G.member(xa1));

  int n_ok_forms = 0, n_ok_coset_r = 0, n_ok_coset_s = 0, n_ok_ineq = 0;
  int n_members = 0, total = 0;
  bool capped = false;
  for (Fq a = 1; a < F.q(); ++a) {
    ++total;
    Mat x = Mat::identity(F, 4);
    x.set(0, 0, m1);
    x.set(3, 3, m1);
    x.set(1, 2, a);
    if (G.member(x)) ++n_members;

    Mat r = sigma.conj(x);
    Mat r_exp = Mat::identity(F, 4);
    r_exp.set(1, 1, m1);
    r_exp.set(2, 2, m1);
    r_exp.set(0, 3, a);
    Mat s = xa1.conj(x);
    Mat s_exp = mk(F, 4,
                   {m1, 2, a, a,
                    0, 1, a, a,
                    0, 0, 1, 2,
                    0, 0, 0, m1});
    if (r == r_exp && s == s_exp) ++n_ok_forms;

    Mat w = (r * s).pow(2) * (s * r).pow(-2);
    if (!w.is_scalar()) ++n_ok_ineq;

    auto orb_r = plain_orbit({r, s}, r);
    auto orb_s = plain_orbit({r, s}, s);
    capped = capped || orb_r.capped || orb_s.capped;
    bool r_in_tv = true;
    for (const Mat& m : orb_r.elems)
      r_in_tv = r_in_tv && upper_triangular(m) && coset_coord(shape, m) == 0;
    if (r_in_tv) ++n_ok_coset_r;
    bool s_in_coset = true;
    for (const Mat& m : orb_s.elems)
      s_in_coset = s_in_coset && upper_triangular(m) && coset_coord(shape, m) != 0;
    if (s_in_coset) ++n_ok_coset_s;
  }
  std::string fam = std::to_string(total) + " parameters a";
  c.claim("x = x_s x_a2(a) is symplectic for every a", n_members == total, fam);
  c.claim("conjugates r, s match their stated closed forms", n_ok_forms == total,
          fam);
  c.claim("(pi(r) pi(s))^2 != (pi(s) pi(r))^2", n_ok_ineq == total, fam);
  c.claim("orbit of r stays in T*V (zero coset coordinate)",
          n_ok_coset_r == total && !capped, fam);
  c.claim("orbit of s stays in T*x_a2(F9^x)*V (nonzero coset coordinate)",
          n_ok_coset_s == total && !capped, fam);
}

// ---------------------------------------------------------------------------
// W-SP4-3: the q=3 analogue with a type D certificate downstairs
// ---------------------------------------------------------------------------

void run_sp4_3(Ctx& c) {
  if (!c.fast) return;
  auto G = grp::make_group("sp4:3");
  const Field& F = *G.F;
  CosetShape shape = load_coset_shape();

  auto make_xa = [&](Fq a) {
    return mk(F, 4, {1, 0, 0, 1, 0, 2, a, 0, 0, 0, 2, 0, 0, 0, 0, 1});
  };
  Mat x1 = make_xa(1), x2 = make_xa(2);
  c.claim("both representatives are symplectic", G.member(x1) && G.member(x2));

  // diagonal conjugating family over the quadratic extension
  const Field& F9 = Field::get(3, 2);
  auto lift = [&](const Mat& m) {
    Mat o(F9, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) o.set(i, j, F9.from_int(m.at(i, j)));
    return o;
  };
  Mat x1l = lift(x1), x2l = lift(x2);
  // symplectic similitudes for the antidiagonal form: the entries paired by
  // the form are (1,4) and (2,3), so the inverses must come in the order
  // lam*eta^{-1}, lam*xi^{-1}; d then scales the (1,4) entry by xi^2/lam and
  // the (2,3) entry independently by eta^2/lam
  int n_conj = 0, n_sim = 0;
  Mat J4 = grp::antidiag_ones(F9, 4);
  J4.set(2, 1, F9.minus_one());
  J4.set(3, 0, F9.minus_one());
  for (Fq xi = 1; xi < F9.q(); ++xi)
    for (Fq eta = 1; eta < F9.q(); ++eta)
      for (int lam = 1; lam <= 2; ++lam) {
        Fq l = F9.from_int(lam);
        Mat d = Mat::zero(F9, 4);
        d.set(0, 0, xi);
        d.set(1, 1, eta);
        d.set(2, 2, F9.mul(l, F9.inv(eta)));
        d.set(3, 3, F9.mul(l, F9.inv(xi)));
        if (d.transpose() * J4 * d == J4.scaled(l)) ++n_sim;
        if (d.conj(x1l) == x2l) ++n_conj;
      }
  c.claim("every member of the diagonal family is a form similitude",
          n_sim == 128, std::to_string(n_sim) + " of 128 parameter triples");
  c.claim("some member of the diagonal family carries x1 exactly to x2",
          n_conj > 0, std::to_string(n_conj) + " of 128 parameter triples");
  c.claim("x1 and x2 are nonetheless in different Sp4(3)-classes",
          grp::is_conjugate(G, x1, x2) == grp::Tri::False);

  Mat sigma = mk(F, 4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
  Mat xa1 = sp4_x_a1(F, 1);
  Mat r = x1;
  Mat r1 = sigma.conj(r);
  Mat r1_exp =
      mk(F, 4, {2, 0, 0, 1, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 2});
  Mat s = xa1.conj(r1);
  Mat s_exp =
      mk(F, 4, {2, 2, 1, 2, 0, 1, 1, 1, 0, 0, 1, 2, 0, 0, 0, 2});
  c.claim("r1 and s match their stated closed forms",
          r1 == r1_exp && s == s_exp);

  // coset obstruction upstairs
  auto orb_r = plain_orbit({r, s}, r);
  auto orb_s = plain_orbit({r, s}, s);
  bool r_coset = !orb_r.capped, s_coset = !orb_s.capped;
  for (const Mat& m : orb_r.elems)
    r_coset = r_coset && upper_triangular(m) &&
              coset_coord(shape, m) == F.from_int(2);
  for (const Mat& m : orb_s.elems)
    s_coset = s_coset && upper_triangular(m) &&
              coset_coord(shape, m) == F.from_int(1);
  c.claim("orbit of r stays in T*x_a2(2)*V", r_coset);
  c.claim("orbit of s stays in T*x_a2(1)*V", s_coset);

  // type D certificate in the central quotient, replayed independently
  auto Gz = grp::make_group("sp4:3/z");
  Mat rz = Gz.canon(r), sz = Gz.canon(s);
  bool ineq =
      Gz.op_pow(Gz.op_mul(rz, sz), 2) != Gz.op_pow(Gz.op_mul(sz, rz), 2);
  c.claim("(pi(r) pi(s))^2 != (pi(s) pi(r))^2", ineq);
  std::vector<Mat> gens{rz, sz};
  auto oz_r = grp::conj_orbit(Gz, gens, rz);
  auto oz_s = grp::conj_orbit(Gz, gens, sz);
  c.claim("quotient orbits of r and s are disjoint", sorted_disjoint(oz_r, oz_s),
          "sizes " + std::to_string(oz_r.size()) + ", " +
              std::to_string(oz_s.size()));
  rack::CollapseCertificate cert;
  cert.kind = 'D';
  cert.group = Gz.spec;
  cert.witnesses = {rz, sz};
  cert.orbit_sizes = {(long long)oz_r.size(), (long long)oz_s.size()};
  cert.found_by = "external";
  c.claim("assembled type D certificate replays", rack::verify_certificate(Gz, cert));
}

// ---------------------------------------------------------------------------
// W-CN-Q3 / W-CN-Q7: printed product matrices in Sp4(3) and Sp4(7)
// ---------------------------------------------------------------------------

void run_cn(Ctx& c, int q) {
  if (!c.fast) return;
  auto G = grp::make_group("sp4:" + std::to_string(q));
  const Field& F = *G.F;
  auto i = [&](long long v) { return F.from_int(v); };
  auto ib = [&](long long v, Fq b) { return F.mul(F.from_int(v), b); };

  // allowed upper-left blocks of the two orbits, modulo sign
  std::vector<Mat> ar, as;
  const Field& F2 = F;
  auto blk = [&](long long a, long long b2, long long c2, long long d) {
    return mk(F2, 2, {F.from_int(a), F.from_int(b2), F.from_int(c2),
                      F.from_int(d)});
  };
  if (q == 3) {
    ar = {blk(0, 1, -1, 0)};
    as = {blk(1, 2, 2, 2)};
  } else {
    ar = {blk(0, 1, -1, 0), blk(4, 2, 2, 3)};
    as = {blk(1, -1, 2, -1), blk(-1, -2, 1, 1)};
  }
  auto with_signs = [&](std::vector<Mat> v) {
    std::vector<Mat> out;
    for (const Mat& m : v) {
      out.push_back(m);
      out.push_back(m.scaled(F.minus_one()));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  ar = with_signs(ar);
  as = with_signs(as);

  Mat J2 = grp::antidiag_ones(F, 2);
  auto block_shape_in = [&](const Mat& m, const std::vector<Mat>& allowed) {
    // [[A,B],[0, J2 A^{-t} J2]] with A in the allowed list
    for (int ii = 2; ii < 4; ++ii)
      for (int jj = 0; jj < 2; ++jj)
        if (m.at(ii, jj) != 0) return false;
    Mat A = mk(F, 2, {m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1)});
    Mat D = mk(F, 2, {m.at(2, 2), m.at(2, 3), m.at(3, 2), m.at(3, 3)});
    if (D != J2 * A.inverse().transpose() * J2) return false;
    return std::binary_search(allowed.begin(), allowed.end(), A);
  };

  int total = 0, ok_members = 0, ok_printed = 0, ok_shapes = 0, ok_pi = 0;
  for (Fq b = 1; b < F.q(); ++b) {
    ++total;
    Mat S = mk(F, 4,
               {0, 1, 0, 0, i(-1), 0, 0, 0, 0, 0, 0, i(-1), 0, 0, 1, 0});
    Mat add = Mat::identity(F, 4);
    add.set(0, 3, b);
    add.set(1, 2, b);
    Mat r = S * add;
    Mat r_exp = mk(F, 4,
                   {0, 1, b, 0,
                    i(-1), 0, 0, F.neg(b),
                    0, 0, 0, i(-1),
                    0, 0, 1, 0});
    Mat u = mk(F, 4,
               {0, 1, b, 0, 1, 1, b, 0, 0, 0, 0, 1, 0, 0, 1, i(-1)});
    Mat s = u.conj(r);
    Mat s_exp = mk(F, 4,
                   {1, i(-1), ib(-2, b), 0,
                    2, i(-1), ib(-2, b), 0,
                    0, 0, 1, 1,
                    0, 0, i(-2), i(-1)});
    Mat rs2 = (r * s).pow(2);
    Mat rs2_exp = mk(F, 4,
                     {i(5), i(-3), ib(-7, b), b,
                      i(-3), 2, ib(14, b), ib(5, b),
                      0, 0, i(5), i(3),
                      0, 0, i(3), 2});
    Mat sr2 = (s * r).pow(2);
    Mat sr2_exp = mk(F, 4,
                     {2, i(3), b, ib(11, b),
                      i(3), i(5), ib(4, b), ib(13, b),
                      0, 0, 2, i(-3),
                      0, 0, i(-3), i(5)});
    Mat w = rs2 * sr2.inverse();
    Mat w_exp =
        q == 3 ? mk(F, 4,
                    {1, 0, ib(2, b), b,
                     0, 1, ib(2, b), ib(2, b),
                     0, 0, 1, 0,
                     0, 0, 0, 1})
               : mk(F, 4,
                    {i(-1), 0, F.neg(b), F.neg(b),
                     0, i(-1), ib(4, b), F.neg(b),
                     0, 0, i(-1), 0,
                     0, 0, 0, i(-1)});
    if (G.member(S) && G.member(r) && G.member(u) && G.member(s)) ++ok_members;
    if (r == r_exp && s == s_exp && rs2 == rs2_exp && sr2 == sr2_exp &&
        w == w_exp)
      ++ok_printed;
    if (rs2 != sr2 && !w.is_scalar()) ++ok_pi;

    auto orb_r = plain_orbit({r, s}, r);
    auto orb_s = plain_orbit({r, s}, s);
    bool shapes = !orb_r.capped && !orb_s.capped;
    for (const Mat& m : orb_r.elems) shapes = shapes && block_shape_in(m, ar);
    for (const Mat& m : orb_s.elems) shapes = shapes && block_shape_in(m, as);
    // projective separation: orbits stay disjoint modulo the center
    shapes = shapes && sorted_disjoint(scalar_min_set(orb_r.elems, G.center_scalars),
                                       scalar_min_set(orb_s.elems, G.center_scalars));
    if (shapes) ++ok_shapes;
  }
  std::string fam = std::to_string(total) + " parameters b";
  c.claim("all printed matrices are symplectic group members", ok_members == total,
          fam);
  c.claim("r, s, (rs)^2, (sr)^2 and (rs)^2(sr)^-2 match the printed matrices",
          ok_printed == total, fam);
  c.claim("(rs)^2 != (sr)^2 and the defect is non-central", ok_pi == total, fam);
  c.claim("orbit block shapes and projective separation hold", ok_shapes == total,
          fam);
}

// ---------------------------------------------------------------------------
// W-CN-PARA: parabolic projection onto a PGL2(5) class is a rack morphism
// ---------------------------------------------------------------------------

void run_cn_para(Ctx& c) {
  if (!c.fast) return;
  auto G = grp::make_group("sp4:5");
  const Field& F = *G.F;
  auto Hz = grp::make_group("gl2:5/z");
  const Field& F5 = *Hz.F;

  Mat J2 = grp::antidiag_ones(F, 2);
  auto levi = [&](const Mat& A) {
    Mat m = Mat::zero(F, 4);
    Mat D = J2 * A.inverse().transpose() * J2;
    for (int ii = 0; ii < 2; ++ii)
      for (int jj = 0; jj < 2; ++jj) {
        m.set(ii, jj, A.at(ii, jj));
        m.set(2 + ii, 2 + jj, D.at(ii, jj));
      }
    return m;
  };
  Fq g = F.generator();
  std::vector<Mat> pgens = {
      sp4_x_a1(F, 1), sp4_x_a2(F, 1), sp4_x_a12(F, 1), sp4_x_2a12(F, 1),
      levi(mk(F, 2, {0, 1, F.minus_one(), 0})),
      levi(mk(F, 2, {1, 1, 0, 1})),
      levi(mk(F, 2, {g, 0, 0, 1}))};
  bool gens_ok = true;
  for (const Mat& m : pgens) gens_ok = gens_ok && G.member(m);
  c.claim("parabolic generators are symplectic", gens_ok);

  auto block_upper = [&](const Mat& m) {
    for (int ii = 2; ii < 4; ++ii)
      for (int jj = 0; jj < 2; ++jj)
        if (m.at(ii, jj) != 0) return false;
    return true;
  };
  auto phi = [&](const Mat& m) {
    return Hz.canon(mk(F5, 2, {m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1)}));
  };

  // target class in PGL2(5)
  Mat y = mk(F5, 2, {0, 1, F5.minus_one(), 0});
  auto target = grp::conj_orbit(Hz, Hz.gens, Hz.canon(y));

  int total = 0, ok_all = 0;
  for (Fq b = 1; b < F.q(); ++b) {
    ++total;
    Mat S = mk(F, 4,
               {0, 1, 0, 0, F.minus_one(), 0, 0, 0, 0, 0, 0, F.minus_one(), 0,
                0, 1, 0});
    Mat add = Mat::identity(F, 4);
    add.set(0, 3, b);
    add.set(1, 2, b);
    Mat r = S * add;
    if (!G.member(r)) continue;
    auto orb = plain_orbit(pgens, r, 100000);
    if (orb.capped) continue;
    bool shape = true;
    std::set<Mat> image;
    for (const Mat& m : orb.elems) {
      shape = shape && block_upper(m);
      image.insert(phi(m));
    }
    bool onto = std::vector<Mat>(image.begin(), image.end()) == target;
    // rack morphism: phi(m1 |> m2) = phi(m1) |> phi(m2)
    bool morphism = true;
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, orb.elems.size() - 1);
    std::size_t pairs = std::min<std::size_t>(4000, orb.elems.size() * orb.elems.size());
    for (std::size_t k = 0; k < pairs && morphism; ++k) {
      const Mat& m1 = orb.elems[pick(rng)];
      const Mat& m2 = orb.elems[pick(rng)];
      morphism = phi(m1.conj(m2)) == Hz.op_conj(phi(m1), phi(m2));
    }
    if (shape && onto && morphism) ++ok_all;
  }
  c.claim(
      "parabolic orbit projects as a rack morphism onto the PGL2(5) class of "
      "the split rotation",
      ok_all == total,
      std::to_string(total) + " parameters b; target class size " +
          std::to_string(target.size()));
}

// ---------------------------------------------------------------------------
// W-SU3-EVEN: SU3(4) semisimple-by-unipotent pair with entry formulas
// ---------------------------------------------------------------------------

void run_su3_even(Ctx& c) {
  if (!c.fast) return;
  auto G = grp::make_group("su3:4");
  const Field& F = *G.F;  // GF(16)
  auto in_f4 = [&](Fq v) { return F.frobenius(v, 2) == v; };  // fixed by x->x^4

  int total = 0, ok = 0, y_total = 0, y_ok = 0;
  bool orbits_ok = true;
  for (Fq lam = 1; lam < F.q(); ++lam) {
    if (F.pow(lam, 5) != 1 || F.pow(lam, 3) == 1) continue;
    Fq lam_i2 = F.pow(lam, -2);
    Mat t = Mat::zero(F, 3);
    t.set(0, 0, lam);
    t.set(1, 1, lam_i2);
    t.set(2, 2, lam);
    Mat r = t;
    r.set(0, 2, lam);  // t * (id + e13)
    Fq d = F.add(lam, lam_i2);
    Fq c13 = F.add(1, F.pow(lam, -3));
    Fq c23 = F.add(F.pow(lam, 3), 1);

    for (Fq a = 1; a < F.q(); ++a) {
      if (F.pow(a, 5) == 1) continue;
      ++total;
      Fq a5 = F.pow(a, 5);  // a^{1+q}
      Mat s_exp = mk(F, 3,
                     {lam, d, F.add(d, F.mul(lam, a5)),
                      0, lam_i2, d,
                      0, 0, lam});
      Mat u = mk(F, 3, {1, c13, F.add(c13, a5), 0, 1, c23, 0, 0, 1});

      bool this_ok = G.member(r) && t * u == s_exp;
      // entry formulas for the squared products
      Mat rs2 = (r * s_exp).pow(2);
      Mat sr2 = (s_exp * r).pow(2);
      Fq six = F.pow(lam, -6);
      this_ok = this_ok &&
                rs2.at(0, 1) == F.mul(F.mul(d, F.pow(lam, 3)), F.add(1, six)) &&
                sr2.at(0, 1) == F.mul(d, F.add(1, six)) && rs2 != sr2;
      // same diagonal part, so the inequality descends to the quotient
      for (int k = 0; k < 3; ++k)
        this_ok = this_ok && rs2.at(k, k) == sr2.at(k, k);
      // field-theoretic side conditions used by the coset obstruction
      this_ok = this_ok && in_f4(a5) && a5 != 1 && !in_f4(c13);
      if (this_ok) ++ok;

      // the conjugator family: y |> r = s for every eta with eta + eta^q = 1
      for (Fq eta = 0; eta < F.q(); ++eta) {
        if (F.add(F.frobenius(eta, 2), eta) != 1) continue;
        ++y_total;
        Mat y = mk(F, 3,
                   {a, F.pow(a, 3), F.mul(eta, F.pow(a, -4)),
                    0, F.pow(a, 3), F.pow(a, -4),
                    0, 0, F.pow(a, -4)});
        if (G.member(y) && y.conj(r) == s_exp) ++y_ok;
      }

      // orbit separation under H = <r,s>, with constant diagonal part
      auto orb_r = plain_orbit({r, s_exp}, r);
      auto orb_s = plain_orbit({r, s_exp}, s_exp);
      bool sep = !orb_r.capped && !orb_s.capped &&
                 sorted_disjoint(orb_r.elems, orb_s.elems);
      for (const Mat& m : orb_r.elems)
        sep = sep && upper_triangular(m) && m.at(0, 0) == lam &&
              m.at(1, 1) == lam_i2 && m.at(2, 2) == lam;
      for (const Mat& m : orb_s.elems)
        sep = sep && upper_triangular(m) && m.at(0, 0) == lam &&
              m.at(1, 1) == lam_i2 && m.at(2, 2) == lam;
      orbits_ok = orbits_ok && sep;
    }
  }
  std::string fam = std::to_string(total) + " parameter pairs (lambda, a)";
  c.claim("printed matrices, entry formulas and side conditions hold", ok == total,
          fam);
  c.claim("y |> r = s for the whole conjugator family", y_ok == y_total,
          std::to_string(y_total) + " triples (lambda, a, eta)");
  c.claim("H-orbits of r and s are disjoint with constant diagonal", orbits_ok,
          fam);
}

// ---------------------------------------------------------------------------
// W-SU4: the 4x4 two-eigenvalue family in SU4(3), with the q=3 special case
// ---------------------------------------------------------------------------

void run_su4(Ctx& c) {
  auto G = grp::make_group("su4:3");
  const Field& F = *G.F;  // GF(9)

  if (c.fast) {
    Mat sigma = mk(F, 4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
    Mat y = mk(F, 4,
               {1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, F.minus_one(), 0, 0, 0, 1});
    c.claim("conjugators sigma and y are unitary group members",
            G.member(sigma) && G.member(y));

    int admissible = 0, exceptional = 0, ok = 0;
    for (Fq l1 = 1; l1 < F.q(); ++l1) {
      if (F.pow(l1, 4) != 1) continue;
      for (Fq l2 = 1; l2 < F.q(); ++l2) {
        if (F.pow(l2, 4) != 1 || l1 == l2) continue;
        for (Fq l1p = 0; l1p < F.q(); ++l1p)
          for (Fq l2p = 0; l2p < F.q(); ++l2p) {
            if (l1p == 0 && l2p == 0) continue;
            Mat x2 = Mat::zero(F, 4);
            x2.set(0, 0, l1);
            x2.set(1, 1, l2);
            x2.set(2, 2, l2);
            x2.set(3, 3, l1);
            x2.set(0, 3, l1p);
            x2.set(1, 2, l2p);
            if (!G.member(x2)) continue;
            ++admissible;
            if (l1 == F.neg(l2) && l2p != 0 && l1p == F.neg(l2p)) {
              ++exceptional;  // handled by the special case below
              continue;
            }
            Mat r = sigma.conj(x2);
            Mat r_exp = Mat::zero(F, 4);
            r_exp.set(0, 0, l2);
            r_exp.set(1, 1, l1);
            r_exp.set(2, 2, l1);
            r_exp.set(3, 3, l2);
            r_exp.set(1, 2, l1p);
            r_exp.set(0, 3, l2p);
            Mat s = y.conj(x2);
            Fq dl = F.sub(l2, l1);
            Mat s_exp = mk(F, 4,
                           {l1, dl, l2p, F.add(l1p, l2p),
                            0, l2, l2p, l2p,
                            0, 0, l2, dl,
                            0, 0, 0, l1});
            bool this_ok = r == r_exp && s == s_exp;
            // (rs)^2 is not any scalar multiple of (sr)^2
            Mat rs2 = (r * s).pow(2), sr2 = (s * r).pow(2);
            for (Fq sc = 1; sc < F.q() && this_ok; ++sc)
              this_ok = this_ok && rs2 != sr2.scaled(sc);
            auto orb_r = plain_orbit({r, s}, r);
            auto orb_s = plain_orbit({r, s}, s);
            this_ok = this_ok && !orb_r.capped && !orb_s.capped;
            for (const Mat& m : orb_r.elems)
              this_ok = this_ok && upper_triangular(m) && m.at(0, 0) == l2 &&
                        m.at(1, 1) == l1 && m.at(2, 2) == l1 &&
                        m.at(3, 3) == l2 && m.at(1, 2) == l1p;
            for (const Mat& m : orb_s.elems)
              this_ok = this_ok && upper_triangular(m) && m.at(0, 0) == l1 &&
                        m.at(1, 1) == l2 && m.at(2, 2) == l2 &&
                        m.at(3, 3) == l1 && m.at(1, 2) == l2p;
            this_ok =
                this_ok && sorted_disjoint(orb_r.elems, orb_s.elems);
            if (this_ok) ++ok;
          }
      }
    }
    c.claim("generic family: scalar-free squared-product inequality and orbit "
            "containments",
            admissible > 0 && ok == admissible - exceptional,
            std::to_string(admissible) + " admissible tuples, " +
                std::to_string(exceptional) + " exceptional");
  }

  // special representative of the exceptional case, for each generator zeta
  auto special = [&](Fq z) {
    Mat x2s = Mat::zero(F, 4);
    x2s.set(0, 0, F.pow(z, 2));
    x2s.set(1, 1, F.pow(z, 6));
    x2s.set(2, 2, F.pow(z, 6));
    x2s.set(3, 3, F.pow(z, 2));
    x2s.set(0, 3, F.from_int(2));
    x2s.set(1, 2, 1);
    Mat ys = Mat::zero(F, 4);
    ys.set(0, 1, F.pow(z, 7));
    ys.set(0, 3, F.pow(z, 7));
    ys.set(1, 0, F.pow(z, 5));
    ys.set(1, 2, z);
    ys.set(2, 3, z);
    ys.set(3, 2, F.pow(z, 3));
    return std::pair{x2s, ys};
  };

  if (c.fast) {
    int gen_total = 0, gen_ok = 0;
    for (Fq z = 1; z < F.q(); ++z) {
      if (F.order(z) != (long long)F.q() - 1) continue;
      ++gen_total;
      auto [x2s, ys] = special(z);
      bool this_ok = G.member(x2s) && G.member(ys);
      // same Jordan data: eigenvalue multiplicities of the p-regular parts
      // and Jordan partitions of the p-parts agree
      auto dx = jordan::p_decompose(x2s, 3);
      auto dy = jordan::p_decompose(ys, 3);
      for (Fq mu = 0; mu < F.q(); ++mu) {
        Mat sh = Mat::identity(F, 4).scaled(mu);
        this_ok = this_ok && (dx.g_s - sh).rank() == (dy.g_s - sh).rank();
      }
      this_ok = this_ok &&
                jordan::jordan_partition(dx.g_u) == jordan::jordan_partition(dy.g_u);
      // printed defect matrix, and it is not central; the printed form is
      // w itself or w^{-1} depending on which primitive element zeta is,
      // and either way the non-centrality argument goes through
      Mat w = (x2s * ys).pow(2) * (ys * x2s).pow(-2);
      Mat w_exp = Mat::identity(F, 4);
      w_exp.set(0, 2, F.pow(z, 5));
      w_exp.set(1, 3, F.pow(z, 3));
      bool central = false;
      for (const Mat& zc : G.center_scalars) central = central || w == zc;
      this_ok = this_ok && (w == w_exp || w.inverse() == w_exp) && !central;
      if (this_ok) ++gen_ok;
    }
    c.claim("special q=3 case: membership, matching Jordan data, printed defect "
            "matrix outside the center",
            gen_total == 4 && gen_ok == gen_total,
            std::to_string(gen_total) + " generators zeta");
  }

  if (c.slow) {
    auto [x2s, ys] = special(F.generator());
    bool all_false = true;
    std::string detail;
    for (const Mat& z : G.center_scalars) {
      auto res = grp::is_conjugate(G, x2s, z * ys, 4000000);
      detail += (detail.empty() ? "" : ", ");
      detail += res == grp::Tri::False
                    ? "distinct"
                    : (res == grp::Tri::True ? "CONJUGATE" : "inconclusive");
      all_false = all_false && res == grp::Tri::False;
    }
    c.claim("x2 is conjugate to no central multiple of y in SU4(3)", all_false,
            std::to_string(G.center_scalars.size()) + " central elements: " +
                detail);
  }
}

// ---------------------------------------------------------------------------
// W-SU5: the 5x5 analogue in SU5(2)
// ---------------------------------------------------------------------------

void run_su5(Ctx& c) {
  if (!c.fast) return;
  auto G = grp::make_group("su5:2");
  const Field& F = *G.F;  // GF(4)

  Mat sigma = Mat::zero(F, 5);
  sigma.set(0, 1, 1);
  sigma.set(1, 0, 1);
  sigma.set(2, 2, 1);
  sigma.set(3, 4, 1);
  sigma.set(4, 3, 1);
  Mat z = Mat::identity(F, 5);
  z.set(0, 1, 1);
  z.set(3, 4, 1);  // -1 = 1 in characteristic 2
  c.claim("conjugators sigma' and z are unitary group members",
          G.member(sigma) && G.member(z));

  int admissible = 0, ok = 0, degenerate = 0;
  for (Fq l1 = 1; l1 < F.q(); ++l1) {
    if (F.pow(l1, 3) != 1) continue;
    for (Fq l2 = 1; l2 < F.q(); ++l2) {
      if (F.pow(l2, 3) != 1 || l1 == l2) continue;
      for (Fq l1p = 0; l1p < F.q(); ++l1p)
        for (Fq l2p = 0; l2p < F.q(); ++l2p) {
          if (l1p == 0 && l2p == 0) continue;
          Mat x3 = Mat::zero(F, 5);
          x3.set(0, 0, l1);
          x3.set(1, 1, l2);
          x3.set(2, 2, l2);
          x3.set(3, 3, l2);
          x3.set(4, 4, l1);
          x3.set(0, 4, l1p);
          x3.set(1, 3, l2p);
          if (!G.member(x3)) continue;
          ++admissible;
          Mat r = sigma.conj(x3);
          Mat r_exp = Mat::zero(F, 5);
          r_exp.set(0, 0, l2);
          r_exp.set(1, 1, l1);
          r_exp.set(2, 2, l2);
          r_exp.set(3, 3, l1);
          r_exp.set(4, 4, l2);
          r_exp.set(1, 3, l1p);
          r_exp.set(0, 4, l2p);
          Mat s = z.conj(x3);
          bool this_ok = r == r_exp;
          Fq dl = F.add(l2, l1);  // l2 - l1 in characteristic 2
          Mat s_exp = mk(F, 5,
                         {l1, dl, 0, l2p, F.add(l1p, l2p),
                          0, l2, 0, l2p, l2p,
                          0, 0, l2, 0, 0,
                          0, 0, 0, l2, dl,
                          0, 0, 0, 0, l1});
          this_ok = this_ok && s == s_exp;
          Mat rs2 = (r * s).pow(2), sr2 = (s * r).pow(2);
          if (l1p == 0 || l2p == 0) {
            // scalar-free inequality; with both parameters nonzero it in
            // fact degenerates to (rs)^2 == (sr)^2 here, so for those
            // tuples the conclusion rests on the orbit separation alone
            for (Fq sc = 1; sc < F.q() && this_ok; ++sc)
              this_ok = this_ok && rs2 != sr2.scaled(sc);
          } else {
            ++degenerate;
            this_ok = this_ok && rs2 == sr2;
          }
          auto orb_r = plain_orbit({r, s}, r);
          auto orb_s = plain_orbit({r, s}, s);
          this_ok = this_ok && !orb_r.capped && !orb_s.capped &&
                    sorted_disjoint(orb_r.elems, orb_s.elems);
          std::vector<Fq> dr{l2, l1, l2, l1, l2}, ds{l1, l2, l2, l2, l1};
          for (const Mat& m : orb_r.elems) {
            for (int k = 0; k < 5; ++k)
              this_ok = this_ok && m.at(k, k) == dr[k];
            // printed containment: upper triangular, middle row and column
            // interact with nothing, and the (2,4) entry is pinned
            this_ok = this_ok && upper_triangular(m) && m.at(0, 2) == 0 &&
                      m.at(1, 2) == 0 && m.at(2, 3) == 0 && m.at(2, 4) == 0 &&
                      m.at(1, 3) == l1p;
          }
          for (const Mat& m : orb_s.elems) {
            for (int k = 0; k < 5; ++k)
              this_ok = this_ok && m.at(k, k) == ds[k];
            this_ok = this_ok && upper_triangular(m) && m.at(0, 2) == 0 &&
                      m.at(1, 2) == 0 && m.at(2, 3) == 0 && m.at(2, 4) == 0 &&
                      m.at(1, 3) == l2p;
          }
          if (this_ok) ++ok;
        }
    }
  }
  c.claim("x3 family: closed forms, orbit containments, diagonal orbit "
          "separation",
          admissible > 0 && ok == admissible,
          std::to_string(admissible) + " admissible tuples, " +
              std::to_string(degenerate) + " with (rs)^2 == (sr)^2");
}

// ---------------------------------------------------------------------------
// W-SU-T2: the twisted-form representative t2*v for SU4, q=2
// ---------------------------------------------------------------------------

void run_su_t2(Ctx& c) {
  if (!c.fast) return;
  auto G = grp::make_group("su4:2");  // provides the Steinberg map over GF(4)
  const Field& F = *G.F;

  Mat s1 = mk(F, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
  Mat s2 = mk(F, 4, {0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0});
  auto fw = [&](const Mat& m) { return s1 * G.steinberg(m) * s1; };
  auto member_tw = [&](const Mat& m) { return m.det() == 1 && fw(m) == m; };
  c.claim("sigma1 and sigma2 lie in the twisted fixed-point group",
          member_tw(s1) && member_tw(s2));

  // the twisted group has trivial scalar center in this instance
  bool center_trivial = true;
  for (Fq sc = 2; sc < F.q(); ++sc)
    center_trivial = center_trivial && !member_tw(Mat::identity(F, 4).scaled(sc));
  c.claim("scalar center of the twisted group is trivial", center_trivial);

  int admissible = 0, ok = 0;
  for (Fq l1 = 1; l1 < F.q(); ++l1) {
    if (F.pow(l1, 3) != 1 || l1 == 1) continue;  // lambda1 of order 3
    Fq l2 = 1;
    for (Fq xi = 1; xi < F.q(); ++xi) {
      Mat t2 = Mat::zero(F, 4);
      t2.set(0, 0, l1);
      t2.set(1, 1, l1);
      t2.set(2, 2, l2);
      t2.set(3, 3, l1);
      Mat x = t2;
      x.set(0, 3, F.mul(l1, xi));  // t2 * (id + xi*e14)
      if (!member_tw(x)) continue;
      ++admissible;
      Mat r = s1.conj(x);
      Mat r_exp = Mat::zero(F, 4);
      r_exp.set(0, 0, l1);
      r_exp.set(1, 1, l2);
      r_exp.set(2, 2, l1);
      r_exp.set(3, 3, l1);
      r_exp.set(0, 3, F.mul(l1, xi));
      Mat s = s2.conj(x);
      Mat s_exp = t2;
      s_exp.set(3, 0, F.mul(l1, xi));  // t2 * (id + xi*e41)
      bool this_ok = r == r_exp && s == s_exp && member_tw(r) && member_tw(s);
      Mat rs2 = (r * s).pow(2), sr2 = (s * r).pow(2);
      this_ok = this_ok && rs2 != sr2 &&
                (rs2.at(0, 0) != sr2.at(0, 0) || rs2.at(0, 3) != sr2.at(0, 3));
      auto orb_r = plain_orbit({r, s}, r);
      auto orb_s = plain_orbit({r, s}, s);
      this_ok = this_ok && !orb_r.capped && !orb_s.capped &&
                sorted_disjoint(orb_r.elems, orb_s.elems);
      // separation visible on the diagonal entries (j,j), j in {1,2,3}
      std::set<std::array<Fq, 3>> diag_r, diag_s;
      for (const Mat& m : orb_r.elems)
        diag_r.insert({m.at(0, 0), m.at(1, 1), m.at(2, 2)});
      for (const Mat& m : orb_s.elems)
        diag_s.insert({m.at(0, 0), m.at(1, 1), m.at(2, 2)});
      std::vector<std::array<Fq, 3>> inter;
      std::set_intersection(diag_r.begin(), diag_r.end(), diag_s.begin(),
                            diag_s.end(), std::back_inserter(inter));
      this_ok = this_ok && inter.empty();
      if (this_ok) ++ok;
    }
  }
  c.claim("x = t2*v family: closed forms, squared-product inequality, diagonal "
          "orbit separation",
          admissible > 0 && ok == admissible,
          std::to_string(admissible) + " admissible parameters");
}

// ---------------------------------------------------------------------------
// W-B3: the odd orthogonal construction, realized in SO7(3)
// ---------------------------------------------------------------------------

void run_b3(Ctx& c) {
  if (!c.fast) return;
  const Field& F = Field::get(3, 1);
  Mat J7 = grp::antidiag_ones(F, 7);
  auto member_so = [&](const Mat& m) {
    return m.transpose() * J7 * m == J7 && m.det() == 1;
  };
  // root elements for the orthogonal form, 1-based index helpers
  auto eplus = [&](int i, int j, Fq v) {  // e_i - e_j
    Mat m = Mat::identity(F, 7);
    m.set(i - 1, j - 1, v);
    m.set(7 - j, 7 - i, F.neg(v));
    return m;
  };
  auto esum = [&](int i, int j, Fq v) {  // e_i + e_j
    Mat m = Mat::identity(F, 7);
    m.set(i - 1, 7 - j, v);
    m.set(j - 1, 7 - i, F.neg(v));
    return m;
  };

  Mat t = Mat::identity(F, 7);
  t.set(0, 0, F.minus_one());
  t.set(6, 6, F.minus_one());
  c.claim("t and the root elements preserve the orthogonal form",
          member_so(t) && member_so(eplus(1, 2, 1)) && member_so(eplus(2, 3, 1)) &&
              member_so(esum(2, 3, 1)) &&
              member_so(esum(1, 2, 1).transpose()));

  c.assume(
      "the source argument also uses that t*x_{a2}(z) is conjugate to r inside "
      "the derived subgroup of the centralizer; that conjugation is not "
      "exhibited there and is not machine-verified here -- the claims about "
      "the pair (r, s) are checked directly");

  int total = 0, ok = 0;
  long long min_orb = -1;
  for (Fq ze = 1; ze <= 2; ++ze)
    for (Fq zp = 1; zp <= 2; ++zp)
      for (Fq eta = 1; eta <= 2; ++eta)
        for (Fq etp = 1; etp <= 2; ++etp) {
          ++total;
          Mat tv = t * eplus(2, 3, ze);
          // the unipotent part of r sits in the *negative* root subgroup
          // U_{-(e2+e3)} = U_{b1+b2+b3}; that is what keeps its orbit inside
          // t*V, away from the coset t*x_{b2}(zeta)*V that holds the orbit
          // of s
          Mat r = t * esum(2, 3, zp).transpose();
          Mat y = eplus(1, 2, eta) * esum(1, 2, etp).transpose();
          Mat s = y.conj(tv);
          bool this_ok =
              member_so(tv) && member_so(r) && member_so(y) && member_so(s);
          this_ok = this_ok && r * s != s * r;
          auto orb_r = plain_orbit({r, s}, r);
          auto orb_s = plain_orbit({r, s}, s);
          this_ok = this_ok && !orb_r.capped && !orb_s.capped &&
                    sorted_disjoint(orb_r.elems, orb_s.elems) &&
                    orb_r.elems.size() >= 3 && orb_s.elems.size() >= 3;
          long long m = std::min(orb_r.elems.size(), orb_s.elems.size());
          min_orb = min_orb < 0 ? m : std::min(min_orb, m);
          if (this_ok) ++ok;
        }
  c.claim("all parameter tuples: members, non-commuting, disjoint orbits of "
          "size >= 3",
          ok == total,
          std::to_string(total) + " tuples, smallest orbit " +
              std::to_string(min_orb));
}

// ---------------------------------------------------------------------------
// W-LABELPAIR: opposite root elements in SL(2,q)
// ---------------------------------------------------------------------------

void run_labelpair(Ctx& c) {
  if (!c.fast) return;
  for (int q : {3, 5, 7, 9}) {
    auto [p, m] = gf::factor_prime_power(q);
    const Field& F = Field::get(p, m);
    Mat A = mk(F, 2, {1, 1, 0, 1});
    bool ok = true;
    for (Fq xi = 1; xi < F.q(); ++xi) {
      Mat B = mk(F, 2, {1, 0, xi, 1});
      ok = ok && A * B != B * A;
      bool sq_neq = (A * B).pow(2) != (B * A).pow(2);
      bool cond = F.mul(xi, F.add(F.from_int(2), xi)) != 0;
      ok = ok && sq_neq == cond;
    }
    c.claim("q=" + std::to_string(q) +
                ": never commute; squared products differ iff xi(2+xi) != 0",
            ok, std::to_string(q - 1) + " values of xi");
  }
}

// ---------------------------------------------------------------------------
// W-UNI-ISO: central quotients are injective on unipotent elements
// ---------------------------------------------------------------------------

void run_uni_iso(Ctx& c) {
  if (!c.fast) return;
  {
    auto G = grp::make_group("sp4:3");
    const Field& F = *G.F;
    Mat u0 = Mat::identity(F, 4);
    u0.set(0, 3, 1);
    auto cls = grp::conj_orbit(G, G.gens, u0);
    bool ok = true;
    for (const Mat& m : cls) {
      Mat neg = m.scaled(F.minus_one());
      ok = ok && !jordan::p_decompose(neg, 3).g_s.is_identity();
    }
    c.claim("Sp(4,3): no nontrivial central multiple of a transvection is "
            "unipotent",
            ok, "full class of size " + std::to_string(cls.size()));
  }
  {
    auto G = grp::make_group("su4:3");
    const Field& F = *G.F;
    Fq eta = F.pow(F.generator(), 2);  // eta with eta^q = -eta
    Mat u0 = Mat::identity(F, 4);
    u0.set(0, 3, eta);
    bool ok = G.member(u0);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, G.gens.size() - 1);
    for (int k = 0; k < 200 && ok; ++k) {
      Mat g = Mat::identity(F, 4);
      for (int j = 0; j < 12; ++j) g = g * G.gens[pick(rng)];
      Mat m = g.conj(u0);
      for (const Mat& z : G.center_scalars) {
        if (z.is_identity()) continue;
        ok = ok && !jordan::p_decompose(z * m, 3).g_s.is_identity();
      }
    }
    c.claim("SU(4,3): sampled class; no nontrivial central multiple is "
            "unipotent",
            ok, "200 random conjugates, 3 nontrivial central elements");
  }
}

// ---------------------------------------------------------------------------
// W-CHEV-COMM: rank-2 commutator formula with integer structure constants
// ---------------------------------------------------------------------------

void run_chev_comm(Ctx& c) {
  if (!c.fast) return;
  auto G = grp::make_group("sp4:3");
  const Field& F = *G.F;

  bool members = true;
  for (Fq v = 0; v < F.q(); ++v)
    members = members && G.member(sp4_x_a1(F, v)) && G.member(sp4_x_a2(F, v)) &&
              G.member(sp4_x_a12(F, v)) && G.member(sp4_x_2a12(F, v));
  c.claim("all four positive root subgroups are symplectic", members);

  auto comm = [](const Mat& a, const Mat& b) {
    return a * b * a.inverse() * b.inverse();
  };
  // [x_a1(xi), x_a2(eta)] = x_{a1+a2}(c11 xi eta) x_{2a1+a2}(c21 xi^2 eta)
  auto find_consts = [&](auto lhs, auto rhs) {
    for (int c1 = -2; c1 <= 2; ++c1)
      for (int c2 = -2; c2 <= 2; ++c2) {
        bool all = true;
        for (Fq xi = 0; xi < F.q() && all; ++xi)
          for (Fq eta = 0; eta < F.q() && all; ++eta)
            all = lhs(xi, eta) == rhs(xi, eta, c1, c2);
        if (all) return std::optional{std::pair{c1, c2}};
      }
    return std::optional<std::pair<int, int>>{};
  };
  auto r1 = find_consts(
      [&](Fq xi, Fq eta) { return comm(sp4_x_a1(F, xi), sp4_x_a2(F, eta)); },
      [&](Fq xi, Fq eta, int c1, int c2) {
        Fq v1 = F.mul(F.from_int(c1), F.mul(xi, eta));
        Fq v2 = F.mul(F.from_int(c2), F.mul(F.mul(xi, xi), eta));
        return sp4_x_a12(F, v1) * sp4_x_2a12(F, v2);
      });
  auto r2 = find_consts(
      [&](Fq xi, Fq eta) { return comm(sp4_x_a2(F, xi), sp4_x_a1(F, eta)); },
      [&](Fq xi, Fq eta, int c1, int c2) {
        Fq v1 = F.mul(F.from_int(c1), F.mul(xi, eta));
        Fq v2 = F.mul(F.from_int(c2), F.mul(xi, F.mul(eta, eta)));
        return sp4_x_a12(F, v1) * sp4_x_2a12(F, v2);
      });
  c.claim("integer structure constants exist and verify exhaustively",
          r1.has_value() && r2.has_value(),
          r1 && r2 ? "c(a1,a2) = (" + std::to_string(r1->first) + "," +
                         std::to_string(r1->second) + "), c(a2,a1) = (" +
                         std::to_string(r2->first) + "," +
                         std::to_string(r2->second) + ")"
                   : "no constants found");
  // the two roots in the string commute with each other
  bool string_comm = true;
  for (Fq a = 0; a < F.q(); ++a)
    for (Fq b = 0; b < F.q(); ++b)
      string_comm = string_comm && sp4_x_a12(F, a) * sp4_x_2a12(F, b) ==
                                       sp4_x_2a12(F, b) * sp4_x_a12(F, a);
  c.claim("root-string factors commute, so the product order is immaterial",
          string_comm);
}

// ---------------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------------

struct Entry {
  std::string id;
  std::string group;
  std::string tag;  // fast / slow / fast+slow
  std::function<void(Ctx&)> run;
};

const std::vector<Entry>& catalog() {
  static const std::vector<Entry> cat = {
      {"W-SP4-9", "sp4:9", "fast", run_sp4_9},
      {"W-SP4-3", "sp4:3 and sp4:3/z", "fast", run_sp4_3},
      {"W-CN-Q3", "sp4:3", "fast", [](Ctx& c) { run_cn(c, 3); }},
      {"W-CN-Q7", "sp4:7", "fast", [](Ctx& c) { run_cn(c, 7); }},
      {"W-CN-PARA", "sp4:5 and gl2:5/z", "fast", run_cn_para},
      {"W-SU3-EVEN", "su3:4", "fast", run_su3_even},
      {"W-SU4", "su4:3", "fast+slow", run_su4},
      {"W-SU5", "su5:2", "fast", run_su5},
      {"W-SU-T2", "su4:2 (twisted form)", "fast", run_su_t2},
      {"W-B3", "so7:3 (orthogonal form, explicit)", "fast", run_b3},
      {"W-LABELPAIR", "sl2:q, q in {3,5,7,9}", "fast", run_labelpair},
      {"W-UNI-ISO", "sp4:3 and su4:3", "fast", run_uni_iso},
      {"W-CHEV-COMM", "sp4:3", "fast", run_chev_comm},
  };
  return cat;
}

}  // namespace

std::vector<std::string> catalog_ids() {
  std::vector<std::string> out;
  for (const auto& e : catalog()) out.push_back(e.id);
  return out;
}

std::string witness_tag(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return e.tag;
  throw UnknownWitness("unknown witness id: " + id);
}

WitnessReport run_witness(const std::string& id, const std::string& filter,
                          bool strict) {
  if (filter != "fast" && filter != "slow" && filter != "all")
    throw WitnessError("invalid filter: " + filter);
  for (const auto& e : catalog()) {
    if (e.id != id) continue;
    WitnessReport rep;
    rep.id = e.id;
    rep.group = e.group;
    Ctx ctx;
    ctx.rep = &rep;
    ctx.strict = strict;
    ctx.fast = filter == "fast" || filter == "all";
    ctx.slow = filter == "slow" || filter == "all";
    e.run(ctx);
    return rep;
  }
  throw UnknownWitness("unknown witness id: " + id);
}

SuiteReport run_all(const std::string& filter) {
  SuiteReport suite;
  if (filter == "none") return suite;
  if (filter != "fast" && filter != "slow" && filter != "all")
    throw WitnessError("invalid filter: " + filter);
  for (const auto& e : catalog()) {
    if (filter == "slow" && e.tag.find("slow") == std::string::npos) continue;
    WitnessReport rep = run_witness(e.id, filter);
    if (filter == "slow" && rep.claims.empty()) continue;
    suite.pass = suite.pass && rep.pass;
    suite.reports.push_back(std::move(rep));
  }
  return suite;
}

}  // namespace ctk::witness
