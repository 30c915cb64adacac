#include "ctk/grp.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_set>

namespace ctk::grp {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

const gf::Field& entry_field(Family fam, int q) {
  auto [p, m] = gf::factor_prime_power(q);
  bool quadratic = (fam == Family::SU || fam == Family::GU);
  return gf::Field::get(p, quadratic ? 2 * m : m);
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& s) {
  std::string t = s;
  bool modz = false;
  if (t.size() > 2 && t.substr(t.size() - 2) == "/z") {
    modz = true;
    t = t.substr(0, t.size() - 2);
  }
  auto colon = t.find(':');
  if (colon == std::string::npos || colon < 3)
    throw GrpError("bad group spec: " + s);
  std::string fam = t.substr(0, 2);
  Family f;
  if (fam == "sl") f = Family::SL;
  else if (fam == "sp") f = Family::Sp;
  else if (fam == "su") f = Family::SU;
  else if (fam == "gl") f = Family::GL;
  else if (fam == "gu") f = Family::GU;
  else throw GrpError("bad group family: " + s);
  int n, q;
  try {
    n = std::stoi(t.substr(2, colon - 2));
    q = std::stoi(t.substr(colon + 1));
  } catch (...) {
    throw GrpError("bad group spec: " + s);
  }
  if (n < 2 || n > kMaxN || q < 2) throw GrpError("bad group spec: " + s);
  if (f == Family::Sp && n % 2 != 0)
    throw GrpError("Sp requires even dimension: " + s);
  return {f, n, q, modz};
}

std::string GroupSpec::str() const {
  const char* names[] = {"sl", "sp", "su", "gl", "gu"};
  return std::string(names[int(family)]) + std::to_string(n) + ":" +
         std::to_string(q) + (mod_center ? "/z" : "");
}

long long group_order_formula(const GroupSpec& spec) {
  long long q = spec.q;
  int n = spec.n;
  long long r = 1;
  switch (spec.family) {
    case Family::SL:
      r = ipow(q, n * (n - 1) / 2);
      for (int i = 2; i <= n; ++i) r *= ipow(q, i) - 1;
      return r;
    case Family::GL:
      r = ipow(q, n * (n - 1) / 2);
      for (int i = 1; i <= n; ++i) r *= ipow(q, i) - 1;
      return r;
    case Family::Sp: {
      int l = n / 2;
      r = ipow(q, l * l);
      for (int i = 1; i <= l; ++i) r *= ipow(q, 2 * i) - 1;
      return r;
    }
    case Family::SU:
      r = ipow(q, n * (n - 1) / 2);
      for (int i = 2; i <= n; ++i) r *= ipow(q, i) - (i % 2 ? -1 : 1);
      return r;
    case Family::GU:
      r = ipow(q, n * (n - 1) / 2);
      for (int i = 1; i <= n; ++i) r *= ipow(q, i) - (i % 2 ? -1 : 1);
      return r;
  }
  throw GrpError("unreachable");
}

Mat GroupHandle::steinberg(const Mat& m) const {
  auto [p, mm] = gf::factor_prime_power(spec.q);
  Mat J = antidiag_ones(*F, spec.n);
  return J * m.entry_frobenius(mm).transpose().inverse() * J;
}

bool GroupHandle::member(const Mat& m) const {
  if (m.n != spec.n || m.F != F) return false;
  switch (spec.family) {
    case Family::SL:
      return m.det() == 1;
    case Family::GL:
      return m.det() != 0;
    case Family::Sp:
      return m.transpose() * *form * m == *form;
    case Family::SU:
      return m.det() == 1 && steinberg(m) == m;
    case Family::GU:
      return m.det() != 0 && steinberg(m) == m;
  }
  return false;
}

Mat GroupHandle::central_quotient_rep(const Mat& m) const {
  Mat best = m;
  for (const Mat& z : center_scalars) {
    Mat zm = z * m;
    if (zm < best) best = zm;
  }
  return best;
}

Mat GroupHandle::op_pow(const Mat& a, long long k) const {
  return canon(a.pow(k));
}

long long GroupHandle::op_order(const Mat& a) const {
  Mat id = canon(op_identity());
  Mat x = canon(a);
  for (long long k = 1; k <= 1000000; ++k) {
    if (x == id) return k;
    x = canon(x * a);
  }
  throw GrpError("element order exceeds cap");
}

namespace {

std::vector<Mat> sl_generators(const gf::Field& F, int n) {
  std::vector<Mat> gens;
  for (int i = 0; i + 1 < n; ++i) {
    for (gf::Fq b = 1; b < F.q(); b *= F.p()) {  // F_p-basis 1, x, x^2, ...
      Mat u = Mat::identity(F, n);
      u.set(i, i + 1, b);
      gens.push_back(u);
      Mat l = Mat::identity(F, n);
      l.set(i + 1, i, b);
      gens.push_back(l);
      if (F.m() == 1) break;
    }
  }
  return gens;
}

std::vector<Mat> sp_generators(const gf::Field& F, int n) {
  int l = n / 2;
  std::vector<Mat> gens;
  auto basis_loop = [&](auto&& emit) {
    for (gf::Fq b = 1; b < F.q(); b *= F.p()) {
      emit(b);
      if (F.m() == 1) break;
    }
  };
  for (int i = 0; i + 1 < l; ++i) {
    basis_loop([&](gf::Fq b) {
      Mat u = Mat::identity(F, n);  // short root: e_{i,i+1} - e_{n-2-i,n-1-i}
      u.set(i, i + 1, b);
      u.set(n - 2 - i, n - 1 - i, F.neg(b));
      gens.push_back(u);
      gens.push_back(u.transpose());
    });
  }
  basis_loop([&](gf::Fq b) {
    Mat u = Mat::identity(F, n);  // long root: e_{l-1,l}
    u.set(l - 1, l, b);
    gens.push_back(u);
    gens.push_back(u.transpose());
  });
  return gens;
}

// F-fixed "root elements" of SU(n,q)/GU(n,q), found by a small brute-force
// scan per entry position (desk-scale fields only)
std::vector<Mat> su_generators(const GroupHandle& G) {
  const gf::Field& F = *G.F;
  int n = G.spec.n;
  std::vector<Mat> gens;
  auto try_add = [&](const Mat& m) {
    if (!m.is_identity() && G.member(m)) {
      gens.push_back(m);
      return true;
    }
    return false;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int pi = n - 1 - j, pj = n - 1 - i;  // partner position
      if (i == pi && j == pj) {
        // antidiagonal position: single-entry one-parameter family
        for (gf::Fq eta = 1; eta < F.q(); ++eta) {
          Mat m = Mat::identity(F, n);
          m.set(i, j, eta);
          try_add(m);
        }
        continue;
      }
      if (std::make_pair(i, j) > std::make_pair(pi, pj)) continue;
      for (gf::Fq xi = 1; xi < F.q(); xi *= F.p()) {
        bool found = false;
        // pair the entry with its partner; a correction entry on the
        // antidiagonal may be required when the two positions chain up
        for (gf::Fq mu = 0; mu < F.q() && !found; ++mu) {
          Mat m0 = Mat::identity(F, n);
          m0.set(i, j, xi);
          m0.set(pi, pj, mu);
          if (try_add(m0)) { found = true; break; }
          Mat m = m0;
          for (gf::Fq nu = 1; nu < F.q() && !found; ++nu) {
            m.set(i, n - 1 - i, nu);
            found = try_add(m);
          }
        }
        if (F.m() == 1) break;
      }
    }
  }
  // lower-triangular copies: conjugates by the antidiagonal J
  Mat J = antidiag_ones(F, n);
  std::size_t upper = gens.size();
  for (std::size_t k = 0; k < upper; ++k) gens.push_back(J * gens[k] * J);
  // torus elements diag(g, g^{-1}, ..., 1, ..., g^q, g^{-q}) and the SU(3)
  // style diag(g, g^{q-1}, g^{-q}); added for robust generation
  gf::Fq g = F.generator();
  long long q = G.spec.q;
  if (n == 3) {
    Mat t = Mat::identity(F, n);
    t.set(0, 0, g);
    t.set(1, 1, F.pow(g, q - 1));
    t.set(2, 2, F.pow(g, -q));
    if (G.member(t)) gens.push_back(t);
  } else {
    Mat t = Mat::identity(F, n);
    t.set(0, 0, g);
    t.set(1, 1, F.inv(g));
    t.set(n - 2, n - 2, F.pow(g, q));
    t.set(n - 1, n - 1, F.pow(g, -q));
    if (G.member(t)) gens.push_back(t);
  }
  return gens;
}

}  // namespace

GroupHandle make_group(const GroupSpec& spec) {
  GroupHandle G;
  G.spec = spec;
  auto [p, m] = gf::factor_prime_power(spec.q);
  G.F = &entry_field(spec.family, spec.q);
  const gf::Field& F = *G.F;
  G.order_formula = group_order_formula(spec);

  if (spec.family == Family::Sp) {
    int n = spec.n, l = n / 2;
    Mat J(F, n);
    for (int i = 0; i < l; ++i) {
      J.set(i, n - 1 - i, 1);
      J.set(n - 1 - i, i, F.minus_one());
    }
    G.form = J;
  } else if (spec.family == Family::SU || spec.family == Family::GU) {
    G.form = antidiag_ones(F, spec.n);
  }

  switch (spec.family) {
    case Family::SL:
      G.gens = sl_generators(F, spec.n);
      break;
    case Family::GL: {
      G.gens = sl_generators(F, spec.n);
      Mat d = Mat::identity(F, spec.n);
      d.set(0, 0, F.generator());
      G.gens.push_back(d);
      break;
    }
    case Family::Sp:
      G.gens = sp_generators(F, spec.n);
      break;
    case Family::SU:
    case Family::GU: {
      G.gens = su_generators(G);
      if (spec.family == Family::GU) {
        Mat d = Mat::identity(F, spec.n);
        d.set(0, 0, F.generator());
        d.set(spec.n - 1, spec.n - 1, F.pow(F.generator(), -(long long)spec.q));
        G.gens.push_back(d);
      }
      break;
    }
  }

  for (const Mat& g : G.gens)
    if (!G.member(g)) throw GrpError("generator fails membership");

  for (gf::Fq lam = 1; lam < F.q(); ++lam) {
    Mat z = Mat::identity(F, spec.n).scaled(lam);
    if (G.member(z)) G.center_scalars.push_back(z);
  }
  return G;
}

const std::vector<Mat>& GroupHandle::enumerate(std::size_t cap) const {
  if (elems_) return *elems_;
  std::size_t target = std::size_t(order_formula);
  if (target > cap)
    throw CapExceeded("group order " + std::to_string(order_formula) +
                      " exceeds enumeration cap");
  std::unordered_set<Mat, MatHash> seen;
  std::deque<Mat> frontier;
  Mat id = Mat::identity(*F, spec.n);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Mat x = frontier.front();
    frontier.pop_front();
    for (const Mat& g : gens) {
      Mat y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw CapExceeded("enumeration cap exceeded");
        frontier.push_back(y);
      }
    }
  }
  if ((long long)seen.size() != order_formula)
    throw GrpError("generated subgroup has order " +
                   std::to_string(seen.size()) + ", formula says " +
                   std::to_string(order_formula) + " for " + spec.str());
  order_verified = true;
  std::vector<Mat> out;
  if (spec.mod_center) {
    std::unordered_set<Mat, MatHash> reps;
    for (const Mat& x : seen) reps.insert(central_quotient_rep(x));
    out.assign(reps.begin(), reps.end());
  } else {
    out.assign(seen.begin(), seen.end());
  }
  std::sort(out.begin(), out.end());
  elems_ = std::make_shared<std::vector<Mat>>(std::move(out));
  return *elems_;
}

std::vector<Mat> conj_orbit(const GroupHandle& G, std::span<const Mat> gens,
                            const Mat& x, std::size_t cap) {
  std::vector<std::pair<Mat, Mat>> acts;
  for (const Mat& g : gens) {
    Mat gi = g.inverse();
    acts.push_back({g, gi});
    if (gi != g) acts.push_back({gi, g});
  }
  std::unordered_set<Mat, MatHash> seen;
  std::deque<Mat> frontier;
  Mat x0 = G.canon(x);
  seen.insert(x0);
  frontier.push_back(x0);
  while (!frontier.empty()) {
    Mat y = frontier.front();
    frontier.pop_front();
    for (const auto& [g, gi] : acts) {
      Mat z = G.op_conj2(g, gi, y);
      if (seen.insert(z).second) {
        if (seen.size() > cap) throw CapExceeded("orbit cap exceeded");
        frontier.push_back(z);
      }
    }
  }
  std::vector<Mat> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ConjClass> conjugacy_classes(const GroupHandle& G,
                                         std::size_t cap) {
  const auto& elems = G.enumerate(cap);
  std::unordered_set<Mat, MatHash> visited;
  std::vector<ConjClass> classes;
  for (const Mat& x : elems) {
    if (visited.count(x)) continue;
    auto orbit = conj_orbit(G, G.gens, x, cap);
    for (const Mat& y : orbit) visited.insert(y);
    classes.push_back({orbit.front(), std::move(orbit)});
  }
  return classes;
}

std::vector<Mat> centralizer(const GroupHandle& G, const Mat& x) {
  std::vector<Mat> out;
  for (const Mat& h : G.enumerate())
    if (G.op_commute(h, x)) out.push_back(h);
  return out;
}

Tri is_conjugate(const GroupHandle& G, const Mat& a, const Mat& b,
                 std::size_t cap) {
  Mat ca = G.canon(a), cb = G.canon(b);
  if (ca == cb) return Tri::True;
  std::vector<std::pair<Mat, Mat>> acts;
  for (const Mat& g : G.gens) {
    Mat gi = g.inverse();
    acts.push_back({g, gi});
    if (gi != g) acts.push_back({gi, g});
  }
  std::unordered_set<Mat, MatHash> sa{ca}, sb{cb};
  std::deque<Mat> fa{ca}, fb{cb};
  while (!fa.empty() || !fb.empty()) {
    // expand the smaller live frontier
    bool pick_a;
    if (fa.empty()) pick_a = false;
    else if (fb.empty()) pick_a = true;
    else pick_a = sa.size() <= sb.size();
    auto& front = pick_a ? fa : fb;
    auto& mine = pick_a ? sa : sb;
    auto& other = pick_a ? sb : sa;
    std::size_t batch = front.size();
    for (std::size_t k = 0; k < batch; ++k) {
      Mat y = front.front();
      front.pop_front();
      for (const auto& [g, gi] : acts) {
        Mat z = G.op_conj2(g, gi, y);
        if (other.count(z)) return Tri::True;
        if (mine.insert(z).second) {
          if (sa.size() + sb.size() > cap) return Tri::Inconclusive;
          front.push_back(z);
        }
      }
    }
    // one side fully closed without meeting the other: distinct orbits
    if (pick_a && fa.empty()) return Tri::False;
    if (!pick_a && fb.empty()) return Tri::False;
  }
  return Tri::False;
}

}  // namespace ctk::grp
