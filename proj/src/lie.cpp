#include "ctk/lie.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ctk::lie {

Kind kind_from_char(char c) {
  switch (c) {
    case 'A': case 'B': case 'C': case 'D':
    case 'E': case 'F': case 'G':
      return static_cast<Kind>(c);
  }
  throw LieError("InvalidType: unknown series");
}

namespace {

void check_valid(Kind kind, int rank) {
  bool ok = false;
  switch (kind) {
    case Kind::A: ok = rank >= 1; break;
    case Kind::B: ok = rank >= 2; break;
    case Kind::C: ok = rank >= 2; break;
    case Kind::D: ok = rank >= 3; break;
    case Kind::E: ok = rank >= 6 && rank <= 8; break;
    case Kind::F: ok = rank == 4; break;
    case Kind::G: ok = rank == 2; break;
  }
  if (!ok) throw LieError("InvalidType: bad rank for series");
}

// cartan[i][j] = <alpha_j, alpha_i^vee>, Bourbaki numbering (0-based)
std::vector<std::vector<int>> cartan_matrix(Kind kind, int rank) {
  std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (kind) {
    case Kind::A:
      for (int i = 0; i + 1 < rank; ++i) edge(i, i + 1);
      break;
    case Kind::B:
      for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1);
      // alpha_rank is short: <alpha_{rank-1}, alpha_rank^vee> = -2
      a[rank - 1][rank - 2] = -2;
      a[rank - 2][rank - 1] = -1;
      break;
    case Kind::C:
      for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1);
      a[rank - 2][rank - 1] = -2;
      a[rank - 1][rank - 2] = -1;
      break;
    case Kind::D:
      for (int i = 0; i + 3 < rank; ++i) edge(i, i + 1);
      edge(rank - 3, rank - 2);
      edge(rank - 3, rank - 1);
      break;
    case Kind::E:
      // Bourbaki: 1-3-4-5-6[-7[-8]], 2 attached to 4
      edge(0, 2);
      edge(2, 3);
      edge(3, 4);
      edge(4, 5);
      if (rank >= 7) edge(5, 6);
      if (rank >= 8) edge(6, 7);
      edge(1, 3);
      break;
    case Kind::F:
      edge(0, 1);
      edge(2, 3);
      // alpha3, alpha4 short: <alpha2, alpha3^vee> = -2
      a[2][1] = -2;
      a[1][2] = -1;
      break;
    case Kind::G:
      // alpha1 short: <alpha2, alpha1^vee> = -3
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

std::size_t expected_root_count(Kind kind, int rank) {
  switch (kind) {
    case Kind::A: return std::size_t(rank) * (rank + 1);
    case Kind::B:
    case Kind::C: return 2u * rank * rank;
    case Kind::D: return 2u * rank * (rank - 1);
    case Kind::E: return rank == 6 ? 72 : rank == 7 ? 126 : 240;
    case Kind::F: return 48;
    case Kind::G: return 12;
  }
  return 0;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

}  // namespace

int RootSystem::root_index(const Root& r) const {
  auto it = std::lower_bound(roots.begin(), roots.end(), r);
  if (it == roots.end() || *it != r) return -1;
  return int(it - roots.begin());
}

int RootSystem::pairing(const Root& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank; ++j) s += beta[j] * cartan[i][j];
  return s;
}

long long RootSystem::form2(const Root& beta, const Root& gamma) const {
  // 2*(alpha_i, alpha_j) = cartan[i][j] * len2[i] in this scaling
  long long s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      s += (long long)beta[i] * gamma[j] * cartan[i][j] * len2[i];
  return s;
}

Root RootSystem::simple(int i) const {
  Root r(rank, 0);
  r[i] = 1;
  return r;
}

bool RootSystem::is_positive(const Root& r) const {
  for (int c : r)
    if (c != 0) return c > 0;
  return false;
}

int RootSystem::height(const Root& r) const {
  return std::accumulate(r.begin(), r.end(), 0);
}

Root RootSystem::reflect(int i, const Root& beta) const {
  Root out = beta;
  out[i] -= pairing(beta, i);
  return out;
}

RootSystem build_root_system(Kind kind, int rank) {
  check_valid(kind, rank);
  RootSystem rs;
  rs.kind = kind;
  rs.rank = rank;
  rs.cartan = cartan_matrix(kind, rank);

  // squared lengths: propagate len2[j]/len2[i] = a[i][j]/a[j][i] along edges,
  // normalized so short simple roots have len2 = 2
  std::vector<std::pair<long long, long long>> frac(rank, {0, 1});
  frac[0] = {2, 1};
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        if (i != j && rs.cartan[i][j] != 0 && frac[i].first && !frac[j].first) {
          frac[j] = {frac[i].first * rs.cartan[i][j],
                     frac[i].second * rs.cartan[j][i]};
          changed = true;
        }
  }
  long long den = 1;
  for (auto& f : frac) den = lcm_ll(den, std::llabs(f.second));
  rs.len2.resize(rank);
  long long mn = 0;
  for (int i = 0; i < rank; ++i) {
    rs.len2[i] = std::llabs(frac[i].first) * (den / std::llabs(frac[i].second));
    mn = mn ? std::min(mn, rs.len2[i]) : rs.len2[i];
  }
  for (auto& l : rs.len2) l = 2 * l / mn;

  // closure of the simple roots under simple reflections
  std::set<Root> seen;
  std::vector<Root> frontier;
  for (int i = 0; i < rank; ++i) {
    seen.insert(rs.simple(i));
    frontier.push_back(rs.simple(i));
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& r : frontier)
      for (int i = 0; i < rank; ++i) {
        Root s = rs.reflect(i, r);
        if (seen.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  rs.roots.assign(seen.begin(), seen.end());
  if (rs.roots.size() != expected_root_count(kind, rank))
    throw LieError("root closure does not match the classical count");

  int best_h = 0;
  long long min2 = 0, max2 = 0;
  for (int idx = 0; idx < (int)rs.roots.size(); ++idx) {
    const Root& r = rs.roots[idx];
    if (!rs.is_positive(r)) continue;
    rs.positives.push_back(idx);
    int h = rs.height(r);
    if (h > best_h) best_h = h, rs.highest_root = idx;
    long long f = rs.form2(r, r);
    min2 = min2 ? std::min(min2, f) : f;
    max2 = std::max(max2, f);
  }
  if (min2 != max2) {
    int best_short_h = 0;
    for (int idx : rs.positives) {
      const Root& r = rs.roots[idx];
      if (rs.form2(r, r) != min2) continue;
      int h = rs.height(r);
      if (h > best_short_h) best_short_h = h, rs.highest_short_root = idx;
    }
  }
  return rs;
}

Root weyl_act_root(const RootSystem& rs, const WeylWord& w, const Root& beta) {
  Root r = beta;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r = rs.reflect(*it, r);
  return r;
}

WeylWord longest_element(const RootSystem& rs) {
  WeylWord w;
  for (;;) {
    bool found = false;
    for (int i = 0; i < rs.rank && !found; ++i) {
      if (rs.is_positive(weyl_act_root(rs, w, rs.simple(i)))) {
        w.letters.push_back(i);
        found = true;
      }
    }
    if (!found) break;
  }
  if (w.letters.size() != rs.positives.size())
    throw LieError("longest element has wrong length");
  return w;
}

bool is_minus_one(const RootSystem& rs) {
  WeylWord w0 = longest_element(rs);
  for (int i = 0; i < rs.rank; ++i) {
    Root img = weyl_act_root(rs, w0, rs.simple(i));
    Root neg = rs.simple(i);
    neg[i] = -1;
    if (img != neg) return false;
  }
  return true;
}

TorusElem torus_identity(const RootSystem& rs, const gf::Field& F) {
  TorusElem t;
  t.field = &F;
  t.exponents.assign(rs.rank, F.from_int(1));
  return t;
}

TorusElem torus_inverse(const TorusElem& t) {
  TorusElem out = t;
  for (auto& x : out.exponents) x = t.field->inv(x);
  return out;
}

long long torus_order(const TorusElem& t) {
  long long o = 1;
  for (gf::Fq x : t.exponents) o = lcm_ll(o, t.field->order(x));
  return o;
}

gf::Fq eval_root(const RootSystem& rs, const Root& alpha, const TorusElem& t) {
  const gf::Field& F = *t.field;
  gf::Fq v = F.from_int(1);
  // alpha(prod_j a_j^vee(xi_j)) = prod_j xi_j^{<alpha, alpha_j^vee>}
  for (int j = 0; j < rs.rank; ++j)
    v = F.mul(v, F.pow(t.exponents[j], rs.pairing(alpha, j)));
  return v;
}

TorusElem weyl_act_torus(const RootSystem& rs, const WeylWord& w,
                         const TorusElem& t) {
  const gf::Field& F = *t.field;
  TorusElem cur = t;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    int i = *it;
    // s_i(alpha_j^vee) = alpha_j^vee - <alpha_i, alpha_j^vee> alpha_i^vee,
    // so only the i-th exponent changes
    gf::Fq xi = F.from_int(1);
    for (int j = 0; j < rs.rank; ++j) {
      int e = (j == i ? 1 : 0) - rs.cartan[j][i];
      xi = F.mul(xi, F.pow(cur.exponents[j], e));
    }
    cur.exponents[i] = xi;
  }
  return cur;
}

namespace {

SubsystemComponent classify_component(const RootSystem& rs,
                                      std::vector<Root> simples) {
  int r = (int)simples.size();
  SubsystemComponent out;
  out.rank = r;
  std::sort(simples.begin(), simples.end());
  out.simples = simples;
  if (r == 1) {
    out.kind = Kind::A;
    return out;
  }
  // pairwise Cartan integers c[a][b] = <gamma_a, gamma_b^vee>
  std::vector<std::vector<long long>> c(r, std::vector<long long>(r));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      c[a][b] = 2 * rs.form2(simples[a], simples[b]) /
                rs.form2(simples[b], simples[b]);
  long long maxmult = 0;
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      maxmult = std::max(maxmult, c[a][b] * c[b][a]);
  if (maxmult == 3) {
    out.kind = Kind::G;
    return out;
  }
  if (maxmult == 2) {
    long long short2 = rs.form2(simples[0], simples[0]);
    for (auto& g : simples)
      short2 = std::min(short2, rs.form2(g, g));
    int nshort = 0;
    for (auto& g : simples)
      if (rs.form2(g, g) == short2) ++nshort;
    if (r == 2) out.kind = Kind::B;
    else if (r == 4 && nshort == 2) out.kind = Kind::F;
    else if (nshort == 1) out.kind = Kind::B;
    else if (nshort == r - 1) out.kind = Kind::C;
    else throw LieError("unrecognized doubly-laced component");
    return out;
  }
  // simply laced: look at vertex degrees
  std::vector<int> deg(r, 0);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      if (a != b && c[a][b] != 0) ++deg[a];
  int branch = -1;
  for (int a = 0; a < r; ++a) {
    if (deg[a] > 3) throw LieError("unrecognized simply-laced component");
    if (deg[a] == 3) {
      if (branch >= 0) throw LieError("unrecognized simply-laced component");
      branch = a;
    }
  }
  if (branch < 0) {
    out.kind = Kind::A;
    return out;
  }
  // arm lengths from the branch node
  std::vector<int> arms;
  for (int b = 0; b < r; ++b) {
    if (b == branch || c[branch][b] == 0) continue;
    int len = 1, prev = branch, cur = b;
    for (;;) {
      int next = -1;
      for (int x = 0; x < r; ++x)
        if (x != prev && x != cur && c[cur][x] != 0) next = x;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw LieError("unrecognized simply-laced component");
  if (arms[0] == 1 && arms[1] == 1) out.kind = Kind::D;
  else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    out.kind = Kind::E;
  else throw LieError("unrecognized simply-laced component");
  return out;
}

}  // namespace

Subsystem phi_t(const RootSystem& rs, const TorusElem& t) {
  Subsystem out;
  const gf::Field& F = *t.field;
  gf::Fq one = F.from_int(1);
  std::set<Root> members;
  for (int idx = 0; idx < (int)rs.roots.size(); ++idx)
    if (eval_root(rs, rs.roots[idx], t) == one) {
      out.root_indices.push_back(idx);
      members.insert(rs.roots[idx]);
    }
  // simple system of the subsystem: positive members that are not the sum of
  // two positive members
  std::vector<Root> pos;
  for (const Root& r : members)
    if (rs.is_positive(r)) pos.push_back(r);
  std::vector<Root> simples;
  for (const Root& r : pos) {
    bool decomposable = false;
    for (const Root& a : pos) {
      Root diff(rs.rank);
      for (int i = 0; i < rs.rank; ++i) diff[i] = r[i] - a[i];
      if (rs.is_positive(diff) && members.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples.push_back(r);
  }
  // split into connected components under the form
  int n = (int)simples.size();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = ncomp;
    std::vector<int> stack{i};
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < n; ++b)
        if (comp[b] < 0 && rs.form2(simples[a], simples[b]) != 0) {
          comp[b] = ncomp;
          stack.push_back(b);
        }
    }
    ++ncomp;
  }
  for (int k = 0; k < ncomp; ++k) {
    std::vector<Root> part;
    for (int i = 0; i < n; ++i)
      if (comp[i] == k) part.push_back(simples[i]);
    out.components.push_back(classify_component(rs, part));
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const SubsystemComponent& a, const SubsystemComponent& b) {
              if (a.kind != b.kind) return (char)a.kind < (char)b.kind;
              if (a.rank != b.rank) return a.rank < b.rank;
              return a.simples < b.simples;
            });
  return out;
}

std::string subsystem_type_string(const Subsystem& s) {
  if (s.components.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    if (i) os << "x";
    os << (char)s.components[i].kind << s.components[i].rank;
  }
  return os.str();
}

namespace {

// root of unity of exact order d in F, d | |F^x|
gf::Fq unity_root(const gf::Field& F, long long d) {
  long long qm1 = (long long)F.q() - 1;
  if (qm1 % d != 0) throw LieError("no root of unity of required order");
  return F.pow(F.generator(), qm1 / d);
}

void check_gen(const RootSystem& rs, const CenterGen& g) {
  gf::Fq one = g.z.field->from_int(1);
  for (int i = 0; i < rs.rank; ++i)
    if (eval_root(rs, rs.simple(i), g.z) != one)
      throw LieError("tabulated generator is not central");
  if (torus_order(g.z) != g.order)
    throw LieError("tabulated generator has wrong order");
}

}  // namespace

std::vector<CenterGen> center_table(Kind kind, int rank, long long q,
                                    int twist) {
  check_valid(kind, rank);
  auto [p, k] = gf::factor_prime_power(q);
  RootSystem rs = build_root_system(kind, rank);
  std::vector<CenterGen> gens;
  auto make = [&](const gf::Field& F) {
    return torus_identity(rs, F);
  };
  auto mul_at = [](TorusElem& t, int i, gf::Fq v) {
    // 1-based coroot index
    t.exponents[i - 1] = t.field->mul(t.exponents[i - 1], v);
  };

  if (twist == 3) {
    if (kind != Kind::D || rank != 4) throw LieError("NotTabulated");
    return gens;  // triality form: trivial center
  }
  if (twist != 1 && twist != 2) throw LieError("NotTabulated");
  if (twist == 1) {
    // untwisted table covers q odd; E8/F4/G2 have trivial center throughout
    if (kind == Kind::E && rank == 8) return gens;
    if (kind == Kind::F || kind == Kind::G) return gens;
    if (q % 2 == 0) throw LieError("NotTabulated");
    const gf::Field& F = gf::Field::get(p, k);
    gf::Fq m1 = F.minus_one();
    switch (kind) {
      case Kind::B: {
        TorusElem z = make(F);
        mul_at(z, rank, m1);
        gens.push_back({z, 2});
        break;
      }
      case Kind::C: {
        TorusElem z = make(F);
        for (int i = 1; i <= rank; i += 2) mul_at(z, i, m1);
        gens.push_back({z, 2});
        break;
      }
      case Kind::D: {
        if (rank % 2 == 0) {
          TorusElem z1 = make(F);
          for (int i = 1; i <= rank; i += 2) mul_at(z1, i, m1);
          TorusElem z2 = make(F);
          mul_at(z2, rank - 1, m1);
          mul_at(z2, rank, m1);
          gens.push_back({z1, 2});
          gens.push_back({z2, 2});
        } else if (q % 4 == 1) {
          gf::Fq zeta = unity_root(F, 4);
          TorusElem z = make(F);
          for (int i = 1; i <= rank - 2; i += 2) mul_at(z, i, m1);
          mul_at(z, rank - 1, zeta);
          mul_at(z, rank, F.pow(zeta, 3));
          gens.push_back({z, 4});
        } else {
          TorusElem z = make(F);
          mul_at(z, rank - 1, m1);
          mul_at(z, rank, m1);
          gens.push_back({z, 2});
        }
        break;
      }
      case Kind::E: {
        if (rank == 6) {
          if (q % 3 == 1) {
            gf::Fq om = unity_root(F, 3);
            TorusElem z = make(F);
            mul_at(z, 1, om);
            mul_at(z, 3, F.mul(om, om));
            mul_at(z, 5, om);
            mul_at(z, 6, F.mul(om, om));
            gens.push_back({z, 3});
          }
          // q = 2 mod 3: trivial
        } else {  // E7
          TorusElem z = make(F);
          mul_at(z, 2, m1);
          mul_at(z, 5, m1);
          mul_at(z, 7, m1);
          gens.push_back({z, 2});
        }
        break;
      }
      default:
        throw LieError("NotTabulated");
    }
  } else {
    const gf::Field& F2 = gf::Field::get(p, 2 * k);  // GF(q^2)
    switch (kind) {
      case Kind::A: {
        if (rank < 2) throw LieError("NotTabulated");
        long long d = std::gcd(q + 1, (long long)rank + 1);
        if (d > 1) {
          gf::Fq zeta = unity_root(F2, d);
          TorusElem z = make(F2);
          for (int i = 1; i <= rank; ++i)
            mul_at(z, i, F2.pow(zeta, i));
          gens.push_back({z, d});
        }
        break;
      }
      case Kind::D: {
        if (q % 2 == 1) {
          TorusElem z = make(F2);
          mul_at(z, rank - 1, F2.minus_one());
          mul_at(z, rank, F2.minus_one());
          gens.push_back({z, 2});
        }
        break;
      }
      case Kind::E: {
        if (rank != 6) throw LieError("NotTabulated");
        if (q % 3 == 2) {
          gf::Fq om = unity_root(F2, 3);
          TorusElem z = make(F2);
          mul_at(z, 1, om);
          mul_at(z, 3, F2.mul(om, om));
          mul_at(z, 5, om);
          mul_at(z, 6, F2.mul(om, om));
          gens.push_back({z, 3});
        }
        break;
      }
      default:
        throw LieError("NotTabulated");
    }
  }
  for (const CenterGen& g : gens) check_gen(rs, g);
  return gens;
}

}  // namespace ctk::lie
