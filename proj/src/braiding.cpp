#include "ctk/braiding.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace ctk::braiding {

using grp::Mat;
using grp::MatHash;
using gf::Field;
using gf::Fq;

// ---------------------------------------------------------------------------
// roots of unity
// ---------------------------------------------------------------------------

std::string RootOfUnity::to_string() const {
  if (e == 0) return "1";
  if (e == 1) return "w";
  return "w^" + std::to_string(e);
}

SymRoot::SymRoot(int order, std::array<int, 3> exp) : N(order) {
  for (int k = 0; k < 3; ++k) e[k] = ((exp[k] % N) + N) % N;
}

SymRoot SymRoot::operator*(const SymRoot& o) const {
  if (N != o.N) throw BraidingError("root-of-unity order mismatch");
  return SymRoot(N, {e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]});
}

SymRoot SymRoot::inv() const { return SymRoot(N, {N - e[0], N - e[1], N - e[2]}); }

std::string SymRoot::to_string() const {
  if (is_one()) return "1";
  std::string out;
  for (int k = 0; k < 3; ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += " ";
    out += "z" + std::to_string(k);
    if (e[k] != 1) out += "^" + std::to_string(e[k]);
  }
  return out;
}

RootOfUnity SymRoot::eval(const std::array<int, 3>& zeta_exp) const {
  int acc = 0;
  for (int k = 0; k < 3; ++k) acc += e[k] * zeta_exp[k];
  return {N, acc};
}

BraidingMatrix SymBraiding::eval(const std::array<int, 3>& zeta_exp) const {
  BraidingMatrix Q(n, N);
  for (int i = 0; i < n * n; ++i) Q.q[i] = q[i].eval(zeta_exp);
  return Q;
}

// ---------------------------------------------------------------------------
// the distinguished subrack of Sp4(3)
// ---------------------------------------------------------------------------

SubrackData lemma_uno_subrack(Fq eta) {
  const Field& F = Field::get(3, 1);
  if (F.mul(eta, eta) != 1) throw BraidingError("eta must square to 1");
  SubrackData d;
  d.F = &F;
  Mat g0 = Mat::identity(F, 4);
  g0.set(0, 3, eta);
  d.g0 = g0;
  Mat x1 = Mat::zero(F, 4);
  x1.set(0, 1, 1);
  x1.set(1, 0, 1);
  x1.set(2, 3, 1);
  x1.set(3, 2, 1);
  Mat u = Mat::identity(F, 4);
  u.set(0, 1, 1);
  u.set(2, 3, F.from_int(2));
  d.xs = {Mat::identity(F, 4), x1, u * x1, u * u * x1};
  return d;
}

// ---------------------------------------------------------------------------
// symbolic braiding from group data
// ---------------------------------------------------------------------------

SymBraiding symbolic_braiding(const SubrackData& data) {
  const Field& F = *data.F;
  const int N = 3;
  // the orbit elements g_i = x_i |> g0
  std::array<Mat, 4> g;
  for (int i = 0; i < 4; ++i) g[i] = data.xs[i].conj(data.g0);
  // H = <g0, g1, g2>; enumerate it and check it is abelian
  std::vector<Mat> H;
  {
    std::unordered_set<Mat, MatHash> seen;
    std::vector<Mat> bfs{Mat::identity(F, data.g0.n)};
    seen.insert(bfs[0]);
    for (std::size_t k = 0; k < bfs.size(); ++k)
      for (int i = 0; i < 3; ++i) {
        Mat z = bfs[k] * g[i];
        if (seen.insert(z).second) bfs.push_back(z);
        if (bfs.size() > 1000)
          throw BraidingError("generated subgroup unexpectedly large");
      }
    H = std::move(bfs);
  }
  for (std::size_t a = 0; a < H.size(); ++a)
    for (std::size_t b = a + 1; b < H.size(); ++b)
      if (H[a] * H[b] != H[b] * H[a])
        throw NotAbelian("the subgroup generated by the orbit is not abelian");
  // coordinates of h in the basis (g0, g1, g2): brute force over (Z/N)^3
  auto coords = [&](const Mat& h) -> SymRoot {
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c)
          if (g[0].pow(a) * g[1].pow(b) * g[2].pow(c) == h)
            return SymRoot(N, {a, b, c});
    throw CharacterIllDefined(
        "conjugate falls outside the subgroup generated by g0, g1, g2");
  };
  SymBraiding S;
  S.n = 4;
  S.N = N;
  S.q.resize(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Mat h = (data.xs[j].inverse() * data.xs[i]).conj(data.g0);
      S.at(i, j) = coords(h);
    }
  return S;
}

BraidingMatrix braiding_from_subrack(const SubrackData& data,
                                     const std::array<int, 3>& zeta_exp) {
  for (int k : zeta_exp)
    if (k < 0 || k >= 3)
      throw CharacterIllDefined("character exponents must lie in {0, 1, 2}");
  return symbolic_braiding(data).eval(zeta_exp);
}

// ---------------------------------------------------------------------------
// diagrams
// ---------------------------------------------------------------------------

int Diagram::components() const {
  int n = rank();
  std::vector<int> rep(n);
  for (int i = 0; i < n; ++i) rep[i] = i;
  std::function<int(int)> find = [&](int v) {
    return rep[v] == v ? v : rep[v] = find(rep[v]);
  };
  for (const Edge& e : edges) rep[find(e.i)] = find(e.j);
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++c;
  return c;
}

bool Diagram::connected() const { return components() <= 1; }

std::string Diagram::canonical_encoding() const {
  std::vector<int> v, e;
  for (const RootOfUnity& r : vertex) v.push_back(r.e);
  for (const Edge& ed : edges) e.push_back(ed.label.e);
  std::sort(v.begin(), v.end());
  std::sort(e.begin(), e.end());
  auto join = [](const std::vector<int>& xs) {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k)
      out += (k ? "," : "") + std::to_string(xs[k]);
    return out;
  };
  return "v:" + join(v) + "|e:" + join(e);
}

Diagram subdiagram(const BraidingMatrix& Q, const std::vector<int>& idx) {
  Diagram d;
  d.N = Q.N;
  for (int i : idx) d.vertex.push_back(Q.at(i, i));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      RootOfUnity prod = Q.at(idx[a], idx[b]) * Q.at(idx[b], idx[a]);
      if (!prod.is_one()) d.edges.push_back({(int)a, (int)b, prod});
    }
  return d;
}

Diagram diagram(const BraidingMatrix& Q) {
  std::vector<int> all(Q.n);
  for (int i = 0; i < Q.n; ++i) all[i] = i;
  return subdiagram(Q, all);
}

// ---------------------------------------------------------------------------
// whitelist
// ---------------------------------------------------------------------------

bool Whitelist::contains(const Diagram& d) const {
  auto it = by_rank.find(d.rank());
  if (it == by_rank.end()) return false;
  std::string enc = d.canonical_encoding();
  return std::find(it->second.begin(), it->second.end(), enc) !=
         it->second.end();
}

Whitelist load_whitelist() {
  std::ifstream in(std::string(CTK_DATA_DIR) + "/heckenberger_mu3.json");
  if (!in) throw WhitelistMissing("cannot open heckenberger_mu3.json");
  nlohmann::json j;
  in >> j;
  Whitelist wl;
  wl.N = j.at("N").get<int>();
  for (auto& [rank, entries] : j.at("ranks").items())
    for (auto& entry : entries)
      wl.by_rank[std::stoi(rank)].push_back(
          entry.at("encoding").get<std::string>());
  return wl;
}

// ---------------------------------------------------------------------------
// the case analysis
// ---------------------------------------------------------------------------

std::vector<TupleVerdict> lemma_uno_decide(const Whitelist* wl_in) {
  Whitelist loaded;
  if (!wl_in) {
    loaded = load_whitelist();
    wl_in = &loaded;
  }
  const Whitelist& wl = *wl_in;
  SymBraiding sym = symbolic_braiding(lemma_uno_subrack(1));
  std::vector<TupleVerdict> out;
  for (int e0 = 0; e0 < 3; ++e0)
    for (int e1 = 0; e1 < 3; ++e1)
      for (int e2 = 0; e2 < 3; ++e2) {
        std::array<int, 3> z{e0, e1, e2};
        BraidingMatrix Q = sym.eval(z);
        TupleVerdict tv{z, ""};
        if (Q.at(0, 0).is_one()) {
          // a diagonal entry equal to 1 already gives infinite dimension
          tv.verdict = "infinite (q_ii = 1)";
          out.push_back(tv);
          continue;
        }
        Diagram w3 = subdiagram(Q, {1, 2, 3});
        if (w3.connected()) {
          if (!wl.has_rank(3))
            throw WhitelistMissing("whitelist lacks the rank-3 section");
          tv.verdict = wl.contains(w3)
                           ? "unresolved (rank-3 diagram occurs in whitelist)"
                           : "infinite (connected diagram not in rank-3 "
                             "whitelist)";
        } else {
          // disconnectivity forces z1 = z0^2; this implication is checked,
          // not assumed
          if (Q.at(1, 1) != Q.at(0, 0) || ((e1 - 2 * e0) % 3 + 3) % 3 != 0)
            throw BraidingError(
                "disconnected rank-3 diagram without z1 = z0^2");
          Diagram w2 = subdiagram(Q, {0, 1});
          if (!wl.has_rank(2))
            throw WhitelistMissing("whitelist lacks the rank-2 section");
          if (!w2.connected())
            throw BraidingError("rank-2 diagram unexpectedly disconnected");
          tv.verdict = wl.contains(w2)
                           ? "unresolved (rank-2 diagram occurs in whitelist)"
                           : "infinite (rank-2 diagram not in whitelist)";
        }
        out.push_back(tv);
      }
  return out;
}

}  // namespace ctk::braiding
