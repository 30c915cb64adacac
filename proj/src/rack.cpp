#include "ctk/rack.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <random>
#include <unordered_set>

#include "ctk/jordan.hpp"

#ifdef CTK_HAVE_OPENMP
#include <omp.h>
#endif

namespace ctk::rack {

using grp::Mat;

ClassRack make_class_rack(const grp::GroupHandle& G, const grp::Mat& x,
                          std::size_t cap) {
  ClassRack O;
  O.G = &G;
  auto members = grp::conj_orbit(G, G.gens, x, cap);
  O.rep = members.front();
  O.members = std::move(members);
  return O;
}

namespace {

// both <r,s>-orbits, sorted; nullopt when the cap is hit.  Orbits under the
// same subgroup are equal or disjoint, so the BFS of the r-orbit aborts as
// soon as s turns up in it (the common case), returning two equal stubs.
std::optional<std::pair<std::vector<Mat>, std::vector<Mat>>> orbit_pair(
    const grp::GroupHandle& G, const Mat& r, const Mat& s,
    std::size_t orbit_cap) {
  Mat cr = G.canon(r), cs = G.canon(s);
  std::vector<Mat> bfs{cr};
  std::unordered_set<Mat, grp::MatHash> seen{cr};
  bool same = cr == cs;
  for (std::size_t k = 0; k < bfs.size() && !same; ++k)
    for (const Mat* g : {&cr, &cs}) {
      Mat z = G.op_conj(*g, bfs[k]);
      if (!seen.insert(z).second) continue;
      if (z == cs) {
        same = true;
        break;
      }
      bfs.push_back(z);
      if (bfs.size() > orbit_cap) return std::nullopt;
    }
  if (same) return std::make_pair(std::vector<Mat>{cr}, std::vector<Mat>{cr});
  std::sort(bfs.begin(), bfs.end());
  std::array<Mat, 2> gens{cr, cs};
  try {
    auto oz = grp::conj_orbit(G, gens, cs, orbit_cap);
    return std::make_pair(std::move(bfs), std::move(oz));
  } catch (const grp::CapExceeded&) {
    return std::nullopt;
  }
}

// test one pair; sets hit_cap when the orbit cap aborted the pair
std::optional<CollapseCertificate> test_pair(char kind,
                                             const grp::GroupHandle& G,
                                             const Mat& r, const Mat& s,
                                             std::size_t orbit_cap,
                                             bool& hit_cap) {
  hit_cap = false;
  if (kind == 'D') {
    Mat rs = G.op_mul(r, s), sr = G.op_mul(s, r);
    if (G.op_pow(rs, 2) == G.op_pow(sr, 2)) return std::nullopt;
  } else {  // 'C'
    if (G.op_commute(r, s)) return std::nullopt;
  }
  auto orbits = orbit_pair(G, r, s, orbit_cap);
  if (!orbits) {
    hit_cap = true;
    return std::nullopt;
  }
  auto& [orb_r, orb_s] = *orbits;
  if (orb_r == orb_s) return std::nullopt;
  long long a = (long long)orb_r.size(), b = (long long)orb_s.size();
  if (kind == 'C' && !(std::min(a, b) > 2 || std::max(a, b) > 4))
    return std::nullopt;
  CollapseCertificate cert;
  cert.kind = kind;
  cert.group = G.spec;
  cert.witnesses = {r, s};
  cert.orbit_sizes = {a, b};
  return cert;
}

// deterministic lexicographic pair scan (least pair index wins), optionally
// block-parallel, followed by a seeded random phase when the pair space
// exceeds the budget
ScanResult pair_scan(char kind, const ClassRack& O, const Budget& b) {
  ScanResult res;
  const grp::GroupHandle& G = *O.G;
  // the type-C criterion is applied to mixed classes only: on unipotent
  // classes the size thresholds alone admit benign configurations (pairs of
  // disjoint tetrahedral 4-orbits inside an A4 subgroup), which the known
  // classification excludes
  if (kind == 'C' && !O.members.empty() &&
      jordan::classify_element(G, O.rep) != jordan::ElementKind::Mixed) {
    res.complete = true;
    return res;
  }
  const auto& m = O.members;
  std::size_t n = m.size();
  std::size_t total = n < 2 ? 0 : n * (n - 1) / 2;
  std::size_t limit = std::min(total, b.pair_budget);
  auto unrank = [n](std::size_t k) {
    // pair index k -> (i, j), i < j, lexicographic
    std::size_t i = 0, row = n - 1;
    while (k >= row) k -= row, ++i, --row;
    return std::pair<std::size_t, std::size_t>{i, i + 1 + k};
  };

  std::atomic<std::size_t> best_k{SIZE_MAX};
  std::atomic<std::size_t> capped{0};
  std::optional<CollapseCertificate> found;

#ifdef CTK_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (b.parallel)
#endif
  for (long long kk = 0; kk < (long long)limit; ++kk) {
    std::size_t k = (std::size_t)kk;
    if (k >= best_k.load(std::memory_order_relaxed)) continue;
    auto [i, j] = unrank(k);
    bool hc = false;
    auto cert = test_pair(kind, G, m[i], m[j], b.orbit_cap, hc);
    if (hc) capped.fetch_add(1, std::memory_order_relaxed);
    if (cert) {
#ifdef CTK_HAVE_OPENMP
#pragma omp critical(ctk_rack_merge)
#endif
      {
        if (k < best_k.load()) {
          best_k.store(k);
          found = std::move(cert);
        }
      }
    }
  }
  res.scanned = limit;
  res.capped = capped.load();
  if (found) {
    res.cert = std::move(found);
    return res;
  }
  if (total > b.pair_budget) {
    // randomized phase for large classes
    std::mt19937_64 rng(b.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < b.pair_budget; ++t) {
      std::size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      ++res.scanned;
      bool hc = false;
      auto cert = test_pair(kind, G, m[i], m[j], b.orbit_cap, hc);
      if (hc) ++res.capped;
      if (cert) {
        cert->found_by = "random";
        res.cert = std::move(cert);
        return res;
      }
    }
    res.complete = false;
    return res;
  }
  res.complete = res.capped == 0;
  return res;
}

std::optional<CollapseCertificate> test_quad(const grp::GroupHandle& G,
                                             const std::array<Mat, 4>& r,
                                             std::size_t orbit_cap,
                                             bool& hit_cap) {
  hit_cap = false;
  for (int a = 0; a < 4; ++a)
    for (int c = a + 1; c < 4; ++c)
      if (G.op_commute(r[a], r[c])) return std::nullopt;
  std::array<std::vector<Mat>, 4> orbs;
  try {
    for (int a = 0; a < 4; ++a)
      orbs[a] = grp::conj_orbit(G, r, r[a], orbit_cap);
  } catch (const grp::CapExceeded&) {
    hit_cap = true;
    return std::nullopt;
  }
  for (int a = 0; a < 4; ++a)
    for (int c = a + 1; c < 4; ++c)
      if (orbs[a] == orbs[c]) return std::nullopt;
  CollapseCertificate cert;
  cert.kind = 'F';
  cert.group = G.spec;
  cert.witnesses.assign(r.begin(), r.end());
  for (auto& o : orbs) cert.orbit_sizes.push_back((long long)o.size());
  return cert;
}

}  // namespace

ScanResult check_type_D(const ClassRack& O, const Budget& b) {
  return pair_scan('D', O, b);
}

ScanResult check_type_C(const ClassRack& O, const Budget& b) {
  return pair_scan('C', O, b);
}

ScanResult check_type_F(const ClassRack& O, const Budget& b) {
  ScanResult res;
  const grp::GroupHandle& G = *O.G;
  const auto& m = O.members;
  std::size_t n = m.size();
  if (n < 4) {
    res.complete = true;
    return res;
  }
  if (n <= 60) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (G.op_commute(m[i], m[j])) continue;
        for (std::size_t k = j + 1; k < n; ++k)
          for (std::size_t l = k + 1; l < n; ++l) {
            ++res.scanned;
            bool hc = false;
            auto cert =
                test_quad(G, {m[i], m[j], m[k], m[l]}, b.orbit_cap, hc);
            if (hc) ++res.capped;
            if (cert) {
              res.cert = std::move(cert);
              return res;
            }
          }
      }
    res.complete = res.capped == 0;
    return res;
  }
  std::mt19937_64 rng(b.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t t = 0; t < b.quad_budget; ++t) {
    std::size_t i = pick(rng), j = pick(rng), k = pick(rng), l = pick(rng);
    if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
    ++res.scanned;
    bool hc = false;
    auto cert = test_quad(G, {m[i], m[j], m[k], m[l]}, b.orbit_cap, hc);
    if (hc) ++res.capped;
    if (cert) {
      cert->found_by = "random";
      res.cert = std::move(cert);
      return res;
    }
  }
  return res;
}

Lt0Result lemma_tecnico0(const grp::GroupHandle& G, const grp::Mat& y,
                         const grp::Mat& z, std::size_t orbit_cap) {
  Lt0Result out;
  auto dy = jordan::p_decompose(G, y);
  auto dz = jordan::p_decompose(G, z);
  bool h1 = !G.op_commute(dy.g_s, dz.g_u);
  bool h2 = !G.op_commute(dz.g_s, dy.g_u);
  if (!(h1 && h2)) return out;
  out.hypotheses_hold = true;
  // the asserted conclusions, re-verified directly
  if (G.op_commute(y, z))
    throw RackError("p-part criterion inconsistency: yz == zy");
  Mat cy = G.canon(y), cz = G.canon(z);
  std::array<Mat, 2> gens{cy, cz};
  auto oy = grp::conj_orbit(G, gens, cy, orbit_cap);
  auto oz = grp::conj_orbit(G, gens, cz, orbit_cap);
  out.orbit_y = (long long)oy.size();
  out.orbit_z = (long long)oz.size();
  if (out.orbit_y < 3 || out.orbit_z < 3)
    throw RackError("p-part criterion inconsistency: orbit too small");
  if (grp::is_conjugate(G, cy, cz) == grp::Tri::True && oy != oz) {
    CollapseCertificate cert;
    cert.kind = 'C';
    cert.group = G.spec;
    cert.witnesses = {cy, cz};
    cert.orbit_sizes = {out.orbit_y, out.orbit_z};
    cert.found_by = "external";
    out.cert = std::move(cert);
  }
  return out;
}

ProductResult product_type_D(const grp::GroupHandle& G, const grp::Mat& x1,
                             const grp::Mat& x2, const grp::Mat& y1,
                             const grp::Mat& y2, std::size_t orbit_cap) {
  ProductResult out{ProductVerdict::Ok, std::nullopt};
  for (const Mat* x : {&x1, &x2})
    for (const Mat* y : {&y1, &y2})
      if (!G.op_commute(*x, *y)) {
        out.verdict = ProductVerdict::ComponentsDontCommute;
        return out;
      }
  Mat x12 = G.op_mul(x1, x2), x21 = G.op_mul(x2, x1);
  if (G.op_pow(x12, 2) == G.op_pow(x21, 2)) {
    out.verdict = ProductVerdict::X1HypothesisFailed;
    return out;
  }
  if (G.canon(y1) == G.canon(y2) || !G.op_commute(y1, y2)) {
    out.verdict = ProductVerdict::X2HypothesisFailed;
    return out;
  }
  Mat r = G.op_mul(x1, y1), s = G.op_mul(x2, y2);
  bool hc = false;
  auto cert = test_pair('D', G, r, s, orbit_cap, hc);
  if (!cert)
    throw RackError("product criterion inconsistency: direct check failed");
  out.cert = std::move(cert);
  return out;
}

KthulhuReport kthulhu_scan(const ClassRack& O, const Budget& b) {
  KthulhuReport rep;
  rep.mod_center = O.mod_center();
  auto d = check_type_D(O, b);
  rep.d_complete = d.complete;
  rep.pairs_scanned += d.scanned;
  rep.pairs_capped += d.capped;
  if (d.cert) {
    rep.cert = std::move(d.cert);
    return rep;
  }
  auto c = check_type_C(O, b);
  rep.pairs_scanned += c.scanned;
  rep.pairs_capped += c.capped;
  if (c.cert) {
    rep.cert = std::move(c.cert);
    return rep;
  }
  auto f = check_type_F(O, b);
  rep.f_complete = f.complete;
  if (f.cert) rep.cert = std::move(f.cert);
  return rep;
}

bool verify_certificate(const grp::GroupHandle& G,
                        const CollapseCertificate& cert,
                        std::size_t orbit_cap) {
  if (cert.group != G.spec) return false;
  std::size_t nw = cert.witnesses.size();
  if ((cert.kind == 'D' || cert.kind == 'C') && nw != 2) return false;
  if (cert.kind == 'F' && nw != 4) return false;
  for (const Mat& w : cert.witnesses) {
    if (!G.member(w)) return false;
    if (G.canon(w) != w) return false;  // stored as canonical reps
  }
  // all witnesses lie in one conjugacy class of G
  for (std::size_t i = 1; i < nw; ++i)
    if (grp::is_conjugate(G, cert.witnesses[0], cert.witnesses[i]) !=
        grp::Tri::True)
      return false;
  // defining inequalities
  if (cert.kind == 'D') {
    Mat rs = G.op_mul(cert.witnesses[0], cert.witnesses[1]);
    Mat sr = G.op_mul(cert.witnesses[1], cert.witnesses[0]);
    if (G.op_pow(rs, 2) == G.op_pow(sr, 2)) return false;
  } else {
    for (std::size_t i = 0; i < nw; ++i)
      for (std::size_t j = i + 1; j < nw; ++j)
        if (G.op_commute(cert.witnesses[i], cert.witnesses[j])) return false;
  }
  if (cert.kind == 'C') {
    // type-C certificates are accepted for mixed witnesses only
    for (const Mat& w : cert.witnesses)
      if (jordan::classify_element(G, w) != jordan::ElementKind::Mixed)
        return false;
  }
  // orbits under the subgroup generated by all witnesses: disjointness is
  // checked by explicit empty intersection, sizes against the record
  std::vector<std::vector<Mat>> orbs;
  try {
    for (const Mat& w : cert.witnesses)
      orbs.push_back(grp::conj_orbit(G, cert.witnesses, w, orbit_cap));
  } catch (const grp::CapExceeded&) {
    return false;
  }
  if (cert.orbit_sizes.size() == nw)
    for (std::size_t i = 0; i < nw; ++i)
      if ((long long)orbs[i].size() != cert.orbit_sizes[i]) return false;
  for (std::size_t i = 0; i < nw; ++i)
    for (std::size_t j = i + 1; j < nw; ++j) {
      std::vector<Mat> inter;
      std::set_intersection(orbs[i].begin(), orbs[i].end(), orbs[j].begin(),
                            orbs[j].end(), std::back_inserter(inter));
      if (!inter.empty()) return false;
    }
  if (cert.kind == 'C') {
    long long a = (long long)orbs[0].size(), b2 = (long long)orbs[1].size();
    if (!(std::min(a, b2) > 2 || std::max(a, b2) > 4)) return false;
  }
  return true;
}

}  // namespace ctk::rack
