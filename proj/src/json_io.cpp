#include "ctk/json_io.hpp"

#include <algorithm>

#include "ctk/jordan.hpp"

namespace ctk::json_io {

using grp::Mat;
using gf::Field;
using gf::Fq;
using nlohmann::json;

// ---------------------------------------------------------------------------
// scalars
// ---------------------------------------------------------------------------

json scalar_to_json(const Field& F, Fq a) {
  auto [p, m] = gf::factor_prime_power(F.q());
  return json{{"p", p}, {"m", m}, {"c", F.coeffs(a)}};
}

Fq scalar_from_json(const json& j, const Field*& F) {
  if (!j.is_object() || !j.contains("p") || !j.contains("m") || !j.contains("c"))
    throw JsonIoError("scalar: expected object with p, m, c");
  int p = j.at("p").get<int>();
  int m = j.at("m").get<int>();
  auto c = j.at("c").get<std::vector<int>>();
  if ((int)c.size() != m) throw JsonIoError("scalar: coefficient list length != m");
  F = &Field::get(p, m);
  return F->from_coeffs(c);
}

// ---------------------------------------------------------------------------
// matrices
// ---------------------------------------------------------------------------

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.n; ++i) {
    json row = json::array();
    for (int j = 0; j < m.n; ++j) row.push_back(scalar_to_json(*m.F, m.at(i, j)));
    rows.push_back(row);
  }
  return json{{"n", (int)m.n}, {"q", (long long)m.F->q()}, {"rows", rows}};
}

Mat mat_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("q") || !j.contains("rows"))
    throw JsonIoError("matrix: expected object with n, q, rows");
  int n = j.at("n").get<int>();
  long long q = j.at("q").get<long long>();
  const json& rows = j.at("rows");
  if (!rows.is_array() || (int)rows.size() != n)
    throw JsonIoError("matrix: rows has wrong length");
  const Field* F = nullptr;
  Mat out;
  for (int i = 0; i < n; ++i) {
    const json& row = rows.at(i);
    if (!row.is_array() || (int)row.size() != n)
      throw JsonIoError("matrix: row has wrong length");
    for (int c = 0; c < n; ++c) {
      const Field* Fe = nullptr;
      Fq v = scalar_from_json(row.at(c), Fe);
      if (Fe->q() != q) throw JsonIoError("matrix: entry field does not match q");
      if (!F) {
        F = Fe;
        out = Mat::zero(*F, n);
      }
      out.set(i, c, v);
    }
  }
  if (!F) throw JsonIoError("matrix: empty");
  return out;
}

// ---------------------------------------------------------------------------
// certificates
// ---------------------------------------------------------------------------

namespace {

std::string ineq_name(char kind) {
  switch (kind) {
    case 'D': return "rs2_ne_sr2";
    case 'C': return "rs_ne_sr";
    default: return "pairwise_non_commuting";
  }
}

}  // namespace

json cert_to_json(const rack::CollapseCertificate& cert) {
  json checks{{ineq_name(cert.kind), true},
              {"orbits_disjoint", true},
              {"orbit_sizes", cert.orbit_sizes}};
  json out{{"kind", std::string(1, cert.kind)},
           {"group", cert.group.str()},
           {"found_by", cert.found_by},
           {"checks", checks}};
  if (cert.witnesses.size() == 2) {
    out["r"] = mat_to_json(cert.witnesses[0]);
    out["s"] = mat_to_json(cert.witnesses[1]);
  } else {
    json ws = json::array();
    for (const Mat& w : cert.witnesses) ws.push_back(mat_to_json(w));
    out["witnesses"] = ws;
  }
  return out;
}

rack::CollapseCertificate cert_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("group"))
    throw JsonIoError("certificate: expected object with kind, group");
  rack::CollapseCertificate cert;
  std::string kind = j.at("kind").get<std::string>();
  if (kind.size() != 1 || (kind != "C" && kind != "D" && kind != "F"))
    throw JsonIoError("certificate: kind must be C, D, or F");
  cert.kind = kind[0];
  cert.group = grp::GroupSpec::parse(j.at("group").get<std::string>());
  if (j.contains("found_by")) cert.found_by = j.at("found_by").get<std::string>();
  if (j.contains("r") && j.contains("s")) {
    cert.witnesses.push_back(mat_from_json(j.at("r")));
    cert.witnesses.push_back(mat_from_json(j.at("s")));
  } else if (j.contains("witnesses")) {
    for (const json& w : j.at("witnesses"))
      cert.witnesses.push_back(mat_from_json(w));
  } else {
    throw JsonIoError("certificate: expected r/s or witnesses");
  }
  if (j.contains("checks") && j.at("checks").contains("orbit_sizes"))
    cert.orbit_sizes =
        j.at("checks").at("orbit_sizes").get<std::vector<long long>>();
  return cert;
}

// ---------------------------------------------------------------------------
// named replay
// ---------------------------------------------------------------------------

NamedVerify verify_named(const grp::GroupHandle& G,
                         const rack::CollapseCertificate& cert,
                         std::size_t orbit_cap) {
  auto fail = [](const std::string& name) { return NamedVerify{false, name}; };
  if (cert.group != G.spec) return fail("group");
  std::size_t nw = cert.witnesses.size();
  if ((cert.kind == 'D' || cert.kind == 'C') && nw != 2)
    return fail("witness_count");
  if (cert.kind == 'F' && nw != 4) return fail("witness_count");
  for (const Mat& w : cert.witnesses) {
    if (!G.member(w)) return fail("membership");
    if (G.canon(w) != w) return fail("canonical_representatives");
  }
  for (std::size_t i = 1; i < nw; ++i)
    if (grp::is_conjugate(G, cert.witnesses[0], cert.witnesses[i]) !=
        grp::Tri::True)
      return fail("same_class");
  if (cert.kind == 'D') {
    Mat rs = G.op_mul(cert.witnesses[0], cert.witnesses[1]);
    Mat sr = G.op_mul(cert.witnesses[1], cert.witnesses[0]);
    if (G.op_pow(rs, 2) == G.op_pow(sr, 2)) return fail("rs2_ne_sr2");
  } else {
    for (std::size_t i = 0; i < nw; ++i)
      for (std::size_t j = i + 1; j < nw; ++j)
        if (G.op_commute(cert.witnesses[i], cert.witnesses[j]))
          return fail(ineq_name(cert.kind));
  }
  if (cert.kind == 'C') {
    for (const Mat& w : cert.witnesses)
      if (jordan::classify_element(G, w) != jordan::ElementKind::Mixed)
        return fail("witness_kind");
  }
  std::vector<std::vector<Mat>> orbs;
  try {
    for (const Mat& w : cert.witnesses)
      orbs.push_back(grp::conj_orbit(G, cert.witnesses, w, orbit_cap));
  } catch (const grp::CapExceeded&) {
    return fail("orbit_cap");
  }
  if (cert.orbit_sizes.size() == nw)
    for (std::size_t i = 0; i < nw; ++i)
      if ((long long)orbs[i].size() != cert.orbit_sizes[i])
        return fail("orbit_sizes");
  for (std::size_t i = 0; i < nw; ++i)
    for (std::size_t j = i + 1; j < nw; ++j) {
      std::vector<Mat> inter;
      std::set_intersection(orbs[i].begin(), orbs[i].end(), orbs[j].begin(),
                            orbs[j].end(), std::back_inserter(inter));
      if (!inter.empty()) return fail("orbits_disjoint");
    }
  if (cert.kind == 'C') {
    long long a = (long long)orbs[0].size(), b = (long long)orbs[1].size();
    if (!(std::min(a, b) > 2 || std::max(a, b) > 4))
      return fail("orbit_size_threshold");
  }
  return {true, ""};
}

}  // namespace ctk::json_io
