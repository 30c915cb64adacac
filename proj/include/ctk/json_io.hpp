#pragma once

// JSON wire formats: field scalars, matrices, collapse certificates.
//
//   scalar       {"p":3,"m":2,"c":[1,2]}           (c little-endian, length m)
//   matrix       {"n":4,"q":9,"rows":[[scalar,...],...]}
//   certificate  {"kind":"D","group":"sp4:3/z","r":<matrix>,"s":<matrix>,
//                 "found_by":"lex",
//                 "checks":{"rs2_ne_sr2":true,"orbits_disjoint":true,
//                           "orbit_sizes":[a,b]}}
//
// Type F certificates carry "witnesses":[<matrix>...] instead of "r"/"s" and
// "pairwise_non_commuting" instead of "rs2_ne_sr2" (type C uses "rs_ne_sr").

#include <string>

#include <json.hpp>

#include "ctk/rack.hpp"

namespace ctk::json_io {

struct JsonIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// scalars
nlohmann::json scalar_to_json(const gf::Field& F, gf::Fq a);
// returns the element and, through out parameter, the field it lives in
gf::Fq scalar_from_json(const nlohmann::json& j, const gf::Field*& F);

// matrices
nlohmann::json mat_to_json(const grp::Mat& m);
grp::Mat mat_from_json(const nlohmann::json& j);

// certificates
nlohmann::json cert_to_json(const rack::CollapseCertificate& cert);
rack::CollapseCertificate cert_from_json(const nlohmann::json& j);

// replay with named outcomes: same semantics as rack::verify_certificate,
// but reports which check was violated ("" when all pass)
struct NamedVerify {
  bool ok = false;
  std::string violated;  // e.g. "rs2_ne_sr2", "orbits_disjoint", ...
};
NamedVerify verify_named(const grp::GroupHandle& G,
                         const rack::CollapseCertificate& cert,
                         std::size_t orbit_cap = grp::kOrbitCap);

}  // namespace ctk::json_io
