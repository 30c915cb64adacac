#pragma once

// Conjugacy-class racks and certified detectors for collapse types C, D, F.

#include <optional>
#include <string>

#include "ctk/grp.hpp"

namespace ctk::rack {

struct RackError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ClassRack {
  const grp::GroupHandle* G = nullptr;
  grp::Mat rep;
  std::vector<grp::Mat> members;  // full class, sorted canonically

  bool mod_center() const { return G->spec.mod_center; }
};

ClassRack make_class_rack(const grp::GroupHandle& G, const grp::Mat& x,
                          std::size_t cap = grp::kOrbitCap);

struct Budget {
  std::size_t pair_budget = 50000;   // pairs examined per phase
  std::size_t quad_budget = 200000;  // quadruples examined (randomized phase)
  std::size_t orbit_cap = 100000;    // <r,s>-orbit size bound per pair
  unsigned long long seed = 0;       // randomized phase
  bool parallel = true;              // block-parallel scan (serial reference
                                     // when false; identical results)
};

struct CollapseCertificate {
  char kind = '?';  // 'C', 'D', or 'F'
  grp::GroupSpec group;
  std::vector<grp::Mat> witnesses;      // D/C: {r, s}; F: {r1..r4}
  std::vector<long long> orbit_sizes;   // matching witnesses
  std::string found_by = "lex";         // "lex", "random", or "external"
};

struct ScanResult {
  std::optional<CollapseCertificate> cert;
  bool complete = false;    // search space exhausted with no orbit caps hit
  std::size_t scanned = 0;  // pairs/quadruples actually examined
  std::size_t capped = 0;   // pairs abandoned at the orbit cap
};

// pair r,s in O with (rs)^2 != (sr)^2 and distinct <r,s>-orbits; exhaustive
// under full budget, so an exhausted negative is complete
ScanResult check_type_D(const ClassRack& O, const Budget& b = {});

// pair r,s with rs != sr, distinct <r,s>-orbits, and min(|O_r|,|O_s|) > 2 or
// max > 4; applied to mixed classes only (on unipotent classes the size
// thresholds alone admit benign configurations that the known classification
// excludes); negatives are heuristic (a larger H might still work)
ScanResult check_type_C(const ClassRack& O, const Budget& b = {});

// quadruple of pairwise non-commuting members with pairwise distinct orbits
// under <r1..r4>; exhaustive for |O| <= 60, randomized beyond
ScanResult check_type_F(const ClassRack& O, const Budget& b = {});

// p-part criterion: if y_s z_u != z_u y_s and z_s y_u != y_u z_s then
// yz != zy and both <y,z>-orbits have size >= 3; with conjugacy in G and
// orbit disjointness this upgrades to a type C certificate
struct Lt0Result {
  bool hypotheses_hold = false;
  long long orbit_y = 0, orbit_z = 0;
  std::optional<CollapseCertificate> cert;
};
Lt0Result lemma_tecnico0(const grp::GroupHandle& G, const grp::Mat& y,
                         const grp::Mat& z,
                         std::size_t orbit_cap = grp::kOrbitCap);

// product-subrack criterion: x1,x2 from a rack X1 with (x1x2)^2 != (x2x1)^2,
// y1 != y2 commuting members of a rack X2 commuting with X1 elementwise;
// yields a type D certificate for (x1y1, x2y2) in the ambient class
enum class ProductVerdict {
  Ok,
  X1HypothesisFailed,       // (x1x2)^2 == (x2x1)^2
  X2HypothesisFailed,       // y1 == y2 or y1y2 != y2y1
  ComponentsDontCommute,    // some xi does not commute with some yj
};
struct ProductResult {
  ProductVerdict verdict;
  std::optional<CollapseCertificate> cert;
};
ProductResult product_type_D(const grp::GroupHandle& G, const grp::Mat& x1,
                             const grp::Mat& x2, const grp::Mat& y1,
                             const grp::Mat& y2,
                             std::size_t orbit_cap = grp::kOrbitCap);

// full verdict: D, then C, then F
struct KthulhuReport {
  std::optional<CollapseCertificate> cert;
  bool d_complete = false;
  bool f_complete = false;
  bool c_heuristic = true;  // C negatives are always heuristic
  bool mod_center = false;
  std::size_t pairs_scanned = 0;
  std::size_t pairs_capped = 0;
};
KthulhuReport kthulhu_scan(const ClassRack& O, const Budget& b = {});

// replay a certificate from its stored matrices alone: membership, mutual
// conjugacy, the defining inequalities, and orbit disjointness (intersection
// emptiness) -- never the search state
bool verify_certificate(const grp::GroupHandle& G,
                        const CollapseCertificate& cert,
                        std::size_t orbit_cap = grp::kOrbitCap);

}  // namespace ctk::rack
