#pragma once

// Explicit matrix groups over GF(q): construction, membership, bounded
// enumeration, conjugacy machinery, central quotients.

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ctk/mat.hpp"

namespace ctk::grp {

struct GrpError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceeded : GrpError {
  using GrpError::GrpError;
};

enum class Family { SL, Sp, SU, GL, GU };

struct GroupSpec {
  Family family;
  int n;  // matrix dimension
  int q;  // defining field size (entries live in GF(q^2) for SU/GU)
  bool mod_center = false;

  static GroupSpec parse(const std::string& s);  // e.g. "sp4:3/z"
  std::string str() const;
  bool operator==(const GroupSpec&) const = default;
};

inline constexpr std::size_t kEnumCap = 2000000;
inline constexpr std::size_t kOrbitCap = 10000000;

class GroupHandle {
public:
  GroupSpec spec;
  const gf::Field* F;            // entry field
  std::vector<Mat> gens;
  std::optional<Mat> form;       // J-tilde for Sp, J for SU/GU
  long long order_formula = 0;   // |G| from the classical formula (pre-quotient)
  mutable bool order_verified = false;
  std::vector<Mat> center_scalars;  // scalar matrices in the (unquotiented) group

  bool member(const Mat& m) const;       // in the unquotiented matrix group
  Mat steinberg(const Mat& m) const;     // J * transpose(m^(q))^{-1} * J
  long long quotient_order() const {
    return order_formula / (long long)center_scalars.size();
  }

  // canonical representative modulo the scalar center
  Mat central_quotient_rep(const Mat& m) const;

  // element domain ops: identity on matrices, or quotient reps when mod_center
  Mat canon(const Mat& m) const {
    return spec.mod_center ? central_quotient_rep(m) : m;
  }
  Mat op_mul(const Mat& a, const Mat& b) const { return canon(a * b); }
  Mat op_inv(const Mat& a) const { return canon(a.inverse()); }
  Mat op_conj(const Mat& a, const Mat& x) const { return canon(a.conj(x)); }
  Mat op_conj2(const Mat& g, const Mat& ginv, const Mat& x) const {
    return canon(g * x * ginv);
  }
  Mat op_pow(const Mat& a, long long k) const;
  bool op_commute(const Mat& a, const Mat& b) const {
    return canon(a * b) == canon(b * a);
  }
  Mat op_identity() const { return Mat::identity(*F, spec.n); }
  long long op_order(const Mat& a) const;

  // full element list (quotient reps when mod_center), sorted canonically;
  // cached after the first call; verifies the order formula
  const std::vector<Mat>& enumerate(std::size_t cap = kEnumCap) const;

private:
  mutable std::shared_ptr<std::vector<Mat>> elems_;
};

GroupHandle make_group(const GroupSpec& spec);
inline GroupHandle make_group(const std::string& s) {
  return make_group(GroupSpec::parse(s));
}

// closure of {x} under conjugation by gens and their inverses, in the
// element domain of G (i.e. quotient reps when G.spec.mod_center); sorted
std::vector<Mat> conj_orbit(const GroupHandle& G, std::span<const Mat> gens,
                            const Mat& x, std::size_t cap = kOrbitCap);

struct ConjClass {
  Mat rep;                  // lexicographically least member
  std::vector<Mat> members; // sorted
};
std::vector<ConjClass> conjugacy_classes(const GroupHandle& G,
                                         std::size_t cap = kEnumCap);

// {h in G : hx = xh}, with generators = all members (spanning subset)
std::vector<Mat> centralizer(const GroupHandle& G, const Mat& x);

enum class Tri { False, True, Inconclusive };
// bidirectional conjugation-orbit search; sound and complete below cap
Tri is_conjugate(const GroupHandle& G, const Mat& a, const Mat& b,
                 std::size_t cap = kOrbitCap);

// classical order formulas
long long group_order_formula(const GroupSpec& spec);

}  // namespace ctk::grp
