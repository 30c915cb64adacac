#pragma once

// Root systems for types A-G, Weyl action on roots and torus elements,
// torus-character evaluation, Phi_t, and center tables.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctk/gf.hpp"

namespace ctk::lie {

struct LieError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Kind : char { A = 'A', B = 'B', C = 'C', D = 'D',
                         E = 'E', F = 'F', G = 'G' };

Kind kind_from_char(char c);

// integer vector in the simple-root basis
using Root = std::vector<int>;

struct RootSystem {
  Kind kind;
  int rank;
  // cartan[i][j] = <alpha_j, alpha_i^vee> (pairing of root j with coroot i)
  std::vector<std::vector<int>> cartan;
  std::vector<Root> roots;          // sorted lexicographically
  std::vector<int> positives;       // indices into roots
  int highest_root = -1;            // index into roots
  std::optional<int> highest_short_root;  // index; set iff two root lengths
  std::vector<long long> len2;      // squared lengths of simple roots, scaled
                                    // so the short ones have len2 = 2

  int root_index(const Root& r) const;     // -1 if absent
  // <beta, alpha_i^vee> for beta in the simple-root basis
  int pairing(const Root& beta, int i) const;
  // 2*(beta,gamma) in the same scaling as len2
  long long form2(const Root& beta, const Root& gamma) const;
  Root simple(int i) const;
  bool is_positive(const Root& r) const;
  int height(const Root& r) const;
  Root reflect(int i, const Root& beta) const;  // s_i(beta)
};

// valid pairs: A l>=1, B l>=2, C l>=2, D l>=3, E 6..8, F 4, G 2
RootSystem build_root_system(Kind kind, int rank);

struct WeylWord {
  std::vector<int> letters;  // applied right to left: w = s_{l0} s_{l1} ...
};

// w(beta)
Root weyl_act_root(const RootSystem& rs, const WeylWord& w, const Root& beta);

WeylWord longest_element(const RootSystem& rs);
bool is_minus_one(const RootSystem& rs);

struct TorusElem {
  const gf::Field* field = nullptr;
  std::vector<gf::Fq> exponents;  // (xi_1..xi_l), all nonzero: prod a_i^vee(xi_i)

  bool operator==(const TorusElem& o) const {
    return field == o.field && exponents == o.exponents;
  }
};

TorusElem torus_identity(const RootSystem& rs, const gf::Field& F);
TorusElem torus_inverse(const TorusElem& t);
long long torus_order(const TorusElem& t);

// alpha(t) = prod_j xi_j^{<alpha, alpha_j^vee>}
gf::Fq eval_root(const RootSystem& rs, const Root& alpha, const TorusElem& t);

// w(t) in exponent form; convention fixed so w0(t) = t^{-1} when is_minus_one
TorusElem weyl_act_torus(const RootSystem& rs, const WeylWord& w,
                         const TorusElem& t);

struct SubsystemComponent {
  Kind kind;
  int rank;
  std::vector<Root> simples;  // a simple system for the component
};

struct Subsystem {
  std::vector<int> root_indices;             // indices into rs.roots
  std::vector<SubsystemComponent> components;  // sorted by (kind, rank)
};

// Phi_t = {alpha in Phi : alpha(t) = 1}, with component types identified
Subsystem phi_t(const RootSystem& rs, const TorusElem& t);

// "A1xB2"-style canonical string, "0" when empty
std::string subsystem_type_string(const Subsystem& s);

struct CenterGen {
  TorusElem z;
  long long order;
};

// Generators of Z(G_sc^F) exactly as tabulated. twist = 1 (split form; table
// needs q odd), 2 (Steinberg forms 2A, 2D, 2E6), or 3 (triality D4 only).
// Empty list = trivial center. Throws NotTabulated (as LieError) outside
// table coverage.
std::vector<CenterGen> center_table(Kind kind, int rank, long long q,
                                    int twist);

}  // namespace ctk::lie
