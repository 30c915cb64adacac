#pragma once

// Chevalley-Jordan (p-) decomposition and unipotent Jordan labels.

#include <vector>

#include "ctk/grp.hpp"

namespace ctk::jordan {

struct JordanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PDecomposition {
  grp::Mat g_s;  // p-regular (semisimple) part
  grp::Mat g_u;  // p-part (unipotent)
  int p;
  long long order;  // ord(g)
};

// plain matrix version: g of finite order in GL(n, p^m)
PDecomposition p_decompose(const grp::Mat& g, int p);

// group-aware version: uses the element domain of G (quotient reps when
// mod_center), so it is meaningful for central quotients too
PDecomposition p_decompose(const grp::GroupHandle& G, const grp::Mat& g);

// block sizes of the unipotent Jordan form, descending
std::vector<int> jordan_partition(const grp::Mat& u);

enum class ElementKind { Central, Semisimple, UnipotentNontrivial, Mixed };
const char* kind_name(ElementKind k);

ElementKind classify_element(const grp::GroupHandle& G, const grp::Mat& g);

// char-2 symplectic class labels W(k)/V(k) are out of scope; partition labels
// are flagged ambiguous there
bool label_ambiguous(const grp::GroupSpec& spec);

}  // namespace ctk::jordan
