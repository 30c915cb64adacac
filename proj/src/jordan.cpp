#include "ctk/jordan.hpp"

#include <algorithm>
#include <numeric>

namespace ctk::jordan {

namespace {

// modular inverse for small moduli
long long modinv(long long a, long long m) {
  a %= m;
  for (long long x = 1; x < m; ++x)
    if (a * x % m == 1) return x;
  throw JordanError("not invertible");
}

template <typename MulOrder>
PDecomposition decompose_impl(const grp::Mat& g, int p, long long n,
                              MulOrder&& op_pow) {
  long long pa = 1;
  while (n % (pa * p) == 0) pa *= p;
  long long m = n / pa;
  grp::Mat gu = op_pow(g, pa == 1 ? 0 : m * modinv(m, pa));
  grp::Mat gs = op_pow(g, m == 1 ? 0 : pa * modinv(pa, m));
  if (pa == 1) gu = op_pow(g, 0), gs = g;
  if (m == 1) gs = op_pow(g, 0), gu = g;
  return {gs, gu, p, n};
}

}  // namespace

PDecomposition p_decompose(const grp::Mat& g, int p) {
  long long n = g.order();
  return decompose_impl(g, p, n,
                        [](const grp::Mat& a, long long k) { return a.pow(k); });
}

PDecomposition p_decompose(const grp::GroupHandle& G, const grp::Mat& g) {
  long long n = G.op_order(g);
  return decompose_impl(G.canon(g), G.F->p(), n,
                        [&](const grp::Mat& a, long long k) {
                          return G.op_pow(a, k);
                        });
}

std::vector<int> jordan_partition(const grp::Mat& u) {
  int n = u.n;
  grp::Mat nil = u - grp::Mat::identity(*u.F, n);
  // u unipotent iff (u-1)^n = 0
  std::vector<int> ranks{n};  // rank((u-1)^k), k = 0,1,...
  grp::Mat pw = grp::Mat::identity(*u.F, n);
  for (int k = 1; k <= n; ++k) {
    pw = pw * nil;
    ranks.push_back(pw.rank());
  }
  if (ranks.back() != 0) throw JordanError("NotUnipotent");
  std::vector<int> part;
  for (int k = 1; k <= n; ++k) {
    int rkm1 = ranks[k - 1];
    int rk = ranks[k];
    int rkp1 = k + 1 <= n ? ranks[k + 1] : 0;
    int blocks = rkm1 - 2 * rk + rkp1;  // number of blocks of size exactly k
    for (int b = 0; b < blocks; ++b) part.push_back(k);
  }
  std::sort(part.rbegin(), part.rend());
  return part;
}

const char* kind_name(ElementKind k) {
  switch (k) {
    case ElementKind::Central: return "central";
    case ElementKind::Semisimple: return "semisimple";
    case ElementKind::UnipotentNontrivial: return "unipotent";
    case ElementKind::Mixed: return "mixed";
  }
  return "?";
}

ElementKind classify_element(const grp::GroupHandle& G, const grp::Mat& g) {
  auto d = p_decompose(G, g);
  grp::Mat id = G.canon(G.op_identity());
  bool u_trivial = d.g_u == id;
  bool s_central = false;
  if (G.spec.mod_center) {
    s_central = d.g_s == id;  // center of the quotient groups used here is
                              // trivial for our families at desk scale
  } else {
    for (const grp::Mat& z : G.center_scalars)
      if (d.g_s == z) s_central = true;
  }
  if (s_central && u_trivial) return ElementKind::Central;
  if (u_trivial) return ElementKind::Semisimple;
  if (s_central) return ElementKind::UnipotentNontrivial;
  return ElementKind::Mixed;
}

bool label_ambiguous(const grp::GroupSpec& spec) {
  return spec.family == grp::Family::Sp && spec.q % 2 == 0;
}

}  // namespace ctk::jordan
