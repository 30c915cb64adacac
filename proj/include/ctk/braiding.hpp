#pragma once

// Diagonal braiding extraction for abelian subracks, and the full case
// analysis showing that every diagonal character on the distinguished
// 4-element subrack of the order-3 unipotent class yields an
// infinite-dimensional Nichols algebra.

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctk/grp.hpp"

namespace ctk::braiding {

struct BraidingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAbelian : BraidingError {
  using BraidingError::BraidingError;
};
struct CharacterIllDefined : BraidingError {
  using BraidingError::BraidingError;
};
struct WhitelistMissing : BraidingError {
  using BraidingError::BraidingError;
};

// ---------------------------------------------------------------------------
// roots of unity as exponents mod N (no floating point)
// ---------------------------------------------------------------------------

struct RootOfUnity {
  int N = 3;
  int e = 0;  // exponent mod N

  RootOfUnity() = default;
  RootOfUnity(int order, int exp) : N(order), e(((exp % order) + order) % order) {}

  bool is_one() const { return e == 0; }
  RootOfUnity operator*(const RootOfUnity& o) const {
    if (N != o.N) throw BraidingError("root-of-unity order mismatch");
    return {N, e + o.e};
  }
  RootOfUnity inv() const { return {N, N - e}; }
  RootOfUnity pow(int k) const { return {N, e * ((k % N + N) % N)}; }
  bool operator==(const RootOfUnity& o) const { return N == o.N && e == o.e; }
  bool operator!=(const RootOfUnity& o) const { return !(*this == o); }
  bool operator<(const RootOfUnity& o) const { return e < o.e; }
  std::string to_string() const;  // "1", "w", "w^2", ...
};

// a formal product z0^{e0} z1^{e1} z2^{e2} of the three free character
// values, exponents mod N (z3 is determined: z3 = (z0 z1 z2)^{-1})
struct SymRoot {
  int N = 3;
  std::array<int, 3> e{0, 0, 0};

  SymRoot() = default;
  SymRoot(int order, std::array<int, 3> exp);

  bool is_one() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }
  SymRoot operator*(const SymRoot& o) const;
  SymRoot inv() const;
  bool operator==(const SymRoot& o) const { return N == o.N && e == o.e; }
  bool operator!=(const SymRoot& o) const { return !(*this == o); }
  std::string to_string() const;  // "1", "z1", "z0^2 z1^2 z2^2", ...
  // concrete value under the character sending z_i to the given exponents
  RootOfUnity eval(const std::array<int, 3>& zeta_exp) const;
};

// ---------------------------------------------------------------------------
// braiding matrices
// ---------------------------------------------------------------------------

struct BraidingMatrix {
  int n = 0;
  int N = 3;
  std::vector<RootOfUnity> q;  // row-major

  BraidingMatrix() = default;
  BraidingMatrix(int size, int order)
      : n(size), N(order), q(size * size, RootOfUnity{order, 0}) {}
  const RootOfUnity& at(int i, int j) const { return q[i * n + j]; }
  RootOfUnity& at(int i, int j) { return q[i * n + j]; }
};

struct SymBraiding {
  int n = 0;
  int N = 3;
  std::vector<SymRoot> q;  // row-major

  const SymRoot& at(int i, int j) const { return q[i * n + j]; }
  SymRoot& at(int i, int j) { return q[i * n + j]; }
  BraidingMatrix eval(const std::array<int, 3>& zeta_exp) const;
};

// ---------------------------------------------------------------------------
// the subrack data: a rack orbit inside an abelian unipotent subgroup
// ---------------------------------------------------------------------------

struct SubrackData {
  const gf::Field* F = nullptr;
  grp::Mat g0;                  // base point of the orbit
  std::array<grp::Mat, 4> xs;   // conjugators x0..x3, x0 = identity
};

// the distinguished instance inside Sp4(3); eta is the square root of 1
// used in the base point id + eta*e14 (eta in {1,2})
SubrackData lemma_uno_subrack(gf::Fq eta = 1);

// the symbolic braiding: entry (i,j) is the coordinate vector of
// x_j^{-1} x_i |> g0 with respect to the basis (g0, g1, g2) of the abelian
// subgroup generated by the orbit, read as the formal character value
// z0^a z1^b z2^c.  Throws NotAbelian if that subgroup is not abelian and
// CharacterIllDefined if some conjugate falls outside it.
SymBraiding symbolic_braiding(const SubrackData& data);

// instantiate at a concrete character; the fourth value z3 is determined by
// the constraint z0 z1 z2 z3 = 1 and never supplied
BraidingMatrix braiding_from_subrack(const SubrackData& data,
                                     const std::array<int, 3>& zeta_exp);

// ---------------------------------------------------------------------------
// generalized Dynkin diagrams
// ---------------------------------------------------------------------------

struct Diagram {
  struct Edge {
    int i, j;           // i < j
    RootOfUnity label;  // q_ij * q_ji, never 1
  };
  int N = 3;
  std::vector<RootOfUnity> vertex;  // q_ii
  std::vector<Edge> edges;

  int rank() const { return (int)vertex.size(); }
  bool connected() const;
  int components() const;
  // "v:a,b,...|e:c,d,..." with sorted exponent lists
  std::string canonical_encoding() const;
};

Diagram diagram(const BraidingMatrix& Q);
Diagram subdiagram(const BraidingMatrix& Q, const std::vector<int>& idx);

// ---------------------------------------------------------------------------
// finiteness whitelist (externally sourced classification data)
// ---------------------------------------------------------------------------

struct Whitelist {
  int N = 3;
  // rank -> canonical encodings of the connected diagrams of that rank that
  // occur in the classification
  std::map<int, std::vector<std::string>> by_rank;

  bool has_rank(int r) const { return by_rank.count(r) > 0; }
  bool contains(const Diagram& d) const;
};

Whitelist load_whitelist();  // data/heckenberger_mu3.json

// ---------------------------------------------------------------------------
// the full case analysis
// ---------------------------------------------------------------------------

struct TupleVerdict {
  std::array<int, 3> zeta_exp;  // exponents of (z0, z1, z2)
  std::string verdict;          // always "infinite (...)"
};

// all 27 characters; throws WhitelistMissing if the whitelist lacks a rank
// the analysis needs to consult
std::vector<TupleVerdict> lemma_uno_decide(const Whitelist* wl = nullptr);

}  // namespace ctk::braiding
