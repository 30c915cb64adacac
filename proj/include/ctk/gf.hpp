#pragma once

// Exact arithmetic in GF(p^m), polynomial-basis representation.
// Elements are value indices: a = sum c_i * p^i with (c_0,...,c_{m-1}) the
// little-endian coefficient vector over GF(p).  The modulus is the
// lexicographically least irreducible monic polynomial of degree m, so
// serialized elements are reproducible across runs.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctk::gf {

using Fq = std::uint32_t;

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Field {
public:
  // cached registry; returned reference lives for the program duration
  static const Field& get(int p, int m);

  Field(int p, int m);

  int p() const { return p_; }
  int m() const { return m_; }
  Fq q() const { return q_; }

  // modulus as little-endian coefficient vector of length m+1 (monic)
  const std::vector<int>& modulus() const { return modulus_; }

  Fq zero() const { return 0; }
  Fq one() const { return 1; }

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, long long e) const;       // negative e allowed for a != 0
  Fq frobenius(Fq a, int k) const;       // a^(p^k), k >= 0
  Fq from_int(long long v) const;        // prime-subfield element v mod p
  Fq minus_one() const { return neg(1); }

  Fq generator() const { return gen_; }
  long long order(Fq a) const;           // multiplicative order, a != 0

  std::vector<int> coeffs(Fq a) const;   // little-endian, length m
  Fq from_coeffs(const std::vector<int>& c) const;

  std::string to_string(Fq a) const;

private:
  int p_, m_;
  Fq q_;
  std::vector<int> modulus_;
  Fq gen_ = 0;
  bool tabled_ = false;
  std::vector<Fq> add_t_, mul_t_, neg_t_, inv_t_, frob_t_;

  Fq mul_slow(Fq a, Fq b) const;
  Fq add_slow(Fq a, Fq b) const;
};

// GF(p^m) inside GF(p^{2m}), realized as the fixed field of frobenius(.,m).
class SubfieldEmbedding {
public:
  SubfieldEmbedding(const Field& small, const Field& big);

  const Field& small() const { return *small_; }
  const Field& big() const { return *big_; }

  Fq operator()(Fq a) const { return table_[a]; }
  bool in_subfield(Fq big_elem) const;   // fixed by frobenius(.,m)
  Fq project(Fq big_elem) const;         // inverse map; throws if not in subfield

private:
  const Field* small_;
  const Field* big_;
  std::vector<Fq> table_;
};

// all (xi, eta) in GF(q^2)^2 with eta^q + eta = xi^{q+1}, in value order
std::vector<std::pair<Fq, Fq>> hermitian_pairs(const Field& field_q2, int q);

// factor a prime power; throws FieldError if q is not one
std::pair<int, int> factor_prime_power(long long q);

bool is_prime(long long n);

}  // namespace ctk::gf
