#pragma once

// Small dense matrices over a finite field, value semantics, fixed capacity.
// Entries are field value indices (see gf.hpp); the field lives in a shared
// registry so matrices can carry a plain pointer.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctk/gf.hpp"

namespace ctk::grp {

inline constexpr int kMaxN = 7;

struct MatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Mat {
  const gf::Field* F = nullptr;
  std::uint8_t n = 0;
  std::array<std::uint8_t, kMaxN * kMaxN> e{};  // row-major, zero padded

  Mat() = default;
  Mat(const gf::Field& f, int dim);

  static Mat identity(const gf::Field& f, int dim);
  static Mat zero(const gf::Field& f, int dim) { return Mat(f, dim); }

  gf::Fq at(int i, int j) const { return e[i * n + j]; }
  void set(int i, int j, gf::Fq v);

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(gf::Fq c) const;
  Mat transpose() const;
  Mat inverse() const;
  Mat pow(long long k) const;
  Mat conj(const Mat& x) const;  // this ▷ x = this * x * this^{-1}
  Mat entry_frobenius(int k) const;

  gf::Fq det() const;
  int rank() const;
  bool is_identity() const;
  bool is_scalar() const;
  long long order(long long cap = 1000000) const;  // multiplicative order

  bool operator==(const Mat& o) const { return n == o.n && e == o.e; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  // canonical total order: dimension, then row-major entry values
  bool operator<(const Mat& o) const;

  std::string to_string() const;
};

struct MatHash {
  std::size_t operator()(const Mat& m) const {
    std::size_t h = 1469598103934665603ull;
    h = (h ^ m.n) * 1099511628211ull;
    for (int i = 0; i < m.n * m.n; ++i)
      h = (h ^ m.e[i]) * 1099511628211ull;
    return h;
  }
};

// convenience: build from row-major integer entries (prime-subfield values)
Mat mat_from_ints(const gf::Field& f, int n, const std::vector<long long>& rows);

// antidiagonal permutation matrix J_n (ones on the antidiagonal)
Mat antidiag_ones(const gf::Field& f, int n);

}  // namespace ctk::grp
