#include "ctk/mat.hpp"

namespace ctk::grp {

Mat::Mat(const gf::Field& f, int dim) : F(&f), n(std::uint8_t(dim)) {
  if (dim < 1 || dim > kMaxN) throw MatError("dimension out of range");
  if (f.q() > 255) throw MatError("field too large for matrix entries");
  e.fill(0);
}

Mat Mat::identity(const gf::Field& f, int dim) {
  Mat m(f, dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

void Mat::set(int i, int j, gf::Fq v) {
  if (v >= F->q()) throw MatError("entry not in field");
  e[i * n + j] = std::uint8_t(v);
}

Mat Mat::operator*(const Mat& o) const {
  if (n != o.n || F != o.F) throw MatError("dimension/field mismatch");
  Mat r(*F, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      gf::Fq a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < n; ++j) {
        gf::Fq b = o.at(k, j);
        if (b == 0) continue;
        r.e[i * n + j] =
            std::uint8_t(F->add(r.e[i * n + j], F->mul(a, b)));
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (n != o.n || F != o.F) throw MatError("dimension/field mismatch");
  Mat r(*F, n);
  for (int i = 0; i < n * n; ++i)
    r.e[i] = std::uint8_t(F->add(e[i], o.e[i]));
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (n != o.n || F != o.F) throw MatError("dimension/field mismatch");
  Mat r(*F, n);
  for (int i = 0; i < n * n; ++i)
    r.e[i] = std::uint8_t(F->sub(e[i], o.e[i]));
  return r;
}

Mat Mat::scaled(gf::Fq c) const {
  Mat r(*F, n);
  for (int i = 0; i < n * n; ++i) r.e[i] = std::uint8_t(F->mul(e[i], c));
  return r;
}

Mat Mat::transpose() const {
  Mat r(*F, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.set(j, i, at(i, j));
  return r;
}

Mat Mat::entry_frobenius(int k) const {
  Mat r(*F, n);
  for (int i = 0; i < n * n; ++i)
    r.e[i] = std::uint8_t(F->frobenius(e[i], k));
  return r;
}

namespace {
// Gauss-Jordan on [A | B]; returns rank of A, B becomes A^{-1}B if invertible
int gauss(const gf::Field& F, int n, std::vector<gf::Fq>& a,
          std::vector<gf::Fq>* b) {
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (a[r * n + col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) {
      std::swap(a[piv * n + j], a[rank * n + j]);
      if (b) std::swap((*b)[piv * n + j], (*b)[rank * n + j]);
    }
    gf::Fq inv = F.inv(a[rank * n + col]);
    for (int j = 0; j < n; ++j) {
      a[rank * n + j] = F.mul(a[rank * n + j], inv);
      if (b) (*b)[rank * n + j] = F.mul((*b)[rank * n + j], inv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == rank) continue;
      gf::Fq f = a[r * n + col];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        a[r * n + j] = F.sub(a[r * n + j], F.mul(f, a[rank * n + j]));
        if (b)
          (*b)[r * n + j] = F.sub((*b)[r * n + j], F.mul(f, (*b)[rank * n + j]));
      }
    }
    ++rank;
  }
  return rank;
}
}  // namespace

Mat Mat::inverse() const {
  std::vector<gf::Fq> a(n * n), b(n * n, 0);
  for (int i = 0; i < n * n; ++i) a[i] = e[i];
  for (int i = 0; i < n; ++i) b[i * n + i] = 1;
  if (gauss(*F, n, a, &b) != n) throw MatError("matrix not invertible");
  Mat r(*F, n);
  for (int i = 0; i < n * n; ++i) r.e[i] = std::uint8_t(b[i]);
  return r;
}

int Mat::rank() const {
  std::vector<gf::Fq> a(n * n);
  for (int i = 0; i < n * n; ++i) a[i] = e[i];
  return gauss(*F, n, a, nullptr);
}

gf::Fq Mat::det() const {
  // triangularize a copy, track row swaps
  std::vector<gf::Fq> a(n * n);
  for (int i = 0; i < n * n; ++i) a[i] = e[i];
  gf::Fq d = 1;
  int r0 = 0;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = r0; r < n; ++r)
      if (a[r * n + col] != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != r0) {
      for (int j = 0; j < n; ++j) std::swap(a[piv * n + j], a[r0 * n + j]);
      d = F->neg(d);
    }
    d = F->mul(d, a[r0 * n + col]);
    gf::Fq inv = F->inv(a[r0 * n + col]);
    for (int r = r0 + 1; r < n; ++r) {
      gf::Fq f = F->mul(a[r * n + col], inv);
      if (f == 0) continue;
      for (int j = col; j < n; ++j)
        a[r * n + j] = F->sub(a[r * n + j], F->mul(f, a[r0 * n + j]));
    }
    ++r0;
  }
  return d;
}

Mat Mat::pow(long long k) const {
  Mat base = k < 0 ? inverse() : *this;
  unsigned long long kk = k < 0 ? -(unsigned long long)k : k;
  Mat r = identity(*F, n);
  while (kk) {
    if (kk & 1) r = r * base;
    base = base * base;
    kk >>= 1;
  }
  return r;
}

Mat Mat::conj(const Mat& x) const { return *this * x * inverse(); }

bool Mat::is_identity() const { return *this == identity(*F, n); }

bool Mat::is_scalar() const {
  gf::Fq d = at(0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j) != (i == j ? d : 0)) return false;
  return true;
}

long long Mat::order(long long cap) const {
  Mat id = identity(*F, n), x = *this;
  for (long long k = 1; k <= cap; ++k) {
    if (x == id) return k;
    x = x * *this;
  }
  throw MatError("order exceeds cap");
}

bool Mat::operator<(const Mat& o) const {
  if (n != o.n) return n < o.n;
  for (int i = 0; i < n * n; ++i)
    if (e[i] != o.e[i]) return e[i] < o.e[i];
  return false;
}

std::string Mat::to_string() const {
  std::string s = "[";
  for (int i = 0; i < n; ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < n; ++j)
      s += (j ? "," : "") + F->to_string(at(i, j));
  }
  return s + "]";
}

Mat mat_from_ints(const gf::Field& f, int n,
                  const std::vector<long long>& rows) {
  if (int(rows.size()) != n * n) throw MatError("bad entry count");
  Mat m(f, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, f.from_int(rows[i * n + j]));
  return m;
}

Mat antidiag_ones(const gf::Field& f, int n) {
  Mat m(f, n);
  for (int i = 0; i < n; ++i) m.set(i, n - 1 - i, 1);
  return m;
}

}  // namespace ctk::grp
