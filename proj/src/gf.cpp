#include "ctk/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace ctk::gf {

namespace {

// polynomials over GF(p), little-endian coefficient vectors

std::vector<int> poly_trim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b,
                          int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return poly_trim(std::move(c));
}

// remainder of a mod b, b monic-izable (leading coeff invertible)
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
  a = poly_trim(std::move(a));
  auto bt = poly_trim(b);
  if (bt.empty()) throw FieldError("poly_mod: division by zero");
  // inverse of leading coefficient mod p
  int lc = bt.back(), lcinv = 1;
  for (int i = 1; i < p; ++i)
    if (lc * i % p == 1) { lcinv = i; break; }
  while (a.size() >= bt.size()) {
    int f = a.back() * lcinv % p;
    size_t shift = a.size() - bt.size();
    for (size_t i = 0; i < bt.size(); ++i)
      a[shift + i] = ((a[shift + i] - f * bt[i]) % p + p) % p;
    a = poly_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

std::vector<int> decode_digits(Fq v, int p, int m) {
  std::vector<int> d(m, 0);
  for (int i = 0; i < m && v; ++i) {
    d[i] = int(v % Fq(p));
    v /= Fq(p);
  }
  return d;
}

Fq encode_digits(const std::vector<int>& d, int p) {
  Fq v = 0;
  for (size_t i = d.size(); i-- > 0;) v = v * Fq(p) + Fq(d[i]);
  return v;
}

bool poly_irreducible(const std::vector<int>& f, int p) {
  auto ft = poly_trim(f);
  if (ft.size() < 2) return false;
  int deg = int(ft.size()) - 1;
  // trial division by every monic polynomial of degree 1..deg/2
  for (int d = 1; 2 * d <= deg; ++d) {
    Fq count = 1;
    for (int i = 0; i < d; ++i) count *= Fq(p);
    for (Fq v = 0; v < count; ++v) {
      std::vector<int> g = decode_digits(v, p, d);
      g.push_back(1);  // monic of degree d
      if (poly_mod(ft, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> fs;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) { n /= d; ++e; }
      fs.push_back({d, e});
    }
  }
  if (n > 1) fs.push_back({n, 1});
  return fs;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<int, int> factor_prime_power(long long q) {
  if (q < 2) throw FieldError("not a prime power: " + std::to_string(q));
  long long p = q;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) { p = d; break; }
  int m = 0;
  long long t = q;
  while (t % p == 0) { t /= p; ++m; }
  if (t != 1) throw FieldError("not a prime power: " + std::to_string(q));
  return {int(p), m};
}

Field::Field(int p, int m) : p_(p), m_(m) {
  if (!is_prime(p)) throw FieldError("NotPrime: " + std::to_string(p));
  if (m < 1 || m > 6) throw FieldError("DegreeOutOfRange: " + std::to_string(m));
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > (1 << 24)) throw FieldError("field too large");
  }
  q_ = Fq(q);

  if (m == 1) {
    modulus_ = {0, 1};  // x, so that the quotient is GF(p) itself
  } else {
    // least irreducible monic polynomial of degree m, ordered by the value
    // index of its little-endian lower-coefficient vector
    bool found = false;
    for (Fq v = 0; v < q_ && !found; ++v) {
      std::vector<int> f = decode_digits(v, p, m);
      f.push_back(1);
      if (poly_irreducible(f, p)) {
        modulus_ = f;
        found = true;
      }
    }
    if (!found) throw FieldError("NoIrreducibleFound");
  }

  tabled_ = (q_ <= 2048);
  if (tabled_) {
    add_t_.resize(size_t(q_) * q_);
    mul_t_.resize(size_t(q_) * q_);
    neg_t_.resize(q_);
    inv_t_.assign(q_, 0);
    frob_t_.resize(q_);
    for (Fq a = 0; a < q_; ++a) {
      for (Fq b = 0; b < q_; ++b) {
        add_t_[size_t(a) * q_ + b] = add_slow(a, b);
        mul_t_[size_t(a) * q_ + b] = mul_slow(a, b);
      }
    }
    for (Fq a = 0; a < q_; ++a) {
      for (Fq b = 0; b < q_; ++b) {
        if (add_t_[size_t(a) * q_ + b] == 0) neg_t_[a] = b;
        if (a != 0 && mul_t_[size_t(a) * q_ + b] == 1) inv_t_[a] = b;
      }
    }
    for (Fq a = 0; a < q_; ++a) {
      Fq r = 1;
      for (int i = 0; i < p_; ++i) r = mul(r, a);
      frob_t_[a] = r;
    }
  }

  // least generator of the multiplicative group
  for (Fq g = 1; g < q_; ++g) {
    if (order(g) == q_ - 1) { gen_ = g; break; }
  }
  if (gen_ == 0 && q_ > 2) throw FieldError("no generator found");
  if (q_ == 2) gen_ = 1;
}

const Field& Field::get(int p, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<Field>(p, m)).first;
  return *it->second;
}

Fq Field::add_slow(Fq a, Fq b) const {
  auto da = decode_digits(a, p_, m_), db = decode_digits(b, p_, m_);
  for (int i = 0; i < m_; ++i) da[i] = (da[i] + db[i]) % p_;
  return encode_digits(da, p_);
}

Fq Field::mul_slow(Fq a, Fq b) const {
  auto da = decode_digits(a, p_, m_), db = decode_digits(b, p_, m_);
  auto c = poly_mod(poly_mul(poly_trim(da), poly_trim(db), p_), modulus_, p_);
  return encode_digits(c, p_);
}

Fq Field::add(Fq a, Fq b) const {
  return tabled_ ? add_t_[size_t(a) * q_ + b] : add_slow(a, b);
}

Fq Field::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq Field::neg(Fq a) const {
  if (tabled_) return neg_t_[a];
  auto d = decode_digits(a, p_, m_);
  for (auto& x : d) x = (p_ - x) % p_;
  return encode_digits(d, p_);
}

Fq Field::mul(Fq a, Fq b) const {
  return tabled_ ? mul_t_[size_t(a) * q_ + b] : mul_slow(a, b);
}

Fq Field::inv(Fq a) const {
  if (a == 0) throw FieldError("division by zero");
  if (tabled_) return inv_t_[a];
  return pow(a, (long long)q_ - 2);
}

Fq Field::pow(Fq a, long long e) const {
  if (a == 0) {
    if (e < 0) throw FieldError("division by zero");
    return e == 0 ? 1 : 0;
  }
  long long mod = (long long)q_ - 1;
  e %= mod;
  if (e < 0) e += mod;
  Fq r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Fq Field::frobenius(Fq a, int k) const {
  if (k < 0) throw FieldError("frobenius: negative k");
  // the p-power map applied k times; Frobenius has order m
  Fq r = a;
  for (int i = 0; i < k % m_; ++i) r = tabled_ ? frob_t_[r] : pow(r, p_);
  return r;
}

Fq Field::from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  return Fq(r);
}

long long Field::order(Fq a) const {
  if (a == 0) throw FieldError("order of zero");
  long long n = (long long)q_ - 1;
  if (n == 0) return 1;
  long long ord = n;
  for (auto [pr, e] : factorize(n)) {
    for (int i = 0; i < e; ++i) {
      if (pow(a, ord / pr) == 1)
        ord /= pr;
      else
        break;
    }
  }
  return ord;
}

std::vector<int> Field::coeffs(Fq a) const { return decode_digits(a, p_, m_); }

Fq Field::from_coeffs(const std::vector<int>& c) const {
  if (int(c.size()) > m_) throw FieldError("coefficient vector too long");
  std::vector<int> d(c);
  for (auto& x : d) {
    x %= p_;
    if (x < 0) x += p_;
  }
  return encode_digits(d, p_);
}

std::string Field::to_string(Fq a) const {
  if (m_ == 1) return std::to_string(a);
  auto c = coeffs(a);
  std::string s = "[";
  for (int i = 0; i < m_; ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "]";
}

SubfieldEmbedding::SubfieldEmbedding(const Field& small, const Field& big)
    : small_(&small), big_(&big) {
  if (small.p() != big.p() || big.m() != 2 * small.m())
    throw FieldError("FieldMismatch: not a quadratic extension pair");
  table_.assign(small.q(), 0);
  // send the small generator g to h = G^{(Q-1)/(q-1)}, which has order q-1
  // and therefore lies in the unique subfield of size q
  long long Q = big.q(), qs = small.q();
  Fq h = big.pow(big.generator(), (Q - 1) / (qs - 1));
  table_[0] = 0;
  Fq gs = small.generator();
  Fq sv = 1, bv = 1;
  table_[1] = 1;
  for (long long k = 1; k < qs - 1; ++k) {
    sv = small.mul(sv, gs);
    bv = big.mul(bv, h);
    table_[sv] = bv;
  }
  // the map is a field isomorphism onto the fixed field; verify additivity
  for (Fq a = 0; a < small.q(); ++a) {
    if (!in_subfield(table_[a]))
      throw FieldError("embedding image not in fixed field");
    for (Fq b = a; b < small.q(); ++b)
      if (table_[small.add(a, b)] != big.add(table_[a], table_[b]))
        throw FieldError("embedding is not additive");
  }
}

bool SubfieldEmbedding::in_subfield(Fq big_elem) const {
  return big_->frobenius(big_elem, small_->m()) == big_elem;
}

Fq SubfieldEmbedding::project(Fq big_elem) const {
  for (Fq a = 0; a < small_->q(); ++a)
    if (table_[a] == big_elem) return a;
  throw FieldError("element not in subfield");
}

std::vector<std::pair<Fq, Fq>> hermitian_pairs(const Field& field_q2, int q) {
  auto [p, m2] = factor_prime_power(field_q2.q());
  if (p != field_q2.p() || m2 % 2 != 0)
    throw FieldError("FieldMismatch: not a quadratic extension");
  long long qq = 1;
  for (int i = 0; i < m2 / 2; ++i) qq *= p;
  if (qq != q) throw FieldError("FieldMismatch: field is not GF(q^2)");
  std::vector<std::pair<Fq, Fq>> out;
  for (Fq xi = 0; xi < field_q2.q(); ++xi) {
    Fq rhs = field_q2.pow(xi, q + 1);
    for (Fq eta = 0; eta < field_q2.q(); ++eta) {
      if (field_q2.add(field_q2.pow(eta, q), eta) == rhs)
        out.push_back({xi, eta});
    }
  }
  return out;
}

}  // namespace ctk::gf
