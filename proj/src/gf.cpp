#include "biwalk/gf.hpp"

#include <algorithm>
#include <string>

#include "biwalk/errors.hpp"

namespace biwalk {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> prime_power(int n) {
  if (n < 2) return std::nullopt;
  for (int p = 2; p <= n; ++p) {
    if (!is_prime(p)) continue;
    if (n % p) continue;
    int k = 0, rest = n;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (rest == 1) return std::make_pair(p, k);
    return std::nullopt;  // two distinct prime factors
  }
  return std::nullopt;
}

namespace {

// polynomials over GF(p) as coefficient vectors, low degree first
using Poly = std::vector<int>;

int pdeg(const Poly& a) {
  for (int i = int(a.size()) - 1; i >= 0; --i)
    if (a[i]) return i;
  return -1;
}

Poly pmul(const Poly& a, const Poly& b, int p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return r;
}

// a mod b, b nonzero
Poly pmod(Poly a, const Poly& b, int p) {
  int db = pdeg(b);
  int lead_inv = 0;
  for (int x = 1; x < p; ++x)
    if (b[db] * x % p == 1) lead_inv = x;
  for (int da = pdeg(a); da >= db; da = pdeg(a)) {
    int factor = a[da] * lead_inv % p;
    for (int i = 0; i <= db; ++i)
      a[da - db + i] = ((a[da - db + i] - factor * b[i]) % p + p) % p;
  }
  a.resize(std::max(db, 1));
  return a;
}

int encode(const Poly& a, int p, int k) {
  int v = 0;
  for (int i = k - 1; i >= 0; --i) v = v * p + (i < int(a.size()) ? a[i] : 0);
  return v;
}

Poly decode(int v, int p, int k) {
  Poly a(k, 0);
  for (int i = 0; i < k; ++i) {
    a[i] = v % p;
    v /= p;
  }
  return a;
}

bool divides(const Poly& d, const Poly& a, int p) { return pdeg(pmod(a, d, p)) < 0; }

bool is_irreducible(const Poly& f, int p) {
  int k = pdeg(f);
  if (k == 1) return true;
  // trial division by every monic polynomial of degree 1..k/2
  for (int d = 1; 2 * d <= k; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
      Poly cand = decode(low, p, d);
      cand.resize(d + 1);
      cand[d] = 1;
      if (divides(cand, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField FiniteField::make(int p, int k) {
  require(is_prime(p), Err::NotPrime, std::to_string(p) + " is not prime");
  require(k >= 1, Err::BadSize, "field degree must be positive");
  long long order = 1;
  for (int i = 0; i < k; ++i) order *= p;
  require(order <= 64, Err::BadSize, "field order above 64 is out of scope");

  FiniteField f;
  f.p_ = p;
  f.k_ = k;
  f.order_ = int(order);

  // canonical modulus: smallest monic irreducible of degree k by label
  for (int low = 0;; ++low) {
    require(low < f.order_, Err::InternalInconsistency, "no irreducible polynomial found");
    Poly cand = decode(low, p, k);
    cand.resize(k + 1);
    cand[k] = 1;
    if (is_irreducible(cand, p)) {
      f.irreducible_ = cand;
      break;
    }
  }

  f.mul_table_.assign(size_t(f.order_) * f.order_, 0);
  for (int a = 0; a < f.order_; ++a)
    for (int b = 0; b < f.order_; ++b) {
      Poly prod = pmod(pmul(decode(a, p, k), decode(b, p, k), p), f.irreducible_, p);
      f.mul_table_[size_t(a) * f.order_ + b] = encode(prod, p, k);
    }

  // smallest primitive element by label
  f.generator_ = 0;
  for (int g = 1; g < f.order_; ++g) {
    int x = g, steps = 1;
    while (x != 1) {
      x = f.mul(x, g);
      ++steps;
    }
    if (steps == f.order_ - 1) {
      f.generator_ = g;
      break;
    }
  }
  require(f.generator_ != 0 || f.order_ == 2, Err::InternalInconsistency,
          "no primitive element found");
  if (f.order_ == 2) f.generator_ = 1;
  return f;
}

FiniteField FiniteField::of_order(int q) {
  auto pk = prime_power(q);
  require(pk.has_value(), Err::NotPrimePower, std::to_string(q) + " is not a prime power");
  return make(pk->first, pk->second);
}

int FiniteField::add(int a, int b) const {
  int r = 0, mul = 1;
  for (int i = 0; i < k_; ++i) {
    r += (a % p_ + b % p_) % p_ * mul;
    a /= p_;
    b /= p_;
    mul *= p_;
  }
  return r;
}

int FiniteField::neg(int a) const {
  int r = 0, mul = 1;
  for (int i = 0; i < k_; ++i) {
    r += (p_ - a % p_) % p_ * mul;
    a /= p_;
    mul *= p_;
  }
  return r;
}

int FiniteField::inv(int a) const {
  require(a != 0, Err::BadLabel, "zero has no inverse");
  for (int b = 1; b < order_; ++b)
    if (mul(a, b) == 1) return b;
  fail(Err::InternalInconsistency, "no inverse found");
}

int FiniteField::pow(int a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace biwalk
