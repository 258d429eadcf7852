#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace biwalk {

bool is_prime(int n);
// n = p^k with p prime, k >= 1
std::optional<std::pair<int, int>> prime_power(int n);

// GF(p^k) for p^k <= 64. Elements are integers 0..p^k-1 read as base-p digit
// vectors, i.e. polynomials over GF(p) evaluated formally at x. Addition is
// digitwise mod p (XOR when p = 2); multiplication reduces modulo the
// canonical irreducible: the lexicographically smallest monic irreducible of
// degree k. The generator is the smallest primitive element by label.
class FiniteField {
 public:
  static FiniteField make(int p, int k);
  static FiniteField of_order(int q);  // errors NotPrimePower

  int order() const { return order_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }
  const std::vector<int>& irreducible() const { return irreducible_; }
  int generator() const { return generator_; }

  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return mul_table_[size_t(a) * order_ + b]; }
  int inv(int a) const;
  int pow(int a, long long e) const;

 private:
  FiniteField() = default;
  int p_ = 0, k_ = 0, order_ = 0, generator_ = 0;
  std::vector<int> irreducible_;  // coefficients, degree k, monic
  std::vector<int> mul_table_;
};

}  // namespace biwalk
