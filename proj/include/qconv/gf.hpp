#pragma once

#include <cstdint>
#include <vector>

namespace qconv {

/// Finite field GF(q), q = p^e <= 256. Elements are 0..q-1; for e > 1 an
/// element is the base-p digit vector of its polynomial coefficients.
/// Primes use modular arithmetic, prime powers log/antilog tables over a
/// primitive element.
class GaloisField {
 public:
  explicit GaloisField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return e_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add(a, neg_[static_cast<std::size_t>(b)]); }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int mul(int a, int b) const;
  int inv(int a) const;

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * q_ + b); }

  int q_, p_, e_;
  std::vector<std::uint8_t> add_;
  std::vector<int> neg_;
  std::vector<int> log_;
  std::vector<int> antilog_;
};

}  // namespace qconv
