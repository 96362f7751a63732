#include "qconv/gf.hpp"

#include <string>

#include "qconv/error.hpp"

namespace qconv {
namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int> digits(int a, int p, int e) {
  std::vector<int> d(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i, a /= p) d[static_cast<std::size_t>(i)] = a % p;
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

// Product of a and b modulo the monic polynomial x^e + sum modulus[i] x^i.
int poly_mul_mod(int a, int b, int p, int e, const std::vector<int>& modulus) {
  const auto da = digits(a, p, e);
  const auto db = digits(b, p, e);
  std::vector<int> prod(static_cast<std::size_t>(2 * e), 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) {
      auto& slot = prod[static_cast<std::size_t>(i + j)];
      slot = (slot + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
    }
  for (int deg = 2 * e - 1; deg >= e; --deg) {
    const int c = prod[static_cast<std::size_t>(deg)];
    if (c == 0) continue;
    prod[static_cast<std::size_t>(deg)] = 0;
    for (int i = 0; i < e; ++i) {
      auto& slot = prod[static_cast<std::size_t>(deg - e + i)];
      slot = ((slot - c * modulus[static_cast<std::size_t>(i)]) % p + p) % p;
    }
  }
  prod.resize(static_cast<std::size_t>(e));
  return from_digits(prod, p);
}

}  // namespace

GaloisField::GaloisField(int q) : q_(q), p_(0), e_(0) {
  if (q < 2 || q > 256) throw InvalidArgumentError("field order must lie in [2, 256]");
  for (int d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p_ = d;
      break;
    }
  }
  int rest = q;
  while (rest % p_ == 0) {
    rest /= p_;
    ++e_;
  }
  if (rest != 1 || !is_prime(p_)) {
    throw InvalidArgumentError(std::to_string(q) + " is not a prime power");
  }

  add_.resize(static_cast<std::size_t>(q * q));
  neg_.resize(static_cast<std::size_t>(q));
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, p_, e_);
    std::vector<int> dn(da.size());
    for (std::size_t i = 0; i < da.size(); ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[static_cast<std::size_t>(a)] = from_digits(dn, p_);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, p_, e_);
      std::vector<int> ds(da.size());
      for (std::size_t i = 0; i < da.size(); ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[idx(a, b)] = static_cast<std::uint8_t>(from_digits(ds, p_));
    }
  }
  if (e_ == 1) return;

  // Search monic moduli until one admits an element of order q-1; only
  // irreducible moduli give a field, so success certifies both.
  const int candidates = q;  // p^e lower coefficient vectors
  for (int code = 0; code < candidates; ++code) {
    const auto modulus = digits(code, p_, e_);
    if (modulus[0] == 0) continue;  // divisible by x
    for (int g = 2; g < q; ++g) {
      std::vector<int> antilog;
      antilog.reserve(static_cast<std::size_t>(q - 1));
      int x = 1;
      do {
        antilog.push_back(x);
        x = poly_mul_mod(x, g, p_, e_, modulus);
      } while (x != 1 && static_cast<int>(antilog.size()) < q);
      if (static_cast<int>(antilog.size()) != q - 1 || x != 1) continue;
      antilog_ = std::move(antilog);
      log_.assign(static_cast<std::size_t>(q), -1);
      for (int i = 0; i < q - 1; ++i) log_[static_cast<std::size_t>(antilog_[static_cast<std::size_t>(i)])] = i;
      return;
    }
  }
  throw InvalidArgumentError("no primitive modulus found for GF(" + std::to_string(q) + ")");
}

int GaloisField::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  if (e_ == 1) return a * b % p_;
  const int s = log_[static_cast<std::size_t>(a)] + log_[static_cast<std::size_t>(b)];
  return antilog_[static_cast<std::size_t>(s % (q_ - 1))];
}

int GaloisField::inv(int a) const {
  if (a == 0) throw InvalidArgumentError("inverse of zero in a finite field");
  if (e_ == 1) {
    int result = 1, base = a, exp = p_ - 2;
    while (exp > 0) {
      if (exp & 1) result = result * base % p_;
      base = base * base % p_;
      exp >>= 1;
    }
    return result;
  }
  const int l = log_[static_cast<std::size_t>(a)];
  return antilog_[static_cast<std::size_t>((q_ - 1 - l) % (q_ - 1))];
}

}  // namespace qconv
