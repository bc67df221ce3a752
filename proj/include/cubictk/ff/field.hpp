// Finite fields F_q, q = p^k, with table-driven (Zech logarithm) arithmetic.
//
// An element is a 32-bit code: 0 is zero and i >= 1 is g^(i-1) for the
// primitive element g. Codes 0..q-1 therefore enumerate the field.
// The modulus is the least monic irreducible of degree k, comparing
// coefficient vectors (c_{k-1}, ..., c_0) lexicographically; for k = 1 it is x.
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace cubictk::ff {

using Elem = std::uint32_t;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FqField;
using FieldPtr = std::shared_ptr<const FqField>;

/// Largest supported field size.
constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 22;

bool is_prime(std::uint64_t n);

class FqField {
 public:
  /// Cached per (p, k). Throws std::invalid_argument("not prime") and
  /// BudgetExceeded for q above kMaxFieldSize.
  static FieldPtr make(std::uint32_t p, int k);

  std::uint32_t p() const { return p_; }
  int k() const { return k_; }
  std::uint32_t q() const { return q_; }
  /// Monic modulus, coefficients c_0..c_k.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  static constexpr Elem zero() { return 0; }
  static constexpr Elem one() { return 1; }

  Elem add(Elem a, Elem b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t m = q_ - 1;
    std::uint32_t n = (b >= a) ? b - a : b + m - a;
    if (n == m) n = 0;
    const Elem z = zech_[n];
    if (z == 0) return 0;
    std::uint32_t e = (a - 1) + (z - 1);
    if (e >= m) e -= m;
    return e + 1;
  }
  Elem neg(Elem a) const {
    if (a == 0 || half_ == 0) return a;
    std::uint32_t e = (a - 1) + half_;
    if (e >= q_ - 1) e -= q_ - 1;
    return e + 1;
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = (a - 1) + (b - 1);
    if (e >= q_ - 1) e -= q_ - 1;
    return e + 1;
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return a == 1 ? 1 : (q_ - 1) - (a - 1) + 1;
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(Elem a) const { return pow(a, p_); }

  /// Integer n mod p in the prime subfield.
  Elem from_int(long long n) const;
  /// Polynomial (c_0..c_{k-1}) in the generator of the modulus.
  Elem from_poly(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> to_poly(Elem a) const;
  /// Index of the polynomial form, sum c_j p^j; a bijection onto [0, q).
  std::uint32_t poly_index(Elem a) const { return a == 0 ? 0 : exp_[a - 1]; }
  Elem from_poly_index(std::uint32_t idx) const { return log_[idx]; }

  /// True iff a lies in the subfield of size p^d (d | k).
  bool in_subfield(Elem a, int d) const;

  FqField(const FqField&) = delete;
  FqField& operator=(const FqField&) = delete;

 private:
  FqField(std::uint32_t p, int k);

  std::uint32_t p_;
  int k_;
  std::uint32_t q_;
  std::uint32_t half_;  // log of -1, 0 in characteristic 2
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;   // exponent -> poly index
  std::vector<Elem> log_;            // poly index -> code
  std::vector<Elem> zech_;           // n -> code of 1 + g^n
};

/// Least monic irreducible of degree k over F_p (coefficients c_0..c_k).
std::vector<std::uint32_t> least_irreducible(std::uint32_t p, int k);
bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p);

/// Table sending each code of `sub` to the code of its image in `super`.
/// The image of the generator x of sub's modulus is the root of that modulus
/// in super with the least poly_index. Requires same p and sub.k | super.k.
std::vector<Elem> embedding(const FqField& sub, const FqField& super);

}  // namespace cubictk::ff
