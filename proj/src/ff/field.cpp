#include "cubictk/ff/field.hpp"

#include <map>
#include <mutex>

namespace cubictk::ff {

namespace {

using Poly = std::vector<std::uint64_t>;  // c_0 .. c_deg, trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p is prime: a^(p-2).
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t f = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - f) * m[i]) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Poly index_to_poly(std::uint64_t idx, std::uint64_t p) {
  Poly a;
  while (idx) {
    a.push_back(idx % p);
    idx /= p;
  }
  return a;
}

std::uint64_t poly_to_index(const Poly& a, std::uint64_t p) {
  std::uint64_t idx = 0;
  for (std::size_t i = a.size(); i-- > 0;) idx = idx * p + a[i];
  return idx;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  // Ben-Or: f is irreducible iff gcd(f, x^(p^i) - x) = 1 for 1 <= i <= k/2.
  Poly xp{0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    xp = poly_powmod(xp, p, f, p);
    Poly h = xp;
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    if (poly_gcd(f, h, p).size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, int k) {
  if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  // N's base-p digits are (c_0, ..., c_{k-1}) with c_{k-1} most significant,
  // so increasing N is lexicographic order on (c_{k-1}, ..., c_0).
  for (std::uint64_t n = 0; n < count; ++n) {
    std::vector<std::uint32_t> f(k + 1);
    std::uint64_t x = n;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

FqField::FqField(std::uint32_t p, int k) : p_(p), k_(k) {
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  q_ = static_cast<std::uint32_t>(q);
  half_ = (p == 2) ? 0 : (q_ - 1) / 2;
  modulus_ = least_irreducible(p, k);
  const Poly m(modulus_.begin(), modulus_.end());

  // Least primitive element in poly-index order.
  const auto factors = prime_factors(q - 1);
  Poly gen;
  for (std::uint64_t idx = 1; idx < q; ++idx) {
    Poly cand = index_to_poly(idx, p);
    bool primitive = true;
    for (std::uint64_t r : factors) {
      Poly t = poly_powmod(cand, (q - 1) / r, m, p);
      if (t.size() == 1 && t[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = std::move(cand);
      break;
    }
  }

  exp_.resize(q - 1);
  log_.assign(q, 0);
  Poly cur{1};
  for (std::uint64_t i = 0; i + 1 < q; ++i) {
    const std::uint64_t idx = poly_to_index(cur, p);
    exp_[i] = static_cast<std::uint32_t>(idx);
    log_[idx] = static_cast<Elem>(i + 1);
    cur = poly_mulmod(cur, gen, m, p);
  }
  zech_.resize(q - 1);
  for (std::uint64_t n = 0; n + 1 < q; ++n) {
    const std::uint64_t idx = exp_[n];
    const std::uint64_t c0 = idx % p;
    const std::uint64_t plus_one = idx - c0 + (c0 + 1) % p;
    zech_[n] = log_[plus_one];
  }
}

FieldPtr FqField::make(std::uint32_t p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("not prime");
  if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldSize)
      throw BudgetExceeded("field of size " + std::to_string(p) + "^" + std::to_string(k) +
                           " exceeds the table budget");
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, int>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) slot = FieldPtr(new FqField(p, k));
  return slot;
}

Elem FqField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t m = q_ - 1;
  const std::uint64_t x = (static_cast<std::uint64_t>(a - 1) * (e % m)) % m;
  return static_cast<Elem>(x + 1);
}

Elem FqField::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return log_[static_cast<std::size_t>(r)];
}

Elem FqField::from_poly(const std::vector<std::uint32_t>& coeffs) const {
  Poly a(coeffs.begin(), coeffs.end());
  for (auto& c : a) c %= p_;
  a = poly_mod(std::move(a), Poly(modulus_.begin(), modulus_.end()), p_);
  return log_[poly_to_index(a, p_)];
}

std::vector<std::uint32_t> FqField::to_poly(Elem a) const {
  std::vector<std::uint32_t> out(k_, 0);
  std::uint32_t idx = poly_index(a);
  for (int i = 0; i < k_; ++i) {
    out[i] = idx % p_;
    idx /= p_;
  }
  return out;
}

bool FqField::in_subfield(Elem a, int d) const {
  if (d <= 0 || k_ % d != 0) throw std::invalid_argument("subfield degree must divide k");
  std::uint64_t pd = 1;
  for (int i = 0; i < d; ++i) pd *= p_;
  return pow(a, pd) == a;
}

std::vector<Elem> embedding(const FqField& sub, const FqField& super) {
  if (sub.p() != super.p() || super.k() % sub.k() != 0)
    throw std::invalid_argument("no embedding between these fields");
  const auto& m = sub.modulus();
  auto eval = [&](Elem x) {
    Elem acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) acc = super.add(super.mul(acc, x), super.from_int(m[i]));
    return acc;
  };
  Elem alpha = 0;
  bool found = false;
  for (std::uint32_t idx = 0; idx < super.q(); ++idx) {
    Elem x = super.from_poly_index(idx);
    if (eval(x) == 0) {
      alpha = x;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("modulus has no root in the extension");
  std::vector<Elem> table(sub.q());
  for (Elem a = 0; a < sub.q(); ++a) {
    const auto coeffs = sub.to_poly(a);
    Elem acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
      acc = super.add(super.mul(acc, alpha), super.from_int(coeffs[i]));
    table[a] = acc;
  }
  return table;
}

}  // namespace cubictk::ff
