#include "adq/gf.hpp"

#include <algorithm>

namespace adq {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Dense little-endian polynomials over GF(p), used only during field
// construction (desk scale: trial division against all low-degree monic
// divisors is plenty).
using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f by monic g.
Poly mod_poly(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint32_t lead = f.back();
    if (lead != 0) {
      const std::size_t shift = f.size() - 1 - dg;
      for (std::size_t i = 0; i <= dg; ++i) {
        std::uint64_t cur = f[shift + i];
        cur += static_cast<std::uint64_t>(p - 1) * lead % p * g[i] % p;  // cur -= lead*g[i]
        f[shift + i] = static_cast<std::uint32_t>(cur % p);
      }
    }
    f.pop_back();
    trim(f);
    if (f.size() <= dg) break;
  }
  trim(f);
  return f;
}

bool divides(const Poly& g, const Poly& f, std::uint32_t p) {
  return mod_poly(f, g, p).empty();
}

// Enumerate monic polynomials of exact degree d in lexicographic order of
// the coefficient tuple (constant term first). Calls fn(poly); fn returns
// true to stop.
template <typename Fn>
void for_each_monic(std::uint32_t p, std::uint32_t d, Fn&& fn) {
  Poly f(d + 1, 0);
  f[d] = 1;
  // Odometer with c_{d-1} as the fastest-moving digit gives ascending
  // lexicographic order on (c_0, ..., c_{d-1}).
  while (true) {
    if (fn(f)) return;
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (++f[i] < p) break;
      f[i] = 0;
      if (i == 0) return;
    }
    if (d == 0) return;
  }
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t d = static_cast<std::uint32_t>(f.size() - 1);
  if (d == 0) return false;
  if (f[0] == 0) return d == 1;  // divisible by x
  for (std::uint32_t dd = 1; 2 * dd <= d; ++dd) {
    bool found = false;
    for_each_monic(p, dd, [&](const Poly& g) {
      if (divides(g, f, p)) {
        found = true;
        return true;
      }
      return false;
    });
    if (found) return false;
  }
  return true;
}

std::uint32_t poly_key(const Poly& f, std::uint32_t p, std::uint32_t b) {
  std::uint64_t key = 0, mult = 1;
  for (std::uint32_t i = 0; i < b; ++i) {
    key += (i < f.size() ? f[i] : 0u) * mult;
    mult *= p;
  }
  return static_cast<std::uint32_t>(key);
}

// Multiply g by x and reduce modulo the monic modulus m (degree b).
Poly times_x_mod(const Poly& g, const Poly& m, std::uint32_t p, std::uint32_t b) {
  Poly h(b, 0);
  for (std::uint32_t i = 0; i + 1 < b; ++i) h[i + 1] = i < g.size() ? g[i] : 0;
  const std::uint32_t lead = b - 1 < g.size() ? g[b - 1] : 0;
  if (lead != 0) {
    for (std::uint32_t i = 0; i < b; ++i) {
      std::uint64_t cur = h[i];
      cur += static_cast<std::uint64_t>(p - 1) * lead % p * m[i] % p;
      h[i] = static_cast<std::uint32_t>(cur % p);
    }
  }
  return h;
}

}  // namespace

Field field_new(std::uint32_t p, std::uint32_t b, std::uint64_t q_cap) {
  if (!is_prime_u64(p)) throw InvalidInput("gf: p = " + std::to_string(p) + " is not prime");
  if (b < 1) throw InvalidInput("gf: extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < b; ++i) {
    q *= p;
    if (q > q_cap)
      throw CapExceeded("gf: p^b = " + std::to_string(p) + "^" + std::to_string(b) +
                        " exceeds the field cap " + std::to_string(q_cap));
  }

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->b_ = b;
  ctx->q_ = static_cast<std::uint32_t>(q);

  const std::uint32_t qm1 = ctx->q_ - 1;
  ctx->exp_.assign(qm1 == 0 ? 1 : 2 * qm1, 1);
  ctx->log_.assign(ctx->q_, 0);

  if (b == 1) {
    ctx->modulus_ = {0, 1};  // "x" by convention; arithmetic is plain mod p
    // Smallest primitive root mod p (zeta = 1 for p = 2, where GF(2)* is trivial).
    for (std::uint32_t g = 1; g < p; ++g) {
      std::uint32_t x = 1, ord = 0;
      do {
        x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * g % p);
        ++ord;
      } while (x != 1);
      if (ord == qm1 || (qm1 == 0 && g == 1)) {
        ctx->zeta_ = g;
        break;
      }
    }
    if (ctx->zeta_ == 0) ctx->zeta_ = 1;  // p = 2
    std::uint64_t x = 1;
    for (std::uint32_t i = 0; i < qm1; ++i) {
      ctx->exp_[i] = static_cast<std::uint32_t>(x);
      ctx->log_[x] = i;
      x = x * ctx->zeta_ % p;
    }
  } else {
    // Lexicographically least monic irreducible modulus with primitive root x.
    bool done = false;
    for_each_monic(p, b, [&](const Poly& f) {
      if (!is_irreducible(f, p)) return false;
      // Order of x mod f: walk powers until we return to 1.
      Poly pw(1, 1);
      std::vector<std::uint32_t> exps;
      exps.reserve(qm1);
      for (std::uint32_t i = 0; i < qm1; ++i) {
        exps.push_back(poly_key(pw, p, b));
        pw = times_x_mod(pw, f, p, b);
        if (poly_key(pw, p, b) == 1) {
          if (i + 1 == qm1) {
            ctx->modulus_ = f;
            ctx->zeta_ = p;  // the element x has coefficients (0, 1, 0, ...)
            for (std::uint32_t j = 0; j <= i; ++j) {
              ctx->exp_[j] = exps[j];
              ctx->log_[exps[j]] = j;
            }
            done = true;
          }
          return done;
        }
      }
      return false;
    });
    if (!done) throw Error("gf: no primitive polynomial found (internal)");
  }

  for (std::uint32_t i = 0; i < qm1; ++i) ctx->exp_[qm1 + i] = ctx->exp_[i];

  // Negation table via digitwise negation.
  ctx->neg_.assign(ctx->q_, 0);
  for (std::uint32_t k = 0; k < ctx->q_; ++k) {
    std::uint32_t rem = k, out = 0, mult = 1;
    for (std::uint32_t i = 0; i < b; ++i) {
      const std::uint32_t digit = rem % p;
      rem /= p;
      out += (digit == 0 ? 0 : p - digit) * mult;
      mult *= p;
    }
    ctx->neg_[k] = out;
  }
  return ctx;
}

std::uint32_t FieldCtx::addk_ext(std::uint32_t a, std::uint32_t c) const {
  std::uint32_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < b_; ++i) {
    std::uint32_t s = a % p_ + c % p_;
    if (s >= p_) s -= p_;
    out += s * mult;
    mult *= p_;
    a /= p_;
    c /= p_;
  }
  return out;
}

std::uint32_t FieldCtx::powk(std::uint32_t a, std::int64_t e) const {
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw InvalidInput("gf: negative power of zero");
  }
  if (e < 0) {
    a = invk(a);
    e = -e;
  }
  std::uint64_t ue = static_cast<std::uint64_t>(e) % (q_ == 2 ? 1 : (q_ - 1));
  if (q_ == 2) ue = 0;  // GF(2)* is trivial
  std::uint32_t result = 1, base = a;
  while (ue > 0) {
    if (ue & 1) result = mulk(result, base);
    base = mulk(base, base);
    ue >>= 1;
  }
  return result;
}

FieldElem FieldCtx::elem(std::uint32_t key) const {
  if (key >= q_) throw InvalidInput("gf: element key out of range");
  return {this, key};
}

FieldElem FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > b_) throw InvalidInput("gf: too many coefficients");
  std::uint32_t key = 0, mult = 1;
  for (std::size_t i = 0; i < b_; ++i) {
    const std::uint32_t digit = i < coeffs.size() ? coeffs[i] : 0;
    if (digit >= p_) throw InvalidInput("gf: coefficient out of range");
    key += digit * mult;
    mult *= p_;
  }
  return {this, key};
}

std::vector<std::uint32_t> FieldCtx::coeffs(std::uint32_t key) const {
  std::vector<std::uint32_t> out(b_);
  for (std::uint32_t i = 0; i < b_; ++i) {
    out[i] = key % p_;
    key /= p_;
  }
  return out;
}

std::string FieldCtx::modulus_string() const {
  if (b_ == 1) return "x";
  std::string s;
  for (std::uint32_t i = b_ + 1; i-- > 0;) {
    const std::uint32_t c = modulus_[i];
    if (c == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace adq
