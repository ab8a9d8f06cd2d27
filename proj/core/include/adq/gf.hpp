#ifndef ADQ_GF_HPP
#define ADQ_GF_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "adq/errors.hpp"

namespace adq {

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

// An element of GF(p^b), represented by its canonical integer key
//   key = sum coeffs[i] * p^i
// where (coeffs[0], ..., coeffs[b-1]) are the coordinates in the polynomial
// basis 1, x, ..., x^{b-1} modulo the field's modulus. Two elements are equal
// iff they live in the same context and have the same key.
struct FieldElem {
  const FieldCtx* F = nullptr;
  std::uint32_t key = 0;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

// Arithmetic context for GF(p^b).
//
// The modulus is the lexicographically smallest monic irreducible degree-b
// polynomial over GF(p) -- candidates ordered by their coefficient tuple
// (constant term first) -- whose root x is additionally primitive, i.e.
// generates the multiplicative group. zeta is that root for b > 1 and the
// smallest primitive root mod p for b = 1 (where the modulus is just "x").
// Construction is fully deterministic in (p, b).
//
// The discrete-log/exponential tables are built at construction time, so a
// FieldCtx is immutable afterwards and safe to share across threads. All
// operations are pure.
class FieldCtx {
 public:
  static constexpr std::uint64_t kDefaultQCap = 121;

  std::uint32_t p() const { return p_; }
  std::uint32_t b() const { return b_; }
  std::uint32_t q() const { return q_; }

  // Monic modulus polynomial, constant term first (b+1 coefficients).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string modulus_string() const;

  FieldElem zero() const { return {this, 0}; }
  FieldElem one() const { return {this, one_key()}; }
  FieldElem zeta() const { return {this, zeta_}; }
  std::uint32_t zeta_key() const { return zeta_; }

  FieldElem elem(std::uint32_t key) const;
  // Embed an integer through the prime subfield (reduces mod p, handles
  // negatives: from_int(-1) is p-1).
  FieldElem from_int(std::int64_t v) const { return {this, int_key(v)}; }
  FieldElem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(std::uint32_t key) const;

  // Key-level arithmetic. These are the hot-path entry points used by the
  // matrix and linear-algebra layers; FieldElem operators forward here.
  std::uint32_t int_key(std::int64_t v) const {
    std::int64_t r = v % p_;
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }
  std::uint32_t one_key() const { return 1; }
  std::uint32_t addk(std::uint32_t a, std::uint32_t c) const {
    if (b_ == 1) {
      std::uint32_t s = a + c;
      return s >= p_ ? s - p_ : s;
    }
    return addk_ext(a, c);
  }
  std::uint32_t negk(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t subk(std::uint32_t a, std::uint32_t c) const { return addk(a, neg_[c]); }
  std::uint32_t mulk(std::uint32_t a, std::uint32_t c) const {
    if (a == 0 || c == 0) return 0;
    return exp_[log_[a] + log_[c]];
  }
  std::uint32_t invk(std::uint32_t a) const {
    if (a == 0) throw InvalidInput("gf: inversion of zero");
    return exp_[(q_ - 1) - log_[a]];
  }
  std::uint32_t divk(std::uint32_t a, std::uint32_t c) const { return mulk(a, invk(c)); }
  // Square-and-multiply; negative exponents require a nonzero base.
  std::uint32_t powk(std::uint32_t a, std::int64_t e) const;
  // Index in [0, q-1) with zeta^result = a; requires a != 0.
  std::uint32_t dlogk(std::uint32_t a) const {
    if (a == 0) throw InvalidInput("gf: dlog of zero");
    return log_[a];
  }

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

 private:
  FieldCtx() = default;
  friend Field field_new(std::uint32_t, std::uint32_t, std::uint64_t);

  std::uint32_t addk_ext(std::uint32_t a, std::uint32_t c) const;

  std::uint32_t p_ = 0, b_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t zeta_ = 0;
  std::vector<std::uint32_t> exp_;  // size 2(q-1): exp_[i] = zeta^i, doubled to skip a mod
  std::vector<std::uint32_t> log_;  // size q, log_[0] unused
  std::vector<std::uint32_t> neg_;  // size q
};

// Deterministic construction of GF(p^b); throws InvalidInput for non-prime p
// or b < 1, CapExceeded when p^b > q_cap.
Field field_new(std::uint32_t p, std::uint32_t b,
                std::uint64_t q_cap = FieldCtx::kDefaultQCap);

bool is_prime_u64(std::uint64_t n);

// --- FieldElem operators (context-checked) ---

namespace detail {
inline const FieldCtx& same_ctx(const FieldElem& a, const FieldElem& c) {
  if (a.F == nullptr || a.F != c.F)
    throw InvalidInput("gf: operands from different field contexts");
  return *a.F;
}
}  // namespace detail

inline FieldElem operator+(const FieldElem& a, const FieldElem& c) {
  const FieldCtx& F = detail::same_ctx(a, c);
  return {&F, F.addk(a.key, c.key)};
}
inline FieldElem operator-(const FieldElem& a, const FieldElem& c) {
  const FieldCtx& F = detail::same_ctx(a, c);
  return {&F, F.subk(a.key, c.key)};
}
inline FieldElem operator-(const FieldElem& a) { return {a.F, a.F->negk(a.key)}; }
inline FieldElem operator*(const FieldElem& a, const FieldElem& c) {
  const FieldCtx& F = detail::same_ctx(a, c);
  return {&F, F.mulk(a.key, c.key)};
}
inline FieldElem operator/(const FieldElem& a, const FieldElem& c) {
  const FieldCtx& F = detail::same_ctx(a, c);
  return {&F, F.divk(a.key, c.key)};
}
inline FieldElem inv(const FieldElem& a) { return {a.F, a.F->invk(a.key)}; }
inline FieldElem pow(const FieldElem& a, std::int64_t e) { return {a.F, a.F->powk(a.key, e)}; }
inline std::uint32_t dlog(const FieldElem& a) { return a.F->dlogk(a.key); }
inline bool is_zero(const FieldElem& a) { return a.key == 0; }

}  // namespace adq

#endif
