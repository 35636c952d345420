#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hqcf {

class FqContext;

/// Element of F_q, q = p^s. Stored as an index into the context's canonical
/// enumeration: index i encodes coordinates (c_0,...,c_{s-1}) in the power
/// basis of the modulus, with i = sum c_j p^j. Plain value type; arithmetic
/// requires both operands to come from the same (or structurally equal) field.
struct FieldElem {
  uint32_t idx = 0;
  const FqContext* ctx = nullptr;

  bool is_zero() const { return idx == 0; }
  std::vector<int64_t> coords() const;
  std::string to_string() const;

  FieldElem inv() const;
  FieldElem pow(int64_t e) const;

  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }
};

FieldElem operator+(FieldElem a, FieldElem b);
FieldElem operator-(FieldElem a, FieldElem b);
FieldElem operator*(FieldElem a, FieldElem b);
FieldElem operator/(FieldElem a, FieldElem b);
FieldElem operator-(FieldElem a);

/// Description of F_q = F_p[x]/(modulus), p an odd prime, immutable after
/// construction and shared via the get() cache. Safe to use concurrently.
///
/// When no modulus is supplied, the lexicographically smallest monic
/// irreducible of degree s is chosen (coefficient vector read as a base-p
/// integer, constant term least significant), so results are reproducible
/// across runs and machines. For s = 1 the modulus is x itself.
class FqContext {
 public:
  static std::shared_ptr<const FqContext> get(int64_t p, int s);
  static std::shared_ptr<const FqContext> get(int64_t p, int s, std::vector<int64_t> modulus);

  int64_t p() const { return p_; }
  int s() const { return s_; }
  int64_t q() const { return q_; }
  const std::vector<int64_t>& modulus() const { return modulus_; }

  FieldElem zero() const { return {0u, this}; }
  FieldElem one() const { return {1u, this}; }
  FieldElem from_int(int64_t n) const;
  FieldElem element(uint32_t index) const;  // enumeration order, 0 <= index < q
  FieldElem from_coords(const std::vector<int64_t>& c) const;

  // Index-level arithmetic. These are the hot path used by the polynomial
  // and series layers.
  uint32_t add_i(uint32_t a, uint32_t b) const;
  uint32_t sub_i(uint32_t a, uint32_t b) const;
  uint32_t mul_i(uint32_t a, uint32_t b) const;
  uint32_t neg_i(uint32_t a) const;
  uint32_t inv_i(uint32_t a) const;  // a != 0
  uint32_t div_i(uint32_t a, uint32_t b) const;
  uint32_t frob_i(uint32_t a) const;  // a -> a^p

  /// x^e with signed e; for nonzero x the exponent is reduced mod (q-1).
  /// 0^e = 0 for e > 0; 0 with e <= 0 is an error.
  FieldElem pow(FieldElem x, int64_t e) const;

  /// x -> x^{p^t}, t >= 0 (a field automorphism).
  FieldElem frobenius(FieldElem x, int64_t t) const;
  /// The unique y with y^{p^t} = x.
  FieldElem frobenius_inv(FieldElem x, int64_t t) const;

  /// Deterministic square root: the smaller of +-v in enumeration order,
  /// absent when x is a non-residue. Exhaustive scan for q <= 10^4,
  /// Tonelli-Shanks above.
  std::optional<FieldElem> sqrt(FieldElem x) const;
  bool is_square(FieldElem x) const;

  /// F_{q^2} together with the embedding of this field.
  struct Extension {
    std::shared_ptr<const FqContext> field;
    const FqContext* base = nullptr;
    FieldElem root;  // image in F_{q^2} of the base field's generator
    FieldElem embed(FieldElem x) const;
  };
  Extension quadratic_extension() const;

  bool same_field(const FqContext& o) const {
    return p_ == o.p_ && s_ == o.s_ && modulus_ == o.modulus_;
  }

  std::string elem_to_string(FieldElem x) const;

  FqContext(const FqContext&) = delete;
  FqContext& operator=(const FqContext&) = delete;

 private:
  FqContext(int64_t p, int s, std::vector<int64_t> modulus);

  std::vector<int64_t> idx_to_coords(uint32_t i) const;
  uint32_t coords_to_idx(const std::vector<int64_t>& c) const;
  uint32_t mul_slow(uint32_t a, uint32_t b) const;
  uint32_t add_slow(uint32_t a, uint32_t b) const;
  uint32_t pow_u(uint32_t a, uint64_t e) const;

  int64_t p_;
  int s_;
  int64_t q_;
  std::vector<int64_t> modulus_;  // length s+1, monic

  bool has_tables_ = false;
  std::vector<uint32_t> add_tab_, mul_tab_;
  std::vector<uint32_t> neg_tab_, inv_tab_, frob_tab_;
};

/// Verifies operands share a field and returns the common context.
const FqContext* join(const FieldElem& a, const FieldElem& b);

namespace detail {
bool is_prime_int64(int64_t n);
bool is_irreducible_mod_p(const std::vector<int64_t>& poly, int64_t p);
std::optional<FieldElem> sqrt_tonelli(FieldElem x);
}  // namespace detail

}  // namespace hqcf
