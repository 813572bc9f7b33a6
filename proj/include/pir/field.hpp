#pragma once

#include <cstdint>
#include <vector>

#include "pir/errors.hpp"

namespace pir {

/// A field symbol is a residue in [0, q). The owning Field defines the
/// arithmetic; symbols from different fields must not be mixed.
using Symbol = uint16_t;

/// Exact arithmetic in GF(2^w) (w <= 16, log/antilog tables) or a prime
/// field GF(p) with p < 2^16. Immutable after construction and safe to
/// share across threads.
class Field {
 public:
  enum class Kind { BinaryExtension, Prime };

  /// Builds the field of the given order. Powers of two become binary
  /// extension fields with a fixed primitive polynomial; any other order
  /// must be a prime < 2^16.
  explicit Field(uint32_t order);

  /// Shared instance of the default field GF(2^8), polynomial
  /// x^8+x^4+x^3+x^2+1 (0x11d).
  static const Field& gf256();

  /// Shared cached instance for an arbitrary supported order.
  static const Field& of(uint32_t order);

  uint32_t order() const { return order_; }
  Kind kind() const { return kind_; }
  uint32_t polynomial() const { return poly_; }

  Symbol add(Symbol a, Symbol b) const {
    check(a), check(b);
    if (kind_ == Kind::BinaryExtension) return a ^ b;
    uint32_t s = uint32_t(a) + b;
    return Symbol(s >= order_ ? s - order_ : s);
  }

  Symbol sub(Symbol a, Symbol b) const {
    check(a), check(b);
    if (kind_ == Kind::BinaryExtension) return a ^ b;
    return Symbol(a >= b ? a - b : a + order_ - b);
  }

  Symbol neg(Symbol a) const { return sub(0, a); }

  Symbol mul(Symbol a, Symbol b) const {
    check(a), check(b);
    if (a == 0 || b == 0) return 0;
    if (kind_ == Kind::BinaryExtension) {
      uint32_t l = uint32_t(log_[a]) + log_[b];
      if (l >= order_ - 1) l -= order_ - 1;
      return exp_[l];
    }
    return Symbol(uint32_t(a) * b % order_);
  }

  Symbol inv(Symbol a) const;

  Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

  Symbol pow(Symbol a, uint64_t e) const;

 private:
  void check(Symbol a) const {
    if (a >= order_) throw FieldMismatch("symbol out of field range");
  }
  void build_tables();

  uint32_t order_;
  Kind kind_;
  uint32_t poly_ = 0;  // binary-extension modulus, 0 for prime fields
  std::vector<Symbol> log_, exp_;
};

inline bool same_field(const Field& a, const Field& b) { return &a == &b || a.order() == b.order(); }

}  // namespace pir
