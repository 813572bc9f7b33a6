#include "pir/field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace pir {

namespace {

// Primitive polynomials for GF(2^w), w = 1..16; x is a generator for each.
constexpr uint32_t kPrimitivePoly[17] = {
    0,      0x3,    0x7,    0xb,    0x13,   0x25,    0x43,   0x89,  0x11d,
    0x211,  0x409,  0x805,  0x1053, 0x201b, 0x4143,  0x8003, 0x1100b};

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int log2_exact(uint32_t n) {
  int w = 0;
  while ((1u << w) < n) ++w;
  return (1u << w) == n ? w : -1;
}

}  // namespace

Field::Field(uint32_t order) : order_(order) {
  if (order < 2) throw InvalidParams("field order must be at least 2");
  int w = log2_exact(order);
  if (w > 0) {
    if (w > 16) throw InvalidParams("binary extension fields supported up to GF(2^16)");
    kind_ = Kind::BinaryExtension;
    poly_ = kPrimitivePoly[w];
    build_tables();
  } else {
    if (order >= (1u << 16) || !is_prime(order))
      throw InvalidParams("non power-of-two field order must be a prime < 2^16");
    kind_ = Kind::Prime;
  }
}

void Field::build_tables() {
  log_.assign(order_, 0);
  exp_.assign(order_, 0);
  uint32_t b = 1;
  for (uint32_t l = 0; l + 1 < order_; ++l) {
    exp_[l] = Symbol(b);
    log_[b] = Symbol(l);
    b <<= 1;
    if (b & order_) b ^= poly_;
  }
  if (b != 1) throw Error("primitive polynomial table is inconsistent");
}

Symbol Field::inv(Symbol a) const {
  check(a);
  if (a == 0) throw DivideByZero("inverse of zero");
  if (kind_ == Kind::BinaryExtension) {
    uint32_t l = log_[a];
    return l == 0 ? Symbol(1) : exp_[order_ - 1 - l];
  }
  // extended Euclid over the prime modulus
  int64_t t = 0, nt = 1, r = order_, nr = a;
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt;
    t = nt, nt = tmp;
    tmp = r - q * nr;
    r = nr, nr = tmp;
  }
  if (t < 0) t += order_;
  return Symbol(t);
}

Symbol Field::pow(Symbol a, uint64_t e) const {
  Symbol acc = 1, base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

const Field& Field::gf256() { return of(256); }

const Field& Field::of(uint32_t order) {
  static std::mutex mu;
  static std::map<uint32_t, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<Field>(order);
  return *slot;
}

}  // namespace pir
