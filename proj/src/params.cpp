#include "pir/params.hpp"

#include "pir/errors.hpp"

namespace pir {

std::string to_string(SchemeTag tag) {
  switch (tag) {
    case SchemeTag::A: return "a";
    case SchemeTag::B: return "b";
    case SchemeTag::K2: return "k2";
  }
  return "?";
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::HighRate: return "high";
    case Regime::LowRate: return "low";
    case Regime::Both: return "both";
  }
  return "?";
}

SystemParams derive(int n, int t, int k, uint32_t q, SchemeTag scheme) {
  if (n <= 0 || t <= 0 || k <= 0) throw InvalidParams("n, t, k must be positive");
  if (t >= n) throw InvalidParams("requires 0 < t < n");
  if (q < uint32_t(n)) throw InvalidParams("field order must satisfy q >= n");
  SystemParams p;
  p.n = n;
  p.t = t;
  p.k = k;
  p.q = q;
  p.scheme = scheme;
  p.p = std::gcd(n, t);
  p.r = (n - t) / p.p;
  p.s = t / p.p;
  if (scheme == SchemeTag::K2) {
    if (k != 2) throw InvalidParams("K2 scheme requires k = 2");
    if (2 * t < n) throw InvalidParams("K2 scheme requires 2t >= n");
    p.m = 1;
    p.l = t;
  } else {
    p.m = p.r;
    p.l = p.r * t;  // = lcm(n-t, t)
  }
  return p;
}

Regime regime(const SystemParams& params) {
  if (params.s > params.r) return Regime::HighRate;
  if (params.s < params.r) return Regime::LowRate;
  return Regime::Both;
}

long long min_message_size(int n, int t) {
  if (t <= 0 || t >= n) throw InvalidParams("requires 0 < t < n");
  return std::lcm<long long>(n - t, t);
}

}  // namespace pir
