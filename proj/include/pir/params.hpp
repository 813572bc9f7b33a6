#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace pir {

enum class SchemeTag { A, B, K2 };

enum class Regime { HighRate, LowRate, Both };

std::string to_string(SchemeTag tag);
std::string to_string(Regime regime);

/// Validated system parameters shared by every scheme.
///
/// n databases, recovery threshold t, k messages, field order q, plus the
/// derived quantities: p = gcd(n,t), n-t = p*r, t = p*s, m sub-messages per
/// message and message size l (in field symbols).
struct SystemParams {
  int n = 0;
  int t = 0;
  int k = 0;
  uint32_t q = 0;
  SchemeTag scheme = SchemeTag::A;
  int p = 0;
  int r = 0;
  int s = 0;
  int m = 0;
  int l = 0;

  bool operator==(const SystemParams&) const = default;
};

/// Validates (n, t, k, q) and derives the secondary parameters. Pure and
/// deterministic; throws InvalidParams naming the violated constraint.
SystemParams derive(int n, int t, int k, uint32_t q, SchemeTag scheme);

/// HighRate iff s > r (t > n-t), LowRate iff s < r, Both iff s = r.
Regime regime(const SystemParams& params);

/// lcm(n-t, t): the message size used by Constructions A and B.
long long min_message_size(int n, int t);

}  // namespace pir
