#include "pir/scheme.hpp"

#include <cmath>

#include "pir/errors.hpp"

namespace pir {

LinearScheme::LinearScheme(SystemParams params)
    : params_(params), code_(build_vandermonde(params.t, params.n, Field::of(params.q))) {}

RandomKey LinearScheme::sample_key(Rng& rng) const {
  int mod = params_.r + params_.s;
  std::vector<int> f(size_t(params_.k));
  int sum = 0;
  for (int k = 0; k + 1 < params_.k; ++k) {
    f[size_t(k)] = int(rng.below(uint64_t(mod)));
    sum += f[size_t(k)];
  }
  f[size_t(params_.k - 1)] = (mod - sum % mod) % mod;
  return RandomKey{std::move(f)};
}

std::vector<RandomKey> LinearScheme::enumerate_keys() const {
  int mod = params_.r + params_.s;
  double count = std::pow(double(mod), params_.k - 1);
  if (count > 1e6) throw EnumerationTooLarge("key space exceeds the enumeration cap");
  std::vector<RandomKey> keys;
  keys.reserve(size_t(count));
  std::vector<int> f(size_t(params_.k), 0);
  while (true) {
    int sum = 0;
    for (int k = 0; k + 1 < params_.k; ++k) sum += f[size_t(k)];
    f[size_t(params_.k - 1)] = (mod - sum % mod) % mod;
    keys.push_back(RandomKey{f});
    int pos = 0;
    while (pos + 1 < params_.k && f[size_t(pos)] == mod - 1) f[size_t(pos++)] = 0;
    if (pos + 1 >= params_.k) break;
    ++f[size_t(pos)];
  }
  return keys;
}

void LinearScheme::check_request(int k_star, const RandomKey& key, int n) const {
  if (k_star < 0 || k_star >= params_.k) throw IndexOutOfRange("message index out of range");
  if (n < 0 || n >= params_.n) throw IndexOutOfRange("database index out of range");
  if (key.f.size() != size_t(params_.k)) throw InvalidParams("key length must equal K");
}

}  // namespace pir
