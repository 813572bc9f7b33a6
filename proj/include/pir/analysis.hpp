#pragma once

#include <string>
#include <vector>

#include "pir/matrix.hpp"
#include "pir/rational.hpp"
#include "pir/scheme.hpp"
#include "pir/scheme_k2.hpp"

namespace pir {

/// Outcome of one machine-verified claim. Everything here is exact: pass
/// means expected == observed with no tolerance.
struct VerificationReport {
  std::string claim;
  std::string params_desc;
  std::string expected;
  std::string observed;
  bool pass = false;
  uint64_t enumeration_size = 0;
  double ms = 0.0;
};

/// (1 + T/N + ... + (T/N)^{K-1})^{-1} as an exact rational.
Rational capacity(int n, int t, int k);

/// Exact mean of the total answer length over all keys, for each requested
/// message; throws Error if the mean depends on k_star.
Rational expected_download(const LinearScheme& scheme);

/// sN(1 - (T/N)^K): the closed form the enumeration must match.
Rational predicted_download(const SystemParams& params);

/// Exact per-database query-multiset equality across all requested messages.
VerificationReport verify_privacy(const LinearScheme& scheme);

/// Set-size lemmas for every (k_star, key).
VerificationReport verify_decoding_sets(const LinearScheme& scheme);

/// L / E[download] == capacity, exact.
VerificationReport verify_rate(const LinearScheme& scheme);

/// The linear functional from the flattened K*L message vector to the
/// answer symbols of database n, for one fixed query realization. Obtained
/// by probing the answer map with unit messages.
Matrix extract_coefficients(const LinearScheme& scheme, int k_star, const RandomKey& key, int n);

/// P0 at one query realization: for every size-T database subset, with the
/// coefficient columns of messages in J removed, the stacked rank equals
/// the sum of the individual ranks.
VerificationReport verify_p0(const LinearScheme& scheme, int k_star, const RandomKey& key,
                             const std::vector<std::vector<int>>& j_subsets);

/// P1 at one query realization: for every size-T subset and every J
/// containing k_star, each excluded database's restricted coefficient rows
/// lie in the span of the subset's restricted rows.
VerificationReport verify_p1(const LinearScheme& scheme, int k_star, const RandomKey& key,
                             const std::vector<std::vector<int>>& j_subsets);

/// All message subsets to sweep for P0/P1 at this K: everything for K <= 4,
/// else |J| <= 2 plus the full set.
std::vector<std::vector<int>> p0_subsets(int k);
std::vector<std::vector<int>> p1_subsets(int k, int k_star);

// K2 counterparts, by exact enumeration of the strategy/partition space.
Rational expected_download_k2(const SchemeK2& scheme);
VerificationReport verify_privacy_k2(const SchemeK2& scheme);
VerificationReport verify_rate_k2(const SchemeK2& scheme);

}  // namespace pir
