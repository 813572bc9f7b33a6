#pragma once

#include "pir/scheme.hpp"

namespace pir {

/// Construction-A. Queries live in the alphabet {0..r+s-1}; each database
/// expands its query into a K x s matrix, sums the indicated stored (or
/// pseudo, all-zero) code symbols per column, and returns only the columns
/// that are not constantly zero. The client cancels interference via the
/// sets T_i and pools the exposed desired-message symbols via the sets N_m.
class SchemeA : public LinearScheme {
 public:
  explicit SchemeA(const SystemParams& params);

  std::string name() const override { return "construction-a"; }

  std::vector<int> make_query(int k_star, const RandomKey& key, int n) const override;
  int answer_length(const std::vector<int>& query) const override;
  std::vector<Symbol> answer(const Shard& shard, const std::vector<int>& query) const override;
  std::vector<Symbol> reconstruct(const std::vector<std::vector<Symbol>>& answers, int k_star,
                                  const RandomKey& key) const override;
  bool check_decoding_sets(int k_star, const RandomKey& key,
                           std::string* why = nullptr) const override;
  int query_alphabet() const override { return params_.r + params_.s; }

  /// K x s query matrix: grid[k][i] = (query[k] + i) mod (r+s).
  std::vector<std::vector<int>> expand_query(const std::vector<int>& query) const;

  /// Ascending column indices i with min_k grid[k][i] < r.
  std::vector<int> kept_columns(const std::vector<std::vector<int>>& grid) const;
};

/// N(K-1) * log2(N / gcd(N,T)) bits.
double upload_cost_bits_a(const SystemParams& params);

}  // namespace pir
