#pragma once

#include <string>
#include <vector>

#include "pir/mds.hpp"
#include "pir/params.hpp"
#include "pir/rng.hpp"

namespace pir {

/// Randomized database partition for the K = 2 retrieval code.
/// Sum strategy: groups of sizes N-T, 2T-N, N-T; Direct: sizes T, N-T.
struct PartitionK2 {
  enum class Strategy { Sum, Direct };
  Strategy strategy = Strategy::Sum;
  /// Group label per database: Sum uses 0/1/2, Direct uses 3/4.
  std::vector<int> labels;
};

enum class QueryTagK2 : uint8_t {
  SendSum = 0,      // V^0_n + V^1_n
  SendBoth = 1,     // (V^0_n, V^1_n)
  SendOnly0 = 2,    // V^0_n
  SendOnly1 = 3,    // V^1_n
  SendNothing = 4,  // explicit empty request
};

/// The K = 2, L = T code: message size T, below lcm(N-T, T) whenever N-T
/// does not divide T. Requires 2T >= N.
class SchemeK2 {
 public:
  explicit SchemeK2(const SystemParams& params);

  const SystemParams& params() const { return params_; }
  const MdsCode& code() const { return code_; }
  std::string name() const { return "k2-partition"; }

  /// Draws the strategy (Sum with probability T/N) and a uniform partition,
  /// then derives the per-database query tags.
  std::pair<PartitionK2, std::vector<QueryTagK2>> gen_queries(int k_star, Rng& rng) const;

  /// Query tags implied by a partition and the requested index.
  std::vector<QueryTagK2> tags_for(const PartitionK2& partition, int k_star) const;

  int answer_length(QueryTagK2 tag) const;
  std::vector<Symbol> answer(const Shard& shard, QueryTagK2 tag) const;

  /// Exact recovery of the length-T requested message.
  std::vector<Symbol> reconstruct(const std::vector<std::vector<Symbol>>& answers,
                                  const PartitionK2& partition, int k_star) const;

  /// All partitions of the given strategy (group-label assignments with the
  /// prescribed sizes).
  std::vector<PartitionK2> enumerate_partitions(PartitionK2::Strategy strategy) const;

 private:
  SystemParams params_;
  MdsCode code_;
};

}  // namespace pir
