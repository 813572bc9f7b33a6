#pragma once

#include <string>
#include <vector>

#include "pir/mds.hpp"
#include "pir/params.hpp"
#include "pir/rng.hpp"

namespace pir {

/// User-private randomness: a length-K vector over {0..r+s-1} whose entry
/// sum is 0 mod (r+s).
struct RandomKey {
  std::vector<int> f;

  bool operator==(const RandomKey&) const = default;
};

/// Common surface of the keyed schemes (Construction A and both regimes of
/// Construction B): they share the key space F, issue one length-K query
/// per database, and answer with a variable-length symbol list.
class LinearScheme {
 public:
  explicit LinearScheme(SystemParams params);
  virtual ~LinearScheme() = default;

  const SystemParams& params() const { return params_; }
  const MdsCode& row_code() const { return code_; }
  const Field& field() const { return code_.field(); }

  virtual std::string name() const = 0;

  /// Uniform over F: the first K-1 entries are independent uniform draws,
  /// the last is the unique completion to sum 0 mod (r+s).
  RandomKey sample_key(Rng& rng) const;

  /// All (r+s)^(K-1) keys; throws EnumerationTooLarge beyond 10^6.
  std::vector<RandomKey> enumerate_keys() const;

  virtual std::vector<int> make_query(int k_star, const RandomKey& key, int n) const = 0;

  /// Answer symbol count, from the query alone.
  virtual int answer_length(const std::vector<int>& query) const = 0;

  virtual std::vector<Symbol> answer(const Shard& shard, const std::vector<int>& query) const = 0;

  /// Reconstructs the full length-L requested message from all N answers.
  virtual std::vector<Symbol> reconstruct(const std::vector<std::vector<Symbol>>& answers,
                                          int k_star, const RandomKey& key) const = 0;

  /// Exhaustive structural check of the scheme's decoding-set sizes for one
  /// (k_star, key); on failure optionally reports what broke.
  virtual bool check_decoding_sets(int k_star, const RandomKey& key,
                                   std::string* why = nullptr) const = 0;

  /// Size of the per-entry query alphabet (for wire encoding and upload
  /// accounting).
  virtual int query_alphabet() const = 0;

 protected:
  void check_request(int k_star, const RandomKey& key, int n) const;

  SystemParams params_;
  MdsCode code_;
};

}  // namespace pir
