#pragma once

#include "pir/scheme.hpp"

namespace pir {

/// s x (s+1) binary query pattern matrix of the high-rate regime, plus its
/// s x (s+r) extension with extra zero columns. Row 0 is r ones followed by
/// zeros; row i cyclically right-shifts the first s entries of row 0 by i.
struct PatternMatrix {
  std::vector<std::vector<int>> p;      // s x (s+1)
  std::vector<std::vector<int>> p_bar;  // s x (s+r)
};

PatternMatrix build_pattern(const SystemParams& params);

/// Construction-B. High-rate regime (s >= r): product code with the row
/// code and an (s,r) column code, pattern-matrix answers, queries clamped
/// at s. Low-rate regime (r >= s): clamp at r, all-or-nothing length-s
/// answers, Construction-A style reconstruction.
///
/// With aux_mode the scheme issues the unclamped auxiliary queries over
/// {0..r+s-1}; answers and reconstruction are unchanged, which doubles as a
/// differential check of the compressed description.
class SchemeB : public LinearScheme {
 public:
  explicit SchemeB(const SystemParams& params, bool aux_mode = false);

  std::string name() const override {
    return high_rate_ ? "construction-b-high" : "construction-b-low";
  }
  bool high_rate() const { return high_rate_; }
  const MdsCode& column_code() const { return column_code_; }
  const PatternMatrix& pattern() const { return pattern_; }

  std::vector<int> make_query(int k_star, const RandomKey& key, int n) const override;
  int answer_length(const std::vector<int>& query) const override;
  std::vector<Symbol> answer(const Shard& shard, const std::vector<int>& query) const override;
  std::vector<Symbol> reconstruct(const std::vector<std::vector<Symbol>>& answers, int k_star,
                                  const RandomKey& key) const override;
  bool check_decoding_sets(int k_star, const RandomKey& key,
                           std::string* why = nullptr) const override;
  int query_alphabet() const override {
    if (aux_mode_) return params_.r + params_.s;
    return (high_rate_ ? params_.s : params_.r) + 1;
  }

  /// Low-rate K x s intermediate query matrix.
  std::vector<std::vector<int>> expand_low(const std::vector<int>& query) const;

 private:
  int clamp(int x) const;
  /// Pattern row entry for a (possibly auxiliary) query symbol.
  int pat(int i, int q) const { return pattern_.p_bar[size_t(i)][size_t(q)]; }

  std::vector<Symbol> answer_high(const Shard& shard, const std::vector<int>& query) const;
  std::vector<Symbol> answer_low(const Shard& shard, const std::vector<int>& query) const;
  std::vector<Symbol> reconstruct_high(const std::vector<std::vector<Symbol>>& answers,
                                       int k_star, const RandomKey& key) const;
  std::vector<Symbol> reconstruct_low(const std::vector<std::vector<Symbol>>& answers, int k_star,
                                      const RandomKey& key) const;

  bool high_rate_;
  bool aux_mode_;
  MdsCode column_code_;  // (s, r): dimension r, length s; high rate only uses it
  PatternMatrix pattern_;
};

/// Upper bound from the upload-cost lemmas:
/// min[N(K-1)log2(s+r), NK log2(s+1)] high rate,
/// min[N(K-1)log2(s+r), NK log2(r+1)] low rate.
/// compressed_wins reports whether the clamped-query branch is the minimum.
double upload_cost_bits_b(const SystemParams& params, Regime regime,
                          bool* compressed_wins = nullptr);

}  // namespace pir
