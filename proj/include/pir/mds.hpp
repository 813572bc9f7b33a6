#pragma once

#include <utility>
#include <vector>

#include "pir/matrix.hpp"
#include "pir/params.hpp"
#include "pir/rng.hpp"

namespace pir {

/// A (length, dimension) MDS code given by its t x n generator matrix:
/// every t x t submatrix of the generator is invertible.
struct MdsCode {
  int t = 0;  // dimension
  int n = 0;  // length
  Matrix generator;

  MdsCode(int t_, int n_, Matrix gen) : t(t_), n(n_), generator(std::move(gen)) {}

  const Field& field() const { return generator.field(); }

  /// Column n of the generator as a length-t vector.
  std::vector<Symbol> column(int idx) const { return generator.col(size_t(idx)); }

  /// Encodes a length-t block into a single coded symbol for coordinate idx.
  Symbol encode_symbol(const std::vector<Symbol>& block, int idx) const {
    return dot(field(), block, column(idx));
  }
};

/// Vandermonde generator on n distinct evaluation points. Points are the
/// field elements 1..n when the field allows, else 0..n-1.
MdsCode build_vandermonde(int t, int n, const Field& field);

/// Exhaustive check that every t x t minor of the generator is invertible.
/// Desk scale only: throws TooLarge for n > 20.
bool verify_mds(const MdsCode& code);

/// The K messages, each l field symbols, stored as a K x l grid.
/// Sub-message views follow the schemes' layout: message k splits into m
/// length-t blocks, and indices i >= m read as all-zero pseudo blocks.
class MessageSet {
 public:
  MessageSet(SystemParams params, std::vector<Symbol> symbols);

  static MessageSet zero(const SystemParams& params);
  static MessageSet random(const SystemParams& params, Rng& rng);

  const SystemParams& params() const { return params_; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  Symbol symbol(int k, int j) const { return symbols_[size_t(k) * params_.l + j]; }

  /// W^{k,i}: a length-t block; all-zero when i >= m (pseudo sub-message).
  std::vector<Symbol> sub_message(int k, int i) const;

  /// The message as an m x t matrix (row i = sub-message i).
  Matrix as_matrix(int k, const Field& field) const;

  /// Row k of the grid: the full length-l message.
  std::vector<Symbol> message(int k) const;

 private:
  SystemParams params_;
  std::vector<Symbol> symbols_;  // K * l
};

/// Per-database stored content: cell (k, i) = W^{k,i} . G*_n, one symbol per
/// sub-message. Indices i >= m read as zero (pseudo code symbols).
class Shard {
 public:
  Shard(int db_index, const SystemParams& params, std::vector<Symbol> cells)
      : db_index_(db_index), params_(params), cells_(std::move(cells)) {}

  int db_index() const { return db_index_; }
  const SystemParams& params() const { return params_; }

  Symbol cell(int k, int i) const {
    if (i >= params_.m) return 0;
    return cells_[size_t(k) * params_.m + i];
  }

  /// V^k_n as a length-m column.
  std::vector<Symbol> message_column(int k) const {
    std::vector<Symbol> v(size_t(params_.m));
    for (int i = 0; i < params_.m; ++i) v[i] = cell(k, i);
    return v;
  }

 private:
  int db_index_;
  SystemParams params_;
  std::vector<Symbol> cells_;  // K * m
};

/// Encodes every sub-message with the base code; shard n holds column n.
std::vector<Shard> encode_storage(const MdsCode& code, const MessageSet& msgs);

/// Recovers the unique length-t block w with w . G*_idx = symbol for every
/// supplied (idx, symbol) point. Uses the first t points after sorting by
/// index; extra points are consistency-checked.
std::vector<Symbol> decode_any_t(const MdsCode& code,
                                 const std::vector<std::pair<int, Symbol>>& points);

}  // namespace pir
