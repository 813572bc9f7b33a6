#include "pir/scheme_a.hpp"

#include <cmath>

#include "pir/errors.hpp"

namespace pir {

SchemeA::SchemeA(const SystemParams& params) : LinearScheme(params) {
  if (params.scheme != SchemeTag::A) throw InvalidParams("parameters not derived for scheme A");
}

std::vector<int> SchemeA::make_query(int k_star, const RandomKey& key, int n) const {
  check_request(k_star, key, n);
  std::vector<int> q = key.f;
  q[size_t(k_star)] = (q[size_t(k_star)] + n) % (params_.r + params_.s);
  return q;
}

std::vector<std::vector<int>> SchemeA::expand_query(const std::vector<int>& query) const {
  int mod = params_.r + params_.s;
  std::vector<std::vector<int>> grid(size_t(params_.k), std::vector<int>(size_t(params_.s)));
  for (int k = 0; k < params_.k; ++k)
    for (int i = 0; i < params_.s; ++i) grid[size_t(k)][size_t(i)] = (query[size_t(k)] + i) % mod;
  return grid;
}

std::vector<int> SchemeA::kept_columns(const std::vector<std::vector<int>>& grid) const {
  std::vector<int> kept;
  for (int i = 0; i < params_.s; ++i) {
    for (int k = 0; k < params_.k; ++k) {
      if (grid[size_t(k)][size_t(i)] < params_.r) {
        kept.push_back(i);
        break;
      }
    }
  }
  return kept;
}

int SchemeA::answer_length(const std::vector<int>& query) const {
  return int(kept_columns(expand_query(query)).size());
}

std::vector<Symbol> SchemeA::answer(const Shard& shard, const std::vector<int>& query) const {
  if (query.size() != size_t(params_.k)) throw DimensionMismatch("query length must equal K");
  if (shard.params().l != params_.l || shard.params().m != params_.m)
    throw DimensionMismatch("shard does not match scheme parameters");
  auto grid = expand_query(query);
  const Field& f = field();
  std::vector<Symbol> out;
  for (int i : kept_columns(grid)) {
    Symbol acc = 0;
    for (int k = 0; k < params_.k; ++k)
      acc = f.add(acc, shard.cell(k, grid[size_t(k)][size_t(i)]));
    out.push_back(acc);
  }
  return out;
}

std::vector<Symbol> SchemeA::reconstruct(const std::vector<std::vector<Symbol>>& answers,
                                         int k_star, const RandomKey& key) const {
  if (answers.size() != size_t(params_.n)) throw DimensionMismatch("need one answer per database");
  const Field& f = field();

  // Re-derive each database's grid and kept columns from (k_star, key), then
  // view the answers as the full length-s intermediate vectors with skipped
  // columns read as zero.
  std::vector<std::vector<std::vector<int>>> grids(size_t(params_.n));
  std::vector<std::vector<Symbol>> inter(size_t(params_.n),
                                         std::vector<Symbol>(size_t(params_.s), 0));
  for (int n = 0; n < params_.n; ++n) {
    grids[size_t(n)] = expand_query(make_query(k_star, key, n));
    auto kept = kept_columns(grids[size_t(n)]);
    if (answers[size_t(n)].size() != kept.size())
      throw MalformedTranscript("answer length disagrees with the query");
    for (size_t j = 0; j < kept.size(); ++j)
      inter[size_t(n)][size_t(kept[j])] = answers[size_t(n)][j];
  }

  // Per column i: decode the interference vector from T_i, cancel it
  // elsewhere, and pool the exposed desired symbols by sub-message index.
  std::vector<std::vector<std::pair<int, Symbol>>> pools(size_t(params_.m));
  for (int i = 0; i < params_.s; ++i) {
    std::vector<std::pair<int, Symbol>> interference_points;
    for (int n = 0; n < params_.n; ++n)
      if (grids[size_t(n)][size_t(k_star)][size_t(i)] >= params_.r)
        interference_points.emplace_back(n, inter[size_t(n)][size_t(i)]);
    if (interference_points.size() != size_t(params_.t))
      throw MalformedTranscript("|T_i| != T");
    auto interference = decode_any_t(code_, interference_points);
    for (int n = 0; n < params_.n; ++n) {
      int m = grids[size_t(n)][size_t(k_star)][size_t(i)];
      if (m >= params_.r) continue;
      Symbol exposed =
          f.sub(inter[size_t(n)][size_t(i)], code_.encode_symbol(interference, n));
      pools[size_t(m)].emplace_back(n, exposed);
    }
  }

  std::vector<Symbol> message;
  message.reserve(size_t(params_.l));
  for (int m = 0; m < params_.m; ++m) {
    if (pools[size_t(m)].size() != size_t(params_.t)) throw MalformedTranscript("|N_m| != T");
    auto block = decode_any_t(code_, pools[size_t(m)]);
    message.insert(message.end(), block.begin(), block.end());
  }
  return message;
}

bool SchemeA::check_decoding_sets(int k_star, const RandomKey& key, std::string* why) const {
  std::vector<std::vector<int>> star_rows(size_t(params_.n));
  for (int n = 0; n < params_.n; ++n)
    star_rows[size_t(n)] = expand_query(make_query(k_star, key, n))[size_t(k_star)];
  for (int i = 0; i < params_.s; ++i) {
    int t_i = 0;
    for (int n = 0; n < params_.n; ++n)
      if (star_rows[size_t(n)][size_t(i)] >= params_.r) ++t_i;
    if (t_i != params_.t) {
      if (why) *why = "|T_" + std::to_string(i) + "| = " + std::to_string(t_i);
      return false;
    }
  }
  for (int m = 0; m < params_.r; ++m) {
    int n_m = 0;
    for (int n = 0; n < params_.n; ++n)
      for (int i = 0; i < params_.s; ++i)
        if (star_rows[size_t(n)][size_t(i)] == m) ++n_m;
    if (n_m != params_.t) {
      if (why) *why = "|N_" + std::to_string(m) + "| = " + std::to_string(n_m);
      return false;
    }
  }
  return true;
}

double upload_cost_bits_a(const SystemParams& params) {
  return double(params.n) * (params.k - 1) * std::log2(double(params.n) / params.p);
}

}  // namespace pir
