#include "pir/scheme_b.hpp"

#include <algorithm>
#include <cmath>

#include "pir/errors.hpp"

namespace pir {

PatternMatrix build_pattern(const SystemParams& params) {
  int r = params.r, s = params.s;
  if (s < r) throw WrongRegime("pattern matrix is a high-rate object (needs s >= r)");
  PatternMatrix pm;
  pm.p.assign(size_t(s), std::vector<int>(size_t(s + 1), 0));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < r; ++j) pm.p[size_t(i)][size_t((j + i) % s)] = 1;
  pm.p_bar = pm.p;
  for (auto& row : pm.p_bar) row.resize(size_t(s + r), 0);
  return pm;
}

namespace {

MdsCode make_column_code(const SystemParams& params, bool high_rate) {
  // Low-rate instances never touch the column code; a 1x1 placeholder keeps
  // the member well-formed.
  if (!high_rate) return build_vandermonde(1, 1, Field::of(params.q));
  return build_vandermonde(params.r, params.s, Field::of(params.q));
}

}  // namespace

SchemeB::SchemeB(const SystemParams& params, bool aux_mode)
    : LinearScheme(params),
      high_rate_(params.s >= params.r),
      aux_mode_(aux_mode),
      column_code_(make_column_code(params, params.s >= params.r)),
      pattern_() {
  if (params.scheme != SchemeTag::B) throw InvalidParams("parameters not derived for scheme B");
  if (high_rate_) pattern_ = build_pattern(params);
}

int SchemeB::clamp(int x) const { return std::min(x, high_rate_ ? params_.s : params_.r); }

std::vector<int> SchemeB::make_query(int k_star, const RandomKey& key, int n) const {
  check_request(k_star, key, n);
  std::vector<int> q = key.f;
  q[size_t(k_star)] = (q[size_t(k_star)] + n) % (params_.r + params_.s);
  if (!aux_mode_)
    for (auto& x : q) x = clamp(x);
  return q;
}

int SchemeB::answer_length(const std::vector<int>& query) const {
  std::vector<int> cq = query;
  for (auto& x : cq) x = clamp(x);
  if (high_rate_) {
    int len = 0;
    for (int i = 0; i < params_.s; ++i) {
      int weight = 0;
      for (int k = 0; k < params_.k; ++k) weight += pat(i, cq[size_t(k)]);
      if (weight > 0) ++len;
    }
    return len;
  }
  int min_entry = *std::min_element(cq.begin(), cq.end());
  return min_entry < params_.r ? params_.s : 0;
}

std::vector<Symbol> SchemeB::answer(const Shard& shard, const std::vector<int>& query) const {
  if (query.size() != size_t(params_.k)) throw DimensionMismatch("query length must equal K");
  if (shard.params().l != params_.l || shard.params().m != params_.m)
    throw DimensionMismatch("shard does not match scheme parameters");
  std::vector<int> cq = query;
  for (auto& x : cq) x = clamp(x);
  return high_rate_ ? answer_high(shard, cq) : answer_low(shard, cq);
}

std::vector<Symbol> SchemeB::answer_high(const Shard& shard, const std::vector<int>& query) const {
  const Field& f = field();
  // Intermediate code vectors: V~^k_n = (G^*)^T . V^k_n, length s.
  std::vector<std::vector<Symbol>> coded(size_t(params_.k));
  for (int k = 0; k < params_.k; ++k) {
    auto v = shard.message_column(k);
    coded[size_t(k)].resize(size_t(params_.s));
    for (int i = 0; i < params_.s; ++i)
      coded[size_t(k)][size_t(i)] = column_code_.encode_symbol(v, i);
  }
  std::vector<Symbol> out;
  for (int i = 0; i < params_.s; ++i) {
    int weight = 0;
    Symbol acc = 0;
    for (int k = 0; k < params_.k; ++k) {
      if (pat(i, query[size_t(k)]) == 0) continue;
      ++weight;
      acc = f.add(acc, coded[size_t(k)][size_t(i)]);
    }
    if (weight > 0) out.push_back(acc);
  }
  return out;
}

std::vector<std::vector<int>> SchemeB::expand_low(const std::vector<int>& query) const {
  std::vector<int> cq = query;
  for (auto& x : cq) x = clamp(x);
  std::vector<std::vector<int>> grid(size_t(params_.k), std::vector<int>(size_t(params_.s)));
  for (int k = 0; k < params_.k; ++k)
    for (int i = 0; i < params_.s; ++i)
      grid[size_t(k)][size_t(i)] =
          cq[size_t(k)] == params_.r ? params_.r : (cq[size_t(k)] + i) % params_.r;
  return grid;
}

std::vector<Symbol> SchemeB::answer_low(const Shard& shard, const std::vector<int>& query) const {
  if (answer_length(query) == 0) return {};
  const Field& f = field();
  auto grid = expand_low(query);
  std::vector<Symbol> out(size_t(params_.s), 0);
  for (int i = 0; i < params_.s; ++i) {
    Symbol acc = 0;
    for (int k = 0; k < params_.k; ++k)
      acc = f.add(acc, shard.cell(k, grid[size_t(k)][size_t(i)]));
    out[size_t(i)] = acc;
  }
  return out;
}

std::vector<Symbol> SchemeB::reconstruct(const std::vector<std::vector<Symbol>>& answers,
                                         int k_star, const RandomKey& key) const {
  if (answers.size() != size_t(params_.n)) throw DimensionMismatch("need one answer per database");
  return high_rate_ ? reconstruct_high(answers, k_star, key)
                    : reconstruct_low(answers, k_star, key);
}

std::vector<Symbol> SchemeB::reconstruct_high(const std::vector<std::vector<Symbol>>& answers,
                                              int k_star, const RandomKey& key) const {
  const Field& f = field();
  std::vector<std::vector<int>> queries(size_t(params_.n));
  std::vector<std::vector<Symbol>> inter(size_t(params_.n),
                                         std::vector<Symbol>(size_t(params_.s), 0));
  for (int n = 0; n < params_.n; ++n) {
    auto q = make_query(k_star, key, n);
    for (auto& x : q) x = clamp(x);
    queries[size_t(n)] = q;
    size_t pos = 0;
    for (int i = 0; i < params_.s; ++i) {
      int weight = 0;
      for (int k = 0; k < params_.k; ++k) weight += pat(i, q[size_t(k)]);
      if (weight == 0) continue;
      if (pos >= answers[size_t(n)].size())
        throw MalformedTranscript("answer length disagrees with the query");
      inter[size_t(n)][size_t(i)] = answers[size_t(n)][pos++];
    }
    if (pos != answers[size_t(n)].size())
      throw MalformedTranscript("answer length disagrees with the query");
  }

  // Per component i: decode the projected interference row vector across
  // T~_i via the row code, then cancel it in the remaining answers.
  std::vector<std::vector<Symbol>> exposed(size_t(params_.s),
                                           std::vector<Symbol>(size_t(params_.n), 0));
  std::vector<std::vector<int>> usable_rows(size_t(params_.n));
  for (int i = 0; i < params_.s; ++i) {
    std::vector<std::pair<int, Symbol>> interference_points;
    for (int n = 0; n < params_.n; ++n) {
      if (pat(i, queries[size_t(n)][size_t(k_star)]) == 0)
        interference_points.emplace_back(n, inter[size_t(n)][size_t(i)]);
      else
        usable_rows[size_t(n)].push_back(i);
    }
    if (interference_points.size() != size_t(params_.t))
      throw MalformedTranscript("|T~_i| != T");
    auto projected = decode_any_t(code_, interference_points);
    for (int n = 0; n < params_.n; ++n)
      if (pat(i, queries[size_t(n)][size_t(k_star)]) == 1)
        exposed[size_t(i)][size_t(n)] =
            f.sub(inter[size_t(n)][size_t(i)], code_.encode_symbol(projected, n));
  }

  // Databases with r usable components yield the full desired column via
  // the column code; T of those recover the message via the row code.
  std::vector<std::pair<int, std::vector<Symbol>>> columns;
  for (int n = 0; n < params_.n; ++n) {
    if (usable_rows[size_t(n)].size() < size_t(params_.r)) continue;
    std::vector<std::pair<int, Symbol>> points;
    for (int i : usable_rows[size_t(n)]) points.emplace_back(i, exposed[size_t(i)][size_t(n)]);
    columns.emplace_back(n, decode_any_t(column_code_, points));
  }
  if (columns.size() != size_t(params_.t)) throw MalformedTranscript("|N| != T");

  std::vector<Symbol> message;
  message.reserve(size_t(params_.l));
  for (int j = 0; j < params_.r; ++j) {
    std::vector<std::pair<int, Symbol>> points;
    for (const auto& [n, col] : columns) points.emplace_back(n, col[size_t(j)]);
    auto row = decode_any_t(code_, points);
    message.insert(message.end(), row.begin(), row.end());
  }
  return message;
}

std::vector<Symbol> SchemeB::reconstruct_low(const std::vector<std::vector<Symbol>>& answers,
                                             int k_star, const RandomKey& key) const {
  const Field& f = field();
  std::vector<std::vector<std::vector<int>>> grids(size_t(params_.n));
  std::vector<std::vector<Symbol>> inter(size_t(params_.n),
                                         std::vector<Symbol>(size_t(params_.s), 0));
  for (int n = 0; n < params_.n; ++n) {
    auto q = make_query(k_star, key, n);
    grids[size_t(n)] = expand_low(q);
    size_t expected = size_t(answer_length(q));
    if (answers[size_t(n)].size() != expected)
      throw MalformedTranscript("answer length disagrees with the query");
    for (size_t j = 0; j < expected; ++j) inter[size_t(n)][j] = answers[size_t(n)][j];
  }

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
      Symbol value = f.sub(inter[size_t(n)][size_t(i)], code_.encode_symbol(interference, n));
      pools[size_t(m)].emplace_back(n, value);
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

bool SchemeB::check_decoding_sets(int k_star, const RandomKey& key, std::string* why) const {
  if (high_rate_) {
    std::vector<int> star(size_t(params_.n));
    for (int n = 0; n < params_.n; ++n)
      star[size_t(n)] = clamp(make_query(k_star, key, n)[size_t(k_star)]);
    for (int i = 0; i < params_.s; ++i) {
      int t_i = 0;
      for (int n = 0; n < params_.n; ++n)
        if (pat(i, star[size_t(n)]) == 0) ++t_i;
      if (t_i != params_.t) {
        if (why) *why = "|T~_" + std::to_string(i) + "| = " + std::to_string(t_i);
        return false;
      }
    }
    int big_n = 0;
    for (int n = 0; n < params_.n; ++n) {
      int s_n = 0;
      for (int i = 0; i < params_.s; ++i) s_n += pat(i, star[size_t(n)]);
      if (s_n != 0 && s_n != params_.r) {
        if (why) *why = "|S_" + std::to_string(n) + "| = " + std::to_string(s_n);
        return false;
      }
      if (s_n == params_.r) ++big_n;
    }
    if (big_n != params_.t) {
      if (why) *why = "|N| = " + std::to_string(big_n);
      return false;
    }
    return true;
  }

  std::vector<std::vector<int>> star_rows(size_t(params_.n));
  for (int n = 0; n < params_.n; ++n)
    star_rows[size_t(n)] = expand_low(make_query(k_star, key, n))[size_t(k_star)];
  std::vector<int> t_0;
  for (int i = 0; i < params_.s; ++i) {
    std::vector<int> t_i;
    for (int n = 0; n < params_.n; ++n)
      if (star_rows[size_t(n)][size_t(i)] >= params_.r) t_i.push_back(n);
    if (t_i.size() != size_t(params_.t)) {
      if (why) *why = "|T_" + std::to_string(i) + "| = " + std::to_string(t_i.size());
      return false;
    }
    if (i == 0)
      t_0 = t_i;
    else if (t_i != t_0) {
      if (why) *why = "T_" + std::to_string(i) + " differs from T_0";
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

double upload_cost_bits_b(const SystemParams& params, Regime regime, bool* compressed_wins) {
  double aux = double(params.n) * (params.k - 1) * std::log2(double(params.r + params.s));
  int alphabet = (regime == Regime::LowRate ? params.r : params.s) + 1;
  double compressed = double(params.n) * params.k * std::log2(double(alphabet));
  if (compressed_wins) *compressed_wins = compressed < aux;
  return std::min(aux, compressed);
}

}  // namespace pir
