#include "pir/scheme_k2.hpp"

#include <algorithm>
#include <numeric>

#include "pir/errors.hpp"

namespace pir {

SchemeK2::SchemeK2(const SystemParams& params)
    : params_(params), code_(build_vandermonde(params.t, params.n, Field::of(params.q))) {
  if (params.scheme != SchemeTag::K2) throw InvalidParams("parameters not derived for scheme K2");
}

std::pair<PartitionK2, std::vector<QueryTagK2>> SchemeK2::gen_queries(int k_star, Rng& rng) const {
  if (k_star != 0 && k_star != 1) throw IndexOutOfRange("k_star must be 0 or 1");
  int n = params_.n, t = params_.t;
  PartitionK2 part;
  part.strategy = rng.below(uint64_t(n)) < uint64_t(t) ? PartitionK2::Strategy::Sum
                                                       : PartitionK2::Strategy::Direct;
  std::vector<int> order(size_t(n), 0);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  part.labels.assign(size_t(n), 0);
  if (part.strategy == PartitionK2::Strategy::Sum) {
    // sizes N-T, 2T-N, N-T
    for (int i = 0; i < n; ++i) {
      int label = i < n - t ? 0 : (i < t ? 1 : 2);
      part.labels[size_t(order[size_t(i)])] = label;
    }
  } else {
    for (int i = 0; i < n; ++i) part.labels[size_t(order[size_t(i)])] = i < t ? 3 : 4;
  }
  return {part, tags_for(part, k_star)};
}

std::vector<QueryTagK2> SchemeK2::tags_for(const PartitionK2& partition, int k_star) const {
  std::vector<QueryTagK2> tags(partition.labels.size());
  QueryTagK2 only_other = k_star == 0 ? QueryTagK2::SendOnly1 : QueryTagK2::SendOnly0;
  QueryTagK2 only_star = k_star == 0 ? QueryTagK2::SendOnly0 : QueryTagK2::SendOnly1;
  for (size_t n = 0; n < tags.size(); ++n) {
    switch (partition.labels[n]) {
      case 0: tags[n] = QueryTagK2::SendSum; break;
      case 1: tags[n] = QueryTagK2::SendBoth; break;
      case 2: tags[n] = only_other; break;
      case 3: tags[n] = only_star; break;
      case 4: tags[n] = QueryTagK2::SendNothing; break;
      default: throw MalformedTranscript("bad partition label");
    }
  }
  return tags;
}

int SchemeK2::answer_length(QueryTagK2 tag) const {
  switch (tag) {
    case QueryTagK2::SendBoth: return 2;
    case QueryTagK2::SendNothing: return 0;
    default: return 1;
  }
}

std::vector<Symbol> SchemeK2::answer(const Shard& shard, QueryTagK2 tag) const {
  const Field& f = code_.field();
  switch (tag) {
    case QueryTagK2::SendSum: return {f.add(shard.cell(0, 0), shard.cell(1, 0))};
    case QueryTagK2::SendBoth: return {shard.cell(0, 0), shard.cell(1, 0)};
    case QueryTagK2::SendOnly0: return {shard.cell(0, 0)};
    case QueryTagK2::SendOnly1: return {shard.cell(1, 0)};
    case QueryTagK2::SendNothing: return {};
  }
  throw MalformedTranscript("bad query tag");
}

std::vector<Symbol> SchemeK2::reconstruct(const std::vector<std::vector<Symbol>>& answers,
                                          const PartitionK2& partition, int k_star) const {
  if (answers.size() != size_t(params_.n)) throw DimensionMismatch("need one answer per database");
  const Field& f = code_.field();
  auto tags = tags_for(partition, k_star);
  for (int n = 0; n < params_.n; ++n)
    if (answers[size_t(n)].size() != size_t(answer_length(tags[size_t(n)])))
      throw MalformedTranscript("answer length disagrees with the query tag");

  if (partition.strategy == PartitionK2::Strategy::Direct) {
    std::vector<std::pair<int, Symbol>> points;
    for (int n = 0; n < params_.n; ++n)
      if (partition.labels[size_t(n)] == 3) points.emplace_back(n, answers[size_t(n)][0]);
    if (points.size() != size_t(params_.t)) throw MalformedTranscript("|G3| != T");
    return decode_any_t(code_, points);
  }

  // Sum strategy. The other message's symbol is known directly on G1 and G2
  // (T databases): decode it, regenerate it everywhere, cancel inside the
  // G0 sums, then decode the requested message from G0 and G1.
  std::vector<std::pair<int, Symbol>> other_points;
  for (int n = 0; n < params_.n; ++n) {
    int label = partition.labels[size_t(n)];
    if (label == 1)
      other_points.emplace_back(n, answers[size_t(n)][size_t(1 - k_star)]);
    else if (label == 2)
      other_points.emplace_back(n, answers[size_t(n)][0]);
  }
  if (other_points.size() != size_t(params_.t)) throw MalformedTranscript("|G1 u G2| != T");
  auto other = decode_any_t(code_, other_points);

  std::vector<std::pair<int, Symbol>> star_points;
  for (int n = 0; n < params_.n; ++n) {
    int label = partition.labels[size_t(n)];
    if (label == 0)
      star_points.emplace_back(n, f.sub(answers[size_t(n)][0], code_.encode_symbol(other, n)));
    else if (label == 1)
      star_points.emplace_back(n, answers[size_t(n)][size_t(k_star)]);
  }
  if (star_points.size() != size_t(params_.t)) throw MalformedTranscript("|G0 u G1| != T");
  return decode_any_t(code_, star_points);
}

std::vector<PartitionK2> SchemeK2::enumerate_partitions(PartitionK2::Strategy strategy) const {
  int n = params_.n, t = params_.t;
  std::vector<int> base;
  if (strategy == PartitionK2::Strategy::Sum) {
    base.insert(base.end(), size_t(n - t), 0);
    base.insert(base.end(), size_t(2 * t - n), 1);
    base.insert(base.end(), size_t(n - t), 2);
  } else {
    base.insert(base.end(), size_t(t), 3);
    base.insert(base.end(), size_t(n - t), 4);
  }
  std::sort(base.begin(), base.end());
  std::vector<PartitionK2> out;
  do {
    out.push_back(PartitionK2{strategy, base});
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

}  // namespace pir
