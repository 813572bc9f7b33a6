#include "pir/analysis.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "pir/errors.hpp"

namespace pir {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string describe(const SystemParams& p) {
  std::ostringstream os;
  os << "(n=" << p.n << ",t=" << p.t << ",k=" << p.k << ",q=" << p.q << ")";
  return os.str();
}

bool next_combination(std::vector<size_t>& idx, size_t n) {
  size_t k = idx.size();
  for (size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::vector<size_t>> size_t_subsets(size_t n, size_t t) {
  std::vector<std::vector<size_t>> out;
  if (t > n) return out;
  std::vector<size_t> idx(t);
  for (size_t i = 0; i < t; ++i) idx[i] = i;
  do {
    out.push_back(idx);
  } while (next_combination(idx, n));
  return out;
}

/// Shard n for a given message set, without materializing the other shards.
Shard shard_for(const MdsCode& code, const MessageSet& msgs, int n) {
  const SystemParams& p = msgs.params();
  std::vector<Symbol> cells(size_t(p.k) * p.m);
  for (int k = 0; k < p.k; ++k)
    for (int i = 0; i < p.m; ++i)
      cells[size_t(k) * p.m + i] = code.encode_symbol(msgs.sub_message(k, i), n);
  return Shard(n, p, std::move(cells));
}

/// Column indices of the flattened message vector belonging to messages
/// outside J.
std::vector<size_t> columns_outside(const SystemParams& p, const std::vector<int>& j_subset) {
  std::vector<bool> in_j(size_t(p.k), false);
  for (int k : j_subset) in_j[size_t(k)] = true;
  std::vector<size_t> cols;
  for (int k = 0; k < p.k; ++k) {
    if (in_j[size_t(k)]) continue;
    for (int j = 0; j < p.l; ++j) cols.push_back(size_t(k) * p.l + j);
  }
  return cols;
}

std::vector<size_t> all_rows(const Matrix& m) {
  std::vector<size_t> rows(m.rows());
  for (size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return rows;
}

}  // namespace

Rational capacity(int n, int t, int k) {
  if (t <= 0 || t >= n || k < 1) throw InvalidParams("capacity requires 0 < t < n, k >= 1");
  Rational ratio(t, n);
  Rational sum(0);
  for (int j = 0; j < k; ++j) sum += ratio.pow(unsigned(j));
  return sum.inverse();
}

Rational predicted_download(const SystemParams& p) {
  Rational ratio(p.t, p.n);
  return Rational(int64_t(p.s) * p.n) * (Rational(1) - ratio.pow(unsigned(p.k)));
}

Rational expected_download(const LinearScheme& scheme) {
  const SystemParams& p = scheme.params();
  auto keys = scheme.enumerate_keys();
  Rational result(0);
  for (int k_star = 0; k_star < p.k; ++k_star) {
    long long total = 0;
    for (const auto& key : keys)
      for (int n = 0; n < p.n; ++n)
        total += scheme.answer_length(scheme.make_query(k_star, key, n));
    Rational mean(BigInt(total), BigInt(keys.size()));
    if (k_star == 0)
      result = mean;
    else if (mean != result)
      throw Error("expected download depends on the requested message");
  }
  return result;
}

VerificationReport verify_privacy(const LinearScheme& scheme) {
  auto start = Clock::now();
  const SystemParams& p = scheme.params();
  auto keys = scheme.enumerate_keys();
  bool pass = true;
  for (int n = 0; n < p.n && pass; ++n) {
    std::map<std::vector<int>, long long> reference;
    for (int k_star = 0; k_star < p.k; ++k_star) {
      std::map<std::vector<int>, long long> multiset;
      for (const auto& key : keys) ++multiset[scheme.make_query(k_star, key, n)];
      if (k_star == 0)
        reference = std::move(multiset);
      else if (multiset != reference)
        pass = false;
    }
  }
  return VerificationReport{"privacy/" + scheme.name(),
                            describe(p),
                            "identical query multisets",
                            pass ? "identical query multisets" : "multisets differ",
                            pass,
                            uint64_t(keys.size()) * p.k * p.n,
                            elapsed_ms(start)};
}

VerificationReport verify_decoding_sets(const LinearScheme& scheme) {
  auto start = Clock::now();
  const SystemParams& p = scheme.params();
  auto keys = scheme.enumerate_keys();
  bool pass = true;
  std::string detail = "all set sizes = T";
  for (int k_star = 0; k_star < p.k && pass; ++k_star) {
    for (const auto& key : keys) {
      std::string why;
      if (!scheme.check_decoding_sets(k_star, key, &why)) {
        pass = false;
        detail = why;
        break;
      }
    }
  }
  return VerificationReport{"decoding-sets/" + scheme.name(),
                            describe(p),
                            "all set sizes = T",
                            detail,
                            pass,
                            uint64_t(keys.size()) * p.k,
                            elapsed_ms(start)};
}

VerificationReport verify_rate(const LinearScheme& scheme) {
  auto start = Clock::now();
  const SystemParams& p = scheme.params();
  Rational cap = capacity(p.n, p.t, p.k);
  Rational download = expected_download(scheme);
  Rational rate = Rational(p.l) / download;
  uint64_t keys = 1;
  for (int i = 0; i + 1 < p.k; ++i) keys *= uint64_t(p.r + p.s);
  return VerificationReport{"rate/" + scheme.name(), describe(p),   cap.str(), rate.str(),
                            rate == cap,             keys * p.k * p.n, elapsed_ms(start)};
}

Matrix extract_coefficients(const LinearScheme& scheme, int k_star, const RandomKey& key, int n) {
  const SystemParams& p = scheme.params();
  auto query = scheme.make_query(k_star, key, n);
  int len = scheme.answer_length(query);
  size_t dims = size_t(p.k) * p.l;
  Matrix coeffs(size_t(len), dims, scheme.field());
  std::vector<Symbol> sym(dims, 0);
  for (size_t j = 0; j < dims; ++j) {
    sym[j] = 1;
    MessageSet unit(p, sym);
    auto ans = scheme.answer(shard_for(scheme.row_code(), unit, n), query);
    for (int i = 0; i < len; ++i) coeffs.at(size_t(i), j) = ans[size_t(i)];
    sym[j] = 0;
  }
  return coeffs;
}

VerificationReport verify_p0(const LinearScheme& scheme, int k_star, const RandomKey& key,
                             const std::vector<std::vector<int>>& j_subsets) {
  auto start = Clock::now();
  const SystemParams& p = scheme.params();
  std::vector<Matrix> coeffs;
  for (int n = 0; n < p.n; ++n) coeffs.push_back(extract_coefficients(scheme, k_star, key, n));
  bool pass = true;
  uint64_t checks = 0;
  auto subsets = size_t_subsets(size_t(p.n), size_t(p.t));
  for (const auto& j_subset : j_subsets) {
    auto cols = columns_outside(p, j_subset);
    std::vector<Matrix> restricted;
    std::vector<size_t> ranks;
    for (int n = 0; n < p.n; ++n) {
      restricted.push_back(coeffs[size_t(n)].submatrix(all_rows(coeffs[size_t(n)]), cols));
      ranks.push_back(restricted.back().rank());
    }
    for (const auto& subset : subsets) {
      Matrix stacked(0, cols.size(), scheme.field());
      size_t rank_sum = 0;
      for (size_t n : subset) {
        stacked = stacked.vstack(restricted[n]);
        rank_sum += ranks[n];
      }
      ++checks;
      if (stacked.rank() != rank_sum) {
        pass = false;
        break;
      }
    }
    if (!pass) break;
  }
  return VerificationReport{"p0/" + scheme.name(),
                            describe(p),
                            "rank additivity",
                            pass ? "rank additivity" : "rank deficiency found",
                            pass,
                            checks,
                            elapsed_ms(start)};
}

VerificationReport verify_p1(const LinearScheme& scheme, int k_star, const RandomKey& key,
                             const std::vector<std::vector<int>>& j_subsets) {
  auto start = Clock::now();
  const SystemParams& p = scheme.params();
  std::vector<Matrix> coeffs;
  for (int n = 0; n < p.n; ++n) coeffs.push_back(extract_coefficients(scheme, k_star, key, n));
  bool pass = true;
  uint64_t checks = 0;
  auto subsets = size_t_subsets(size_t(p.n), size_t(p.t));
  for (const auto& j_subset : j_subsets) {
    auto cols = columns_outside(p, j_subset);
    std::vector<Matrix> restricted;
    for (int n = 0; n < p.n; ++n)
      restricted.push_back(coeffs[size_t(n)].submatrix(all_rows(coeffs[size_t(n)]), cols));
    for (const auto& subset : subsets) {
      Matrix base(0, cols.size(), scheme.field());
      std::vector<bool> in_subset(size_t(p.n), false);
      for (size_t n : subset) {
        base = base.vstack(restricted[n]);
        in_subset[n] = true;
      }
      size_t base_rank = base.rank();
      for (int n = 0; n < p.n; ++n) {
        if (in_subset[size_t(n)]) continue;
        ++checks;
        if (base.vstack(restricted[size_t(n)]).rank() != base_rank) {
          pass = false;
          break;
        }
      }
      if (!pass) break;
    }
    if (!pass) break;
  }
  return VerificationReport{"p1/" + scheme.name(),
                            describe(p),
                            "span membership",
                            pass ? "span membership" : "answer outside span",
                            pass,
                            checks,
                            elapsed_ms(start)};
}

std::vector<std::vector<int>> p0_subsets(int k) {
  std::vector<std::vector<int>> out;
  if (k <= 4) {
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::vector<int> j;
      for (int b = 0; b < k; ++b)
        if (mask & (1 << b)) j.push_back(b);
      out.push_back(std::move(j));
    }
    return out;
  }
  out.push_back({});
  for (int a = 0; a < k; ++a) {
    out.push_back({a});
    for (int b = a + 1; b < k; ++b) out.push_back({a, b});
  }
  std::vector<int> full(size_t(k), 0);
  for (int b = 0; b < k; ++b) full[size_t(b)] = b;
  out.push_back(std::move(full));
  return out;
}

std::vector<std::vector<int>> p1_subsets(int k, int k_star) {
  std::vector<std::vector<int>> out;
  for (auto& j : p0_subsets(k)) {
    bool has_star = false;
    for (int v : j) has_star |= v == k_star;
    if (has_star) out.push_back(std::move(j));
  }
  return out;
}

namespace {

/// Weighted enumeration of the K2 randomness: (strategy, partition) pairs
/// with their exact probabilities.
struct K2Realization {
  PartitionK2 partition;
  Rational weight;
};

std::vector<K2Realization> k2_realizations(const SchemeK2& scheme) {
  const SystemParams& p = scheme.params();
  std::vector<K2Realization> out;
  auto sums = scheme.enumerate_partitions(PartitionK2::Strategy::Sum);
  Rational w_sum = Rational(p.t, p.n) / Rational(BigInt(sums.size()), BigInt(1));
  for (auto& part : sums) out.push_back({std::move(part), w_sum});
  auto directs = scheme.enumerate_partitions(PartitionK2::Strategy::Direct);
  Rational w_direct = Rational(p.n - p.t, p.n) / Rational(BigInt(directs.size()), BigInt(1));
  for (auto& part : directs) out.push_back({std::move(part), w_direct});
  return out;
}

}  // namespace

Rational expected_download_k2(const SchemeK2& scheme) {
  const SystemParams& p = scheme.params();
  Rational result(0);
  for (int k_star = 0; k_star < 2; ++k_star) {
    Rational mean(0);
    for (const auto& real : k2_realizations(scheme)) {
      auto tags = scheme.tags_for(real.partition, k_star);
      long long total = 0;
      for (auto tag : tags) total += scheme.answer_length(tag);
      mean += real.weight * Rational(total);
    }
    if (k_star == 0)
      result = mean;
    else if (mean != result)
      throw Error("expected download depends on the requested message");
  }
  (void)p;
  return result;
}

VerificationReport verify_privacy_k2(const SchemeK2& scheme) {
  auto start = Clock::now();
  const SystemParams& p = scheme.params();
  auto realizations = k2_realizations(scheme);
  bool pass = true;
  for (int n = 0; n < p.n && pass; ++n) {
    std::map<QueryTagK2, Rational> reference;
    for (int k_star = 0; k_star < 2; ++k_star) {
      std::map<QueryTagK2, Rational> dist;
      for (const auto& real : realizations) {
        auto tags = scheme.tags_for(real.partition, k_star);
        auto [it, inserted] = dist.try_emplace(tags[size_t(n)], real.weight);
        if (!inserted) it->second += real.weight;
      }
      if (k_star == 0)
        reference = std::move(dist);
      else if (dist != reference)
        pass = false;
    }
  }
  return VerificationReport{"privacy/" + scheme.name(),
                            describe(p),
                            "identical tag distributions",
                            pass ? "identical tag distributions" : "distributions differ",
                            pass,
                            uint64_t(realizations.size()) * 2 * p.n,
                            elapsed_ms(start)};
}

VerificationReport verify_rate_k2(const SchemeK2& scheme) {
  auto start = Clock::now();
  const SystemParams& p = scheme.params();
  Rational cap = capacity(p.n, p.t, 2);
  Rational download = expected_download_k2(scheme);
  Rational rate = Rational(p.l) / download;
  return VerificationReport{"rate/" + scheme.name(), describe(p), cap.str(), rate.str(),
                            rate == cap,             0,           elapsed_ms(start)};
}

}  // namespace pir
