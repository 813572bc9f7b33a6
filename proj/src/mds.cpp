#include "pir/mds.hpp"

#include <algorithm>

#include "pir/errors.hpp"

namespace pir {

MdsCode build_vandermonde(int t, int n, const Field& field) {
  if (field.order() < uint32_t(n)) throw FieldTooSmall("field order below code length");
  // Prefer nonzero evaluation points; fall back to 0..n-1 when q == n.
  uint32_t base = field.order() > uint32_t(n) ? 1 : 0;
  Matrix gen(size_t(t), size_t(n), field);
  for (int j = 0; j < n; ++j) {
    Symbol alpha = Symbol(base + uint32_t(j));
    Symbol v = 1;
    for (int i = 0; i < t; ++i) {
      gen.at(size_t(i), size_t(j)) = v;
      v = field.mul(v, alpha);
    }
  }
  return MdsCode(t, n, std::move(gen));
}

namespace {

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

}  // namespace

bool verify_mds(const MdsCode& code) {
  if (code.n > 20) throw TooLarge("exhaustive minor check capped at n = 20");
  std::vector<size_t> rows(size_t(code.t));
  for (size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  std::vector<size_t> cols(size_t(code.t));
  for (size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  do {
    if (!code.generator.submatrix(rows, cols).invertible()) return false;
  } while (next_combination(cols, size_t(code.n)));
  return true;
}

MessageSet::MessageSet(SystemParams params, std::vector<Symbol> symbols)
    : params_(params), symbols_(std::move(symbols)) {
  if (symbols_.size() != size_t(params_.k) * params_.l)
    throw DimensionMismatch("message set must hold K*L symbols");
  for (Symbol v : symbols_)
    if (v >= params_.q) throw FieldMismatch("message symbol out of field range");
}

MessageSet MessageSet::zero(const SystemParams& params) {
  return MessageSet(params, std::vector<Symbol>(size_t(params.k) * params.l, 0));
}

MessageSet MessageSet::random(const SystemParams& params, Rng& rng) {
  std::vector<Symbol> sym(size_t(params.k) * params.l);
  for (auto& v : sym) v = Symbol(rng.below(params.q));
  return MessageSet(params, std::move(sym));
}

std::vector<Symbol> MessageSet::sub_message(int k, int i) const {
  std::vector<Symbol> block(size_t(params_.t), 0);
  if (i < params_.m)
    for (int j = 0; j < params_.t; ++j) block[j] = symbol(k, i * params_.t + j);
  return block;
}

Matrix MessageSet::as_matrix(int k, const Field& field) const {
  Matrix m(size_t(params_.m), size_t(params_.t), field);
  for (int i = 0; i < params_.m; ++i)
    for (int j = 0; j < params_.t; ++j) m.at(size_t(i), size_t(j)) = symbol(k, i * params_.t + j);
  return m;
}

std::vector<Symbol> MessageSet::message(int k) const {
  return std::vector<Symbol>(symbols_.begin() + size_t(k) * params_.l,
                             symbols_.begin() + size_t(k + 1) * params_.l);
}

std::vector<Shard> encode_storage(const MdsCode& code, const MessageSet& msgs) {
  const SystemParams& p = msgs.params();
  if (code.t != p.t || code.n != p.n) throw DimensionMismatch("code does not match parameters");
  std::vector<Shard> shards;
  shards.reserve(size_t(p.n));
  for (int n = 0; n < p.n; ++n) {
    std::vector<Symbol> cells(size_t(p.k) * p.m);
    for (int k = 0; k < p.k; ++k)
      for (int i = 0; i < p.m; ++i)
        cells[size_t(k) * p.m + i] = code.encode_symbol(msgs.sub_message(k, i), n);
    shards.emplace_back(n, p, std::move(cells));
  }
  return shards;
}

std::vector<Symbol> decode_any_t(const MdsCode& code,
                                 const std::vector<std::pair<int, Symbol>>& points) {
  std::vector<std::pair<int, Symbol>> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const auto& a, const auto& b) { return a.first == b.first; }),
            pts.end());
  if (pts.size() < size_t(code.t)) throw InsufficientPoints("need at least t distinct coordinates");
  for (const auto& [idx, sym] : pts) {
    (void)sym;
    if (idx < 0 || idx >= code.n) throw IndexOutOfRange("coordinate outside code length");
  }
  Matrix sys(size_t(code.t), size_t(code.t), code.field());
  std::vector<Symbol> y(size_t(code.t));
  for (int i = 0; i < code.t; ++i) {
    auto col = code.column(pts[size_t(i)].first);
    for (int j = 0; j < code.t; ++j) sys.at(size_t(i), size_t(j)) = col[size_t(j)];
    y[size_t(i)] = pts[size_t(i)].second;
  }
  std::vector<Symbol> w = sys.solve(y);
  for (size_t i = size_t(code.t); i < pts.size(); ++i)
    if (code.encode_symbol(w, pts[i].first) != pts[i].second)
      throw InconsistentPoints("over-determined points disagree");
  return w;
}

}  // namespace pir
