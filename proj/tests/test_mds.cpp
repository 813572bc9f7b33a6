#include "doctest.h"

#include "pir/mds.hpp"

using namespace pir;

namespace {

std::vector<std::vector<int>> subsets(int n, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(size_t(t), 0);
  for (int i = 0; i < t; ++i) idx[size_t(i)] = i;
  while (true) {
    out.push_back(idx);
    int i = t - 1;
    while (i >= 0 && idx[size_t(i)] == n - t + i) --i;
    if (i < 0) break;
    ++idx[size_t(i)];
    for (int j = i + 1; j < t; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("vandermonde generators are mds") {
  CHECK(verify_mds(build_vandermonde(2, 3, Field::gf256())));
  CHECK(verify_mds(build_vandermonde(3, 5, Field::gf256())));
  CHECK(verify_mds(build_vandermonde(2, 5, Field::gf256())));
  CHECK(verify_mds(build_vandermonde(2, 3, Field::of(3))));  // q == n, points 0..n-1
  CHECK(verify_mds(build_vandermonde(4, 7, Field::of(7))));
}

TEST_CASE("verify_mds rejects a generator with repeated columns") {
  MdsCode code = build_vandermonde(2, 3, Field::gf256());
  for (int i = 0; i < 2; ++i) code.generator.at(size_t(i), 2) = code.generator.at(size_t(i), 0);
  CHECK_FALSE(verify_mds(code));
}

TEST_CASE("verify_mds is capped at desk scale") {
  CHECK_THROWS_AS(verify_mds(build_vandermonde(2, 21, Field::gf256())), TooLarge);
}

TEST_CASE("decode_any_t recovers the block from every size-t subset") {
  Rng rng(31);
  for (auto [t, n] : {std::pair{2, 3}, {3, 5}, {2, 5}}) {
    MdsCode code = build_vandermonde(t, n, Field::gf256());
    std::vector<Symbol> block(size_t(t), 0);
    for (auto& v : block) v = Symbol(rng.below(256));
    std::vector<Symbol> coded(size_t(n), 0);
    for (int j = 0; j < n; ++j) coded[size_t(j)] = code.encode_symbol(block, j);
    for (const auto& subset : subsets(n, t)) {
      std::vector<std::pair<int, Symbol>> points;
      for (int j : subset) points.emplace_back(j, coded[size_t(j)]);
      CHECK(decode_any_t(code, points) == block);
    }
    // all n points at once: consistent over-determination
    std::vector<std::pair<int, Symbol>> all;
    for (int j = 0; j < n; ++j) all.emplace_back(j, coded[size_t(j)]);
    CHECK(decode_any_t(code, all) == block);
    // corrupt one extra point
    all[size_t(n - 1)].second = Symbol(all[size_t(n - 1)].second ^ 1);
    CHECK_THROWS_AS(decode_any_t(code, all), InconsistentPoints);
  }
}

TEST_CASE("decode_any_t input validation") {
  MdsCode code = build_vandermonde(2, 3, Field::gf256());
  CHECK_THROWS_AS(decode_any_t(code, {{0, 1}}), InsufficientPoints);
  CHECK_THROWS_AS(decode_any_t(code, {{0, 1}, {0, 2}}), InsufficientPoints);  // duplicate index
  CHECK_THROWS_AS(decode_any_t(code, {{0, 1}, {7, 2}}), IndexOutOfRange);
}

TEST_CASE("message set layout and pseudo blocks") {
  SystemParams p = derive(5, 2, 2, 256, SchemeTag::B);  // m = 3, t = 2, l = 6
  std::vector<Symbol> sym(size_t(p.k) * p.l);
  for (size_t i = 0; i < sym.size(); ++i) sym[i] = Symbol(i + 1);
  MessageSet msgs(p, sym);
  CHECK(msgs.sub_message(0, 0) == std::vector<Symbol>{1, 2});
  CHECK(msgs.sub_message(0, 2) == std::vector<Symbol>{5, 6});
  CHECK(msgs.sub_message(1, 1) == std::vector<Symbol>{9, 10});
  CHECK(msgs.sub_message(0, 3) == std::vector<Symbol>{0, 0});  // pseudo
  CHECK(msgs.message(1) == std::vector<Symbol>{7, 8, 9, 10, 11, 12});
  Matrix m = msgs.as_matrix(1, Field::gf256());
  CHECK(m.rows() == 3);
  CHECK(m.row(2) == std::vector<Symbol>{11, 12});
  CHECK_THROWS_AS(MessageSet(p, {1, 2}), DimensionMismatch);
}

TEST_CASE("encode_storage matches per-cell encoding and pads pseudo cells") {
  SystemParams p = derive(5, 2, 2, 256, SchemeTag::B);
  Rng rng(7);
  MessageSet msgs = MessageSet::random(p, rng);
  MdsCode code = build_vandermonde(p.t, p.n, Field::gf256());
  auto shards = encode_storage(code, msgs);
  REQUIRE(shards.size() == 5);
  for (int n = 0; n < 5; ++n) {
    CHECK(shards[size_t(n)].db_index() == n);
    for (int k = 0; k < p.k; ++k) {
      for (int i = 0; i < p.m; ++i)
        CHECK(shards[size_t(n)].cell(k, i) == code.encode_symbol(msgs.sub_message(k, i), n));
      CHECK(shards[size_t(n)].cell(k, p.m) == 0);
    }
  }
}
