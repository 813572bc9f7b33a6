#include "doctest.h"

#include "pir/analysis.hpp"
#include "pir/scheme_a.hpp"
#include "pir/scheme_b.hpp"

using namespace pir;

TEST_CASE("rational arithmetic stays canonical") {
  Rational a(2, 4);
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  CHECK((a + Rational(1, 3)).str() == "5/6");
  CHECK((Rational(3, 4) * Rational(4, 3)).str() == "1");
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1, 0), DivideByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), DivideByZero);
}

TEST_CASE("capacity closed form") {
  CHECK(capacity(3, 2, 3) == Rational(9, 19));
  CHECK(capacity(5, 3, 4) == Rational(125, 272));
  CHECK(capacity(5, 2, 4) == Rational(125, 203));
  CHECK(capacity(3, 2, 2) == Rational(3, 5));
  CHECK(capacity(4, 2, 1) == Rational(1));  // K = 1: free retrieval
  CHECK_THROWS_AS(capacity(3, 3, 2), InvalidParams);
}

TEST_CASE("expected download matches the closed form and the frozen values") {
  SchemeA a(derive(3, 2, 3, 256, SchemeTag::A));
  CHECK(expected_download(a) == Rational(38, 9));
  CHECK(predicted_download(a.params()) == Rational(38, 9));

  SchemeB bh(derive(5, 3, 4, 256, SchemeTag::B));
  CHECK(expected_download(bh) == Rational(1632, 125));
  CHECK(predicted_download(bh.params()) == Rational(1632, 125));

  SchemeB bl(derive(5, 2, 4, 256, SchemeTag::B));
  CHECK(expected_download(bl) == Rational(1218, 125));
  CHECK(predicted_download(bl.params()) == Rational(1218, 125));
}

TEST_CASE("rate and privacy reports pass on the reference points") {
  for (const LinearScheme* scheme :
       std::initializer_list<const LinearScheme*>{
           new SchemeA(derive(3, 2, 3, 256, SchemeTag::A)),
           new SchemeB(derive(5, 3, 4, 256, SchemeTag::B)),
           new SchemeB(derive(5, 2, 4, 256, SchemeTag::B))}) {
    VerificationReport rate = verify_rate(*scheme);
    CHECK(rate.pass);
    CHECK(rate.expected == rate.observed);
    CHECK(verify_privacy(*scheme).pass);
    CHECK(verify_decoding_sets(*scheme).pass);
    delete scheme;
  }
}

TEST_CASE("privacy report catches a leaky scheme") {
  // A scheme that leaks k_star through the query: shift everywhere instead
  // of only at the requested entry.
  struct Leaky : SchemeA {
    using SchemeA::SchemeA;
    std::vector<int> make_query(int k_star, const RandomKey& key, int n) const override {
      std::vector<int> q = key.f;
      for (int k = 0; k <= k_star; ++k)
        q[size_t(k)] = (q[size_t(k)] + n) % (params_.r + params_.s);
      return q;
    }
  };
  Leaky leaky(derive(3, 2, 3, 256, SchemeTag::A));
  CHECK_FALSE(verify_privacy(leaky).pass);
}

TEST_CASE("coefficient extraction agrees with the answer map") {
  SystemParams p = derive(3, 2, 3, 256, SchemeTag::A);
  SchemeA a(p);
  Rng rng(64);
  MessageSet msgs = MessageSet::random(p, rng);
  auto shards = encode_storage(a.row_code(), msgs);
  RandomKey key{{0, 1, 2}};
  for (int k_star = 0; k_star < 3; ++k_star) {
    for (int n = 0; n < 3; ++n) {
      Matrix coeffs = extract_coefficients(a, k_star, key, n);
      auto direct = a.answer(shards[size_t(n)], a.make_query(k_star, key, n));
      CHECK(coeffs.apply(msgs.symbols()) == direct);
    }
  }
}

TEST_CASE("j subset sweeps") {
  auto p0 = p0_subsets(3);
  CHECK(p0.size() == 8);  // all subsets of {0,1,2}
  auto p1 = p1_subsets(3, 1);
  CHECK(p1.size() == 4);  // subsets containing 1
  for (const auto& j : p1) {
    bool has = false;
    for (int v : j) has |= v == 1;
    CHECK(has);
  }
  auto big = p0_subsets(6);  // capped sweep: empty, singletons, pairs, full
  CHECK(big.size() == size_t(1 + 6 + 15 + 1));
}

TEST_CASE("p0 and p1 hold for every realization at (3,2,3)") {
  SchemeA a(derive(3, 2, 3, 256, SchemeTag::A));
  for (int k_star = 0; k_star < 3; ++k_star) {
    for (const auto& key : a.enumerate_keys()) {
      CHECK(verify_p0(a, k_star, key, p0_subsets(3)).pass);
      CHECK(verify_p1(a, k_star, key, p1_subsets(3, k_star)).pass);
    }
  }
}

TEST_CASE("p0 and p1 hold for sampled realizations of construction b") {
  for (auto [n, t] : {std::pair{5, 3}, {5, 2}}) {
    SchemeB b(derive(n, t, 4, 256, SchemeTag::B));
    Rng rng(101);
    for (int trial = 0; trial < 10; ++trial) {
      int k_star = int(rng.below(4));
      RandomKey key = b.sample_key(rng);
      CHECK(verify_p0(b, k_star, key, p0_subsets(4)).pass);
      CHECK(verify_p1(b, k_star, key, p1_subsets(4, k_star)).pass);
    }
  }
}

TEST_CASE("k2 analysis at (3,2)") {
  SchemeK2 k2(derive(3, 2, 2, 256, SchemeTag::K2));
  CHECK(expected_download_k2(k2) == Rational(10, 3));
  VerificationReport rate = verify_rate_k2(k2);
  CHECK(rate.pass);
  CHECK(rate.expected == "3/5");
  CHECK(verify_privacy_k2(k2).pass);
}

TEST_CASE("k2 analysis at (5,3)") {
  SchemeK2 k2(derive(5, 3, 2, 256, SchemeTag::K2));
  // E = T(N+T)/N = 24/5, rate = L/E = 3/(24/5) = 5/8 = capacity(5,3,2).
  CHECK(expected_download_k2(k2) == Rational(24, 5));
  CHECK(verify_rate_k2(k2).pass);
  CHECK(verify_privacy_k2(k2).pass);
}
