#include "doctest.h"

#include "pir/field.hpp"
#include "pir/matrix.hpp"
#include "pir/rng.hpp"

using namespace pir;

TEST_CASE("gf256 uses the expected primitive polynomial") {
  const Field& f = Field::gf256();
  CHECK(f.order() == 256);
  CHECK(f.kind() == Field::Kind::BinaryExtension);
  CHECK(f.polynomial() == 0x11d);
}

TEST_CASE("gf256 basic arithmetic") {
  const Field& f = Field::gf256();
  CHECK(f.add(0x53, 0xca) == 0x99);
  CHECK(f.add(7, 7) == 0);
  CHECK(f.mul(1, 0xab) == 0xab);
  CHECK(f.mul(0, 0xab) == 0);
  // 2 is x; x * x^7 = x^8 = x^4+x^3+x^2+1 = 0x1d under 0x11d.
  CHECK(f.mul(2, 0x80) == 0x1d);
}

TEST_CASE("every nonzero element of gf256 has a multiplicative inverse") {
  const Field& f = Field::gf256();
  for (uint32_t a = 1; a < 256; ++a) {
    Symbol inv = f.inv(Symbol(a));
    CHECK(f.mul(Symbol(a), inv) == 1);
  }
  CHECK_THROWS_AS(f.inv(0), DivideByZero);
}

TEST_CASE("prime field gf(7)") {
  const Field& f = Field::of(7);
  CHECK(f.kind() == Field::Kind::Prime);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.neg(3) == 4);
  for (uint32_t a = 1; a < 7; ++a) CHECK(f.mul(Symbol(a), f.inv(Symbol(a))) == 1);
}

TEST_CASE("unsupported orders are rejected") {
  CHECK_THROWS_AS(Field(6), InvalidParams);
  CHECK_THROWS_AS(Field(1), InvalidParams);
  CHECK_THROWS_AS(Field(0), InvalidParams);
}

TEST_CASE("out-of-range symbols are rejected") {
  const Field& f = Field::of(7);
  CHECK_THROWS_AS(f.add(7, 0), FieldMismatch);
  CHECK_THROWS_AS(f.mul(1, 9), FieldMismatch);
}

TEST_CASE("field axioms on random triples") {
  Rng rng(11);
  for (const Field* f : {&Field::gf256(), &Field::of(16), &Field::of(65536), &Field::of(251)}) {
    for (int trial = 0; trial < 200; ++trial) {
      Symbol a = Symbol(rng.below(f->order()));
      Symbol b = Symbol(rng.below(f->order()));
      Symbol c = Symbol(rng.below(f->order()));
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
      CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
      CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->sub(f->add(a, b), b) == a);
      if (b != 0) CHECK(f->mul(f->div(a, b), b) == a);
    }
  }
}

TEST_CASE("pow matches repeated multiplication") {
  const Field& f = Field::gf256();
  Symbol acc = 1;
  for (uint64_t e = 0; e < 20; ++e) {
    CHECK(f.pow(3, e) == acc);
    acc = f.mul(acc, 3);
  }
  CHECK(f.pow(0, 0) == 1);
  CHECK(f.pow(0, 5) == 0);
}

TEST_CASE("matrix rank is invariant under row permutation and scaling") {
  const Field& f = Field::gf256();
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m(4, 6, f);
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 6; ++j) m.at(i, j) = Symbol(rng.below(256));
    size_t base = m.rank();

    Matrix swapped = m;
    for (size_t j = 0; j < 6; ++j) std::swap(swapped.at(0, j), swapped.at(3, j));
    CHECK(swapped.rank() == base);

    Matrix scaled = m;
    Symbol c = Symbol(1 + rng.below(255));
    for (size_t j = 0; j < 6; ++j) scaled.at(1, j) = f.mul(scaled.at(1, j), c);
    CHECK(scaled.rank() == base);
  }
}

TEST_CASE("matrix solve round-trips against apply") {
  const Field& f = Field::of(251);
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m(3, 3, f);
    do {
      for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) m.at(i, j) = Symbol(rng.below(251));
    } while (!m.invertible());
    std::vector<Symbol> x = {Symbol(rng.below(251)), Symbol(rng.below(251)),
                             Symbol(rng.below(251))};
    CHECK(m.solve(m.apply(x)) == x);
  }
  Matrix zero(2, 2, f);
  CHECK_THROWS_AS(zero.solve({1, 2}), SingularMatrix);
}

TEST_CASE("identity and vstack behave") {
  const Field& f = Field::gf256();
  Matrix id = Matrix::identity(3, f);
  CHECK(id.rank() == 3);
  Matrix stacked = id.vstack(id);
  CHECK(stacked.rows() == 6);
  CHECK(stacked.rank() == 3);
  CHECK(dot(f, {1, 2, 3}, {1, 0, 0}) == 1);
}
