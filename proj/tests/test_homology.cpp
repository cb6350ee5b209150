#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace torelli;
using support::cls;

TEST_CASE("basis classes pair as a symplectic basis") {
  int const g = 3;
  for (int i = 1; i <= g; ++i) {
    for (int j = 1; j <= g; ++j) {
      CHECK(intersection_pairing(HClass::a(g, i), HClass::b(g, j)) == (i == j ? 1 : 0));
      CHECK(intersection_pairing(HClass::b(g, j), HClass::a(g, i)) == (i == j ? -1 : 0));
      CHECK(intersection_pairing(HClass::a(g, i), HClass::a(g, j)) == 0);
      CHECK(intersection_pairing(HClass::b(g, i), HClass::b(g, j)) == 0);
    }
  }
}

TEST_CASE("pairing examples") {
  int const g = 2;
  CHECK(intersection_pairing(HClass::a(g, 1), HClass::b(g, 1)) == 1);
  auto const u = cls(g, {{"a1", 1}, {"b2", 1}});
  auto const v = cls(g, {{"b1", 1}, {"a2", 1}});
  CHECK(intersection_pairing(u, v) == support::reference_pairing(u, v));
  CHECK(intersection_pairing(u, v) == 0);
  CHECK(intersection_pairing(u, u) == 0);
}

TEST_CASE("pairing is bilinear and antisymmetric") {
  support::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int const  g = static_cast<int>(support::uniform(rng, 1, 5));
    auto const u = support::random_class(rng, g);
    auto const v = support::random_class(rng, g);
    auto const w = support::random_class(rng, g);
    auto const k = support::uniform(rng, -4, 4);
    CHECK(intersection_pairing(u, v) == -intersection_pairing(v, u));
    CHECK(intersection_pairing(u, v) == support::reference_pairing(u, v));
    CHECK(intersection_pairing(u + k * w, v)
          == intersection_pairing(u, v) + k * intersection_pairing(w, v));
    CHECK(intersection_pairing(u, v + w) == intersection_pairing(u, v) + intersection_pairing(u, w));
  }
}

TEST_CASE("surface mismatches are rejected") {
  CHECK_THROWS_AS(intersection_pairing(HClass::a(2, 1), HClass::a(3, 1)), DimensionError);
  CHECK_THROWS_AS(HClass::a(2, 1) + HClass::a(3, 1), DimensionError);
  CHECK_THROWS_AS(HClass::a(2, 3), DimensionError);
  CHECK_THROWS_AS(HClass(std::vector<std::int64_t>{1, 2, 3}), DimensionError);
  CHECK_THROWS_AS(SurfaceConfig(0), DomainError);
  SurfaceConfig const s(2);
  CHECK(s.make({1, 0, 0, 1}) == HClass::a(2, 1) + HClass::b(2, 2));
  CHECK_THROWS_AS(s.make({1, 0, 0}), DimensionError);
  std::vector<TwistFactor> const mixed{{HClass::a(3, 1), 1}};
  CHECK_THROWS_AS(word_to_sp(2, mixed), DimensionError);
}

TEST_CASE("overflow is an error, not wraparound") {
  HClass const big(std::vector<std::int64_t>{INT64_MAX, 0});
  CHECK_THROWS_AS(big + big, OverflowError);
  CHECK_THROWS_AS(3 * big, OverflowError);
  CHECK_THROWS_AS(-HClass(std::vector<std::int64_t>{INT64_MIN, 0}), OverflowError);
  HClass const a(std::vector<std::int64_t>{INT64_MAX / 2 + 1, 0});
  HClass const b(std::vector<std::int64_t>{0, 4});
  CHECK_THROWS_AS(intersection_pairing(a, b), OverflowError);
}

TEST_CASE("rendering of classes") {
  CHECK(to_string(HClass::zero(2)) == "0");
  CHECK(to_string(2 * HClass::a(2, 1)) == "2·a1");
  CHECK(to_string(HClass::a(2, 1) - HClass::b(2, 2)) == "1·a1 + -1·b2");
  CHECK(basis_name(3, 0) == "a1");
  CHECK(basis_name(3, 5) == "b3");
  CHECK_THROWS_AS(basis_name(3, 6), DimensionError);
}

TEST_CASE("transvection examples") {
  int const  g  = 2;
  auto const a1 = HClass::a(g, 1);
  auto const b1 = HClass::b(g, 1);
  // T_{b1}(a1) = a1 + î(a1, b1) b1.
  CHECK(transvection(b1, 1).apply(a1) == a1 + b1);
  auto const c = cls(g, {{"a1", 2}, {"b2", -1}});
  CHECK(transvection(c, 0).is_identity());
  CHECK(transvection(c, 1).apply(c) == c);
}

TEST_CASE("transvection matches the twist formula on random vectors") {
  support::Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    int const  g = static_cast<int>(support::uniform(rng, 1, 4));
    auto const c = support::random_class(rng, g);
    auto const v = support::random_class(rng, g);
    auto const k = support::uniform(rng, -3, 3);
    auto const t = transvection(c, k);
    CHECK(t.apply(v) == v + (k * support::reference_pairing(v, c)) * c);
    CHECK(t.is_symplectic());
    CHECK((t * transvection(c, -k)).is_identity());
  }
}

TEST_CASE("transvections of orthogonal classes commute") {
  support::Rng rng(13);
  int          found = 0;
  for (int trial = 0; found < 100 && trial < 100000; ++trial) {
    int const  g = static_cast<int>(support::uniform(rng, 1, 3));
    auto const c = support::random_class(rng, g, 2);
    auto const d = support::random_class(rng, g, 2);
    if (intersection_pairing(c, d) != 0) {
      continue;
    }
    ++found;
    auto const tc = transvection(c, 1);
    auto const td = transvection(d, 1);
    CHECK(tc * td == td * tc);
    std::vector<TwistFactor> const comm{{c, 1}, {d, 1}, {c, -1}, {d, -1}};
    CHECK(is_torelli_shadow(g, comm));
  }
  CHECK(found == 100);
}

TEST_CASE("word_to_sp") {
  int const g = 2;
  CHECK(word_to_sp(g, {}).is_identity());
  auto const c = cls(g, {{"a1", 1}, {"b2", 1}});
  std::vector<TwistFactor> const inv{{c, 1}, {c, -1}};
  CHECK(word_to_sp(g, inv).is_identity());
  std::vector<TwistFactor> const bp{{c, 1}, {c, -1}};
  CHECK(is_torelli_shadow(g, bp));
  std::vector<TwistFactor> const single{{HClass::b(g, 1), 1}};
  CHECK_FALSE(is_torelli_shadow(g, single));

  support::Rng rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<TwistFactor> u, v;
    for (int k = 0; k < 3; ++k) {
      u.push_back({support::random_class(rng, g, 1), support::uniform(rng, -2, 2)});
      v.push_back({support::random_class(rng, g, 1), support::uniform(rng, -2, 2)});
    }
    auto uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    auto const m = word_to_sp(g, uv);
    CHECK(m == word_to_sp(g, u) * word_to_sp(g, v));
    CHECK(m.is_symplectic());
  }
}

TEST_CASE("lantern relation holds on homology") {
  auto const doc = support::fixture("lantern_twists");
  auto const [g, word] = io::twists_from_json(doc);
  CHECK(is_torelli_shadow(g, word));
  // Same statement with the two sides computed separately.
  std::vector<TwistFactor> lhs(word.begin(), word.begin() + 4);
  std::vector<TwistFactor> rhs;
  for (auto it = word.rbegin(); it != word.rbegin() + 3; ++it) {
    rhs.push_back({it->cls, 1});
  }
  CHECK(word_to_sp(g, lhs) == word_to_sp(g, rhs));
}

TEST_CASE("SpMatrix::from_rows validates the symplectic condition") {
  auto const m = SpMatrix::from_rows({{1, 1}, {0, 1}});
  CHECK(m.genus() == 1);
  CHECK_THROWS_AS(SpMatrix::from_rows({{2, 0}, {0, 1}}), InvariantError);
  CHECK_THROWS_AS(SpMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), DimensionError);
  CHECK_THROWS_AS(SpMatrix::from_rows({{1, 0}, {0}}), DimensionError);
  support::Rng rng(15);
  auto const   r = support::random_sp(rng, 3);
  CHECK(SpMatrix::from_rows(r.rows()) == r);
}

TEST_CASE("mod 2 reduction") {
  int const g = 4;
  CHECK(mod2_reduce(2 * HClass::a(g, 1)).is_zero());
  auto const v = mod2_reduce(cls(g, {{"a2", -1}, {"a4", 1}}));
  CHECK(v == mod2_reduce(cls(g, {{"a2", 1}, {"a4", 1}})));
  CHECK(v.bit(1));
  CHECK(v.bit(3));
  auto const w = mod2_reduce(HClass::a(g, 1) + HClass::b(g, 1));
  CHECK(w.bits() == ((1U << 0) | (1U << 4)));
  CHECK(mod2_pairing(mod2_reduce(HClass::a(g, 1)), mod2_reduce(HClass::b(g, 1))) == 1);
  CHECK_THROWS_AS(Z2Vector(1, 0b100), DimensionError);
  CHECK_THROWS_AS(Z2Vector(33, 0), DomainError);
}
