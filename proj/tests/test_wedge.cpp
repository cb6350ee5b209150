#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace torelli;
using support::cls;

namespace {
  // Coefficient of e_i ^ e_j ^ e_k in u ^ v ^ w: the 3x3 minor on rows
  // i, j, k of the matrix with columns u, v, w.
  std::int64_t minor3(HClass const& u, HClass const& v, HClass const& w, Monomial3 const& m) {
    auto e = [&](std::size_t r, HClass const& c) { return c[m[r]]; };
    return e(0, u) * (e(1, v) * e(2, w) - e(2, v) * e(1, w))
           - e(0, v) * (e(1, u) * e(2, w) - e(2, u) * e(1, w))
           + e(0, w) * (e(1, u) * e(2, v) - e(2, u) * e(1, v));
  }

  void check_against_minors(HClass const& u, HClass const& v, HClass const& w) {
    auto const x = wedge3(u, v, w);
    auto const n = u.dim();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          CHECK(x.coefficient({i, j, k}) == minor3(u, v, w, {i, j, k}));
        }
      }
    }
  }
}  // namespace

TEST_CASE("wedge of basis classes") {
  int const  g = 4;
  auto const x = wedge3(HClass::a(g, 2), HClass::a(g, 3), HClass::a(g, 4));
  CHECK(x.terms().size() == 1);
  CHECK(x.coefficient({1, 2, 3}) == 1);
  CHECK(to_string(x) == "1·a2^a3^a4");
  CHECK(to_string(wedge3(HClass::a(g, 3), HClass::a(g, 2), HClass::a(g, 4))) == "-1·a2^a3^a4");
  auto const u = cls(g, {{"a1", 1}, {"b3", 2}});
  CHECK(wedge3(u, u, HClass::b(g, 1)).is_zero());
  CHECK(to_string(Wedge3(g)) == "0");
}

TEST_CASE("wedge coefficients are the 3x3 minors") {
  support::Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    int const g = static_cast<int>(support::uniform(rng, 2, 4));
    check_against_minors(support::random_class(rng, g), support::random_class(rng, g),
                         support::random_class(rng, g));
  }
}

TEST_CASE("wedge is alternating") {
  support::Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    int const  g = static_cast<int>(support::uniform(rng, 2, 5));
    auto const u = support::random_class(rng, g);
    auto const v = support::random_class(rng, g);
    auto const w = support::random_class(rng, g);
    auto const x = wedge3(u, v, w);
    CHECK(wedge3(v, u, w) == -x);
    CHECK(wedge3(u, w, v) == -x);
    CHECK(wedge3(w, v, u) == -x);
    CHECK(wedge3(v, w, u) == x);
    CHECK(wedge3(u + v, v, w) == x);
  }
}

TEST_CASE("contraction examples") {
  int const g = 4;
  CHECK(contraction(wedge3(HClass::a(g, 2), HClass::a(g, 3), HClass::a(g, 4))).is_zero());
  // a1 ^ b1 ^ a2: only î(a1, b1) = 1 survives, leaving 2 a2.
  CHECK(contraction(wedge3(HClass::a(g, 1), HClass::b(g, 1), HClass::a(g, 2)))
        == 2 * HClass::a(g, 2));
  CHECK(contraction(Wedge3(g)).is_zero());
  // Reordering the factors only changes the sign.
  CHECK(contraction(wedge3(HClass::b(g, 1), HClass::a(g, 1), HClass::a(g, 2)))
        == -2 * HClass::a(g, 2));
  CHECK(contraction(wedge3(HClass::a(g, 2), HClass::a(g, 1), HClass::b(g, 1)))
        == 2 * HClass::a(g, 2));
}

TEST_CASE("contraction agrees with the trilinear formula") {
  support::Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int const  g = static_cast<int>(support::uniform(rng, 2, 4));
    auto const u = support::random_class(rng, g);
    auto const v = support::random_class(rng, g);
    auto const w = support::random_class(rng, g);
    auto const p = [](HClass const& x, HClass const& y) { return support::reference_pairing(x, y); };
    HClass const expected = 2 * (p(v, w) * u - p(u, w) * v + p(u, v) * w);
    auto const   t        = contraction(wedge3(u, v, w));
    CHECK(t == expected);
    for (auto c : t.coords()) {
      CHECK(c % 2 == 0);
    }
  }
}

TEST_CASE("contraction is additive and homogeneous") {
  support::Rng rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    int const  g = 3;
    auto const x = wedge3(support::random_class(rng, g), support::random_class(rng, g),
                          support::random_class(rng, g));
    auto const y = wedge3(support::random_class(rng, g), support::random_class(rng, g),
                          support::random_class(rng, g));
    auto const k = support::uniform(rng, -5, 5);
    CHECK(contraction(x + y) == contraction(x) + contraction(y));
    CHECK(contraction(k * x) == k * contraction(x));
  }
}

TEST_CASE("isotropic triples contract to zero") {
  support::Rng rng(25);
  int          found = 0;
  for (int trial = 0; found < 100 && trial < 200000; ++trial) {
    int const  g = 3;
    auto const u = support::random_class(rng, g, 1);
    auto const v = support::random_class(rng, g, 1);
    auto const w = support::random_class(rng, g, 1);
    if (intersection_pairing(u, v) != 0 || intersection_pairing(u, w) != 0
        || intersection_pairing(v, w) != 0) {
      continue;
    }
    ++found;
    CHECK(contraction(wedge3(u, v, w)).is_zero());
  }
  CHECK(found == 100);
}

TEST_CASE("chillingworth class and winding change") {
  int const g = 2;
  BPData const bp{HClass::a(g, 2), {{HClass::a(g, 1), HClass::b(g, 1)}}};
  CHECK(chillingworth_class(tau_bp(bp)) == 2 * HClass::a(g, 2));
  CHECK(e_f(HClass::a(g, 2), 2 * HClass::b(g, 2)) == 2);
  CHECK(e_f(HClass::a(g, 1), HClass::zero(g)) == 0);
  CHECK(e_f(HClass::b(g, 1), 2 * HClass::a(g, 1)) == -2);
}

TEST_CASE("wedge with a class in the fourth power") {
  int const  g = 4;
  auto const a = [g](int i) { return HClass::a(g, i); };
  auto const b = [g](int i) { return HClass::b(g, i); };
  auto const x = wedge3(a(1), b(1), a(2)) + wedge3(a(3), b(3), a(2));
  CHECK(wedge_with_is_zero(x, a(2)));
  CHECK(wedge_with_is_zero(x, 3 * a(2)));
  CHECK_FALSE(wedge_with_is_zero(x, a(4)));
  CHECK(wedge_with_is_zero(Wedge3(g), a(1)));
  // y = a2^a3^(a1 + a4).
  auto const y = wedge3(a(1), a(2), a(3)) + wedge3(a(2), a(3), a(4));
  CHECK(wedge_with_is_zero(y, a(1) + a(4)));
  CHECK_FALSE(wedge_with_is_zero(y, a(1) - a(4)));
}

TEST_CASE("wedge arithmetic errors") {
  CHECK_THROWS_AS(Wedge3(2) + Wedge3(3), DimensionError);
  CHECK_THROWS_AS(wedge3(HClass::a(2, 1), HClass::a(3, 1), HClass::a(2, 2)), DimensionError);
  Wedge3 x(1);
  CHECK_THROWS_AS(x.add_term(0, 1, 2, 1), DimensionError);
  x.add_term(0, 1, 1, 5);
  CHECK(x.is_zero());
}
