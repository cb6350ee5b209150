#pragma once

// Shared generators and reference implementations for the tests. The
// reference code deliberately avoids the library's own algorithms.

#include <algorithm>
#include <bit>
#include <set>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "torelli/calculus.hpp"
#include "torelli/io.hpp"

#ifndef TORELLI_TEST_FIXTURES
#define TORELLI_TEST_FIXTURES "fixtures"
#endif

namespace support {

  using namespace torelli;
  using Rng = std::mt19937_64;

  inline io::json fixture(std::string const& name) {
    return io::load_json_file(std::string(TORELLI_TEST_FIXTURES) + "/" + name + ".json");
  }

  inline TorelliFactorization factorization(std::string const& name) {
    return io::factorization_from_json(fixture(name));
  }

  inline SIPData sip(std::string const& name) {
    return std::get<SignedSIP>(factorization(name).items.at(0)).sip;
  }

  // Class from a list of (basis index, coefficient).
  inline HClass cls(int g, std::vector<std::pair<std::string, std::int64_t>> const& terms) {
    HClass v = HClass::zero(g);
    for (auto const& [name, c] : terms) {
      int const i = std::stoi(name.substr(1));
      v += c * (name[0] == 'a' ? HClass::a(g, i) : HClass::b(g, i));
    }
    return v;
  }

  inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  }

  inline HClass random_class(Rng& rng, int g, std::int64_t bound = 3) {
    std::vector<std::int64_t> c(2 * static_cast<std::size_t>(g));
    for (auto& x : c) {
      x = uniform(rng, -bound, bound);
    }
    return HClass(std::move(c));
  }

  inline HClass random_nonzero_class(Rng& rng, int g, std::int64_t bound = 2) {
    for (;;) {
      auto v = random_class(rng, g, bound);
      if (!v.is_zero()) {
        return v;
      }
    }
  }

  // Product of random transvections with small classes.
  inline SpMatrix random_sp(Rng& rng, int g, int factors = 6) {
    SpMatrix m = SpMatrix::identity(g);
    for (int k = 0; k < factors; ++k) {
      m = m * transvection(random_nonzero_class(rng, g, 1), uniform(rng, -1, 1) == 0 ? 1 : -1);
    }
    return m;
  }

  // î(u, v) = u^T J v with J = [[0, I], [-I, 0]].
  inline std::int64_t reference_pairing(HClass const& u, HClass const& v) {
    auto const   n = u.dim();
    auto const   g = n / 2;
    std::int64_t s = 0;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        std::int64_t j = 0;
        if (r < g && c == r + g) {
          j = 1;
        } else if (r >= g && c == r - g) {
          j = -1;
        }
        s += u[r] * j * v[c];
      }
    }
    return s;
  }

  inline SymplecticPair transform(SpMatrix const& m, SymplecticPair const& p) {
    return {m.apply(p.first), m.apply(p.second)};
  }

  inline BPData transform(SpMatrix const& m, BPData const& b) {
    BPData r{m.apply(b.pair_class), {}};
    for (auto const& p : b.basis) {
      r.basis.push_back(transform(m, p));
    }
    return r;
  }

  inline SIPData transform(SpMatrix const& m, SIPData const& s) {
    SIPData r;
    for (std::size_t i = 0; i < 4; ++i) {
      r.boundary[i] = m.apply(s.boundary[i]);
    }
    auto list = [&m](std::vector<SignedBP> const& l) {
      std::vector<SignedBP> out;
      for (auto const& [bp, sign] : l) {
        out.push_back({transform(m, bp), sign});
      }
      return out;
    };
    if (s.five_bp) {
      r.five_bp = list(*s.five_bp);
    }
    if (s.two_bp) {
      r.two_bp = list(*s.two_bp);
    }
    return r;
  }

  // Copies a class into a surface of larger genus, a_i -> a_i, b_i -> b_i.
  inline HClass embed(HClass const& v, int g) {
    HClass     r  = HClass::zero(g);
    auto const g0 = static_cast<std::size_t>(v.genus());
    for (std::size_t i = 0; i < g0; ++i) {
      r += v[i] * HClass::a(g, static_cast<int>(i + 1));
      r += v[g0 + i] * HClass::b(g, static_cast<int>(i + 1));
    }
    return r;
  }

  // A random change of basis of a symplectic basis: random symplectic
  // transvections inside the span of the basis pairs, over Z.
  inline std::vector<SymplecticPair> rebase(Rng& rng, std::vector<SymplecticPair> const& basis,
                                            int steps = 5) {
    if (basis.empty()) {
      return basis;
    }
    int const g = basis.front().first.genus();
    auto      b = basis;
    for (int s = 0; s < steps; ++s) {
      // A class in the span; its transvection preserves span and pairings.
      HClass c = HClass::zero(g);
      for (auto const& [x, y] : basis) {
        c += uniform(rng, -1, 1) * x;
        c += uniform(rng, -1, 1) * y;
      }
      if (c.is_zero()) {
        continue;
      }
      auto const t = transvection(c, uniform(rng, 0, 1) ? 1 : -1);
      for (auto& p : b) {
        p = transform(t, p);
      }
    }
    return b;
  }

  ////////////////////////////////////////////////////////////////////////
  // Boolean functions: a square-free polynomial over Z_2 in n variables is
  // the same thing as a function {0,1}^n -> Z_2.
  ////////////////////////////////////////////////////////////////////////

  using Truth = std::vector<bool>;

  inline Truth truth_table(BoolPoly const& p) {
    auto const n = 2 * static_cast<unsigned>(p.genus());
    Truth      t(std::size_t{1} << n, false);
    for (std::uint64_t x = 0; x < t.size(); ++x) {
      bool v = false;
      for (auto m : p.terms()) {
        v ^= (m & ~x) == 0;
      }
      t[x] = v;
    }
    return t;
  }

  // Linear function x -> sum_{i in v} x_i + q(v), q(v) = sum_k v_{a_k} v_{b_k}.
  inline Truth bar_table(int g, std::uint64_t v) {
    auto const n = 2 * static_cast<unsigned>(g);
    bool       q = false;
    for (int k = 0; k < g; ++k) {
      q ^= ((v >> k) & 1U) && ((v >> (k + g)) & 1U);
    }
    Truth t(std::size_t{1} << n);
    for (std::uint64_t x = 0; x < t.size(); ++x) {
      t[x] = (std::popcount(x & v) % 2 == 1) != q;
    }
    return t;
  }

  inline Truth operator&(Truth a, Truth const& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = a[i] && b[i];
    }
    return a;
  }

  inline Truth operator^(Truth a, Truth const& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = a[i] != b[i];
    }
    return a;
  }

  inline BoolPoly random_poly(Rng& rng, int g, int terms = 4, int max_degree = 3) {
    BoolPoly   p(g);
    auto const n = 2 * g;
    for (int t = 0; t < terms; ++t) {
      BoolMonomial m   = 0;
      auto const   deg = uniform(rng, 0, max_degree);
      for (int k = 0; k < deg; ++k) {
        m |= BoolMonomial{1} << uniform(rng, 0, n - 1);
      }
      p.toggle(m);
    }
    return p;
  }

  inline Sp2Matrix random_sp2(Rng& rng, int g, int factors = 6) {
    Sp2Matrix m = Sp2Matrix::identity(g);
    for (int k = 0; k < factors; ++k) {
      auto const bits = static_cast<std::uint64_t>(uniform(rng, 1, (std::int64_t{1} << (2 * g)) - 1));
      m = mod2_transvection(Z2Vector(g, bits)) * m;
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rank over Z_2 of polynomials, by elimination on bit rows keyed by
  // monomial value (independent of the library's span routine).
  ////////////////////////////////////////////////////////////////////////

  inline std::size_t rank_z2(std::vector<BoolPoly> const& polys) {
    std::vector<std::set<BoolMonomial>> rows;
    for (auto const& p : polys) {
      rows.emplace_back(p.terms().begin(), p.terms().end());
    }
    std::size_t rank = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].empty()) {
        continue;
      }
      auto const pivot = *rows[i].begin();
      ++rank;
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        if (rows[j].contains(pivot)) {
          for (auto m : rows[i]) {
            if (!rows[j].erase(m)) {
              rows[j].insert(m);
            }
          }
        }
      }
    }
    return rank;
  }

  // Generators of <1, a_i, b_i, all degree-2 monomials other than a_i b_i,
  // a_i b_i + a_j b_j>.
  inline std::vector<BoolPoly> ssip_target_generators(int g) {
    std::vector<BoolPoly> gens{BoolPoly::one(g)};
    auto const            n = 2 * static_cast<std::size_t>(g);
    for (std::size_t i = 0; i < n; ++i) {
      gens.push_back(BoolPoly::variable(g, i));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (j != i + static_cast<std::size_t>(g)) {
          gens.push_back(BoolPoly::variable(g, i) * BoolPoly::variable(g, j));
        }
      }
    }
    auto symp = [g](int k) {
      return BoolPoly::variable(g, static_cast<std::size_t>(k))
             * BoolPoly::variable(g, static_cast<std::size_t>(k + g));
    };
    for (int k = 1; k < g; ++k) {
      gens.push_back(symp(0) + symp(k));
    }
    return gens;
  }

  ////////////////////////////////////////////////////////////////////////
  // Lantern SIP parameters (see make_lantern_sip).
  ////////////////////////////////////////////////////////////////////////

  inline LanternSipParams standard_params(int g) {
    auto a = [g](int i) { return HClass::a(g, i); };
    auto b = [g](int i) { return HClass::b(g, i); };
    return {a(2), a(3) - a(2), a(4) - a(3), b(2), b(3), {{a(1), b(1)}}};
  }

  // Boundary w = 0.
  inline LanternSipParams null_params(int g) {
    auto a = [g](int i) { return HClass::a(g, i); };
    auto b = [g](int i) { return HClass::b(g, i); };
    return {a(2), a(3) - a(2), -a(3), b(2), b(3), {{a(1), b(1)}}};
  }

  // Boundary w = 2 a1: nonzero, but zero mod 2.
  inline LanternSipParams mod2_params(int g) {
    auto a = [g](int i) { return HClass::a(g, i); };
    auto b = [g](int i) { return HClass::b(g, i); };
    return {a(2), a(3) - a(2), -a(3) - 2 * a(1), b(2), b(3), {{a(4), b(4)}}};
  }

  inline LanternSipParams transform(SpMatrix const& m, LanternSipParams const& p) {
    LanternSipParams r{m.apply(p.x), m.apply(p.y), m.apply(p.z), m.apply(p.p), m.apply(p.q), {}};
    for (auto const& pair : p.outside) {
      r.outside.push_back(transform(m, pair));
    }
    return r;
  }

  // A valid SIP on a surface of genus 4 or 5, moved by a random symplectic
  // matrix.
  inline SIPData random_sip(Rng& rng) {
    int const g       = static_cast<int>(uniform(rng, 4, 5));
    auto      params  = std::array{standard_params(g), null_params(g), mod2_params(g)}
        [static_cast<std::size_t>(uniform(rng, 0, 2))];
    if (g == 5 && uniform(rng, 0, 1) == 1) {
      params.outside.push_back({HClass::a(g, 5), HClass::b(g, 5)});
    }
    return make_lantern_sip(transform(random_sp(rng, g, 4), params));
  }

}  // namespace support
