#pragma once

// The square-free algebra B over Z_2 generated by bars of nonzero mod-2
// classes, written in the basis variables x_i = bar(e_i). Relations:
// x^2 = x, bar(a + b) = bar(a) + bar(b) + a.b.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "torelli/homology.hpp"

namespace torelli {

  // Bit i set means variable i (basis order a1..ag, b1..bg) occurs.
  using BoolMonomial = std::uint64_t;

  // Graded lexicographic: fewer variables first, then the monomial holding
  // the lowest variable where they differ.
  struct GradedLex {
    bool operator()(BoolMonomial x, BoolMonomial y) const noexcept;
  };

  class BoolPoly {
   public:
    explicit BoolPoly(int genus);

    static BoolPoly one(int genus);
    // The generator for basis index i (0-based, basis order).
    static BoolPoly variable(int genus, std::size_t i);

    int genus() const noexcept {
      return _genus;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }
    std::set<BoolMonomial, GradedLex> const& terms() const noexcept {
      return _terms;
    }
    bool contains(BoolMonomial m) const {
      return _terms.contains(m);
    }
    // Flips the coefficient of m.
    void toggle(BoolMonomial m);

    BoolPoly& operator+=(BoolPoly const& other);
    BoolPoly& operator*=(BoolPoly const& other);

    friend BoolPoly operator+(BoolPoly x, BoolPoly const& y) {
      return x += y;
    }
    friend BoolPoly operator*(BoolPoly x, BoolPoly const& y) {
      return x *= y;
    }
    bool operator==(BoolPoly const& other) const {
      return _genus == other._genus && _terms == other._terms;
    }

   private:
    void require_same_surface(BoolPoly const& other) const;

    int                               _genus;
    std::set<BoolMonomial, GradedLex> _terms;
  };

  // bar(v) for a nonzero mod-2 class; throws DomainError on 0.
  BoolPoly bar(Z2Vector const& v);
  inline BoolPoly bar(HClass const& v) {
    return bar(mod2_reduce(v));
  }

  inline BoolPoly multiply(BoolPoly const& p, BoolPoly const& q) {
    return p * q;
  }

  // Largest monomial size; 0 for the zero polynomial.
  int  degree(BoolPoly const& p);
  bool is_in_B3(BoolPoly const& p);

  // An element of Sp(2g, Z_2), stored by the images of the basis vectors.
  class Sp2Matrix {
   public:
    static Sp2Matrix identity(int genus);
    // Throws InvariantError unless the images preserve the mod-2 pairing.
    static Sp2Matrix from_columns(std::vector<Z2Vector> columns);
    static Sp2Matrix reduce(SpMatrix const& m);

    int genus() const noexcept {
      return _genus;
    }
    Z2Vector const& column(std::size_t i) const {
      return _columns.at(i);
    }
    Z2Vector  apply(Z2Vector const& v) const;
    // (M * N) v = M (N v).
    Sp2Matrix operator*(Sp2Matrix const& other) const;
    bool      operator==(Sp2Matrix const&) const = default;

   private:
    Sp2Matrix(int genus, std::vector<Z2Vector> columns)
        : _genus(genus), _columns(std::move(columns)) {}

    int                   _genus = 0;
    std::vector<Z2Vector> _columns;
  };

  // v -> v + (v.d) d over Z_2.
  Sp2Matrix mod2_transvection(Z2Vector const& d);

  // Substitutes x_i -> bar(M e_i) and extends as an algebra map.
  BoolPoly sp2_action(Sp2Matrix const& m, BoolPoly const& p);

  // Variables of a monomial as basis names: "a2 a3 a4", or "1".
  std::string monomial_string(int genus, BoolMonomial m);
  // Terms in graded-lex order joined by " + "; "0" if empty.
  std::string to_string(BoolPoly const& p);

}  // namespace torelli
