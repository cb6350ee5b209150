#pragma once

// Degree-3 part of the exterior algebra on H, the target of the Johnson
// homomorphism.

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "torelli/homology.hpp"

namespace torelli {

  // Indices into the 2g basis, strictly increasing.
  using Monomial3 = std::array<std::size_t, 3>;

  class Wedge3 {
   public:
    explicit Wedge3(int genus);

    int genus() const noexcept {
      return _genus;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }
    std::map<Monomial3, std::int64_t> const& terms() const noexcept {
      return _terms;
    }
    // 0 for absent monomials.
    std::int64_t coefficient(Monomial3 const& m) const;

    // Adds k * e_i ^ e_j ^ e_k for arbitrary (possibly unsorted or repeated)
    // indices, with the sign of the sorting permutation.
    void add_term(std::size_t i, std::size_t j, std::size_t k, std::int64_t c);

    Wedge3& operator+=(Wedge3 const& other);
    Wedge3& operator-=(Wedge3 const& other);
    Wedge3  operator-() const;
    Wedge3& operator*=(std::int64_t k);

    friend Wedge3 operator+(Wedge3 x, Wedge3 const& y) {
      return x += y;
    }
    friend Wedge3 operator-(Wedge3 x, Wedge3 const& y) {
      return x -= y;
    }
    friend Wedge3 operator*(std::int64_t k, Wedge3 x) {
      return x *= k;
    }
    bool operator==(Wedge3 const&) const = default;

   private:
    void require_same_surface(Wedge3 const& other) const;

    int                               _genus;
    std::map<Monomial3, std::int64_t> _terms;
  };

  Wedge3 wedge3(HClass const& u, HClass const& v, HClass const& w);

  // a^b^c -> 2(î(b,c) a - î(a,c) b + î(a,b) c), extended linearly. The sign
  // on the middle term makes the map well defined on the exterior power.
  HClass contraction(Wedge3 const& x);

  // t_f = (C o tau)(f).
  inline HClass chillingworth_class(Wedge3 const& tau_image) {
    return contraction(tau_image);
  }

  // Change of winding number along c, c . t_f.
  inline std::int64_t e_f(HClass const& c, HClass const& t_f) {
    return intersection_pairing(c, t_f);
  }

  // True iff x ^ v = 0 in the fourth exterior power; used to recognise
  // elements of the form (sum of wedges) ^ v.
  bool wedge_with_is_zero(Wedge3 const& x, HClass const& v);

  // "-1·a2^a3^a4", terms in monomial order joined by " + "; "0" if empty.
  std::string to_string(Wedge3 const& x);

}  // namespace torelli
