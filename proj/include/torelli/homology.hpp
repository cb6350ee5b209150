#pragma once

// First homology H = H_1(S_{g,1}; Z) of a genus-g surface with one boundary
// component, in the fixed basis a_1..a_g, b_1..b_g with î(a_i, b_i) = +1.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "torelli/error.hpp"

namespace torelli {

  // Name of basis vector `index` ("a1", ..., "ag", "b1", ..., "bg").
  std::string basis_name(int genus, std::size_t index);

  class HClass {
   public:
    HClass() = default;
    explicit HClass(std::vector<std::int64_t> coords);

    static HClass zero(int genus);
    // 1-based, as in the usual notation a_1, b_1.
    static HClass a(int genus, int i);
    static HClass b(int genus, int i);

    int genus() const noexcept {
      return static_cast<int>(_coords.size() / 2);
    }
    std::size_t dim() const noexcept {
      return _coords.size();
    }
    std::int64_t operator[](std::size_t i) const {
      return _coords[i];
    }
    std::span<const std::int64_t> coords() const noexcept {
      return _coords;
    }
    bool is_zero() const noexcept;

    HClass& operator+=(HClass const& other);
    HClass& operator-=(HClass const& other);
    HClass  operator-() const;
    HClass& operator*=(std::int64_t k);

    friend HClass operator+(HClass x, HClass const& y) {
      return x += y;
    }
    friend HClass operator-(HClass x, HClass const& y) {
      return x -= y;
    }
    friend HClass operator*(std::int64_t k, HClass x) {
      return x *= k;
    }
    bool operator==(HClass const&) const = default;

   private:
    std::vector<std::int64_t> _coords;
  };

  void require_same_surface(HClass const& u, HClass const& v);

  // Genus of the surface a computation lives on; vectors attached to it must
  // have length exactly 2g.
  class SurfaceConfig {
   public:
    explicit SurfaceConfig(int genus);

    int genus() const noexcept {
      return _genus;
    }
    HClass zero() const {
      return HClass::zero(_genus);
    }
    HClass a(int i) const {
      return HClass::a(_genus, i);
    }
    HClass b(int i) const {
      return HClass::b(_genus, i);
    }
    // Throws DimensionError if coords does not have length 2g.
    HClass make(std::vector<std::int64_t> coords) const;

   private:
    int _genus;
  };

  // Algebraic intersection number î(u, v).
  std::int64_t intersection_pairing(HClass const& u, HClass const& v);

  // "0", "2·a1", "1·a1 + -1·b2".
  std::string to_string(HClass const& v);

  // A vector of H_1(S; Z_2), stored as a bit set over the 2g basis classes.
  class Z2Vector {
   public:
    static constexpr int max_genus = 32;

    Z2Vector() = default;
    Z2Vector(int genus, std::uint64_t bits);

    int genus() const noexcept {
      return _genus;
    }
    std::uint64_t bits() const noexcept {
      return _bits;
    }
    bool bit(std::size_t i) const noexcept {
      return (_bits >> i) & 1U;
    }
    bool is_zero() const noexcept {
      return _bits == 0;
    }
    Z2Vector operator+(Z2Vector const& other) const;
    bool     operator==(Z2Vector const&) const = default;

   private:
    int           _genus = 0;
    std::uint64_t _bits  = 0;
  };

  Z2Vector mod2_reduce(HClass const& v);

  // Intersection pairing reduced mod 2.
  int mod2_pairing(Z2Vector const& u, Z2Vector const& v);

  // A 2g x 2g integer matrix M with M^T J M = J. Columns are the images of
  // the basis vectors, so M * v is the image of v.
  class SpMatrix {
   public:
    static SpMatrix identity(int genus);

    // Validates the symplectic condition; throws InvariantError otherwise.
    static SpMatrix
    from_rows(std::vector<std::vector<std::int64_t>> const& rows);

    int genus() const noexcept {
      return _genus;
    }
    std::size_t dim() const noexcept {
      return 2 * static_cast<std::size_t>(_genus);
    }
    std::int64_t operator()(std::size_t r, std::size_t c) const {
      return _entries[r * dim() + c];
    }

    HClass   apply(HClass const& v) const;
    SpMatrix operator*(SpMatrix const& other) const;
    bool     operator==(SpMatrix const&) const = default;

    bool is_identity() const;
    // Recomputes M^T J M == J; always true for values built by this library.
    bool is_symplectic() const;

    std::vector<std::vector<std::int64_t>> rows() const;

   private:
    friend SpMatrix transvection(HClass const& c, std::int64_t k);
    SpMatrix(int genus, std::vector<std::int64_t> entries)
        : _genus(genus), _entries(std::move(entries)) {}

    int                       _genus = 0;
    std::vector<std::int64_t> _entries;
  };

  // Matrix of v -> v + k * î(v, c) * c, the homology action of T_c^k.
  SpMatrix transvection(HClass const& c, std::int64_t k);

  struct TwistFactor {
    HClass       cls;
    std::int64_t exponent = 1;
  };

  // Product of transvections in word order; the genus is needed to give the
  // empty word a size.
  SpMatrix word_to_sp(int genus, std::span<const TwistFactor> word);

  bool is_torelli_shadow(int genus, std::span<const TwistFactor> word);

}  // namespace torelli
