#include "torelli/homology.hpp"

#include <sstream>
#include <utility>

namespace torelli {

  std::string basis_name(int genus, std::size_t index) {
    auto const g = static_cast<std::size_t>(genus);
    if (index >= 2 * g) {
      throw DimensionError("basis index " + std::to_string(index)
                           + " out of range for genus "
                           + std::to_string(genus));
    }
    return index < g ? "a" + std::to_string(index + 1)
                     : "b" + std::to_string(index - g + 1);
  }

  ////////////////////////////////////////////////////////////////////////
  // HClass
  ////////////////////////////////////////////////////////////////////////

  HClass::HClass(std::vector<std::int64_t> coords) : _coords(std::move(coords)) {
    if (_coords.empty() || _coords.size() % 2 != 0) {
      throw DimensionError("a homology class needs an even, positive number "
                           "of coordinates, got "
                           + std::to_string(_coords.size()));
    }
  }

  HClass HClass::zero(int genus) {
    if (genus < 1) {
      throw DomainError("genus must be at least 1");
    }
    return HClass(std::vector<std::int64_t>(2 * static_cast<std::size_t>(genus), 0));
  }

  HClass HClass::a(int genus, int i) {
    if (i < 1 || i > genus) {
      throw DimensionError("a_" + std::to_string(i) + " does not exist in genus "
                           + std::to_string(genus));
    }
    HClass v = zero(genus);
    v._coords[static_cast<std::size_t>(i - 1)] = 1;
    return v;
  }

  HClass HClass::b(int genus, int i) {
    if (i < 1 || i > genus) {
      throw DimensionError("b_" + std::to_string(i) + " does not exist in genus "
                           + std::to_string(genus));
    }
    HClass v = zero(genus);
    v._coords[static_cast<std::size_t>(genus + i - 1)] = 1;
    return v;
  }

  bool HClass::is_zero() const noexcept {
    for (auto x : _coords) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  HClass& HClass::operator+=(HClass const& other) {
    require_same_surface(*this, other);
    for (std::size_t i = 0; i < _coords.size(); ++i) {
      _coords[i] = checked::add(_coords[i], other._coords[i]);
    }
    return *this;
  }

  HClass& HClass::operator-=(HClass const& other) {
    require_same_surface(*this, other);
    for (std::size_t i = 0; i < _coords.size(); ++i) {
      _coords[i] = checked::sub(_coords[i], other._coords[i]);
    }
    return *this;
  }

  HClass HClass::operator-() const {
    HClass r = *this;
    for (auto& x : r._coords) {
      x = checked::neg(x);
    }
    return r;
  }

  HClass& HClass::operator*=(std::int64_t k) {
    for (auto& x : _coords) {
      x = checked::mul(x, k);
    }
    return *this;
  }

  void require_same_surface(HClass const& u, HClass const& v) {
    if (u.dim() != v.dim()) {
      throw DimensionError("homology classes live on different surfaces (genus "
                           + std::to_string(u.genus()) + " vs "
                           + std::to_string(v.genus()) + ")");
    }
  }

  SurfaceConfig::SurfaceConfig(int genus) : _genus(genus) {
    if (genus < 1 || genus > Z2Vector::max_genus) {
      throw DomainError("genus must be between 1 and "
                        + std::to_string(Z2Vector::max_genus) + ", got "
                        + std::to_string(genus));
    }
  }

  HClass SurfaceConfig::make(std::vector<std::int64_t> coords) const {
    if (coords.size() != 2 * static_cast<std::size_t>(_genus)) {
      throw DimensionError("expected " + std::to_string(2 * _genus)
                           + " coordinates for genus " + std::to_string(_genus)
                           + ", got " + std::to_string(coords.size()));
    }
    return HClass(std::move(coords));
  }

  std::int64_t intersection_pairing(HClass const& u, HClass const& v) {
    require_same_surface(u, v);
    auto const   g = static_cast<std::size_t>(u.genus());
    std::int64_t r = 0;
    for (std::size_t i = 0; i < g; ++i) {
      r = checked::add(r, checked::mul(u[i], v[g + i]));
      r = checked::sub(r, checked::mul(u[g + i], v[i]));
    }
    return r;
  }

  std::string to_string(HClass const& v) {
    std::ostringstream os;
    bool               first = true;
    for (std::size_t i = 0; i < v.dim(); ++i) {
      if (v[i] == 0) {
        continue;
      }
      if (!first) {
        os << " + ";
      }
      os << v[i] << "·" << basis_name(v.genus(), i);
      first = false;
    }
    return first ? "0" : os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Z2Vector
  ////////////////////////////////////////////////////////////////////////

  Z2Vector::Z2Vector(int genus, std::uint64_t bits) : _genus(genus), _bits(bits) {
    if (genus < 1 || genus > max_genus) {
      throw DomainError("mod-2 vectors support genus 1.."
                        + std::to_string(max_genus));
    }
    if (genus < max_genus && (bits >> (2 * genus)) != 0) {
      throw DimensionError("bits set beyond the 2g basis classes");
    }
  }

  Z2Vector Z2Vector::operator+(Z2Vector const& other) const {
    if (_genus != other._genus) {
      throw DimensionError("mod-2 vectors live on different surfaces");
    }
    return Z2Vector(_genus, _bits ^ other._bits);
  }

  Z2Vector mod2_reduce(HClass const& v) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < v.dim(); ++i) {
      if (v[i] % 2 != 0) {
        bits |= std::uint64_t{1} << i;
      }
    }
    return Z2Vector(v.genus(), bits);
  }

  int mod2_pairing(Z2Vector const& u, Z2Vector const& v) {
    if (u.genus() != v.genus()) {
      throw DimensionError("mod-2 vectors live on different surfaces");
    }
    auto const          g     = static_cast<unsigned>(u.genus());
    std::uint64_t const lowm  = g == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g) - 1;
    std::uint64_t const ua    = u.bits() & lowm;
    std::uint64_t const ub    = u.bits() >> g;
    std::uint64_t const va    = v.bits() & lowm;
    std::uint64_t const vb    = v.bits() >> g;
    return (__builtin_popcountll(ua & vb) + __builtin_popcountll(ub & va)) % 2;
  }

  ////////////////////////////////////////////////////////////////////////
  // SpMatrix
  ////////////////////////////////////////////////////////////////////////

  SpMatrix SpMatrix::identity(int genus) {
    auto const                n = 2 * static_cast<std::size_t>(genus);
    std::vector<std::int64_t> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      e[i * n + i] = 1;
    }
    return SpMatrix(genus, std::move(e));
  }

  SpMatrix
  SpMatrix::from_rows(std::vector<std::vector<std::int64_t>> const& rows) {
    auto const n = rows.size();
    if (n == 0 || n % 2 != 0) {
      throw DimensionError("a symplectic matrix needs an even, positive size");
    }
    std::vector<std::int64_t> e;
    e.reserve(n * n);
    for (auto const& row : rows) {
      if (row.size() != n) {
        throw DimensionError("symplectic matrix rows must have length "
                             + std::to_string(n));
      }
      e.insert(e.end(), row.begin(), row.end());
    }
    SpMatrix m(static_cast<int>(n / 2), std::move(e));
    if (!m.is_symplectic()) {
      throw InvariantError("matrix does not satisfy M^T J M = J");
    }
    return m;
  }

  HClass SpMatrix::apply(HClass const& v) const {
    if (v.dim() != dim()) {
      throw DimensionError("matrix and vector live on different surfaces");
    }
    auto const                n = dim();
    std::vector<std::int64_t> out(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
      std::int64_t acc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        acc = checked::add(acc, checked::mul((*this)(r, c), v[c]));
      }
      out[r] = acc;
    }
    return HClass(std::move(out));
  }

  SpMatrix SpMatrix::operator*(SpMatrix const& other) const {
    if (other._genus != _genus) {
      throw DimensionError("matrices live on different surfaces");
    }
    auto const                n = dim();
    std::vector<std::int64_t> e(n * n, 0);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) {
        auto const x = (*this)(r, k);
        if (x == 0) {
          continue;
        }
        for (std::size_t c = 0; c < n; ++c) {
          e[r * n + c] = checked::add(e[r * n + c], checked::mul(x, other(k, c)));
        }
      }
    }
    return SpMatrix(_genus, std::move(e));
  }

  bool SpMatrix::is_identity() const {
    return *this == identity(_genus);
  }

  bool SpMatrix::is_symplectic() const {
    // î(M e_i, M e_j) must equal î(e_i, e_j) for all basis pairs.
    auto const          n = dim();
    std::vector<HClass> cols;
    cols.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<std::int64_t> col(n);
      for (std::size_t r = 0; r < n; ++r) {
        col[r] = (*this)(r, c);
      }
      cols.emplace_back(std::move(col));
    }
    auto const g = static_cast<std::size_t>(_genus);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        std::int64_t expected = 0;
        if (i < g && j == i + g) {
          expected = 1;
        }
        if (intersection_pairing(cols[i], cols[j]) != expected) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::vector<std::int64_t>> SpMatrix::rows() const {
    auto const                             n = dim();
    std::vector<std::vector<std::int64_t>> out(n, std::vector<std::int64_t>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        out[r][c] = (*this)(r, c);
      }
    }
    return out;
  }

  SpMatrix transvection(HClass const& c, std::int64_t k) {
    auto const                n = c.dim();
    auto const                g = static_cast<std::size_t>(c.genus());
    std::vector<std::int64_t> e(n * n, 0);
    for (std::size_t col = 0; col < n; ++col) {
      // î(e_col, c): e_col = a_i pairs with b_i, e_col = b_i pairs with -a_i.
      std::int64_t const pairing = col < g ? c[col + g] : checked::neg(c[col - g]);
      std::int64_t const scale   = checked::mul(k, pairing);
      for (std::size_t r = 0; r < n; ++r) {
        e[r * n + col] = checked::mul(scale, c[r]);
      }
      e[col * n + col] = checked::add(e[col * n + col], 1);
    }
    return SpMatrix(c.genus(), std::move(e));
  }

  SpMatrix word_to_sp(int genus, std::span<const TwistFactor> word) {
    SpMatrix m = SpMatrix::identity(genus);
    for (auto const& f : word) {
      if (f.cls.genus() != genus) {
        throw DimensionError("twist class of genus " + std::to_string(f.cls.genus())
                             + " in a word on a genus " + std::to_string(genus)
                             + " surface");
      }
      m = m * transvection(f.cls, f.exponent);
    }
    return m;
  }

  bool is_torelli_shadow(int genus, std::span<const TwistFactor> word) {
    return word_to_sp(genus, word).is_identity();
  }

}  // namespace torelli
