#include "torelli/wedge.hpp"

#include <sstream>
#include <utility>

namespace torelli {

  Wedge3::Wedge3(int genus) : _genus(genus) {
    if (genus < 1) {
      throw DomainError("genus must be at least 1");
    }
  }

  std::int64_t Wedge3::coefficient(Monomial3 const& m) const {
    auto it = _terms.find(m);
    return it == _terms.end() ? 0 : it->second;
  }

  void Wedge3::add_term(std::size_t i, std::size_t j, std::size_t k, std::int64_t c) {
    auto const n = 2 * static_cast<std::size_t>(_genus);
    if (i >= n || j >= n || k >= n) {
      throw DimensionError("wedge index out of range for genus "
                           + std::to_string(_genus));
    }
    if (c == 0 || i == j || j == k || i == k) {
      return;
    }
    // Three-element sort, flipping the sign per transposition.
    if (i > j) {
      std::swap(i, j);
      c = checked::neg(c);
    }
    if (j > k) {
      std::swap(j, k);
      c = checked::neg(c);
    }
    if (i > j) {
      std::swap(i, j);
      c = checked::neg(c);
    }
    Monomial3 const m{i, j, k};
    auto [it, inserted] = _terms.try_emplace(m, c);
    if (!inserted) {
      it->second = checked::add(it->second, c);
      if (it->second == 0) {
        _terms.erase(it);
      }
    }
  }

  void Wedge3::require_same_surface(Wedge3 const& other) const {
    if (other._genus != _genus) {
      throw DimensionError("wedges live on different surfaces (genus "
                           + std::to_string(_genus) + " vs "
                           + std::to_string(other._genus) + ")");
    }
  }

  Wedge3& Wedge3::operator+=(Wedge3 const& other) {
    require_same_surface(other);
    for (auto const& [m, c] : other._terms) {
      add_term(m[0], m[1], m[2], c);
    }
    return *this;
  }

  Wedge3& Wedge3::operator-=(Wedge3 const& other) {
    require_same_surface(other);
    for (auto const& [m, c] : other._terms) {
      add_term(m[0], m[1], m[2], checked::neg(c));
    }
    return *this;
  }

  Wedge3 Wedge3::operator-() const {
    Wedge3 r = *this;
    for (auto& [m, c] : r._terms) {
      c = checked::neg(c);
    }
    return r;
  }

  Wedge3& Wedge3::operator*=(std::int64_t k) {
    if (k == 0) {
      _terms.clear();
      return *this;
    }
    for (auto& [m, c] : _terms) {
      c = checked::mul(c, k);
    }
    return *this;
  }

  Wedge3 wedge3(HClass const& u, HClass const& v, HClass const& w) {
    require_same_surface(u, v);
    require_same_surface(u, w);
    Wedge3     r(u.genus());
    auto const n = u.dim();
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (v[j] == 0 || j == i) {
          continue;
        }
        auto const uv = checked::mul(u[i], v[j]);
        for (std::size_t k = 0; k < n; ++k) {
          if (w[k] == 0 || k == i || k == j) {
            continue;
          }
          r.add_term(i, j, k, checked::mul(uv, w[k]));
        }
      }
    }
    return r;
  }

  namespace {
    HClass basis_vector(int genus, std::size_t i) {
      auto const g = static_cast<std::size_t>(genus);
      return i < g ? HClass::a(genus, static_cast<int>(i + 1))
                   : HClass::b(genus, static_cast<int>(i - g + 1));
    }

    // î(e_i, e_j) on basis vectors.
    std::int64_t basis_pairing(std::size_t g, std::size_t i, std::size_t j) {
      if (i < g && j == i + g) {
        return 1;
      }
      if (j < g && i == j + g) {
        return -1;
      }
      return 0;
    }
  }  // namespace

  HClass contraction(Wedge3 const& x) {
    auto const g = static_cast<std::size_t>(x.genus());
    HClass     r = HClass::zero(x.genus());
    for (auto const& [m, c] : x.terms()) {
      auto const [i, j, k] = m;
      auto const c2        = checked::mul(2, c);
      if (auto p = basis_pairing(g, j, k); p != 0) {
        r += checked::mul(c2, p) * basis_vector(x.genus(), i);
      }
      // Middle term enters with a minus sign so the map is alternating.
      if (auto p = basis_pairing(g, i, k); p != 0) {
        r -= checked::mul(c2, p) * basis_vector(x.genus(), j);
      }
      if (auto p = basis_pairing(g, i, j); p != 0) {
        r += checked::mul(c2, p) * basis_vector(x.genus(), k);
      }
    }
    return r;
  }

  bool wedge_with_is_zero(Wedge3 const& x, HClass const& v) {
    if (static_cast<std::size_t>(2 * x.genus()) != v.dim()) {
      throw DimensionError("wedge and class live on different surfaces");
    }
    std::map<std::array<std::size_t, 4>, std::int64_t> acc;
    for (auto const& [m, c] : x.terms()) {
      for (std::size_t l = 0; l < v.dim(); ++l) {
        if (v[l] == 0 || l == m[0] || l == m[1] || l == m[2]) {
          continue;
        }
        // Move l into place among the sorted triple; each index it passes
        // contributes a transposition.
        std::array<std::size_t, 4> key{m[0], m[1], m[2], l};
        std::int64_t               coeff = checked::mul(c, v[l]);
        for (std::size_t p = 3; p > 0 && key[p - 1] > key[p]; --p) {
          std::swap(key[p - 1], key[p]);
          coeff = checked::neg(coeff);
        }
        acc[key] = checked::add(acc[key], coeff);
      }
    }
    for (auto const& [k, c] : acc) {
      if (c != 0) {
        return false;
      }
    }
    return true;
  }

  std::string to_string(Wedge3 const& x) {
    if (x.is_zero()) {
      return "0";
    }
    std::ostringstream os;
    bool               first = true;
    for (auto const& [m, c] : x.terms()) {
      if (!first) {
        os << " + ";
      }
      os << c << "·" << basis_name(x.genus(), m[0]) << '^'
         << basis_name(x.genus(), m[1]) << '^' << basis_name(x.genus(), m[2]);
      first = false;
    }
    return os.str();
  }

}  // namespace torelli
