#include "torelli/boolean.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace torelli {

  bool GradedLex::operator()(BoolMonomial x, BoolMonomial y) const noexcept {
    auto const px = std::popcount(x);
    auto const py = std::popcount(y);
    if (px != py) {
      return px < py;
    }
    auto const diff = x ^ y;
    if (diff == 0) {
      return false;
    }
    return (x & diff & (~diff + 1)) != 0;
  }

  BoolPoly::BoolPoly(int genus) : _genus(genus) {
    if (genus < 1 || genus > Z2Vector::max_genus) {
      throw DomainError("Boolean polynomials support genus 1.."
                        + std::to_string(Z2Vector::max_genus));
    }
  }

  BoolPoly BoolPoly::one(int genus) {
    BoolPoly p(genus);
    p._terms.insert(0);
    return p;
  }

  BoolPoly BoolPoly::variable(int genus, std::size_t i) {
    BoolPoly p(genus);
    if (i >= 2 * static_cast<std::size_t>(genus)) {
      throw DimensionError("variable index out of range for genus "
                           + std::to_string(genus));
    }
    p._terms.insert(BoolMonomial{1} << i);
    return p;
  }

  void BoolPoly::toggle(BoolMonomial m) {
    if (auto it = _terms.find(m); it != _terms.end()) {
      _terms.erase(it);
    } else {
      _terms.insert(m);
    }
  }

  void BoolPoly::require_same_surface(BoolPoly const& other) const {
    if (other._genus != _genus) {
      throw DimensionError("polynomials live on different surfaces");
    }
  }

  BoolPoly& BoolPoly::operator+=(BoolPoly const& other) {
    require_same_surface(other);
    for (auto m : other._terms) {
      toggle(m);
    }
    return *this;
  }

  BoolPoly& BoolPoly::operator*=(BoolPoly const& other) {
    require_same_surface(other);
    BoolPoly r(_genus);
    for (auto x : _terms) {
      for (auto y : other._terms) {
        r.toggle(x | y);
      }
    }
    _terms = std::move(r._terms);
    return *this;
  }

  BoolPoly bar(Z2Vector const& v) {
    if (v.is_zero()) {
      throw DomainError("bar is only defined for nonzero mod-2 classes");
    }
    BoolPoly   p(v.genus());
    auto const g = static_cast<unsigned>(v.genus());
    for (std::size_t i = 0; i < 2 * g; ++i) {
      if (v.bit(i)) {
        p.toggle(BoolMonomial{1} << i);
      }
    }
    // Sum over pairs i < j of e_i.e_j: only (a_k, b_k) pairs contribute.
    int pairs = 0;
    for (std::size_t k = 0; k < g; ++k) {
      pairs += v.bit(k) && v.bit(k + g);
    }
    if (pairs % 2 == 1) {
      p.toggle(0);
    }
    return p;
  }

  int degree(BoolPoly const& p) {
    int d = 0;
    for (auto m : p.terms()) {
      d = std::max(d, std::popcount(m));
    }
    return d;
  }

  bool is_in_B3(BoolPoly const& p) {
    return degree(p) <= 3;
  }

  ////////////////////////////////////////////////////////////////////////
  // Sp2Matrix
  ////////////////////////////////////////////////////////////////////////

  Sp2Matrix Sp2Matrix::identity(int genus) {
    std::vector<Z2Vector> cols;
    for (std::size_t i = 0; i < 2 * static_cast<std::size_t>(genus); ++i) {
      cols.emplace_back(genus, std::uint64_t{1} << i);
    }
    return Sp2Matrix(genus, std::move(cols));
  }

  Sp2Matrix Sp2Matrix::from_columns(std::vector<Z2Vector> columns) {
    if (columns.empty() || columns.size() % 2 != 0) {
      throw DimensionError("an Sp(2g, Z_2) matrix needs 2g columns");
    }
    auto const g = columns.size() / 2;
    for (auto const& c : columns) {
      if (static_cast<std::size_t>(c.genus()) != g) {
        throw DimensionError("column genus does not match matrix size");
      }
    }
    for (std::size_t i = 0; i < 2 * g; ++i) {
      for (std::size_t j = i + 1; j < 2 * g; ++j) {
        int const expected = (i < g && j == i + g) ? 1 : 0;
        if (mod2_pairing(columns[i], columns[j]) != expected) {
          throw InvariantError("matrix does not preserve the mod-2 pairing");
        }
      }
    }
    return Sp2Matrix(static_cast<int>(g), std::move(columns));
  }

  Sp2Matrix Sp2Matrix::reduce(SpMatrix const& m) {
    std::vector<Z2Vector> cols;
    for (std::size_t c = 0; c < m.dim(); ++c) {
      std::uint64_t bits = 0;
      for (std::size_t r = 0; r < m.dim(); ++r) {
        if (m(r, c) % 2 != 0) {
          bits |= std::uint64_t{1} << r;
        }
      }
      cols.emplace_back(m.genus(), bits);
    }
    return Sp2Matrix(m.genus(), std::move(cols));
  }

  Z2Vector Sp2Matrix::apply(Z2Vector const& v) const {
    if (v.genus() != _genus) {
      throw DimensionError("matrix and vector live on different surfaces");
    }
    Z2Vector r(_genus, 0);
    for (std::size_t i = 0; i < _columns.size(); ++i) {
      if (v.bit(i)) {
        r = r + _columns[i];
      }
    }
    return r;
  }

  Sp2Matrix Sp2Matrix::operator*(Sp2Matrix const& other) const {
    if (other._genus != _genus) {
      throw DimensionError("matrices live on different surfaces");
    }
    std::vector<Z2Vector> cols;
    cols.reserve(_columns.size());
    for (auto const& c : other._columns) {
      cols.push_back(apply(c));
    }
    return Sp2Matrix(_genus, std::move(cols));
  }

  Sp2Matrix mod2_transvection(Z2Vector const& d) {
    std::vector<Z2Vector> cols;
    for (std::size_t i = 0; i < 2 * static_cast<std::size_t>(d.genus()); ++i) {
      Z2Vector const e(d.genus(), std::uint64_t{1} << i);
      cols.push_back(mod2_pairing(e, d) ? e + d : e);
    }
    return Sp2Matrix::from_columns(std::move(cols));
  }

  BoolPoly sp2_action(Sp2Matrix const& m, BoolPoly const& p) {
    if (m.genus() != p.genus()) {
      throw DimensionError("matrix and polynomial live on different surfaces");
    }
    std::vector<BoolPoly> images;
    for (std::size_t i = 0; i < 2 * static_cast<std::size_t>(m.genus()); ++i) {
      images.push_back(bar(m.column(i)));
    }
    BoolPoly r(p.genus());
    for (auto mono : p.terms()) {
      BoolPoly t = BoolPoly::one(p.genus());
      for (auto bits = mono; bits != 0; bits &= bits - 1) {
        t *= images[static_cast<std::size_t>(std::countr_zero(bits))];
      }
      r += t;
    }
    return r;
  }

  std::string monomial_string(int genus, BoolMonomial m) {
    if (m == 0) {
      return "1";
    }
    std::string s;
    for (auto bits = m; bits != 0; bits &= bits - 1) {
      if (!s.empty()) {
        s += ' ';
      }
      s += basis_name(genus, static_cast<std::size_t>(std::countr_zero(bits)));
    }
    return s;
  }

  std::string to_string(BoolPoly const& p) {
    if (p.is_zero()) {
      return "0";
    }
    std::ostringstream os;
    bool               first = true;
    for (auto m : p.terms()) {
      if (!first) {
        os << " + ";
      }
      os << monomial_string(p.genus(), m);
      first = false;
    }
    return os.str();
  }

}  // namespace torelli
