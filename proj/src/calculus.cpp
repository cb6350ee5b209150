#include "torelli/calculus.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <string>

namespace torelli {

  void validate_symplectic_basis(std::vector<SymplecticPair> const& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        auto const& [ai, bi] = basis[i];
        auto const& [aj, bj] = basis[j];
        std::int64_t const expected = i == j ? 1 : 0;
        if (intersection_pairing(ai, bj) != expected) {
          throw InvariantError("basis pairs " + std::to_string(i + 1) + ", "
                               + std::to_string(j + 1)
                               + ": î(a_i, b_j) must be δ_ij");
        }
        if (i < j
            && (intersection_pairing(ai, aj) != 0
                || intersection_pairing(bi, bj) != 0)) {
          throw InvariantError("basis pairs " + std::to_string(i + 1) + ", "
                               + std::to_string(j + 1)
                               + " are not orthogonal");
        }
      }
    }
  }

  namespace {
    void check_sign(int sign) {
      if (sign != 1 && sign != -1) {
        throw InvariantError("sign must be +1 or -1, got " + std::to_string(sign));
      }
    }

    void check_genus(int expected, HClass const& v) {
      if (v.genus() != expected) {
        throw DimensionError("class of genus " + std::to_string(v.genus())
                             + " on a genus " + std::to_string(expected)
                             + " surface");
      }
    }

    void check_genus(int expected, std::vector<SymplecticPair> const& basis) {
      for (auto const& [a, b] : basis) {
        check_genus(expected, a);
        check_genus(expected, b);
      }
    }
  }  // namespace

  void BPData::validate() const {
    check_genus(surface_genus(), basis);
    validate_symplectic_basis(basis);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (intersection_pairing(basis[i].first, pair_class) != 0
          || intersection_pairing(basis[i].second, pair_class) != 0) {
        throw InvariantError("basis pair " + std::to_string(i + 1)
                             + " meets the bounding pair class");
      }
    }
  }

  void SepTwistData::validate() const {
    check_sign(sign);
    validate_symplectic_basis(basis);
  }

  void SIPData::validate() const {
    int const g = surface_genus();
    for (auto const& v : boundary) {
      check_genus(g, v);
    }
    if (!(boundary[0] + boundary[1] + boundary[2] + boundary[3]).is_zero()) {
      throw InvariantError("lantern boundary classes must sum to 0");
    }
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        if (intersection_pairing(boundary[i], boundary[j]) != 0) {
          throw InvariantError("lantern boundary classes must pair to 0");
        }
      }
    }
    auto check_list = [g](std::vector<SignedBP> const& list, std::size_t n,
                          char const* what) {
      if (list.size() != n) {
        throw InvariantError(std::string(what) + " factorization needs "
                             + std::to_string(n) + " bounding pairs, got "
                             + std::to_string(list.size()));
      }
      for (auto const& [bp, sign] : list) {
        check_genus(g, bp.pair_class);
        check_sign(sign);
        bp.validate();
      }
    };
    if (five_bp) {
      check_list(*five_bp, 5, "five-pair");
    }
    if (two_bp) {
      check_list(*two_bp, 2, "two-pair");
    }
    if (separating_pair) {
      for (auto const* s : {&separating_pair->c, &separating_pair->image}) {
        check_genus(g, s->basis);
        s->validate();
      }
    }
  }

  void TorelliFactorization::validate() const {
    for (auto const& item : items) {
      std::visit(
          [this](auto const& it) {
            using T = std::decay_t<decltype(it)>;
            if constexpr (std::is_same_v<T, SignedBP>) {
              check_genus(genus, it.bp.pair_class);
              check_sign(it.sign);
              it.bp.validate();
            } else if constexpr (std::is_same_v<T, SepTwistData>) {
              check_genus(genus, it.basis);
              it.validate();
            } else {
              check_genus(genus, it.sip.boundary[0]);
              check_sign(it.sign);
              it.sip.validate();
            }
          },
          item);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // tau
  ////////////////////////////////////////////////////////////////////////

  Wedge3 tau_bp(BPData const& b, int sign) {
    check_sign(sign);
    b.validate();
    Wedge3 r(b.surface_genus());
    for (auto const& [a_i, b_i] : b.basis) {
      r += wedge3(a_i, b_i, b.pair_class);
    }
    return sign * r;
  }

  Wedge3 tau_sep(SepTwistData const& s) {
    s.validate();
    if (s.basis.empty()) {
      // A genus-0 separating twist carries no surface information.
      return Wedge3(1);
    }
    return Wedge3(s.basis.front().first.genus());
  }

  Wedge3 tau_sip(SIPData const& s) {
    s.validate();
    auto const* list = s.five_bp ? &*s.five_bp : s.two_bp ? &*s.two_bp : nullptr;
    if (list != nullptr) {
      Wedge3 r(s.surface_genus());
      for (auto const& [bp, sign] : *list) {
        r += tau_bp(bp, sign);
      }
      return r;
    }
    if (s.separating_pair) {
      // Both factors are separating twists.
      return Wedge3(s.surface_genus());
    }
    throw DomainError("SIP-map has no factorization to evaluate tau on");
  }

  Wedge3 tau_word(TorelliFactorization const& f) {
    f.validate();
    Wedge3 r(f.genus);
    for (auto const& item : f.items) {
      std::visit(
          [&r](auto const& it) {
            using T = std::decay_t<decltype(it)>;
            if constexpr (std::is_same_v<T, SignedBP>) {
              r += tau_bp(it.bp, it.sign);
            } else if constexpr (std::is_same_v<T, SignedSIP>) {
              r += it.sign * tau_sip(it.sip);
            }
          },
          item);
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // sigma
  ////////////////////////////////////////////////////////////////////////

  namespace {
    BoolPoly basis_sum(int genus, std::vector<SymplecticPair> const& basis) {
      BoolPoly r(genus);
      for (auto const& [a, b] : basis) {
        r += bar(a) * bar(b);
      }
      return r;
    }

    BoolPoly bar_or_zero(HClass const& v) {
      auto const m = mod2_reduce(v);
      return m.is_zero() ? BoolPoly(v.genus()) : bar(m);
    }
  }  // namespace

  BoolPoly sigma_bp(BPData const& b) {
    b.validate();
    int const g = b.surface_genus();
    return basis_sum(g, b.basis) * (BoolPoly::one(g) + bar_or_zero(b.pair_class));
  }

  BoolPoly sigma_sep(SepTwistData const& s) {
    s.validate();
    if (s.basis.empty()) {
      return BoolPoly(1);
    }
    return basis_sum(s.basis.front().first.genus(), s.basis);
  }

  BoolPoly sigma_separating_sip(SepTwistData const& c, SepTwistData const& image_c) {
    auto const sc = sigma_sep(c);
    auto const si = sigma_sep(image_c);
    if (c.basis.empty()) {
      return si;
    }
    if (image_c.basis.empty()) {
      return sc;
    }
    return sc + si;
  }

  BoolPoly boundary_triple_product(SIPData const& s, std::array<int, 3> which) {
    int const g = s.surface_genus();
    BoolPoly  r = BoolPoly::one(g);
    for (int i : which) {
      if (i < 0 || i > 3) {
        throw DomainError("boundary index must be 0..3");
      }
      auto const m = mod2_reduce(s.boundary[static_cast<std::size_t>(i)]);
      if (m.is_zero()) {
        return BoolPoly(g);
      }
      r *= bar(m);
    }
    return r;
  }

  BoolPoly sigma_sip(SIPData const& s) {
    s.validate();
    int const g = s.surface_genus();
    if (s.five_bp) {
      BoolPoly r(g);
      for (auto const& item : *s.five_bp) {
        r += sigma_bp(item.bp);
      }
      return r;
    }
    if (s.separating_pair) {
      return sigma_separating_sip(s.separating_pair->c, s.separating_pair->image);
    }
    for (auto const& v : s.boundary) {
      if (mod2_reduce(v).is_zero()) {
        return BoolPoly(g);
      }
    }
    return boundary_triple_product(s);
  }

  BoolPoly sigma_word(TorelliFactorization const& f) {
    f.validate();
    BoolPoly r(f.genus);
    for (auto const& item : f.items) {
      std::visit(
          [&r](auto const& it) {
            using T = std::decay_t<decltype(it)>;
            if constexpr (std::is_same_v<T, SignedBP>) {
              r += sigma_bp(it.bp);
            } else if constexpr (std::is_same_v<T, SepTwistData>) {
              if (!it.basis.empty()) {
                r += sigma_sep(it);
              }
            } else {
              r += sigma_sip(it.sip);
            }
          },
          item);
    }
    return r;
  }

  bool sip_in_johnson_kernel(SIPData const& s) {
    return tau_sip(s).is_zero();
  }

  bool sip_in_bcj_kernel(SIPData const& s) {
    bool const by_sigma    = sigma_sip(s).is_zero();
    bool       by_boundary = false;
    for (auto const& v : s.boundary) {
      by_boundary = by_boundary || mod2_reduce(v).is_zero();
    }
    if (by_sigma != by_boundary) {
      throw InvariantError("sigma of the SIP-map disagrees with its boundary "
                           "classes mod 2");
    }
    return by_sigma;
  }

  ////////////////////////////////////////////////////////////////////////
  // Chillingworth
  ////////////////////////////////////////////////////////////////////////

  HClass chillingworth_closed_form(int genus, std::vector<ChillingworthItem> const& f) {
    HClass r = HClass::zero(genus);
    for (auto const& item : f) {
      if (auto const* bp = std::get_if<SignedBP>(&item)) {
        check_genus(genus, bp->bp.pair_class);
        check_sign(bp->sign);
        bp->bp.validate();
        r += checked::mul(2 * bp->sign, bp->bp.genus()) * bp->bp.pair_class;
      } else {
        auto const& sep = std::get<SepTwistData>(item);
        check_genus(genus, sep.basis);
        sep.validate();
      }
    }
    return r;
  }

  bool chillingworth_membership(int genus, std::vector<ChillingworthItem> const& f) {
    auto const           closed = chillingworth_closed_form(genus, f);
    TorelliFactorization word{genus, {}};
    for (auto const& item : f) {
      std::visit([&word](auto const& it) { word.items.emplace_back(it); }, item);
    }
    auto const via_tau = contraction(tau_word(word));
    if (closed != via_tau) {
      throw InvariantError("closed-form Chillingworth class " + to_string(closed)
                           + " disagrees with C(tau) = " + to_string(via_tau));
    }
    return closed.is_zero();
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructors
  ////////////////////////////////////////////////////////////////////////

  SIPData make_lantern_sip(LanternSipParams const& prm) {
    auto const& [x, y, z, p, q, outside] = prm;
    HClass const w = -(x + y + z);

    auto with = [&outside](std::vector<SymplecticPair> extra) {
      std::vector<SymplecticPair> basis = outside;
      basis.insert(basis.end(), extra.begin(), extra.end());
      return basis;
    };

    std::vector<SignedBP> five{
        {{-x, outside}, 1},
        {{w, with({{x, p}, {x + y, q}})}, 1},
        {{x + z, with({{x, p - x - y + q}})}, 1},
        {{x + y, with({{x, p}})}, 1},
        {{y + z, {{y, q}}}, 1},
    };
    SIPData s{{w, x, y, z}, std::move(five), std::nullopt, std::nullopt};
    s.validate();
    return s;
  }

  namespace {
    // Genus-2 class a1^i a2^j b1^k b2^l placed in a larger surface.
    HClass g2(int genus, std::int64_t a1, std::int64_t a2, std::int64_t b1, std::int64_t b2) {
      HClass r = HClass::zero(genus);
      r += a1 * HClass::a(genus, 1);
      r += a2 * HClass::a(genus, 2);
      r += b1 * HClass::b(genus, 1);
      r += b2 * HClass::b(genus, 2);
      return r;
    }
  }  // namespace

  std::array<SeparatingPair, 3> ssip_type_pairs(int genus) {
    if (genus < 2) {
      throw DomainError("separating SIP-maps need genus at least 2");
    }
    auto const a1 = g2(genus, 1, 0, 0, 0);
    auto const b1 = g2(genus, 0, 0, 1, 0);
    auto const b2 = g2(genus, 0, 0, 0, 1);
    auto const s  = g2(genus, 0, 1, 0, 1);  // a2 + b2
    auto sep = [](HClass const& a, HClass const& b) {
      return SepTwistData{std::vector<SymplecticPair>{{a, b}}, 1};
    };
    return {
        SeparatingPair{sep(a1, b1), sep(a1 + b2, b1)},
        SeparatingPair{sep(b1 + s, b2), sep(a1 + b1 + s, b2)},
        SeparatingPair{sep(a1, b1), sep(a1 + s, b1 + s)},
    };
  }

  namespace {
    // Coordinates of degree <= 2 monomials, indexed densely.
    class QuadraticCoords {
     public:
      explicit QuadraticCoords(int genus) {
        auto const n = 2 * static_cast<std::size_t>(genus);
        std::vector<BoolMonomial> all{0};
        for (std::size_t i = 0; i < n; ++i) {
          all.push_back(BoolMonomial{1} << i);
        }
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) {
            all.push_back((BoolMonomial{1} << i) | (BoolMonomial{1} << j));
          }
        }
        std::sort(all.begin(), all.end(), GradedLex{});
        _monomials = all;
        for (std::size_t k = 0; k < all.size(); ++k) {
          _index[all[k]] = k;
        }
      }

      std::size_t size() const {
        return _monomials.size();
      }
      BoolMonomial monomial(std::size_t k) const {
        return _monomials[k];
      }
      std::vector<bool> encode(BoolPoly const& p) const {
        std::vector<bool> v(size(), false);
        for (auto m : p.terms()) {
          auto it = _index.find(m);
          if (it == _index.end()) {
            throw InvariantError("SSIP element has a term of degree above 2");
          }
          v[it->second] = true;
        }
        return v;
      }

     private:
      std::vector<BoolMonomial>           _monomials;
      std::map<BoolMonomial, std::size_t> _index;
    };

    Sp2Matrix random_sp2(int genus, std::mt19937_64& rng) {
      auto const n = 2 * static_cast<unsigned>(genus);
      std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << n) - 1);
      Sp2Matrix m = Sp2Matrix::identity(genus);
      for (unsigned k = 0; k < 2 * n; ++k) {
        m = mod2_transvection(Z2Vector(genus, pick(rng))) * m;
      }
      return m;
    }
  }  // namespace

  std::vector<BoolPoly> ssip_span(int genus, int samples, std::uint64_t seed) {
    if (genus < 2) {
      throw DomainError("SSIP spans need genus at least 2");
    }
    if (genus > 16) {
      throw DomainError("SSIP spans are limited to genus 16");
    }
    if (samples < 0) {
      throw DomainError("sample count must be nonnegative");
    }
    std::vector<BoolPoly> gens;
    for (auto const& [c, image] : ssip_type_pairs(genus)) {
      gens.push_back(sigma_separating_sip(c, image));
    }
    std::mt19937_64 rng(seed);
    auto const      fixtures = gens;
    for (int s = 0; s < samples; ++s) {
      auto const m = random_sp2(genus, rng);
      for (auto const& p : fixtures) {
        gens.push_back(sp2_action(m, p));
      }
    }

    // Gaussian elimination with pivots on the largest coordinate.
    QuadraticCoords const          coords(genus);
    std::vector<std::vector<bool>> rows;
    std::vector<std::size_t>       pivots;
    for (auto const& p : gens) {
      auto v = coords.encode(p);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (v[pivots[r]]) {
          for (std::size_t k = 0; k < v.size(); ++k) {
            v[k] = v[k] != rows[r][k];
          }
        }
      }
      auto const lead = std::find(v.rbegin(), v.rend(), true);
      if (lead == v.rend()) {
        continue;
      }
      auto const piv = static_cast<std::size_t>(v.rend() - lead) - 1;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][piv]) {
          for (std::size_t k = 0; k < v.size(); ++k) {
            rows[r][k] = rows[r][k] != v[k];
          }
        }
      }
      rows.push_back(std::move(v));
      pivots.push_back(piv);
    }

    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      order[i] = i;
    }
    std::sort(order.begin(), order.end(),
              [&pivots](std::size_t x, std::size_t y) { return pivots[x] < pivots[y]; });
    std::vector<BoolPoly> basis;
    for (auto r : order) {
      BoolPoly p(genus);
      for (std::size_t k = 0; k < coords.size(); ++k) {
        if (rows[r][k]) {
          p.toggle(coords.monomial(k));
        }
      }
      basis.push_back(std::move(p));
    }
    return basis;
  }

}  // namespace torelli
