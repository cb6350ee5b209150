#pragma once

// Johnson (tau) and Birman-Craggs-Johnson (sigma) images of factored Torelli
// elements, SIP-map data and kernel predicates.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "torelli/boolean.hpp"
#include "torelli/homology.hpp"
#include "torelli/wedge.hpp"

namespace torelli {

  using SymplecticPair = std::pair<HClass, HClass>;

  // Throws InvariantError unless the pairs form a symplectic basis of their
  // span: î(a_i, b_j) = δ_ij, î(a_i, a_j) = î(b_i, b_j) = 0.
  void validate_symplectic_basis(std::vector<SymplecticPair> const& basis);

  // T_c T_d^{-1} for disjoint homologous curves bounding a genus-k subsurface
  // with the given symplectic basis.
  struct BPData {
    HClass                      pair_class;
    std::vector<SymplecticPair> basis;

    int genus() const noexcept {
      return static_cast<int>(basis.size());
    }
    int surface_genus() const noexcept {
      return pair_class.genus();
    }
    void validate() const;
  };

  struct SignedBP {
    BPData bp;
    int    sign = 1;
  };

  // Twist about a separating curve cutting off a genus-k subsurface.
  struct SepTwistData {
    std::vector<SymplecticPair> basis;
    int                         sign = 1;

    int genus() const noexcept {
      return static_cast<int>(basis.size());
    }
    void validate() const;
  };

  // T_c T_{T_d(c)}^{-1} for a separating c: both twists' subsurface bases.
  struct SeparatingPair {
    SepTwistData c;
    SepTwistData image;
  };

  // A commutator [T_a, T_b] supported on a lantern with boundary classes
  // (w, x, y, z), together with whatever factorizations are known.
  struct SIPData {
    std::array<HClass, 4>                boundary;
    std::optional<std::vector<SignedBP>> five_bp;
    std::optional<std::vector<SignedBP>> two_bp;
    std::optional<SeparatingPair>        separating_pair;

    int surface_genus() const noexcept {
      return boundary[0].genus();
    }
    void validate() const;
  };

  struct SignedSIP {
    SIPData sip;
    int     sign = 1;
  };

  using FactorItem = std::variant<SignedBP, SepTwistData, SignedSIP>;

  struct TorelliFactorization {
    int                     genus = 1;
    std::vector<FactorItem> items;

    void validate() const;
  };

  Wedge3 tau_bp(BPData const& b, int sign = 1);
  Wedge3 tau_sep(SepTwistData const& s);
  // Throws DomainError if no factorization is attached.
  Wedge3 tau_sip(SIPData const& s);
  Wedge3 tau_word(TorelliFactorization const& f);

  // sum bar(a_i) bar(b_i) (1 + bar(c)), reading bar(c) as 0 when c is even.
  BoolPoly sigma_bp(BPData const& b);
  BoolPoly sigma_sep(SepTwistData const& s);
  BoolPoly sigma_separating_sip(SepTwistData const& c, SepTwistData const& image_c);
  // Uses five_bp, then separating_pair, then the boundary triple product
  // (0 when a boundary class is even).
  BoolPoly sigma_sip(SIPData const& s);
  BoolPoly sigma_word(TorelliFactorization const& f);

  // bar(x) bar(y) bar(z) for three of the four boundary classes; 0 if any
  // of them is even.
  BoolPoly boundary_triple_product(SIPData const& s, std::array<int, 3> which = {1, 2, 3});

  bool sip_in_johnson_kernel(SIPData const& s);
  // Throws InvariantError if sigma disagrees with the even-boundary criterion.
  bool sip_in_bcj_kernel(SIPData const& s);

  using ChillingworthItem = std::variant<SignedBP, SepTwistData>;

  // sum sign_i * 2 * genus_i * [gamma_i].
  HClass chillingworth_closed_form(int genus, std::vector<ChillingworthItem> const& f);
  // Throws InvariantError if the closed form and C(tau) disagree.
  bool chillingworth_membership(int genus, std::vector<ChillingworthItem> const& f);

  // Lantern SIP assembled from the five bounding pairs
  //   (-x | outside), (w | outside, (x,p), (x+y,q)), (x+z | outside, (x, p-x-y+q)),
  //   (x+y | outside, (x,p)), (y+z | (y,q))
  // with w = -(x+y+z). Its tau is -x^y^z. Throws InvariantError if any
  // bounding pair is invalid.
  struct LanternSipParams {
    HClass                      x, y, z, p, q;
    std::vector<SymplecticPair> outside;
  };
  SIPData make_lantern_sip(LanternSipParams const& params);

  // The separating-SIP data whose sigma values span SSIP in genus 2, embedded
  // in the given genus: the c and T_d(c) subsurface bases for Types 2-4.
  std::array<SeparatingPair, 3> ssip_type_pairs(int genus);

  // Basis (reduced row echelon, pivots on leading graded-lex monomials) of the
  // Z_2 span of the Type 2-4 sigma values and their images under `samples`
  // random products of mod-2 transvections.
  std::vector<BoolPoly> ssip_span(int genus, int samples, std::uint64_t seed);

}  // namespace torelli
