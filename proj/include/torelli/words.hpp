#pragma once

// Words in formal Dehn twist symbols: free and cyclic reduction, normal forms
// modulo commutation of disjoint twists, and a replay checker for derivations
// built from lantern, commutation, conjugation and isotopy rules.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "torelli/homology.hpp"

namespace torelli {

  struct Letter {
    std::string id;
    int         exp = 1;  // +1 or -1

    Letter inverse() const {
      return {id, -exp};
    }
    auto operator<=>(Letter const&) const = default;
  };

  using Word = std::vector<Letter>;

  Word        inverse(Word const& w);
  Word        concat(Word u, Word const& v);
  Word        rotate(Word const& w, std::ptrdiff_t by);
  std::string to_string(Letter const& l);
  // Space separated, "x^-1" for inverses; "1" for the empty word.
  std::string to_string(Word const& w);
  // Inverse of to_string: whitespace separated ids with optional "^-1"/"^1".
  Word parse_word(std::string const& text);

  Word free_reduce(Word const& w);
  // Free reduction followed by cancellation of inverse end letters.
  Word cyclic_reduce(Word const& w);

  // Words in a, b (A, B for inverses); supports "x^n", "(...)" and "[u,v]".
  // Throws SchemaError on malformed input.
  Word parse_ab_word(std::string const& text);

  enum class MappingClassType { finite_order, reducible, pseudo_anosov };
  std::string to_string(MappingClassType t);

  // Nielsen-Thurston type of a word in T_a, T_b for two lantern interior
  // curves: the identity, conjugates of nonzero powers of a, b, ab, and the
  // pseudo-Anosov rest. Throws DomainError for ids other than "a", "b".
  MappingClassType lantern_classify(Word const& w);

  // T_{b1} T_{b2} T_{b3} T_{b4} = T_{i1} T_{i2} T_{i3}.
  struct LanternInstance {
    std::string                name;
    std::array<std::string, 4> boundary;
    std::array<std::string, 3> interior;

    // b1 b2 b3 b4 i3^-1 i2^-1 i1^-1.
    Word relator() const;
  };

  class RelationEnv {
   public:
    void add_commuting(std::string const& x, std::string const& y);
    // Registers the lantern and makes its boundary twists commute with every
    // curve of the lantern. Throws InvariantError on repeated ids.
    void add_lantern(LanternInstance const& inst);
    void add_isotopy(std::string const& x, std::string const& y);

    // Equal ids always commute.
    bool commute(std::string const& x, std::string const& y) const;
    bool isotopic(std::string const& x, std::string const& y) const;
    LanternInstance const& lantern(std::string const& name) const;

   private:
    std::set<std::pair<std::string, std::string>> _commuting;
    std::set<std::pair<std::string, std::string>> _isotopies;
    std::map<std::string, LanternInstance>        _lanterns;
  };

  // Lexicographically least word obtainable by swapping adjacent commuting
  // letters.
  Word trace_normal_form(RelationEnv const& env, Word const& w);
  bool commutation_equivalent(RelationEnv const& env, Word const& u, Word const& v);

  // "T_f(a)" for exp = 1, "T_f^-1(a)" for exp = -1.
  std::string conjugate_id(std::string const& f, int exp, std::string const& a);
  struct ConjugateParts {
    std::string f;
    int         exp;
    std::string a;
  };
  // Splits ids produced by conjugate_id, using the last balanced parenthesis
  // group as the argument.
  std::optional<ConjugateParts> parse_conjugate_id(std::string const& id);

  enum class Rule {
    lantern,
    commute,
    free_cancel,
    free_insert,
    conjugation_fold,
    conjugation_unfold,
    isotopy_replace,
    rotate,
  };
  std::string            to_string(Rule r);
  std::optional<Rule>    parse_rule(std::string const& name);

  struct DerivationStep {
    Rule                rule = Rule::commute;
    std::size_t         position = 0;
    // lantern
    std::string         instance;
    std::size_t         length = 0;
    std::optional<Word> replacement;
    std::optional<bool> forward;
    // commute to a commutation-equivalent word
    std::optional<Word> to_word;
    // free-insert inserts `letter` then its inverse
    Letter              letter;
    // isotopy-replace
    std::string         to_id;
    // rotate
    std::ptrdiff_t      by = 0;
    std::optional<Word> expect;
  };

  struct DerivationScript {
    std::string                 name;
    // Equation mode tracks lhs * rhs^-1 and compares the end up to rotation.
    bool                        equation = false;
    Word                        start;
    Word                        end;
    std::vector<DerivationStep> steps;
    std::vector<std::string>    assumptions;
  };

  struct DerivationResult {
    bool        ok = false;
    // Index of the failing step; steps.size() for an end mismatch.
    std::size_t failed_step = 0;
    std::string rule;
    std::string message;
    Word        final_word;
  };

  DerivationResult check_derivation(RelationEnv const& env, DerivationScript const& script);

  // Homology class of a twist id: assigned directly, or obtained from a
  // conjugate id by applying the twist's transvection. Throws DomainError
  // for ids without a class.
  HClass resolve_class(std::string const&                   id,
                       std::map<std::string, HClass> const& assignment);

  std::vector<TwistFactor> to_twist_factors(Word const&                          w,
                                            std::map<std::string, HClass> const& assignment);

  // word_to_sp(lhs) == word_to_sp(rhs).
  bool sp_shadow_check(int genus, Word const& lhs, Word const& rhs,
                       std::map<std::string, HClass> const& assignment);

}  // namespace torelli
