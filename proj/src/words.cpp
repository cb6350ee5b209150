#include "torelli/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace torelli {

  Word inverse(Word const& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      r.push_back(it->inverse());
    }
    return r;
  }

  Word concat(Word u, Word const& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
  }

  Word rotate(Word const& w, std::ptrdiff_t by) {
    if (w.empty()) {
      return w;
    }
    auto const n = static_cast<std::ptrdiff_t>(w.size());
    auto const k = ((by % n) + n) % n;
    Word       r(w.begin() + k, w.end());
    r.insert(r.end(), w.begin(), w.begin() + k);
    return r;
  }

  std::string to_string(Letter const& l) {
    return l.exp == 1 ? l.id : l.id + "^" + std::to_string(l.exp);
  }

  std::string to_string(Word const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string s;
    for (auto const& l : w) {
      if (!s.empty()) {
        s += ' ';
      }
      s += to_string(l);
    }
    return s;
  }

  Word parse_word(std::string const& text) {
    std::istringstream is(text);
    Word               w;
    std::string        tok;
    while (is >> tok) {
      if (tok == "1" && w.empty()) {
        continue;
      }
      int exp = 1;
      if (tok.size() > 3 && tok.ends_with("^-1")) {
        exp = -1;
        tok.resize(tok.size() - 3);
      } else if (tok.size() > 2 && tok.ends_with("^1")) {
        tok.resize(tok.size() - 2);
      }
      w.push_back({tok, exp});
    }
    return w;
  }

  Word free_reduce(Word const& w) {
    Word r;
    for (auto const& l : w) {
      if (!r.empty() && r.back().id == l.id && r.back().exp == -l.exp) {
        r.pop_back();
      } else {
        r.push_back(l);
      }
    }
    return r;
  }

  Word cyclic_reduce(Word const& w) {
    Word        r = free_reduce(w);
    std::size_t i = 0;
    std::size_t j = r.size();
    while (j - i >= 2 && r[i].id == r[j - 1].id && r[i].exp == -r[j - 1].exp) {
      ++i;
      --j;
    }
    return Word(r.begin() + static_cast<std::ptrdiff_t>(i),
                r.begin() + static_cast<std::ptrdiff_t>(j));
  }

  ////////////////////////////////////////////////////////////////////////
  // Two-generator words
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class AbParser {
     public:
      explicit AbParser(std::string const& text) : _s(text) {}

      Word parse() {
        Word w = expr();
        skip();
        if (_i != _s.size()) {
          fail("unexpected '" + std::string(1, _s[_i]) + "'");
        }
        return w;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw SchemaError("word syntax error at offset " + std::to_string(_i)
                          + ": " + what);
      }

      void skip() {
        while (_i < _s.size() && std::isspace(static_cast<unsigned char>(_s[_i]))) {
          ++_i;
        }
      }

      Word expr() {
        Word w;
        for (;;) {
          skip();
          if (_i == _s.size() || _s[_i] == ')' || _s[_i] == ']' || _s[_i] == ',') {
            return w;
          }
          w = concat(std::move(w), term());
        }
      }

      Word term() {
        Word base = atom();
        skip();
        if (_i < _s.size() && _s[_i] == '^') {
          ++_i;
          skip();
          bool neg = false;
          if (_i < _s.size() && (_s[_i] == '-' || _s[_i] == '+')) {
            neg = _s[_i] == '-';
            ++_i;
          }
          if (_i == _s.size() || !std::isdigit(static_cast<unsigned char>(_s[_i]))) {
            fail("expected an exponent");
          }
          long n = 0;
          while (_i < _s.size() && std::isdigit(static_cast<unsigned char>(_s[_i]))) {
            n = n * 10 + (_s[_i] - '0');
            if (n > 10000) {
              fail("exponent too large");
            }
            ++_i;
          }
          Word const unit = neg ? inverse(base) : base;
          Word       r;
          for (long k = 0; k < n; ++k) {
            r = concat(std::move(r), unit);
          }
          return r;
        }
        return base;
      }

      Word atom() {
        skip();
        if (_i == _s.size()) {
          fail("unexpected end of input");
        }
        char const c = _s[_i++];
        switch (c) {
          case 'a':
            return {{"a", 1}};
          case 'A':
            return {{"a", -1}};
          case 'b':
            return {{"b", 1}};
          case 'B':
            return {{"b", -1}};
          case '(': {
            Word w = expr();
            expect(')');
            return w;
          }
          case '[': {
            Word u = expr();
            expect(',');
            Word v = expr();
            expect(']');
            return concat(concat(concat(u, v), inverse(u)), inverse(v));
          }
          default:
            --_i;
            fail("unexpected '" + std::string(1, c) + "'");
        }
      }

      void expect(char c) {
        skip();
        if (_i == _s.size() || _s[_i] != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++_i;
      }

      std::string const& _s;
      std::size_t        _i = 0;
    };

    bool is_power_rotation(Word const& w, Word const& unit) {
      if (w.size() % unit.size() != 0) {
        return false;
      }
      for (std::size_t r = 0; r < unit.size(); ++r) {
        bool ok = true;
        for (std::size_t k = 0; k < w.size() && ok; ++k) {
          ok = w[k] == unit[(k + r) % unit.size()];
        }
        if (ok) {
          return true;
        }
      }
      return false;
    }
  }  // namespace

  Word parse_ab_word(std::string const& text) {
    return AbParser(text).parse();
  }

  std::string to_string(MappingClassType t) {
    switch (t) {
      case MappingClassType::finite_order:
        return "finite-order";
      case MappingClassType::reducible:
        return "reducible";
      case MappingClassType::pseudo_anosov:
        return "pseudo-Anosov";
    }
    return "?";
  }

  MappingClassType lantern_classify(Word const& w) {
    for (auto const& l : w) {
      if (l.id != "a" && l.id != "b") {
        throw DomainError("lantern words use only the twists a and b, got '" + l.id + "'");
      }
      if (l.exp != 1 && l.exp != -1) {
        throw DomainError("letter exponents must be +1 or -1");
      }
    }
    Word const c = cyclic_reduce(w);
    if (c.empty()) {
      return MappingClassType::finite_order;
    }
    Letter const a{"a", 1};
    Letter const b{"b", 1};
    for (Word const& unit : {Word{a}, Word{a.inverse()}, Word{b}, Word{b.inverse()},
                             Word{a, b}, Word{b.inverse(), a.inverse()}}) {
      if (is_power_rotation(c, unit)) {
        return MappingClassType::reducible;
      }
    }
    return MappingClassType::pseudo_anosov;
  }

  ////////////////////////////////////////////////////////////////////////
  // Relation environment and trace normal form
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::pair<std::string, std::string> unordered(std::string x, std::string y) {
      if (y < x) {
        std::swap(x, y);
      }
      return {std::move(x), std::move(y)};
    }
  }  // namespace

  Word LanternInstance::relator() const {
    Word r;
    for (auto const& id : boundary) {
      r.push_back({id, 1});
    }
    for (auto it = interior.rbegin(); it != interior.rend(); ++it) {
      r.push_back({*it, -1});
    }
    return r;
  }

  void RelationEnv::add_commuting(std::string const& x, std::string const& y) {
    _commuting.insert(unordered(x, y));
  }

  void RelationEnv::add_lantern(LanternInstance const& inst) {
    std::set<std::string> ids(inst.boundary.begin(), inst.boundary.end());
    ids.insert(inst.interior.begin(), inst.interior.end());
    if (ids.size() != 7) {
      throw InvariantError("lantern '" + inst.name + "' repeats a curve");
    }
    if (_lanterns.contains(inst.name)) {
      throw InvariantError("lantern '" + inst.name + "' declared twice");
    }
    for (auto const& b : inst.boundary) {
      for (auto const& c : ids) {
        add_commuting(b, c);
      }
    }
    _lanterns.emplace(inst.name, inst);
  }

  void RelationEnv::add_isotopy(std::string const& x, std::string const& y) {
    _isotopies.insert(unordered(x, y));
  }

  bool RelationEnv::commute(std::string const& x, std::string const& y) const {
    return x == y || _commuting.contains(unordered(x, y));
  }

  bool RelationEnv::isotopic(std::string const& x, std::string const& y) const {
    return x == y || _isotopies.contains(unordered(x, y));
  }

  LanternInstance const& RelationEnv::lantern(std::string const& name) const {
    auto it = _lanterns.find(name);
    if (it == _lanterns.end()) {
      throw DomainError("no lantern named '" + name + "'");
    }
    return it->second;
  }

  Word trace_normal_form(RelationEnv const& env, Word const& w) {
    Word rest = w;
    Word out;
    out.reserve(w.size());
    while (!rest.empty()) {
      // Among letters that commute past everything before them, take the
      // least; its first occurrence wins ties.
      std::size_t best = 0;
      for (std::size_t k = 1; k < rest.size(); ++k) {
        if (!(rest[k] < rest[best])) {
          continue;
        }
        bool free = true;
        for (std::size_t j = 0; j < k && free; ++j) {
          free = env.commute(rest[j].id, rest[k].id);
        }
        if (free) {
          best = k;
        }
      }
      out.push_back(rest[best]);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
  }

  bool commutation_equivalent(RelationEnv const& env, Word const& u, Word const& v) {
    return u.size() == v.size() && trace_normal_form(env, u) == trace_normal_form(env, v);
  }

  ////////////////////////////////////////////////////////////////////////
  // Conjugate ids
  ////////////////////////////////////////////////////////////////////////

  std::string conjugate_id(std::string const& f, int exp, std::string const& a) {
    return "T_" + f + (exp == 1 ? "" : "^-1") + "(" + a + ")";
  }

  std::optional<ConjugateParts> parse_conjugate_id(std::string const& id) {
    if (!id.starts_with("T_") || !id.ends_with(")")) {
      return std::nullopt;
    }
    int         depth = 0;
    std::size_t open  = std::string::npos;
    for (std::size_t k = id.size(); k-- > 0;) {
      if (id[k] == ')') {
        ++depth;
      } else if (id[k] == '(') {
        if (--depth == 0) {
          open = k;
          break;
        }
      }
    }
    if (open == std::string::npos || open <= 2) {
      return std::nullopt;
    }
    std::string f   = id.substr(2, open - 2);
    std::string a   = id.substr(open + 1, id.size() - open - 2);
    int         exp = 1;
    if (f.ends_with("^-1")) {
      exp = -1;
      f.resize(f.size() - 3);
    }
    if (f.empty() || a.empty()) {
      return std::nullopt;
    }
    return ConjugateParts{f, exp, a};
  }

  ////////////////////////////////////////////////////////////////////////
  // Derivation checking
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct RuleName {
      Rule        rule;
      char const* name;
    };
    constexpr RuleName rule_names[] = {
        {Rule::lantern, "lantern"},
        {Rule::commute, "commute"},
        {Rule::free_cancel, "free-cancel"},
        {Rule::free_insert, "free-insert"},
        {Rule::conjugation_fold, "conjugation-fold"},
        {Rule::conjugation_unfold, "conjugation-unfold"},
        {Rule::isotopy_replace, "isotopy-replace"},
        {Rule::rotate, "rotate"},
    };

    struct StepFailure {
      std::string message;
    };

    [[noreturn]] void reject(std::string message) {
      throw StepFailure{std::move(message)};
    }

    void need(Word const& w, std::size_t pos, std::size_t len) {
      if (pos > w.size() || len > w.size() - pos) {
        reject("positions " + std::to_string(pos) + ".."
               + std::to_string(pos + len) + " fall outside a word of length "
               + std::to_string(w.size()));
      }
    }

    Word slice(Word const& w, std::size_t pos, std::size_t len) {
      return Word(w.begin() + static_cast<std::ptrdiff_t>(pos),
                  w.begin() + static_cast<std::ptrdiff_t>(pos + len));
    }

    Word splice(Word const& w, std::size_t pos, std::size_t len, Word const& with) {
      Word r(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      r.insert(r.end(), with.begin(), with.end());
      r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len), w.end());
      return r;
    }

    bool is_rotation(Word const& u, Word const& v) {
      if (u.size() != v.size()) {
        return false;
      }
      if (u.empty()) {
        return true;
      }
      for (std::size_t r = 0; r < u.size(); ++r) {
        if (rotate(u, static_cast<std::ptrdiff_t>(r)) == v) {
          return true;
        }
      }
      return false;
    }

    // w = 1 follows from the lantern: some rotation of its cyclic reduction is
    // commutation equivalent to a rotation of the relator or its inverse.
    bool lantern_consequence(RelationEnv const& env, LanternInstance const& inst,
                             Word const& w) {
      Word const c = cyclic_reduce(w);
      Word const r = inst.relator();
      if (c.size() != r.size()) {
        return false;
      }
      std::vector<Word> targets;
      for (Word const& base : {r, inverse(r)}) {
        for (std::size_t k = 0; k < base.size(); ++k) {
          targets.push_back(trace_normal_form(env, rotate(base, static_cast<std::ptrdiff_t>(k))));
        }
      }
      for (std::size_t k = 0; k < c.size(); ++k) {
        auto const nf = trace_normal_form(env, rotate(c, static_cast<std::ptrdiff_t>(k)));
        if (std::find(targets.begin(), targets.end(), nf) != targets.end()) {
          return true;
        }
      }
      return false;
    }

    Word apply_step(RelationEnv const& env, bool equation, Word const& w,
                    DerivationStep const& s) {
      switch (s.rule) {
        case Rule::lantern: {
          auto const& inst = env.lantern(s.instance);
          Word        repl;
          std::size_t len = s.length;
          if (s.replacement) {
            repl = *s.replacement;
            need(w, s.position, len);
          } else {
            bool const fwd = s.forward.value_or(true);
            Word const lhs = slice(inst.relator(), 0, 4);
            Word const rhs{{inst.interior[0], 1}, {inst.interior[1], 1}, {inst.interior[2], 1}};
            len  = fwd ? 4 : 3;
            repl = fwd ? rhs : lhs;
            need(w, s.position, len);
            if (slice(w, s.position, len) != (fwd ? lhs : rhs)) {
              reject("segment does not match the " + std::string(fwd ? "boundary" : "interior")
                     + " side of lantern '" + inst.name + "'");
            }
          }
          Word const seg = slice(w, s.position, len);
          if (!lantern_consequence(env, inst, concat(seg, inverse(repl)))) {
            reject("'" + to_string(seg) + "' = '" + to_string(repl)
                   + "' is not an instance of lantern '" + inst.name + "'");
          }
          return splice(w, s.position, len, repl);
        }
        case Rule::commute: {
          if (s.to_word) {
            if (!commutation_equivalent(env, w, *s.to_word)) {
              reject("'" + to_string(*s.to_word)
                     + "' is not reachable by commuting disjoint twists");
            }
            return *s.to_word;
          }
          need(w, s.position, 2);
          auto const& x = w[s.position];
          auto const& y = w[s.position + 1];
          if (!env.commute(x.id, y.id)) {
            reject("twists " + x.id + " and " + y.id + " are not declared to commute");
          }
          Word r = w;
          std::swap(r[s.position], r[s.position + 1]);
          return r;
        }
        case Rule::free_cancel: {
          need(w, s.position, 2);
          auto const& x = w[s.position];
          auto const& y = w[s.position + 1];
          if (x.inverse() != y) {
            reject("letters " + to_string(x) + " and " + to_string(y) + " do not cancel");
          }
          return splice(w, s.position, 2, {});
        }
        case Rule::free_insert: {
          need(w, s.position, 0);
          if (s.letter.id.empty() || (s.letter.exp != 1 && s.letter.exp != -1)) {
            reject("free-insert needs an id and an exponent of +1 or -1");
          }
          return splice(w, s.position, 0, {s.letter, s.letter.inverse()});
        }
        case Rule::conjugation_fold: {
          need(w, s.position, 3);
          auto const& f = w[s.position];
          auto const& a = w[s.position + 1];
          auto const& h = w[s.position + 2];
          if (h != f.inverse()) {
            reject("'" + to_string(slice(w, s.position, 3)) + "' is not a conjugate");
          }
          return splice(w, s.position, 3, {{conjugate_id(f.id, f.exp, a.id), a.exp}});
        }
        case Rule::conjugation_unfold: {
          need(w, s.position, 1);
          auto const& l     = w[s.position];
          auto const  parts = parse_conjugate_id(l.id);
          if (!parts) {
            reject("'" + l.id + "' is not a conjugate twist");
          }
          Letter const f{parts->f, parts->exp};
          return splice(w, s.position, 1, {f, {parts->a, l.exp}, f.inverse()});
        }
        case Rule::isotopy_replace: {
          need(w, s.position, 1);
          auto const& l = w[s.position];
          if (l.id == s.to_id || !env.isotopic(l.id, s.to_id)) {
            reject("no declared isotopy between " + l.id + " and " + s.to_id);
          }
          Word r            = w;
          r[s.position].id = s.to_id;
          return r;
        }
        case Rule::rotate:
          if (!equation) {
            reject("rotation is only valid for relators (equation mode)");
          }
          return rotate(w, s.by);
      }
      reject("unknown rule");
    }
  }  // namespace

  std::string to_string(Rule r) {
    for (auto const& [rule, name] : rule_names) {
      if (rule == r) {
        return name;
      }
    }
    return "?";
  }

  std::optional<Rule> parse_rule(std::string const& name) {
    for (auto const& [rule, n] : rule_names) {
      if (name == n) {
        return rule;
      }
    }
    return std::nullopt;
  }

  DerivationResult check_derivation(RelationEnv const& env, DerivationScript const& script) {
    DerivationResult res;
    Word             w = script.start;
    for (std::size_t i = 0; i < script.steps.size(); ++i) {
      auto const& step = script.steps[i];
      try {
        w = apply_step(env, script.equation, w, step);
        if (step.expect && *step.expect != w) {
          reject("expected '" + to_string(*step.expect) + "', got '" + to_string(w) + "'");
        }
      } catch (StepFailure const& f) {
        res.failed_step = i;
        res.rule        = to_string(step.rule);
        res.message     = f.message;
        res.final_word  = w;
        return res;
      } catch (DomainError const& e) {
        res.failed_step = i;
        res.rule        = to_string(step.rule);
        res.message     = e.what();
        res.final_word  = w;
        return res;
      }
    }
    res.final_word = w;
    bool const matches = script.equation ? is_rotation(w, script.end) : w == script.end;
    if (!matches) {
      res.failed_step = script.steps.size();
      res.rule        = "end";
      res.message     = "derived '" + to_string(w) + "' but the script ends with '"
                    + to_string(script.end) + "'";
      return res;
    }
    res.ok = true;
    return res;
  }

  ////////////////////////////////////////////////////////////////////////
  // Homology shadow
  ////////////////////////////////////////////////////////////////////////

  HClass resolve_class(std::string const& id, std::map<std::string, HClass> const& assignment) {
    if (auto it = assignment.find(id); it != assignment.end()) {
      return it->second;
    }
    if (auto parts = parse_conjugate_id(id)) {
      auto const f = resolve_class(parts->f, assignment);
      auto const a = resolve_class(parts->a, assignment);
      return transvection(f, parts->exp).apply(a);
    }
    throw DomainError("no homology class assigned to twist '" + id + "'");
  }

  std::vector<TwistFactor> to_twist_factors(Word const&                          w,
                                            std::map<std::string, HClass> const& assignment) {
    std::vector<TwistFactor> r;
    r.reserve(w.size());
    for (auto const& l : w) {
      r.push_back({resolve_class(l.id, assignment), l.exp});
    }
    return r;
  }

  bool sp_shadow_check(int genus, Word const& lhs, Word const& rhs,
                       std::map<std::string, HClass> const& assignment) {
    auto const l = to_twist_factors(lhs, assignment);
    auto const r = to_twist_factors(rhs, assignment);
    return word_to_sp(genus, l) == word_to_sp(genus, r);
  }

}  // namespace torelli
