#include "torelli/io.hpp"

#include <cstdlib>
#include <fstream>

#ifndef TORELLI_FIXTURE_DIR
#define TORELLI_FIXTURE_DIR "fixtures"
#endif

namespace torelli::io {

  namespace {
    [[noreturn]] void schema(std::string const& where, std::string const& what) {
      throw SchemaError(where + ": " + what);
    }

    json const& field(json const& j, char const* key, std::string const& where) {
      if (!j.is_object()) {
        schema(where, "expected an object");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        schema(where, std::string("missing field '") + key + "'");
      }
      return *it;
    }

    std::int64_t integer(json const& j, std::string const& where) {
      if (!j.is_number_integer()) {
        schema(where, "expected an integer");
      }
      return j.get<std::int64_t>();
    }

    int sign_of(json const& j, std::string const& where) {
      auto it = j.find("sign");
      if (it == j.end()) {
        return 1;
      }
      auto const s = integer(*it, where + ".sign");
      if (s != 1 && s != -1) {
        schema(where + ".sign", "must be 1 or -1");
      }
      return static_cast<int>(s);
    }

    std::string str(json const& j, std::string const& where) {
      if (!j.is_string()) {
        schema(where, "expected a string");
      }
      return j.get<std::string>();
    }

    json const& array(json const& j, std::string const& where) {
      if (!j.is_array()) {
        schema(where, "expected an array");
      }
      return j;
    }

    std::vector<SymplecticPair> basis_from_json(json const& j, int genus,
                                                std::string const& where) {
      std::vector<SymplecticPair> basis;
      std::size_t                 k = 0;
      for (auto const& pair : array(j, where)) {
        auto const w = where + "[" + std::to_string(k++) + "]";
        if (!pair.is_array() || pair.size() != 2) {
          schema(w, "expected a pair [a, b]");
        }
        basis.emplace_back(class_from_json(pair[0], genus, w + "[0]"),
                           class_from_json(pair[1], genus, w + "[1]"));
      }
      return basis;
    }

    json basis_to_json(std::vector<SymplecticPair> const& basis) {
      json j = json::array();
      for (auto const& [a, b] : basis) {
        j.push_back({class_to_json(a), class_to_json(b)});
      }
      return j;
    }

    SignedBP bp_from_json(json const& j, int genus, std::string const& where) {
      return {{class_from_json(field(j, "class", where), genus, where + ".class"),
               basis_from_json(field(j, "basis", where), genus, where + ".basis")},
              sign_of(j, where)};
    }

    json bp_to_json(SignedBP const& b) {
      return {{"kind", "bp"},
              {"sign", b.sign},
              {"class", class_to_json(b.bp.pair_class)},
              {"basis", basis_to_json(b.bp.basis)}};
    }

    SepTwistData sep_from_json(json const& j, int genus, std::string const& where) {
      if (j.is_array()) {
        return {basis_from_json(j, genus, where), 1};
      }
      return {basis_from_json(field(j, "basis", where), genus, where + ".basis"),
              sign_of(j, where)};
    }

    std::optional<std::vector<SignedBP>> bp_list(json const& j, char const* key, int genus,
                                                 std::string const& where) {
      auto it = j.find(key);
      if (it == j.end() || it->is_null()) {
        return std::nullopt;
      }
      std::vector<SignedBP> r;
      std::size_t           k = 0;
      for (auto const& item : array(*it, where + "." + key)) {
        r.push_back(bp_from_json(item, genus,
                                 where + "." + key + "[" + std::to_string(k++) + "]"));
      }
      return r;
    }

    SIPData sip_from_json(json const& j, int genus, std::string const& where) {
      auto const& b = array(field(j, "boundary", where), where + ".boundary");
      if (b.size() != 4) {
        schema(where + ".boundary", "a lantern has four boundary classes");
      }
      SIPData s;
      for (std::size_t i = 0; i < 4; ++i) {
        s.boundary[i]
            = class_from_json(b[i], genus, where + ".boundary[" + std::to_string(i) + "]");
      }
      s.five_bp = bp_list(j, "five_bp", genus, where);
      s.two_bp  = bp_list(j, "two_bp", genus, where);
      if (auto it = j.find("separating_pair"); it != j.end() && !it->is_null()) {
        auto const w = where + ".separating_pair";
        s.separating_pair
            = SeparatingPair{sep_from_json(field(*it, "c", w), genus, w + ".c"),
                             sep_from_json(field(*it, "image", w), genus, w + ".image")};
      }
      return s;
    }
  }  // namespace

  HClass class_from_json(json const& j, int genus, std::string const& where) {
    if (!j.is_array()) {
      schema(where, "a homology class is an integer array");
    }
    if (j.size() != 2 * static_cast<std::size_t>(genus)) {
      schema(where, "expected " + std::to_string(2 * genus)
                        + " coordinates for genus " + std::to_string(genus) + ", got "
                        + std::to_string(j.size()));
    }
    std::vector<std::int64_t> coords;
    for (std::size_t i = 0; i < j.size(); ++i) {
      coords.push_back(integer(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return HClass(std::move(coords));
  }

  json class_to_json(HClass const& v) {
    return json(std::vector<std::int64_t>(v.coords().begin(), v.coords().end()));
  }

  namespace {
    int genus_from_json(json const& j, std::string const& where) {
      auto const g = integer(field(j, "genus", where), where + ".genus");
      if (g < 1 || g > Z2Vector::max_genus) {
        schema(where + ".genus", "must be between 1 and " + std::to_string(Z2Vector::max_genus));
      }
      return static_cast<int>(g);
    }
  }  // namespace

  TorelliFactorization factorization_from_json(json const& j) {
    TorelliFactorization f;
    f.genus = genus_from_json(j, "document");
    std::size_t k = 0;
    for (auto const& item : array(field(j, "items", "document"), "items")) {
      auto const where = "items[" + std::to_string(k++) + "]";
      auto const kind  = str(field(item, "kind", where), where + ".kind");
      if (kind == "bp") {
        f.items.emplace_back(bp_from_json(item, f.genus, where));
      } else if (kind == "sep") {
        f.items.emplace_back(sep_from_json(item, f.genus, where));
      } else if (kind == "sip") {
        f.items.emplace_back(SignedSIP{sip_from_json(item, f.genus, where), sign_of(item, where)});
      } else {
        schema(where + ".kind", "unknown item kind '" + kind + "'");
      }
    }
    return f;
  }

  json factorization_to_json(TorelliFactorization const& f) {
    json items = json::array();
    for (auto const& item : f.items) {
      if (auto const* bp = std::get_if<SignedBP>(&item)) {
        items.push_back(bp_to_json(*bp));
      } else if (auto const* sep = std::get_if<SepTwistData>(&item)) {
        items.push_back({{"kind", "sep"}, {"sign", sep->sign}, {"basis", basis_to_json(sep->basis)}});
      } else {
        auto const& [s, sign] = std::get<SignedSIP>(item);
        json j{{"kind", "sip"}, {"sign", sign}, {"boundary", json::array()}};
        for (auto const& b : s.boundary) {
          j["boundary"].push_back(class_to_json(b));
        }
        for (auto const& [key, list] : {std::pair{"five_bp", &s.five_bp}, std::pair{"two_bp", &s.two_bp}}) {
          if (*list) {
            json arr = json::array();
            for (auto const& b : **list) {
              arr.push_back(bp_to_json(b));
            }
            j[key] = arr;
          }
        }
        if (s.separating_pair) {
          j["separating_pair"] = {{"c", basis_to_json(s.separating_pair->c.basis)},
                                  {"image", basis_to_json(s.separating_pair->image.basis)}};
        }
        items.push_back(j);
      }
    }
    return {{"genus", f.genus}, {"items", items}};
  }

  Word word_from_json(json const& j, std::string const& where) {
    if (j.is_string()) {
      return parse_word(j.get<std::string>());
    }
    Word        w;
    std::size_t k = 0;
    for (auto const& l : array(j, where)) {
      auto const lw  = where + "[" + std::to_string(k++) + "]";
      auto const exp = integer(field(l, "exp", lw), lw + ".exp");
      if (exp != 1 && exp != -1) {
        schema(lw + ".exp", "must be 1 or -1");
      }
      w.push_back({str(field(l, "id", lw), lw + ".id"), static_cast<int>(exp)});
    }
    return w;
  }

  json word_to_json(Word const& w) {
    json j = json::array();
    for (auto const& l : w) {
      j.push_back({{"id", l.id}, {"exp", l.exp}});
    }
    return j;
  }

  namespace {
    template <std::size_t N>
    std::array<std::string, N> ids(json const& j, std::string const& where) {
      if (!j.is_array() || j.size() != N) {
        schema(where, "expected " + std::to_string(N) + " curve ids");
      }
      std::array<std::string, N> r;
      for (std::size_t i = 0; i < N; ++i) {
        r[i] = str(j[i], where + "[" + std::to_string(i) + "]");
      }
      return r;
    }

    std::size_t index(json const& j, char const* key, std::string const& where) {
      auto const v = integer(field(j, key, where), where + "." + key);
      if (v < 0) {
        schema(where + "." + key, "must be nonnegative");
      }
      return static_cast<std::size_t>(v);
    }

    DerivationStep step_from_json(json const& j, std::string const& where) {
      DerivationStep s;
      auto const     name = str(field(j, "rule", where), where + ".rule");
      auto const     rule = parse_rule(name);
      if (!rule) {
        schema(where + ".rule", "unknown rule '" + name + "'");
      }
      s.rule = *rule;
      switch (s.rule) {
        case Rule::lantern:
          s.instance = str(field(j, "instance", where), where + ".instance");
          s.position = index(j, "position", where);
          if (j.contains("replacement")) {
            s.length      = index(j, "length", where);
            s.replacement = word_from_json(j["replacement"], where + ".replacement");
          } else {
            auto const dir = j.contains("direction")
                                 ? str(j["direction"], where + ".direction")
                                 : std::string("forward");
            if (dir != "forward" && dir != "backward") {
              schema(where + ".direction", "must be 'forward' or 'backward'");
            }
            s.forward = dir == "forward";
          }
          break;
        case Rule::commute:
          if (j.contains("to")) {
            s.to_word = word_from_json(j["to"], where + ".to");
          } else {
            s.position = index(j, "position", where);
          }
          break;
        case Rule::free_insert: {
          s.position   = index(j, "position", where);
          s.letter.id  = str(field(j, "id", where), where + ".id");
          auto const e = integer(field(j, "exp", where), where + ".exp");
          if (e != 1 && e != -1) {
            schema(where + ".exp", "must be 1 or -1");
          }
          s.letter.exp = static_cast<int>(e);
          break;
        }
        case Rule::isotopy_replace:
          s.position = index(j, "position", where);
          s.to_id    = str(field(j, "to", where), where + ".to");
          break;
        case Rule::rotate:
          s.by = integer(field(j, "by", where), where + ".by");
          break;
        default:
          s.position = index(j, "position", where);
          break;
      }
      if (j.contains("expect")) {
        s.expect = word_from_json(j["expect"], where + ".expect");
      }
      return s;
    }

    std::pair<Word, Word> equation(json const& j, std::string const& where) {
      return {word_from_json(field(j, "lhs", where), where + ".lhs"),
              word_from_json(field(j, "rhs", where), where + ".rhs")};
    }
  }  // namespace

  DerivationDocument derivation_from_json(json const& j) {
    DerivationDocument doc;
    auto&              sc = doc.script;
    if (j.contains("name")) {
      sc.name = str(j["name"], "name");
    }
    auto const mode = j.contains("mode") ? str(j["mode"], "mode") : std::string("word");
    if (mode != "word" && mode != "equation") {
      schema("mode", "must be 'word' or 'equation'");
    }
    sc.equation = mode == "equation";

    if (auto it = j.find("env"); it != j.end()) {
      auto const& env = *it;
      if (env.contains("commuting_pairs")) {
        std::size_t k = 0;
        for (auto const& p : array(env["commuting_pairs"], "env.commuting_pairs")) {
          auto const pr = ids<2>(p, "env.commuting_pairs[" + std::to_string(k++) + "]");
          doc.env.add_commuting(pr[0], pr[1]);
        }
      }
      if (env.contains("lanterns")) {
        std::size_t k = 0;
        for (auto const& l : array(env["lanterns"], "env.lanterns")) {
          auto const w = "env.lanterns[" + std::to_string(k++) + "]";
          doc.env.add_lantern({str(field(l, "name", w), w + ".name"),
                               ids<4>(field(l, "boundary", w), w + ".boundary"),
                               ids<3>(field(l, "interior", w), w + ".interior")});
        }
      }
      if (env.contains("isotopies")) {
        std::size_t k = 0;
        for (auto const& p : array(env["isotopies"], "env.isotopies")) {
          auto const pr = ids<2>(p, "env.isotopies[" + std::to_string(k++) + "]");
          doc.env.add_isotopy(pr[0], pr[1]);
        }
      }
    }

    if (sc.equation) {
      auto const start = equation(field(j, "start", "document"), "start");
      auto const end   = equation(field(j, "end", "document"), "end");
      sc.start         = concat(start.first, inverse(start.second));
      sc.end           = concat(end.first, inverse(end.second));
      doc.shadow_sides = {start, end};
    } else {
      sc.start         = word_from_json(field(j, "start", "document"), "start");
      sc.end           = word_from_json(field(j, "end", "document"), "end");
      doc.shadow_sides = {{sc.start, sc.end}};
    }

    std::size_t k = 0;
    for (auto const& s : array(field(j, "steps", "document"), "steps")) {
      sc.steps.push_back(step_from_json(s, "steps[" + std::to_string(k++) + "]"));
    }
    if (j.contains("assumptions")) {
      for (auto const& a : array(j["assumptions"], "assumptions")) {
        sc.assumptions.push_back(str(a, "assumptions[]"));
      }
    }
    if (auto it = j.find("classes"); it != j.end()) {
      int const g = genus_from_json(*it, "classes");
      doc.genus   = g;
      auto const& assignment = field(*it, "assignment", "classes");
      if (!assignment.is_object()) {
        schema("classes.assignment", "expected an object");
      }
      for (auto const& [id, v] : assignment.items()) {
        doc.classes.emplace(id, class_from_json(v, g, "classes.assignment." + id));
      }
    }
    return doc;
  }

  std::pair<int, std::vector<TwistFactor>> twists_from_json(json const& j) {
    int const                g = genus_from_json(j, "document");
    std::vector<TwistFactor> word;
    std::size_t              k = 0;
    for (auto const& t : array(field(j, "twists", "document"), "twists")) {
      auto const w = "twists[" + std::to_string(k++) + "]";
      word.push_back({class_from_json(field(t, "class", w), g, w + ".class"),
                      t.contains("exp") ? integer(t["exp"], w + ".exp") : 1});
    }
    return {g, word};
  }

  json to_json(HClass const& v) {
    return {{"coords", class_to_json(v)}, {"text", to_string(v)}};
  }

  json to_json(Wedge3 const& x) {
    json terms = json::array();
    for (auto const& [m, c] : x.terms()) {
      terms.push_back({{"coef", c},
                       {"monomial",
                        {basis_name(x.genus(), m[0]), basis_name(x.genus(), m[1]),
                         basis_name(x.genus(), m[2])}}});
    }
    return {{"genus", x.genus()}, {"terms", terms}, {"text", to_string(x)}};
  }

  json to_json(BoolPoly const& p) {
    json terms = json::array();
    for (auto m : p.terms()) {
      json mono = json::array();
      for (std::size_t i = 0; i < 2 * static_cast<std::size_t>(p.genus()); ++i) {
        if ((m >> i) & 1U) {
          mono.push_back(basis_name(p.genus(), i));
        }
      }
      terms.push_back(mono);
    }
    return {{"genus", p.genus()}, {"terms", terms}, {"text", to_string(p)}};
  }

  json to_json(SpMatrix const& m) {
    return {{"genus", m.genus()}, {"rows", m.rows()}};
  }

  json load_json_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw SchemaError("cannot open '" + path.string() + "'");
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw SchemaError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
  }

  std::filesystem::path fixture_dir() {
    if (char const* env = std::getenv("TORELLI_FIXTURES"); env != nullptr && *env != '\0') {
      return env;
    }
    return TORELLI_FIXTURE_DIR;
  }

  std::filesystem::path fixture_path(std::string const& name) {
    if (name.empty() || name.find('/') != std::string::npos || name.find("..") != std::string::npos) {
      throw SchemaError("invalid fixture name '" + name + "'");
    }
    auto p = fixture_dir() / name;
    if (p.extension() != ".json") {
      p += ".json";
    }
    return p;
  }

}  // namespace torelli::io
