#pragma once

// JSON documents: factorizations, derivation scripts and result rendering.

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "torelli/calculus.hpp"
#include "torelli/words.hpp"

namespace torelli::io {

  using nlohmann::json;

  // An integer array of length 2g. Throws SchemaError otherwise.
  HClass class_from_json(json const& j, int genus, std::string const& where);
  json   class_to_json(HClass const& v);

  // {"genus": g, "items": [{"kind": "bp" | "sep" | "sip", ...}, ...]}
  TorelliFactorization factorization_from_json(json const& j);
  json                 factorization_to_json(TorelliFactorization const& f);

  // Array of {"id": string, "exp": +-1}, or a string accepted by parse_word.
  Word word_from_json(json const& j, std::string const& where);
  json word_to_json(Word const& w);

  struct DerivationDocument {
    RelationEnv                   env;
    DerivationScript              script;
    // Sides compared by the homology shadow: start and end for word scripts,
    // both equations for equation scripts.
    std::vector<std::pair<Word, Word>> shadow_sides;
    std::optional<int>            genus;
    std::map<std::string, HClass> classes;
  };
  DerivationDocument derivation_from_json(json const& j);

  // {"genus": g, "twists": [{"class": [...], "exp": k}, ...]}
  std::pair<int, std::vector<TwistFactor>> twists_from_json(json const& j);

  json to_json(HClass const& v);
  json to_json(Wedge3 const& x);
  json to_json(BoolPoly const& p);
  json to_json(SpMatrix const& m);

  // Throws SchemaError if the file is missing or not JSON.
  json load_json_file(std::filesystem::path const& path);

  // Directory of shipped fixtures; TORELLI_FIXTURES overrides the built-in
  // location.
  std::filesystem::path fixture_dir();
  std::filesystem::path fixture_path(std::string const& name);

}  // namespace torelli::io
