#include "torelli/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "torelli/io.hpp"

namespace torelli::cli {

  namespace {
    using io::json;

    struct Options {
      std::string                format = "text";
      std::optional<int>         genus;
      std::optional<std::uint64_t> seed;
      int                        samples = 32;
      std::string                input;
      std::string                inline_json;
      std::string                fixture;
      std::string                word;
    };

    json read_document(Options const& o, std::istream& in) {
      int const given = !o.input.empty() + !o.inline_json.empty() + !o.fixture.empty();
      if (given != 1) {
        throw SchemaError("give exactly one of an input path, --json or --fixture");
      }
      if (!o.fixture.empty()) {
        return io::load_json_file(io::fixture_path(o.fixture));
      }
      try {
        if (!o.inline_json.empty()) {
          return json::parse(o.inline_json);
        }
        if (o.input == "-") {
          return json::parse(in);
        }
      } catch (json::parse_error const& e) {
        throw SchemaError(std::string("input is not valid JSON: ") + e.what());
      }
      return io::load_json_file(o.input);
    }

    TorelliFactorization read_factorization(Options const& o, std::istream& in) {
      auto f = io::factorization_from_json(read_document(o, in));
      if (o.genus && *o.genus != f.genus) {
        throw SchemaError("--genus " + std::to_string(*o.genus)
                          + " does not match the document genus "
                          + std::to_string(f.genus));
      }
      return f;
    }

    void emit(Options const& o, std::ostream& out, std::string const& text, json const& j) {
      if (o.format == "json") {
        out << j.dump(2) << '\n';
      } else {
        out << text << '\n';
      }
    }

    int cmd_check(Options const& o, std::istream& in, std::ostream& out) {
      auto const f       = read_factorization(o, in);
      auto const tau     = tau_word(f);
      auto const sigma   = sigma_word(f);
      auto const t       = contraction(tau);
      bool       has_sip = false;
      std::vector<ChillingworthItem> chill;
      for (auto const& item : f.items) {
        if (auto const* sip = std::get_if<SignedSIP>(&item)) {
          has_sip = true;
          // Cross-checks sigma against the boundary classes.
          sip_in_bcj_kernel(sip->sip);
        } else if (auto const* bp = std::get_if<SignedBP>(&item)) {
          chill.emplace_back(*bp);
        } else {
          chill.emplace_back(std::get<SepTwistData>(item));
        }
      }
      bool const chillingworth
          = has_sip ? t.is_zero() : chillingworth_membership(f.genus, chill);
      json const report{{"johnson_kernel", tau.is_zero()},
                        {"bcj_kernel", sigma.is_zero()},
                        {"chillingworth_kernel", chillingworth}};
      std::ostringstream text;
      text << "johnson_kernel: " << std::boolalpha << tau.is_zero() << '\n'
           << "bcj_kernel: " << sigma.is_zero() << '\n'
           << "chillingworth_kernel: " << chillingworth;
      emit(o, out, text.str(), report);
      return ok;
    }

    int cmd_derive(Options const& o, std::istream& in, std::ostream& out) {
      auto const doc = io::derivation_from_json(read_document(o, in));
      auto const res = check_derivation(doc.env, doc.script);
      json       j{{"name", doc.script.name},
                   {"ok", res.ok},
                   {"final", to_string(res.final_word)},
                   {"assumptions", doc.script.assumptions}};
      if (!res.ok) {
        j["failed_step"] = res.failed_step;
        j["rule"]        = res.rule;
        j["message"]     = res.message;
        emit(o, out,
             "FAIL step " + std::to_string(res.failed_step) + " (" + res.rule + "): " + res.message,
             j);
        return derivation_failure;
      }
      if (doc.genus) {
        bool shadow = true;
        for (auto const& [lhs, rhs] : doc.shadow_sides) {
          shadow = shadow && sp_shadow_check(*doc.genus, lhs, rhs, doc.classes);
        }
        j["shadow"] = shadow;
        if (!shadow) {
          j["ok"] = false;
          emit(o, out, "FAIL shadow: the two sides act differently on homology", j);
          return derivation_failure;
        }
      }
      emit(o, out, "OK", j);
      return ok;
    }

    int cmd_classify(Options const& o, std::ostream& out) {
      auto const w = parse_ab_word(o.word);
      auto const t = lantern_classify(w);
      emit(o, out, to_string(t),
           {{"word", to_string(w)}, {"reduced", to_string(cyclic_reduce(w))}, {"type", to_string(t)}});
      return ok;
    }

    int cmd_ssip_span(Options const& o, std::ostream& out) {
      if (!o.seed) {
        throw SchemaError("ssip-span is randomized and needs --seed");
      }
      int const  g     = o.genus.value_or(2);
      auto const basis = ssip_span(g, o.samples, *o.seed);
      json       arr   = json::array();
      std::string text = "dimension " + std::to_string(basis.size());
      for (auto const& p : basis) {
        arr.push_back(io::to_json(p));
        text += "\n" + to_string(p);
      }
      emit(o, out, text,
           {{"genus", g}, {"samples", o.samples}, {"seed", *o.seed},
            {"dimension", basis.size()}, {"basis", arr}});
      return ok;
    }

    int cmd_sp_matrix(Options const& o, std::istream& in, std::ostream& out) {
      auto const [g, word] = io::twists_from_json(read_document(o, in));
      if (o.genus && *o.genus != g) {
        throw SchemaError("--genus does not match the document genus");
      }
      auto const         m = word_to_sp(g, word);
      std::ostringstream text;
      for (auto const& row : m.rows()) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          text << (c ? " " : "") << row[c];
        }
        text << '\n';
      }
      text << "torelli: " << std::boolalpha << m.is_identity();
      json j     = io::to_json(m);
      j["torelli"] = m.is_identity();
      emit(o, out, text.str(), j);
      return ok;
    }

    void error_json(std::ostream& err, int code, char const* kind, std::string const& message) {
      err << json{{"error", {{"code", code}, {"kind", kind}, {"message", message}}}}.dump() << '\n';
    }
  }  // namespace

  int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
              std::ostream& err) {
    Options  o;
    CLI::App app{"Johnson and Birman-Craggs-Johnson images of Torelli elements", "torelli"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto add_input = [&o](CLI::App* sub) {
      sub->add_option("input", o.input, "Input document path, or - for stdin");
      sub->add_option("--json", o.inline_json, "Inline input document");
      sub->add_option("--fixture", o.fixture, "Load a shipped fixture by name");
      sub->add_option("--genus", o.genus, "Expected surface genus");
    };

    std::map<std::string, CLI::App*> subs;
    for (auto const& [name, help] :
         std::vector<std::pair<std::string, std::string>>{
             {"tau", "Johnson homomorphism of a factorization"},
             {"sigma", "Birman-Craggs-Johnson homomorphism of a factorization"},
             {"contract", "Contraction C(tau) of a factorization"},
             {"chillingworth", "Chillingworth class t_f = C(tau(f))"},
             {"check", "Kernel membership report"},
             {"derive", "Replay a derivation script"},
             {"sp-matrix", "Symplectic matrix of a word in twists"}}) {
      subs[name] = app.add_subcommand(name, help);
      add_input(subs[name]);
    }
    auto* classify = app.add_subcommand("classify", "Nielsen-Thurston type of a lantern word");
    classify->add_option("word", o.word, "Word in a, b (A, B inverse), e.g. [a,b]")->required();
    auto* span = app.add_subcommand("ssip-span", "Span of separating SIP images under Sp(2g, Z_2)");
    span->add_option("--genus", o.genus, "Surface genus (default 2)");
    span->add_option("--samples", o.samples, "Random symplectic changes of coordinates")
        ->capture_default_str();
    span->add_option("--seed", o.seed, "Random seed (required)");

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return ok;
    } catch (CLI::ParseError const& e) {
      error_json(err, schema_error, "usage", e.what());
      return schema_error;
    }

    try {
      auto active = [&subs](char const* n) { return subs.at(n)->parsed(); };
      if (active("tau")) {
        auto const x = tau_word(read_factorization(o, in));
        emit(o, out, to_string(x), io::to_json(x));
      } else if (active("sigma")) {
        auto const p = sigma_word(read_factorization(o, in));
        emit(o, out, to_string(p), io::to_json(p));
      } else if (active("contract") || active("chillingworth")) {
        auto const t = contraction(tau_word(read_factorization(o, in)));
        emit(o, out, to_string(t), io::to_json(t));
      } else if (active("check")) {
        return cmd_check(o, in, out);
      } else if (active("derive")) {
        return cmd_derive(o, in, out);
      } else if (active("sp-matrix")) {
        return cmd_sp_matrix(o, in, out);
      } else if (classify->parsed()) {
        return cmd_classify(o, out);
      } else if (span->parsed()) {
        return cmd_ssip_span(o, out);
      }
      return ok;
    } catch (SchemaError const& e) {
      error_json(err, schema_error, "schema", e.what());
      return schema_error;
    } catch (json::exception const& e) {
      error_json(err, schema_error, "schema", e.what());
      return schema_error;
    } catch (Error const& e) {
      error_json(err, domain_error, "domain", e.what());
      return domain_error;
    }
  }

}  // namespace torelli::cli
