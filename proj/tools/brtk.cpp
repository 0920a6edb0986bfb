// brtk: build objects, run the verification suites, export DOT diagrams.
//
// Exit status: 0 ok, 1 a verification check failed, 2 usage or parse error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "brtk/algebra/inverse.hpp"
#include "brtk/error.hpp"
#include "brtk/io/dot.hpp"
#include "brtk/io/text.hpp"
#include "brtk/verify/suites.hpp"

namespace {

  using namespace brtk;

  constexpr int exit_ok     = 0;
  constexpr int exit_failed = 1;
  constexpr int exit_usage  = 2;

  std::string join(std::vector<std::string> const& words, std::size_t from) {
    std::string out;
    for (std::size_t i = from; i < words.size(); ++i) {
      out += (i > from ? " " : "") + words[i];
    }
    return out;
  }

  std::size_t number(std::string const& word) {
    std::size_t used = 0;
    auto const  n    = std::stoul(word, &used);
    if (used != word.size()) {
      throw ValidationError("expected a number, got '" + word + "'");
    }
    return n;
  }

  std::shared_ptr<FiniteTopology const> space_from(std::vector<std::string> const& w, std::size_t at) {
    if (w.size() == at + 1 && w[at] == "sierpinski") {
      auto t = FiniteTopology::sierpinski();
      t.rename("sierpinski");
      return std::make_shared<FiniteTopology const>(std::move(t));
    }
    if (w.size() == at + 2 && w[at] == "discrete") {
      return std::make_shared<FiniteTopology const>(FiniteTopology::discrete(number(w[at + 1])));
    }
    if (w.size() == at + 2 && w[at] == "indiscrete") {
      return std::make_shared<FiniteTopology const>(FiniteTopology::indiscrete(number(w[at + 1])));
    }
    throw ValidationError("unknown space '" + join(w, at) + "' (sierpinski, discrete <n>, indiscrete <n>)");
  }

  // "group cyclic 4", "semigroup symmetric-inverse 2", "expansion br Z3",
  // "expansion product Z2", "space sierpinski", "gamma discrete 2".
  TextObject from_descriptor(std::vector<std::string> const& w) {
    if (w.size() < 2) {
      throw ValidationError("expected <kind> <descriptor>");
    }
    TextObject o;
    auto const& kind = w[0];
    if (kind == "group") {
      o.kind      = ObjectKind::group;
      o.group     = std::make_shared<FiniteGroup const>(FiniteGroup::from_descriptor(join(w, 1)));
      o.semigroup = std::make_shared<FiniteSemigroup const>(
          FiniteSemigroup::from_table(o.group->table(), o.group->labels(), o.group->name()));
    } else if (kind == "semigroup") {
      if (w.size() != 3 || w[1] != "symmetric-inverse") {
        throw ValidationError("expected 'semigroup symmetric-inverse <n>'");
      }
      o.kind      = ObjectKind::semigroup;
      o.semigroup = symmetric_inverse_monoid(number(w[2])).semigroup;
    } else if (kind == "expansion") {
      if (w.size() < 3 || (w[1] != "br" && w[1] != "product")) {
        throw ValidationError("expected 'expansion br <group>' or 'expansion product <group>'");
      }
      o.kind      = ObjectKind::expansion;
      o.group     = std::make_shared<FiniteGroup const>(FiniteGroup::from_descriptor(join(w, 2)));
      o.expansion = std::make_shared<IntermediateExtension const>(w[1] == "br" ? birget_rhodes(o.group)
                                                                               : semidirect_product(o.group));
      o.semigroup = o.expansion->semigroup_ptr();
    } else if (kind == "space") {
      o.kind  = ObjectKind::space;
      o.space = space_from(w, 1);
    } else if (kind == "gamma") {
      o.kind      = ObjectKind::gamma;
      o.space     = space_from(w, 1);
      o.gamma     = gamma(o.space);
      o.semigroup = o.gamma->elements->semigroup;
    } else {
      throw ValidationError("unknown kind '" + kind + "' (group, semigroup, expansion, space, gamma)");
    }
    return o;
  }

  void write(std::string const& text, std::string const& path) {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
      throw Error("cannot write " + path);
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite inverse semigroups, expansions, premorphisms and topologies on partial homeomorphisms"};
  app.require_subcommand(1);

  std::vector<std::string> descriptor;
  std::string              spec_path, out_path;
  auto* build = app.add_subcommand("build", "construct an object and print it in the text format");
  build->add_option("descriptor", descriptor,
                    "kind and descriptor, e.g. 'group cyclic 4', 'expansion br Z3', 'gamma sierpinski'");
  build->add_option("--spec", spec_path, "read the object from a text file instead");
  build->add_option("--out", out_path, "output file (default stdout)");

  std::string   suite, config_path, format = "records";
  std::uint64_t seed   = 0;
  std::size_t   budget = 0;
  bool          timing = false;
  auto*         verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--config", config_path, "JSON file with sizes, budgets and the seed");
  auto* seed_opt   = verify->add_option("--seed", seed, "seed (overrides the config)");
  auto* budget_opt = verify->add_option("--budget", budget, "search nodes per instance (overrides the config)");
  verify->add_option("--out", out_path, "report file (default stdout)");
  verify->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "records"}));
  verify->add_flag("--timing", timing, "append elapsed milliseconds to the report");

  std::string object_path, diagram = "hasse";
  bool        idempotents_only = false;
  auto*       dot              = app.add_subcommand("export-dot", "write a Cayley graph or Hasse diagram");
  dot->add_option("object", object_path, "object file in the text format")->required();
  dot->add_option("--diagram", diagram, "cayley or hasse")->check(CLI::IsMember({"cayley", "hasse"}));
  dot->add_flag("--idempotents", idempotents_only, "restrict the Hasse diagram to the idempotents");
  dot->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*build) {
      if (spec_path.empty() == descriptor.empty()) {
        std::cerr << "brtk build: give either a descriptor or --spec\n";
        return exit_usage;
      }
      auto const object = spec_path.empty() ? from_descriptor(descriptor) : read_object(spec_path);
      write(format_object(object), out_path);
      return exit_ok;
    }

    if (*verify) {
      auto config = config_path.empty() ? VerifyConfig{} : load_config(config_path);
      if (*seed_opt) {
        config.seed = seed;
      }
      if (*budget_opt) {
        config.budget = budget;
      }
      auto const start  = std::chrono::steady_clock::now();
      auto const report = run_suite(suite, config);
      auto const ms     = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      auto text = report.format(format == "text" ? ReportFormat::text : ReportFormat::records);
      if (timing) {
        text += format == "text" ? "elapsed: " + std::to_string(ms) + " ms\n"
                                 : "{\"elapsed_ms\":" + std::to_string(ms) + "}\n";
      }
      write(text, out_path);
      auto const s = report.summary();
      std::cerr << "brtk verify " << suite << ": " << s.checks << " checks, " << s.fail << " failed, " << ms
                << " ms\n";
      return report.ok() ? exit_ok : exit_failed;
    }

    auto const object = read_object(object_path);
    if (!object.semigroup) {
      std::cerr << "brtk export-dot: a " << kind_name(object.kind) << " has no multiplication\n";
      return exit_usage;
    }
    auto const& S = *object.semigroup;
    if (diagram == "cayley") {
      write(cayley_dot(S), out_path);
    } else if (idempotents_only) {
      write(hasse_dot(S, S.idempotents()), out_path);
    } else {
      write(hasse_dot(S), out_path);
    }
    return exit_ok;
  } catch (ParseError const& e) {
    std::cerr << "brtk: " << (object_path.empty() ? spec_path : object_path) << ": " << e.what() << "\n";
    return exit_usage;
  } catch (std::exception const& e) {
    std::cerr << "brtk: " << e.what() << "\n";
    return exit_usage;
  }
}
