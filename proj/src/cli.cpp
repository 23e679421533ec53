#include "rootposet/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rootposet/exporters.hpp"
#include "rootposet/verify.hpp"

namespace rootposet::cli {

namespace {

struct CommonOptions {
  std::string type;
  std::string format = "table";
  std::string out_path;
  int max_rank = 8;
  unsigned seed = 12345;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool type_required = true) {
  auto* type_opt = cmd->add_option("--type", opts.type, "root system, e.g. E6, D5, or 'all'");
  if (type_required) type_opt->required();
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"table", "json", "dot"}));
  cmd->add_option("--out", opts.out_path, "write output to a file instead of stdout");
  cmd->add_option("--max-rank", opts.max_rank, "rank bound for 'all' sweeps")
      ->check(CLI::Range(1, 8));
  cmd->add_option("--seed", opts.seed, "seed for randomized well-definedness samples");
}

int emit(const CommonOptions& opts, const std::string& text, std::ostream& out,
         std::ostream& err) {
  if (opts.out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) {
    err << "cannot open " << opts.out_path << "\n";
    return 2;
  }
  file << text;
  return 0;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

std::vector<RootSystemSpec> selected_specs(const CommonOptions& opts) {
  if (opts.type == "all") return sweep_specs(opts.max_rank);
  return {RootSystemSpec::parse(opts.type)};
}

std::string info_text(const RootSystem& rs) {
  std::ostringstream os;
  os << rs.spec().name() << ": rank " << rs.rank() << ", " << rs.num_positive()
     << " positive roots, theta " << root_str(rs, rs.theta()) << ", h* " << dual_coxeter(rs)
     << ", Heisenberg " << heisenberg(rs).size() << "\n";
  os << "long simples:";
  for (int i : rs.long_simples()) os << " " << simple_str(i);
  os << "\n";
  auto breve = theta_breve(rs);
  if (breve)
    os << "theta_breve " << root_str(rs, *breve) << ", theta_tilde "
       << root_str(rs, *theta_tilde(rs)) << "\n";
  else
    os << "theta_breve vanishes (type A)\n";
  return os.str();
}

using Renderer = std::function<std::string(const RootSystem&)>;
using JsonRenderer = std::function<Json(const RootSystem&)>;

int run_artifact(const CommonOptions& opts, const Renderer& table, const JsonRenderer& json,
                 std::ostream& out, std::ostream& err) {
  std::ostringstream text;
  for (const RootSystemSpec& spec : selected_specs(opts)) {
    RootSystem rs(spec);
    if (opts.format == "json")
      text << json_text(json(rs));
    else
      text << table(rs);
  }
  return emit(opts, text.str(), out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"root posets, abelian ideals and glorious pairs"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string highlight;
  std::string what = "all";

  auto* info = app.add_subcommand("info", "basic invariants of a root system");
  add_common(info, opts);
  auto* roots = app.add_subcommand("roots", "positive roots in canonical order");
  add_common(roots, opts);
  auto* hasse = app.add_subcommand("hasse", "Hasse diagram as DOT");
  add_common(hasse, opts);
  hasse->add_option("--highlight", highlight,
                    "node set to highlight: 'interval' or 'imin:<k>'");
  auto* ideals_cmd = app.add_subcommand("ideals", "all ideals of the root poset");
  add_common(ideals_cmd, opts);
  auto* abelian = app.add_subcommand("abelian", "abelian ideals with minuscule words");
  add_common(abelian, opts);
  auto* rootlets_cmd = app.add_subcommand("rootlets", "rootlet fibers with extreme ideals");
  add_common(rootlets_cmd, opts);
  auto* glorious_cmd = app.add_subcommand("glorious", "glorious pairs and their edges");
  add_common(glorious_cmd, opts);
  auto* semi = app.add_subcommand("semiglorious", "the semi-glorious pair");
  add_common(semi, opts);
  auto* interval_cmd = app.add_subcommand("interval", "the interval between theta_breve and theta_tilde");
  add_common(interval_cmd, opts);
  auto* tails = app.add_subcommand("tails", "tails and odd roots (types D/E)");
  add_common(tails, opts);
  auto* transitions_cmd = app.add_subcommand("transitions", "transition roots of incident edges");
  add_common(transitions_cmd, opts);
  auto* minimal = app.add_subcommand("minimal-nonabelian", "minimal non-abelian ideals");
  add_common(minimal, opts);
  auto* verify = app.add_subcommand("verify", "run the verification checks");
  add_common(verify, opts, /*type_required=*/false);
  verify->add_flag("--all", "verify the whole sweep up to --max-rank");
  auto* export_cmd = app.add_subcommand("export", "bundle artifacts as JSON");
  add_common(export_cmd, opts);
  export_cmd->add_option("--what", what,
                         "artifact: all, roots, ideals, abelian, rootlets, glorious, "
                         "semiglorious, interval, tails, transitions, minimal-nonabelian");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (info->parsed())
      return run_artifact(opts, info_text, [](const RootSystem& rs) { return roots_json(rs); },
                          out, err);
    if (roots->parsed())
      return run_artifact(opts, render_roots_table,
                          [](const RootSystem& rs) { return roots_json(rs); }, out, err);
    if (hasse->parsed()) {
      std::ostringstream text;
      for (const RootSystemSpec& spec : selected_specs(opts)) {
        RootSystem rs(spec);
        std::vector<RootId> ids;
        if (highlight == "interval") {
          if (auto iv = interval(rs))
            for (const Root& r : iv->members) ids.push_back(rs.id_of(r));
        } else if (highlight.rfind("imin:", 0) == 0) {
          int k = std::stoi(highlight.substr(5));
          RootIdeal fiber_min = i_min(rs, rs.simple_root(k));
          for (RootId id : fiber_min.members()) ids.push_back(id);
        } else if (!highlight.empty()) {
          err << "unknown highlight '" << highlight << "'\n";
          return 2;
        }
        text << hasse_dot(rs, ids);
      }
      return emit(opts, text.str(), out, err);
    }
    if (ideals_cmd->parsed())
      return run_artifact(
          opts,
          [](const RootSystem& rs) {
            std::ostringstream os;
            for (const RootIdeal& ideal : enumerate_ideals(rs)) {
              os << "size=" << ideal.size() << (ideal.abelian() ? " abelian" : "        ")
                 << " min:";
              for (RootId id : ideal.min_elements()) os << " " << root_str(rs, rs.root(id));
              os << "\n";
            }
            return os.str();
          },
          [](const RootSystem& rs) { return ideals_json(rs, enumerate_ideals(rs)); }, out,
          err);
    if (abelian->parsed())
      return run_artifact(
          opts,
          [](const RootSystem& rs) {
            std::ostringstream os;
            for (const RootIdeal& ideal : enumerate_abelian_ideals(rs)) {
              os << "size=" << ideal.size() << " members:";
              for (RootId id : ideal.members()) os << " " << root_str(rs, rs.root(id));
              os << "\n";
            }
            return os.str();
          },
          [](const RootSystem& rs) { return abelian_json(rs); }, out, err);
    if (rootlets_cmd->parsed())
      return run_artifact(
          opts,
          [](const RootSystem& rs) {
            RootletIndex index = RootletIndex::build(rs);
            std::ostringstream os;
            for (RootId mu : index.long_roots()) {
              const RootletFiber& fiber = index.fiber(mu);
              os << root_str(rs, rs.root(mu)) << " | fiber " << fiber.ideal_ids.size()
                 << " | i_min size " << fiber.min_ideal.size() << " | i_max size "
                 << fiber.max_ideal.size() << "\n";
            }
            return os.str();
          },
          [](const RootSystem& rs) { return rootlets_json(rs); }, out, err);
    if (glorious_cmd->parsed())
      return run_artifact(opts, render_glorious_table,
                          [](const RootSystem& rs) { return glorious_json(rs); }, out, err);
    if (semi->parsed())
      return run_artifact(opts, render_semi_glorious_row,
                          [](const RootSystem& rs) { return semi_glorious_json(rs); }, out,
                          err);
    if (interval_cmd->parsed())
      return run_artifact(opts, render_interval,
                          [](const RootSystem& rs) { return interval_json(rs); }, out, err);
    if (tails->parsed())
      return run_artifact(opts, render_tails_row,
                          [](const RootSystem& rs) { return tails_json(rs); }, out, err);
    if (transitions_cmd->parsed())
      return run_artifact(opts, render_transitions_table,
                          [](const RootSystem& rs) { return transitions_json(rs); }, out, err);
    if (minimal->parsed())
      return run_artifact(opts, render_minimal_nonabelian,
                          [](const RootSystem& rs) { return minimal_nonabelian_json(rs); },
                          out, err);
    if (verify->parsed()) {
      VerifyOptions voptions;
      voptions.max_rank = opts.max_rank;
      voptions.seed = opts.seed;
      std::vector<CheckResult> results;
      if (opts.type.empty() || opts.type == "all" || verify->count("--all") > 0) {
        results = verify_all(voptions);
      } else {
        results = verify_type(RootSystemSpec::parse(opts.type), voptions);
      }
      int rc = emit(opts, render_report(results), out, err);
      if (rc != 0) return rc;
      return all_passed(results) ? 0 : 1;
    }
    if (export_cmd->parsed()) {
      std::ostringstream text;
      for (const RootSystemSpec& spec : selected_specs(opts)) {
        RootSystem rs(spec);
        Json bundle;
        bundle["schema"] = 1;
        bundle["type"] = rs.spec().name();
        auto want = [&](const std::string& key) { return what == "all" || what == key; };
        if (want("roots")) bundle["roots"] = roots_json(rs);
        if (want("ideals")) bundle["ideals"] = ideals_json(rs, enumerate_ideals(rs));
        if (want("abelian")) bundle["abelian"] = abelian_json(rs);
        if (want("rootlets")) bundle["rootlets"] = rootlets_json(rs);
        if (want("glorious")) bundle["glorious"] = glorious_json(rs);
        if (want("semiglorious") && !spec.simply_laced())
          bundle["semiglorious"] = semi_glorious_json(rs);
        if (want("interval")) bundle["interval"] = interval_json(rs);
        if (want("tails") && (spec.family == Family::D || spec.family == Family::E))
          bundle["tails"] = tails_json(rs);
        if (want("transitions")) bundle["transitions"] = transitions_json(rs);
        if (want("minimal-nonabelian"))
          bundle["minimal_nonabelian"] = minimal_nonabelian_json(rs);
        text << json_text(bundle);
      }
      return emit(opts, text.str(), out, err);
    }
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SimplyLaced& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotDEType& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const TypeAUnsupported& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace rootposet::cli
