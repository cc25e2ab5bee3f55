// Command-line front end: exact densities, verification, constructions and searches.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pierce/closed_forms.hpp"
#include "pierce/constructions.hpp"
#include "pierce/search.hpp"
#include "pierce/solver.hpp"
#include "pierce/verifier.hpp"

using json = nlohmann::ordered_json;
using namespace pierce;

namespace {

enum ExitCode : int { kOk = 0, kRejected = 1, kInputError = 2, kRefused = 3 };

Offset default_span_cap() {
  if (const char* env = std::getenv("PIERCE_SPAN_CAP")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("PIERCE_SPAN_CAP is not an integer: ") + env);
    }
  }
  return kDefaultSpanCap;
}

Family load_family(const std::string& spec, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot read " + file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_family_lines(buffer.str());
  }
  if (spec.empty()) throw ParseError("no family given");
  return parse_family(spec);
}

Cell2D parse_vector(const std::string& text) {
  const Family2D f = parse_family_2d("(0,0),(" + text + ")");
  // The ship re-anchors at its smallest cell, so undo that to recover the vector.
  const auto& cells = f[0].cells();
  const Cell2D a = cells[0];
  const Cell2D b = cells[1];
  if (a == Cell2D{}) return b;
  return {-a.x, -a.y};
}

std::string decimal(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

json stats_json(const SolveStats& s) {
  return {{"nodes", s.nodes},
          {"edges", s.edges},
          {"cycle_length", s.cycle_length},
          {"iterations", s.iterations},
          {"reduced_span", s.reduced_span},
          {"scale", s.scale}};
}

json report_json(const SearchReport& r) {
  json j{{"n", r.n}, {"k", r.k}, {"span_budget", r.span_budget}, {"families", r.families_examined},
         {"noncanonical", r.noncanonical_families}};
  if (r.max) j["max"] = {{"density", to_string(r.max->density)}, {"witness", to_string(r.max->family)}};
  if (r.min) j["min"] = {{"density", to_string(r.min->density)}, {"witness", to_string(r.min->family)}};
  return j;
}

void print_construction(const Construction& c, bool as_json) {
  if (as_json) {
    std::cout << json{{"density", to_string(c.density)}, {"pattern", to_string(c.pattern)}}.dump(2) << '\n';
  } else {
    std::cout << "density " << to_string(c.density) << '\n' << "pattern " << to_string(c.pattern) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact minimum densities of shooting patterns for families of ships on the integers"};
  app.require_subcommand(1);

  bool as_json = false;
  Offset span_cap = 0;
  std::string family_spec;
  std::string family_file;
  std::function<int()> action;

  Offset cap_default = kDefaultSpanCap;
  try {
    cap_default = default_span_cap();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  span_cap = cap_default;

  auto add_family_args = [&](CLI::App* cmd) {
    cmd->add_option("family", family_spec, "Family, e.g. \"0,1;0,2,4\"");
    cmd->add_option("-f,--file", family_file, "Read the family from a file (one ship per line)");
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "Structured output");
    cmd->add_option("--span-cap", span_cap, "Largest reduced span the solver accepts")->capture_default_str();
  };

  // density
  auto* density = app.add_subcommand("density", "Exact density and an optimal periodic pattern");
  add_family_args(density);
  add_common(density);
  density->callback([&] {
    action = [&] {
      const Family f = load_family(family_spec, family_file);
      const SolveResult r = exact_density(f, {.span_cap = span_cap});
      if (as_json) {
        std::cout << json{{"family", to_string(f)},
                          {"density", to_string(r.density)},
                          {"pattern", to_string(r.pattern)},
                          {"stats", stats_json(r.stats)}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << to_string(r.density) << '\n'
                  << "pattern " << to_string(r.pattern) << '\n'
                  << "nodes " << r.stats.nodes << " edges " << r.stats.edges << " cycle " << r.stats.cycle_length
                  << " span " << r.stats.reduced_span << " scale " << r.stats.scale << '\n';
      }
      return int{kOk};
    };
  });

  // verify
  std::string pattern_text;
  bool two_d = false;
  auto* verify = app.add_subcommand("verify", "Check that a periodic pattern hits every translate");
  verify->add_option("--pattern", pattern_text, "\"p:r1,r2,...\" or, with --2d, \"p,q:(i,j),...\"")->required();
  verify->add_flag("--2d", two_d, "Planar pattern and family");
  add_family_args(verify);
  verify->add_flag("--json", as_json, "Structured output");
  verify->callback([&] {
    action = [&] {
      json out;
      bool ok = false;
      if (two_d) {
        const Pattern2D p = parse_pattern_2d(pattern_text);
        const Family2D f = parse_family_2d(family_spec);
        const auto miss = verify_pattern_2d(p, f);
        ok = !miss;
        out = {{"pierces", ok}, {"density", to_string(p.density())}};
        if (miss) {
          out["witness"] = {{"ship", miss->ship}, {"shift", {miss->shift.x, miss->shift.y}}};
          if (!as_json) {
            std::cout << "miss ship " << miss->ship << " (" << to_string(f[miss->ship]) << ") shift ("
                      << miss->shift.x << ',' << miss->shift.y << ")\n";
          }
        }
      } else {
        const Pattern1D p = parse_pattern_1d(pattern_text);
        const Family f = load_family(family_spec, family_file);
        const auto miss = verify_pattern_1d(p, f);
        ok = !miss;
        out = {{"pierces", ok}, {"density", to_string(p.density())}};
        if (miss) {
          out["witness"] = {{"ship", miss->ship}, {"shift", miss->shift}};
          if (!as_json) {
            std::cout << "miss ship " << miss->ship << " (" << to_string(f[miss->ship]) << ") n=" << miss->shift
                      << '\n';
          }
        }
      }
      if (as_json) {
        std::cout << out.dump(2) << '\n';
      } else if (ok) {
        std::cout << "ok density " << out["density"].get<std::string>() << '\n';
      }
      return ok ? int{kOk} : int{kRejected};
    };
  });

  // search
  std::int64_t n = 1;
  std::int64_t k = 2;
  Offset max_span = 0;
  unsigned workers = 1;
  std::string results_path;
  std::uint64_t checkpoint_every = 256;
  auto* search = app.add_subcommand("search", "Extreme densities over all families of n ships of size k");
  search->add_option("--n", n, "Number of ships")->required();
  search->add_option("--k", k, "Cells per ship")->required();
  search->add_option("--max-span", max_span, "Span budget per ship")->required();
  search->add_option("--workers", workers, "Worker threads")->capture_default_str();
  search->add_option("--results", results_path, "Per-family results file (resumable)");
  search->add_option("--checkpoint-every", checkpoint_every, "Families between checkpoints")->capture_default_str();
  add_common(search);
  search->callback([&] {
    action = [&] {
      SearchOptions opts;
      opts.solve.span_cap = span_cap;
      opts.workers = workers;
      opts.checkpoint_every = checkpoint_every;
      if (!results_path.empty()) opts.results_file = results_path;
      if (!as_json) {
        opts.progress = [](std::uint64_t done, std::uint64_t total) {
          std::cerr << "\rsolved " << done << '/' << total << std::flush;
          if (done == total) std::cerr << '\n';
        };
      }
      const SearchReport r = compute_extremes(n, k, max_span, opts);
      if (as_json) {
        std::cout << report_json(r).dump(2) << '\n';
      } else {
        if (r.max) std::cout << "max " << to_string(r.max->density) << " witness " << to_string(r.max->family) << '\n';
        if (r.min) std::cout << "min " << to_string(r.min->density) << " witness " << to_string(r.min->family) << '\n';
        std::cout << "families " << r.families_examined << " (noncanonical " << r.noncanonical_families << ")\n";
      }
      return int{kOk};
    };
  });

  // table
  std::int64_t max_n = 3;
  std::int64_t k_min = 2;
  std::int64_t k_max = 6;
  Offset budget = 11;
  auto* table = app.add_subcommand("table", "Toughest densities for n ships of size k, span budget (total - n)");
  table->add_option("--max-n", max_n)->capture_default_str();
  table->add_option("--k-min", k_min)->capture_default_str();
  table->add_option("--k-max", k_max)->capture_default_str();
  table->add_option("--budget", budget, "Total budget; each row uses budget - n")->capture_default_str();
  table->add_option("--workers", workers)->capture_default_str();
  add_common(table);
  table->callback([&] {
    action = [&] {
      SearchOptions opts;
      opts.solve.span_cap = span_cap;
      opts.workers = workers;
      const auto rows = toughest_table(max_n, k_min, k_max, budget, opts);
      if (as_json) {
        json out = json::array();
        for (const auto& r : rows) out.push_back(report_json(r));
        std::cout << out.dump(2) << '\n';
      } else {
        for (const auto& r : rows) {
          std::cout << "n=" << r.n << " k=" << r.k << " span<=" << r.span_budget << " max "
                    << (r.max ? to_string(r.max->density) : "-") << " witness "
                    << (r.max ? to_string(r.max->family) : "-") << " families " << r.families_examined << '\n';
        }
      }
      return int{kOk};
    };
  });

  // reflections
  Offset max_a = 5;
  auto* reflections = app.add_subcommand("reflections", "Densities of {[0,a,a+b], reflection} for coprime b <= a");
  reflections->add_option("--max-a", max_a)->capture_default_str();
  add_common(reflections);
  reflections->callback([&] {
    action = [&] {
      const auto report = check_theorem32(max_a, {.span_cap = span_cap});
      if (as_json) {
        json cases = json::array();
        for (const auto& c : report.cases) {
          cases.push_back({{"a", c.a}, {"b", c.b}, {"family", to_string(c.family)}, {"density", to_string(c.density)}});
        }
        std::cout << json{{"holds", report.holds}, {"cases", cases}}.dump(2) << '\n';
      } else {
        for (const auto& c : report.cases) {
          std::cout << "a=" << c.a << " b=" << c.b << ' ' << to_string(c.family) << ' ' << to_string(c.density)
                    << '\n';
        }
        std::cout << (report.holds ? "holds" : "FAILS") << '\n';
      }
      return report.holds ? int{kOk} : int{kRejected};
    };
  });

  // formula
  auto* formula = app.add_subcommand("formula", "Closed-form densities");
  formula->require_subcommand(1);
  std::string ship_a;
  std::string ship_b;
  std::string vec_u;
  std::string vec_v;
  auto* f22 = formula->add_subcommand("two-2ships", "Two ships of two cells each");
  f22->add_option("first", ship_a, "e.g. \"0,2\"")->required();
  f22->add_option("second", ship_b, "e.g. \"0,3\"")->required();
  f22->callback([&] {
    action = [&] {
      const Ship s1 = parse_family(ship_a)[0];
      const Ship s2 = parse_family(ship_b)[0];
      std::cout << to_string(two_2ships_density(s1, s2)) << '\n';
      return int{kOk};
    };
  });
  auto* ftough = formula->add_subcommand("toughest", "Toughest family of n two-cell ships");
  ftough->add_option("--n", n)->required();
  ftough->callback([&] {
    action = [&] {
      std::cout << to_string(toughest_2ships_value(n)) << " witness " << to_string(toughest_2ships_family(n)) << '\n';
      return int{kOk};
    };
  });
  auto* feasy = formula->add_subcommand("easiest", "Easiest family of n ships of size k");
  feasy->add_option("--n", n)->required();
  feasy->add_option("--k", k)->required();
  feasy->callback([&] {
    action = [&] {
      const auto witness = easiest_family(n, k);
      std::cout << to_string(easiest_value(n, k)) << " witness " << to_string(witness.family) << " pattern "
                << to_string(witness.pattern) << '\n';
      return int{kOk};
    };
  });
  auto* f2d = formula->add_subcommand("two-2ships-2d", "Planar ships [0,u] and [0,v]");
  f2d->add_option("--u", vec_u, "e.g. \"1,0\"")->required();
  f2d->add_option("--v", vec_v, "e.g. \"0,1\"")->required();
  f2d->callback([&] {
    action = [&] {
      std::cout << to_string(two_2ships_density_2d(parse_vector(vec_u), parse_vector(vec_v))) << '\n';
      return int{kOk};
    };
  });
  auto* f_reflection = formula->add_subcommand("reflection-2d", "Planar [0,u,v] together with [0,-u,-v]");
  f_reflection->add_option("--u", vec_u)->required();
  f_reflection->add_option("--v", vec_v)->required();
  f_reflection->callback([&] {
    action = [&] {
      const auto r = three_ship_reflection_2d(parse_vector(vec_u), parse_vector(vec_v), {.span_cap = span_cap});
      std::cout << to_string(r.density) << '\n';
      if (r.lattice_pattern) std::cout << "pattern " << to_string(*r.lattice_pattern) << '\n';
      if (r.collinear_family) std::cout << "collinear " << to_string(*r.collinear_family) << '\n';
      return int{kOk};
    };
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Bounds on the toughest density for n ships of size k (floats)");
  bounds->add_option("--n", n)->required();
  bounds->add_option("--k", k)->required();
  bounds->add_flag("--json", as_json);
  bounds->callback([&] {
    action = [&] {
      const BoundsReport r = bounds_Mkn(n, k);
      const double rational_part = boost::rational_cast<double>(r.upper_rational_part);
      const bool rational_binds = rational_part <= r.upper_log_part;
      if (as_json) {
        std::cout << json{{"n", r.n},
                          {"k", r.k},
                          {"lower", r.lower},
                          {"lower_vacuous", r.lower_vacuous},
                          {"upper", r.upper},
                          {"upper_rational_part", to_string(r.upper_rational_part)},
                          {"upper_log_part", r.upper_log_part},
                          {"easiest", to_string(easiest_value(n, k))}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << "lower " << decimal(r.lower) << (r.lower_vacuous ? " (vacuous)" : "") << '\n';
        if (rational_binds) {
          std::cout << "upper " << to_string(r.upper_rational_part) << '\n';
        } else {
          std::cout << "upper " << decimal(r.upper) << '\n';
        }
        std::cout << "upper_log " << decimal(r.upper_log_part) << '\n'
                  << "upper_rational " << to_string(r.upper_rational_part) << '\n'
                  << "easiest " << to_string(easiest_value(n, k)) << '\n';
      }
      return int{kOk};
    };
  });

  // construct
  auto* construct = app.add_subcommand("construct", "Explicit shooting patterns");
  construct->require_subcommand(1);
  std::vector<Offset> gaps;
  std::optional<std::int64_t> horizon;
  Offset slab_a = 0;
  Offset slab_b = 0;
  std::string ref_name;
  std::int64_t ref_param = 0;
  auto* greedy = construct->add_subcommand("greedy", "Greedy pattern for {[0,a_1],...,[0,a_n]}");
  greedy->add_option("--gaps", gaps, "Comma separated gaps")->delimiter(',')->required();
  greedy->add_option("--horizon", horizon, "Step budget for cycle detection");
  greedy->add_flag("--json", as_json);
  greedy->callback([&] {
    action = [&] {
      print_construction(greedy_two_sided(gaps, horizon), as_json);
      return int{kOk};
    };
  });
  auto* slab = construct->add_subcommand("slab", "Slab pattern for [0,a,a+b] and its reflection");
  slab->add_option("--a", slab_a)->required();
  slab->add_option("--b", slab_b)->required();
  slab->add_flag("--json", as_json);
  slab->callback([&] {
    action = [&] {
      print_construction(slab_pattern(slab_a, slab_b), as_json);
      return int{kOk};
    };
  });
  auto* easiest = construct->add_subcommand("easiest", "Easiest family of n ships of size k and its pattern");
  easiest->add_option("--n", n)->required();
  easiest->add_option("--k", k)->required();
  easiest->callback([&] {
    action = [&] {
      const auto e = easiest_family(n, k);
      std::cout << "family " << to_string(e.family) << '\n'
                << "pattern " << to_string(e.pattern) << '\n'
                << "density " << to_string(e.pattern.density()) << '\n';
      return int{kOk};
    };
  });
  auto* reference = construct->add_subcommand("reference", "Named reference pattern");
  reference->add_option("name", ref_name, "evens | zeros-mod | diag3 | even-rows")->required();
  reference->add_option("--param", ref_param, "n for zeros-mod");
  reference->callback([&] {
    action = [&] {
      const NamedPattern p = reference_pattern(ref_name, ref_param);
      std::visit([](const auto& pattern) {
        std::cout << "pattern " << to_string(pattern) << '\n' << "density " << to_string(pattern.density()) << '\n';
      }, p);
      return int{kOk};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? int{kOk} : int{kInputError};
  }

  try {
    return action ? action() : int{kInputError};
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const SpanCapExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n' << "required span " << e.required() << '\n';
    return kRefused;
  } catch (const MemoryBudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const HorizonExhausted& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
