#include "golod/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "golod/golod.hpp"

namespace golod::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MonomialIdeal load_ideal(const std::string& path) {
  try {
    return parse_ideal(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

SimplicialComplex load_complex(const std::string& path) {
  try {
    return parse_complex(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json sigma_json(VertexSet sigma) {
  json out = json::array();
  for (auto v : sigma.vertices()) out.push_back(v + 1);
  return out;
}

json betti_json(const BettiTable& table) {
  json rows = json::array();
  for (const auto& [key, dim] : table.entries()) {
    json row{{"i", key.first}, {"multidegree", to_string(key.second)}, {"dim", dim}};
    if (key.second.is_squarefree()) {
      json sigma = json::array();
      for (auto v : key.second.support()) sigma.push_back(v + 1);
      row["sigma"] = sigma;
    } else {
      row["sigma"] = nullptr;
    }
    rows.push_back(row);
  }
  return rows;
}

json triviality_json(const TrivialityReport& report) {
  json out{{"verdict", report.trivial ? "trivial" : "nontrivial"},
           {"pairs_checked", report.pairs_checked},
           {"products_computed", report.products_computed}};
  if (report.witness) {
    out["witness"] = {{"sigma_a", sigma_json(report.witness->a.sigma)},
                      {"p_a", report.witness->a.p},
                      {"sigma_b", sigma_json(report.witness->b.sigma)},
                      {"p_b", report.witness->b.p}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

std::string describe_class(const CohomologyClass& c) {
  return "(sigma=" + to_string(c.sigma) + ", p=" + std::to_string(c.p) + ", degree " + std::to_string(c.total_degree()) + ")";
}

void print_triviality(std::ostream& out, const TrivialityReport& report) {
  out << (report.trivial ? "trivial" : "nontrivial") << '\n';
  out << "pairs checked: " << report.pairs_checked << ", products computed: " << report.products_computed << '\n';
  if (report.witness) {
    out << "witness: " << describe_class(report.witness->a) << " * " << describe_class(report.witness->b) << " = "
        << describe_class(report.witness->product) << " is not a coboundary\n";
  }
}

struct Options {
  std::string field_text;
  std::string output;
  std::string monomial_order = "lex";
  std::size_t vertex_cap = kDefaultVertexCap;
  bool json = false;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong gcd certificates, symbolic powers and moment-angle cohomology for monomial ideals", "golod"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  if (const char* env = std::getenv(kFieldEnv)) opt.field_text = env;
  if (opt.field_text.empty()) opt.field_text = "q";
  app.add_option("--field", opt.field_text, "Coefficient field: q or a prime (default from $GOLOD_FIELD, else q)");
  app.add_option("-o,--output", opt.output, "Write results to this file instead of stdout");
  app.add_option("--monomial-order", opt.monomial_order, "lex or grlex, optionally with precedence, e.g. 'lex x2>x1>x3'");
  app.add_option("--vertex-cap", opt.vertex_cap, "Largest ground set enumerated by moment-angle and Hochster commands");
  app.add_flag("--json", opt.json, "JSON output where supported");

  std::string path_a, path_b;
  long k = 0;
  std::size_t d = 0;
  long kmax = 0;
  std::string order_choice = "prop21";
  std::string engine = "taylor";
  std::string search_mode = "exhaustive";
  std::size_t search_cap = 8;
  std::size_t taylor_cap = 15;
  std::uint64_t seed = 0;
  std::size_t count = 10;
  std::string kind = "ideal";
  IdealShape shape{6, 6, 3};
  std::size_t max_facets = 4;
  std::string out_dir;

  std::ostringstream result;
  int status = kSuccess;
  std::function<void()> action;

  auto field = [&] { return FieldSpec::parse(opt.field_text); };
  auto monomial_order = [&](std::size_t width) { return parse_order_spec(opt.monomial_order, width); };

  auto binary_ideal = [&](const char* name, const char* help, MonomialIdeal (*op)(const MonomialIdeal&, const MonomialIdeal&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("A", path_a, "Ideal file")->required();
    sub->add_option("B", path_b, "Ideal file")->required();
    sub->callback([&, op] { action = [&, op] { result << format_ideal(op(load_ideal(path_a), load_ideal(path_b))); }; });
  };
  binary_ideal("product", "Product of two ideals", &product);
  binary_ideal("intersect", "Intersection of two ideals", &intersection);

  {
    auto* sub = app.add_subcommand("power", "Ordinary power I^k");
    sub->add_option("I", path_a, "Ideal file")->required();
    sub->add_option("-k", k, "Exponent")->required();
    sub->callback([&] { action = [&] { result << format_ideal(power(load_ideal(path_a), k)); }; });
  }
  {
    auto* sub = app.add_subcommand("sympow", "Symbolic power I^(k) of a squarefree ideal");
    sub->add_option("I", path_a, "Ideal file")->required();
    sub->add_option("-k", k, "Exponent")->required();
    sub->callback([&] { action = [&] { result << format_ideal(symbolic_power(load_ideal(path_a), k)); }; });
  }
  {
    auto* sub = app.add_subcommand("polarize", "Polarization of an ideal");
    sub->add_option("I", path_a, "Ideal file")->required();
    sub->callback([&] {
      action = [&] {
        const auto ideal = load_ideal(path_a);
        const auto budgets = polarization_budgets(ideal);
        result << "# variables:";
        std::size_t next = 1;
        for (std::size_t i = 0; i < budgets.size(); ++i)
          for (Exponent j = 1; j <= budgets[i]; ++j)
            result << " x" << next++ << "=x" << i + 1 << "," << j;
        result << '\n' << format_ideal(polarize_ideal(ideal));
      };
    });
  }
  {
    auto* sub = app.add_subcommand("check-gcd", "Strong gcd-condition certificate");
    sub->add_option("I", path_a, "Ideal file")->required();
    sub->add_option("--order", order_choice, "prop21 (degree/monomial-order rule), search, or a file with an 'order:' line");
    sub->add_option("--search-mode", search_mode, "exhaustive or greedy")->check(CLI::IsMember({"exhaustive", "greedy"}));
    sub->add_option("--search-cap", search_cap, "Generator cap for exhaustive search");
    sub->callback([&] {
      action = [&] {
        const auto ideal = load_ideal(path_a);
        std::optional<GeneratorOrder> order;
        std::optional<MonomialOrderSpec> spec;
        std::string source;
        if (order_choice == "prop21") {
          spec = monomial_order(ideal.width());
          order = build_product_order(ideal, *spec);
          source = "degree-then-monomial-order";
        } else if (order_choice == "search") {
          const auto mode = search_mode == "greedy" ? SearchMode::greedy : SearchMode::exhaustive;
          auto found = search_order(ideal, mode, search_cap);
          if (found.outcome == OrderSearchResult::Outcome::none) {
            result << "no order exists (exhaustive)\n";
            status = kNegative;
            return;
          }
          if (found.outcome == OrderSearchResult::Outcome::unknown) {
            err << "inconclusive: greedy search found no passing order\n";
            status = kError;
            return;
          }
          order = std::move(found.order);
          source = "search-" + search_mode;
        } else {
          const auto text = read_file(order_choice);
          std::string order_line;
          std::istringstream lines(text);
          for (std::string line; std::getline(lines, line);)
            if (line.rfind("order:", 0) == 0) order_line = line.substr(6);
          if (order_line.empty()) throw ParseError(order_choice + ": no 'order:' line");
          order = parse_generator_order(ideal, order_line);
          source = "file";
        }
        const auto report = check_strong_gcd(*order);
        if (!report.passed) {
          result << "fail: no witness for pair " << to_string(report.failing_pair->first) << " "
                 << to_string(report.failing_pair->second) << " under order " << order->to_string() << '\n';
          status = kNegative;
          return;
        }
        result << format_certificate(make_certificate(*order, report, spec, source));
      };
    });
  }
  {
    auto* sub = app.add_subcommand("verify-cert", "Re-verify a strong gcd certificate file");
    sub->add_option("CERT", path_a, "Certificate file")->required();
    sub->callback([&] {
      action = [&] {
        const auto check = verify_certificate(parse_certificate(read_file(path_a)));
        if (check.valid) {
          result << "valid\n";
        } else {
          result << "invalid: " << check.reason << '\n';
          status = kNegative;
        }
      };
    });
  }
  {
    auto* sub = app.add_subcommand("betti", "Multigraded Betti numbers");
    sub->add_option("I", path_a, "Ideal file")->required();
    sub->add_option("--engine", engine, "taylor, hochster or both")->check(CLI::IsMember({"taylor", "hochster", "both"}));
    sub->add_option("--taylor-cap", taylor_cap, "Generator cap for the Taylor complex");
    sub->callback([&] {
      action = [&] {
        const auto ideal = load_ideal(path_a);
        const auto f = field();
        std::optional<BettiTable> taylor, hochster;
        if (engine != "hochster") taylor = taylor_betti(ideal, f, taylor_cap);
        if (engine != "taylor") hochster = hochster_betti(ideal, f, opt.vertex_cap);
        const bool agree = !(taylor && hochster) || *taylor == *hochster;
        if (opt.json) {
          json doc{{"field", f.name()}};
          if (taylor) doc["taylor"] = betti_json(*taylor);
          if (hochster) doc["hochster"] = betti_json(*hochster);
          if (taylor && hochster) doc["agree"] = agree;
          result << doc.dump(2) << '\n';
        } else {
          if (taylor) result << (hochster ? "# taylor\n" : "") << taylor->to_string();
          if (hochster) result << (taylor ? "# hochster\n" : "") << hochster->to_string();
          if (taylor && hochster) result << (agree ? "engines agree\n" : "engines disagree\n");
        }
        if (!agree) status = kNegative;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("series", "Golod bound series (1+t)^n / (1 - sum_{i>=1} b_i t^{i+1})");
    sub->add_option("I", path_a, "Ideal file")->required();
    sub->add_option("-d", d, "Truncation degree (<= 64)")->required();
    sub->add_option("--taylor-cap", taylor_cap, "Generator cap for the Taylor complex");
    sub->callback([&] {
      action = [&] {
        const auto ideal = load_ideal(path_a);
        if (ideal.is_unit()) throw ImproperIdeal("series needs a proper ideal");
        std::vector<std::size_t> totals{1};
        if (!ideal.is_zero()) totals = taylor_betti(ideal, field(), taylor_cap).totals();
        result << golod_bound_series(totals, ideal.width(), d).to_string() << '\n';
      };
    });
  }
  {
    auto* sub = app.add_subcommand("dual", "Alexander dual of a complex");
    sub->add_option("C", path_a, "Complex file")->required();
    sub->callback([&] { action = [&] { result << format_complex(alexander_dual(load_complex(path_a))); }; });
  }
  {
    auto* sub = app.add_subcommand("join", "Join of two complexes on disjoint grounds");
    sub->add_option("C1", path_a, "Complex file")->required();
    sub->add_option("C2", path_b, "Complex file")->required();
    sub->callback([&] {
      action = [&] {
        const auto joined = join(load_complex(path_a), load_complex(path_b));
        result << "# vertex map:";
        for (std::size_t v = 0; v < joined.origin.size(); ++v)
          result << ' ' << v + 1 << "=" << (joined.origin[v].first == 0 ? "a" : "b") << joined.origin[v].second + 1;
        result << '\n' << format_complex(joined.complex);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("sr-ideal", "Stanley-Reisner ideal of a complex");
    sub->add_option("C", path_a, "Complex file")->required();
    sub->callback([&] { action = [&] { result << format_ideal(stanley_reisner_ideal(load_complex(path_a))); }; });
  }
  {
    auto* sub = app.add_subcommand("sr-complex", "Complex of a squarefree ideal");
    sub->add_option("I", path_a, "Ideal file")->required();
    sub->callback([&] { action = [&] { result << format_complex(complex_from_squarefree_ideal(load_ideal(path_a))); }; });
  }
  {
    auto* sub = app.add_subcommand("ma-trivial", "Is the product on the moment-angle cohomology trivial?");
    sub->add_option("C", path_a, "Complex file")->required();
    sub->callback([&] {
      action = [&] {
        const auto report = check_triviality(load_complex(path_a), field(), opt.vertex_cap);
        if (opt.json) {
          result << triviality_json(report).dump(2) << '\n';
        } else {
          print_triviality(result, report);
        }
        if (!report.trivial) status = kNegative;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("join-dual-pipeline", "Build (C1^v * C2^v)^v, compare ideals, check triviality");
    sub->add_option("C1", path_a, "Complex file")->required();
    sub->add_option("C2", path_b, "Complex file")->required();
    sub->callback([&] {
      action = [&] {
        const auto report = verify_join_dual_pipeline(load_complex(path_a), load_complex(path_b), field(), opt.vertex_cap);
        if (opt.json) {
          json doc{{"gamma", format_complex(report.gamma)},
                   {"product_ideal", to_string(report.product_ideal)},
                   {"gamma_ideal", to_string(report.gamma_ideal)},
                   {"ideals_agree", report.ideals_agree},
                   {"triviality", triviality_json(report.triviality)}};
          result << doc.dump(2) << '\n';
        } else {
          result << "gamma: " << to_string(report.gamma) << '\n';
          result << "I_C1 * I_C2 = " << to_string(report.product_ideal) << '\n';
          result << "I_gamma     = " << to_string(report.gamma_ideal) << '\n';
          result << (report.ideals_agree ? "ideals agree\n" : "ideals differ\n");
          print_triviality(result, report.triviality);
        }
        if (!report.ideals_agree || !report.triviality.trivial) status = kNegative;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("probe-sympow", "Least c with I^(k) = I^(c) I^(k-c) for each k");
    sub->add_option("I", path_a, "Ideal file")->required();
    sub->add_option("--kmax", kmax, "Largest k (<= 10)")->required();
    sub->callback([&] { action = [&] { result << probe_symbolic_factorization(load_ideal(path_a), kmax).to_string(); }; });
  }
  {
    auto* sub = app.add_subcommand("gen-corpus", "Deterministic random corpus");
    sub->add_option("--seed", seed, "Random seed")->required();
    sub->add_option("--count", count, "Number of items");
    sub->add_option("--kind", kind, "ideal, squarefree or complex")->check(CLI::IsMember({"ideal", "squarefree", "complex"}));
    sub->add_option("--vars", shape.vars, "Number of variables / vertices");
    sub->add_option("--gens", shape.max_gens, "Maximum number of generators");
    sub->add_option("--degree", shape.max_degree, "Maximum generator degree");
    sub->add_option("--facets", max_facets, "Maximum number of random faces per complex");
    sub->add_option("--out", out_dir, "Write one file per item into this directory");
    sub->callback([&] {
      action = [&] {
        CorpusRng rng(seed);
        for (std::size_t item = 0; item < count; ++item) {
          std::string text;
          std::string ext = ".ideal";
          if (kind == "ideal") {
            text = format_ideal(random_ideal(rng, shape));
          } else if (kind == "squarefree") {
            text = format_ideal(random_squarefree_ideal(rng, shape));
          } else {
            text = format_complex(random_complex(rng, shape.vars, max_facets));
            ext = ".complex";
          }
          if (out_dir.empty()) {
            result << "# item " << item << '\n' << text;
          } else {
            std::filesystem::create_directories(out_dir);
            char name[32];
            std::snprintf(name, sizeof name, "item_%04zu", item);
            const auto path = std::filesystem::path(out_dir) / (name + ext);
            std::ofstream file(path, std::ios::binary);
            if (!file) throw Error("cannot write " + path.string());
            file << text;
            result << path.string() << '\n';
          }
        }
      };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }

  try {
    field();  // validate flags before doing any work
    if (action) action();
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }

  if (opt.output.empty()) {
    out << result.str();
  } else {
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << opt.output << '\n';
      return kError;
    }
    file << result.str();
  }
  return status;
}

}  // namespace golod::cli
