#include "onefactor/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "onefactor/serialize.hpp"

namespace onefactor::cli {
namespace {

struct RunConfig {
  Int n = 0;
  Int s = 0;
  Int t = 0;
  std::optional<Int> k;
  std::optional<Int> l;
  std::vector<Int> witness;
  std::string format = "json";
  std::string output;
  std::string input;
  std::string dump_path;
  bool even = false;
  bool matrix = false;
  bool expensive = false;
  unsigned threads = 1;
};

// Thrown for user-facing validation failures that are not library errors.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string text_factor(const Factor& f) {
  std::ostringstream os;
  os << "F";
  if (f.index) os << '_' << *f.index;
  if (f.isolated) os << " isolated=" << *f.isolated;
  os << ':';
  for (const Edge& e : f.edges) os << ' ' << e.u << '-' << e.v;
  os << '\n';
  return os.str();
}

std::string render_factors(const std::vector<Factor>& factors, Int n, bool single,
                           const std::string& format) {
  if (format == "dot") return to_dot(factors);
  if (format == "text") {
    std::string s;
    for (const Factor& f : factors) s += text_factor(f);
    return s;
  }
  if (single) return dump(to_json(factors.front())) + "\n";
  return dump(to_json(Factorization{n, factors})) + "\n";
}

std::string cmd_construct(const RunConfig& cfg) {
  const bool even_n = cfg.n % 2 == 0;
  if (even_n && !cfg.even) throw UsageError("even n requires --even");
  if (!even_n && cfg.even) throw UsageError("--even requires an even n");
  std::vector<Factor> factors;
  if (cfg.k) {
    factors.push_back(even_n ? build_modular_factor_even(cfg.n, *cfg.k)
                             : build_modular_factor(cfg.n, *cfg.k));
  } else if (even_n) {
    for (Int k = 0; k < cfg.n; ++k) factors.push_back(build_modular_factor_even(cfg.n, k));
  } else {
    factors = build_modular_factorization(cfg.n).factors;
  }
  return render_factors(factors, cfg.n, cfg.k.has_value(), cfg.format);
}

std::string cmd_pairs(const RunConfig& cfg) {
  if (cfg.n < 3 || cfg.n % 2 == 0) {
    throw UsageError("pairs requires an odd n >= 3, got " + std::to_string(cfg.n));
  }
  const Factorization fz = build_modular_factorization(cfg.n);
  std::optional<PairClassification> witness;
  if (!cfg.witness.empty()) {
    for (Int idx : cfg.witness) {
      if (idx < 0 || idx >= cfg.n) throw UsageError("witness index out of range");
    }
    witness = classify_pair(fz.factors[static_cast<std::size_t>(cfg.witness[0])],
                            fz.factors[static_cast<std::size_t>(cfg.witness[1])]);
  }
  if (cfg.format == "dot") {
    if (!witness) throw UsageError("--format dot needs --witness K L");
    return pair_to_dot(fz.factors[static_cast<std::size_t>(cfg.witness[0])],
                       fz.factors[static_cast<std::size_t>(cfg.witness[1])], witness->witness);
  }

  const Int count = count_perfect_pairs(fz);
  const Int formula = cfg.n * totient(cfg.n) / 2;
  if (cfg.format == "text") {
    std::ostringstream os;
    os << "n=" << cfg.n << " perfect_pairs=" << count << " n*phi(n)/2=" << formula
       << " agree=" << (count == formula ? "true" : "false") << '\n';
    if (witness) {
      os << "witness " << to_string(witness->witness.end) << ':';
      for (Vertex v : witness->witness.vertices) os << ' ' << v;
      os << '\n';
    }
    return os.str();
  }
  Json j{{"n", cfg.n},
         {"perfect_pairs", count},
         {"formula", "n*phi(n)/2"},
         {"formula_value", formula},
         {"agree", count == formula}};
  if (cfg.matrix) {
    Json rows = Json::array();
    for (const Factor& f : fz.factors) {
      Json row = Json::array();
      for (const Factor& g : fz.factors) {
        row.push_back(f.index != g.index && classify_pair(f, g).perfect);
      }
      rows.push_back(row);
    }
    j["matrix"] = rows;
  }
  if (witness) {
    j["witness"] = Json{{"k", cfg.witness[0]},
                        {"l", cfg.witness[1]},
                        {"perfect", witness->perfect},
                        {"walk", to_json(witness->witness)}};
  }
  return dump(j) + "\n";
}

std::string cmd_product(const RunConfig& cfg) {
  if (cfg.k.has_value() != cfg.l.has_value()) throw UsageError("give both --k and --l or neither");
  if (cfg.k) return dump(to_json(build_product_factor(cfg.s, cfg.t, *cfg.k, *cfg.l))) + "\n";
  const Int traversal = count_perfect_product_pairs(cfg.s, cfg.t);
  const Int predicted = predicted_perfect_product_pairs(cfg.s, cfg.t);
  const Int bound = product_bound(cfg.s, cfg.t, cfg.s * totient(cfg.s) / 2,
                                  cfg.t * totient(cfg.t) / 2);
  Json j{{"s", cfg.s},
         {"t", cfg.t},
         {"coprime", gcd(cfg.s, cfg.t) == 1},
         {"traversal_perfect_pairs", traversal},
         {"predicted_perfect_pairs", predicted},
         {"product_bound", bound},
         {"agree", traversal == predicted}};
  return dump(j) + "\n";
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + cfg.output);
  file << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modular (near-)one-factorizations of complete graphs and their perfect pairs",
               "onefactor"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("-o,--output", cfg.output, "Write results to this file instead of stdout");
  app.fallthrough();

  auto* construct = app.add_subcommand("construct", "Build modular factors of K_n");
  construct->add_option("--n", cfg.n, "Graph order")->required();
  construct->add_option("--k", cfg.k, "Factor index; omit for the whole family");
  construct->add_flag("--even", cfg.even, "Build one-factors of an even-order K_n");
  construct->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "dot", "text"}));

  auto* pairs = app.add_subcommand("pairs", "Count perfect pairs of the modular factorization");
  pairs->add_option("--n", cfg.n, "Odd graph order")->required();
  pairs->add_flag("--matrix", cfg.matrix, "Include the per-pair verdict matrix");
  pairs->add_option("--witness", cfg.witness, "Show the union walk of F_K and F_L")
      ->expected(2);
  pairs->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "dot", "text"}));

  auto* product = app.add_subcommand("product", "Product factors D_{k,l} of K_s x K_t");
  product->add_option("--s", cfg.s)->required();
  product->add_option("--t", cfg.t)->required();
  product->add_option("--k", cfg.k);
  product->add_option("--l", cfg.l);

  auto* equiv = app.add_subcommand("equiv", "Match {A_p} with {D_{k,l}} under the CRT");
  equiv->add_option("--s", cfg.s)->required();
  equiv->add_option("--t", cfg.t)->required();

  auto* oracle = app.add_subcommand("oracle", "Exact c(K_n) by exhaustive enumeration");
  oracle->add_option("--n", cfg.n)->required();
  oracle->add_flag("--expensive", cfg.expensive, "Allow n = 9");
  oracle->add_option("--threads", cfg.threads, "Worker threads; 0 = all cores");
  oracle->add_option("--dump", cfg.dump_path, "Write every factorization as NDJSON");

  auto* verify = app.add_subcommand("verify", "Validate a factorization file and classify pairs");
  verify->add_option("--input", cfg.input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kValidationError;
  }

  try {
    std::string text;
    int code = kOk;
    if (*construct) {
      text = cmd_construct(cfg);
    } else if (*pairs) {
      text = cmd_pairs(cfg);
    } else if (*product) {
      text = cmd_product(cfg);
    } else if (*equiv) {
      const EquivalenceReport report = build_equivalence_report(cfg.s, cfg.t);
      text = dump(to_json(report)) + "\n";
      if (!report.all_edge_sets_equal || !report.bounds_equal) code = kValidationError;
    } else if (*oracle) {
      OracleOptions options{cfg.expensive, cfg.threads};
      if (!cfg.dump_path.empty()) {
        std::ofstream file(cfg.dump_path, std::ios::binary);
        if (!file) throw UsageError("cannot open dump file " + cfg.dump_path);
        enumerate_factorizations(
            cfg.n, [&](const Factorization& fz) { file << dump(to_json(fz)) << '\n'; }, options);
      }
      text = dump(to_json(exact_c(cfg.n, options))) + "\n";
    } else if (*verify) {
      std::ifstream file(cfg.input, std::ios::binary);
      if (!file) throw UsageError("cannot open input file " + cfg.input);
      const Factorization fz = factorization_from_json(Json::parse(file));
      const Validity validity = validate_factorization(fz);
      Json j{{"n", fz.n}, {"valid", validity.ok}, {"reason", validity.reason}};
      if (validity) {
        Json verdicts = Json::array();
        Int count = 0;
        for (std::size_t a = 0; a < fz.factors.size(); ++a) {
          for (std::size_t b = a + 1; b < fz.factors.size(); ++b) {
            const bool perfect = classify_pair(fz.factors[a], fz.factors[b]).perfect;
            count += perfect ? 1 : 0;
            verdicts.push_back({a, b, perfect});
          }
        }
        j["perfect_pairs"] = count;
        j["pairs"] = verdicts;
      } else {
        code = kValidationError;
      }
      text = dump(j) + "\n";
    }
    write_output(cfg, text, out);
    return code;
  } catch (const CostGuardRefusal& e) {
    err << "error: " << e.what() << '\n';
    return kCostGuard;
  } catch (const std::exception& e) {
    // Library validation errors, malformed JSON and unreadable files.
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"onefactor"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace onefactor::cli
