#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tenscanon/canon.hpp"
#include "tenscanon/errors.hpp"
#include "tenscanon/json_io.hpp"
#include "tenscanon/mgraph.hpp"
#include "tenscanon/oracle.hpp"
#include "tenscanon/parse.hpp"
#include "tenscanon/print.hpp"

namespace {

using namespace tenscanon;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitResource = 2;
constexpr int kExitOracleDisagreement = 3;

struct Options {
  std::string decls_path;
  std::vector<std::string> expr_paths;
  std::string type_name;
  std::string format = "text";
  std::uint64_t max_orbit = Limits{}.max_orbit_nodes;
  bool oracle_check = false;
  bool timing = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Polynomial load_polynomial(const std::string& path, const DeclPtr& decls) {
  try {
    return parse_polynomial(slurp(path), decls);
  } catch (const ResourceError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

class Timer {
 public:
  std::int64_t millis() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int run_canon(const Options& opt, const DeclPtr& decls, const Limits& limits) {
  Engine engine(decls, limits);
  std::optional<Oracle> oracle;
  if (opt.oracle_check) oracle.emplace(decls, limits);

  bool disagreement = false;
  Json reports = Json::array();
  for (const std::string& path : opt.expr_paths) {
    Polynomial input = load_polynomial(path, decls);
    CanonStats stats;
    Timer timer;
    Polynomial canonical = engine.canonicalize(input, &stats);
    std::optional<std::int64_t> millis;
    if (opt.timing) millis = timer.millis();
    if (oracle && !oracle->equal(canonical, input)) disagreement = true;

    if (opt.format == "json") {
      Json report;
      if (opt.expr_paths.size() > 1) report["file"] = path;
      report.update(canon_report(input, canonical, stats, millis));
      reports.push_back(std::move(report));
    } else {
      std::cout << print(canonical) << "\n";
      if (opt.timing)
        std::cerr << "millis=" << *millis << " orbit=" << stats.orbit
                  << " stabilizer=" << stats.stabilizer << "\n";
    }
  }
  if (opt.format == "json")
    std::cout << (opt.expr_paths.size() > 1 ? reports : reports.front()).dump(2) << "\n";
  return disagreement ? kExitOracleDisagreement : kExitOk;
}

int run_equal(const Options& opt, const DeclPtr& decls, const Limits& limits) {
  Engine engine(decls, limits);
  Polynomial a = load_polynomial(opt.expr_paths[0], decls);
  Polynomial b = load_polynomial(opt.expr_paths[1], decls);
  CanonStats stats;
  Timer timer;
  bool verdict = engine.equal_mod_relations(a, b, &stats);
  std::optional<std::int64_t> millis;
  if (opt.timing) millis = timer.millis();

  bool disagreement = false;
  if (opt.oracle_check) {
    Oracle oracle(decls, limits);
    disagreement = (oracle.equal(a, b) != verdict);
  }

  if (opt.format == "json") {
    Json report{{"equal", verdict}, {"stats", stats_json(stats, millis)}};
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << (verdict ? "equal" : "different") << "\n";
    if (opt.timing)
      std::cerr << "millis=" << *millis << " orbit=" << stats.orbit
                << " stabilizer=" << stats.stabilizer << "\n";
  }
  return disagreement ? kExitOracleDisagreement : kExitOk;
}

int run_basis(const Options& opt, const DeclPtr& decls, const Limits& limits) {
  TypePtr type = decls->require_type(opt.type_name);
  const std::vector<std::string>& frees = decls->declared_free_names();
  if (static_cast<std::size_t>(type->arity()) > frees.size())
    throw InputError("type '" + type->name() + "' has arity " + std::to_string(type->arity()) +
                     " but only " + std::to_string(frees.size()) +
                     " free indices are declared");
  std::vector<Index> indices;
  for (int s = 0; s < type->arity(); ++s) indices.push_back(decls->make_free_index(frees[s]));
  std::sort(indices.begin(), indices.end());
  Engine engine(decls, limits);
  SignatureSpace space = engine.signature_space(Signature(type, std::move(indices)));
  if (opt.format == "json") {
    std::cout << basis_report(space).dump(2) << "\n";
  } else {
    for (int id : space.pattern->basis) std::cout << print(space.symbol(id)) << "\n";
  }
  return kExitOk;
}

int run_graph(const Options& opt, const DeclPtr& decls, const Limits& limits) {
  Polynomial p = load_polynomial(opt.expr_paths[0], decls);
  if (p.term_count() != 1)
    throw InputError(opt.expr_paths[0] + ": the graph command needs exactly one monomial, got " +
                     std::to_string(p.term_count()) + " terms");
  Monomial m = p.monomials().front();
  MonomialGraph graph = build_monomial_graph(m);
  GraphCertificate cert = canonical_graph_certificate(graph, limits);
  std::cout << graph_report(graph, cert).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical forms for tensor polynomials with abstract indices"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* sub, bool with_oracle) {
    sub->add_option("--decls", opt.decls_path, "declaration file (.td)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--max-orbit", opt.max_orbit, "orbit/search node cap")
        ->envname("TENSCANON_MAX_ORBIT")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_flag("--timing", opt.timing, "report wall-clock milliseconds");
    if (with_oracle)
      sub->add_flag("--oracle-check", opt.oracle_check,
                    "cross-check against the brute-force reference; disagreement exits 3");
  };

  CLI::App* canon = app.add_subcommand("canon", "canonicalize polynomial files");
  add_common(canon, true);
  canon->add_option("exprs", opt.expr_paths, "polynomial files (.tp)")
      ->required()
      ->check(CLI::ExistingFile);

  CLI::App* equal = app.add_subcommand("equal", "decide equality modulo all relations");
  add_common(equal, true);
  equal->add_option("exprs", opt.expr_paths, "two polynomial files (.tp)")
      ->expected(2)
      ->required()
      ->check(CLI::ExistingFile);

  CLI::App* basis = app.add_subcommand("basis", "canonical basis of one tensor type");
  add_common(basis, false);
  basis->add_option("--type", opt.type_name, "declared tensor type name")->required();

  CLI::App* graph = app.add_subcommand("graph", "contraction graph of a monomial (JSON)");
  add_common(graph, false);
  graph->add_option("expr", opt.expr_paths, "polynomial file with a single monomial")
      ->expected(1)
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    DeclPtr decls;
    try {
      decls = parse_declarations(slurp(opt.decls_path));
    } catch (const ResourceError&) {
      throw;
    } catch (const Error& e) {
      throw InputError(opt.decls_path + ": " + e.what());
    }
    Limits limits;
    limits.max_orbit_nodes = opt.max_orbit;

    if (app.got_subcommand(canon)) return run_canon(opt, decls, limits);
    if (app.got_subcommand(equal)) return run_equal(opt, decls, limits);
    if (app.got_subcommand(basis)) return run_basis(opt, decls, limits);
    return run_graph(opt, decls, limits);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
