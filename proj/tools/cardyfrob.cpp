// cardyfrob: command-line front end. Every command prints one JSON document on stdout.
//   exit 0  success
//   exit 1  an axiom or consistency check failed
//   exit 2  input could not be parsed or validated
//   exit 3  an enumeration or order bound was exceeded

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <cardyfrob/cardyfrob.hpp>
#include <cardyfrob/io.hpp>

namespace {

using namespace cardyfrob;
using json = nlohmann::json;

struct RunConfig {
  std::string command;
  std::string group_file;
  std::string surface_file;
  std::string subgroup_generators;
  bool dump = false;
  bool trace = false;
  std::size_t order_bound = kDefaultOrderBound;
  std::uint64_t tuple_bound = kDefaultTupleBound;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

SubgroupPair load(const RunConfig& cfg) {
  return io::load_pair(io::parse_group_document(io::read_json_file(cfg.group_file)), cfg.order_bound);
}

std::vector<SurfaceSpec> load_surfaces(const RunConfig& cfg, const FieldCatalog& catalog) {
  auto specs = io::parse_surfaces(io::read_json_file(cfg.surface_file));
  io::check_labels(catalog, specs);
  return specs;
}

int run_info(const RunConfig& cfg) {
  emit(io::info_to_json(load(cfg)));
  return 0;
}

int run_fields(const RunConfig& cfg) {
  emit(io::catalog_to_json(build_catalog(load(cfg).nset)));
  return 0;
}

int run_algebra(const RunConfig& cfg) {
  const auto h = build_cardy(load(cfg).nset);
  json j;
  j["A"] = io::algebra_to_json(h.a, cfg.dump);
  j["B"] = io::algebra_to_json(h.b, cfg.dump);
  if (cfg.dump) {
    json phi = json::object();
    for (std::size_t alpha = 0; alpha < h.a.dim(); ++alpha)
      phi[h.a.label(alpha)] = io::element_to_json(h.apply_phi(h.a.basis(alpha)));
    j["phi"] = phi;
    j["U"] = io::element_to_json(h.u);
  }
  emit(j);
  return 0;
}

int run_check(const RunConfig& cfg) {
  const auto pair = load(cfg);
  const auto h = build_cardy(pair.nset);
  Report report = verify_all(h);
  report.add("oracle.casimir_is_commutator_sum", casimir_is_commutator_sum(h));
  json j;
  j["report"] = io::report_to_json(report);
  j["all_passed"] = report.all_passed();
  j["X_size"] = pair.overgroups.size();
  j["dim_A"] = h.a.dim();
  j["dim_B"] = h.b.dim();
  emit(j);
  return report.all_passed() ? 0 : 1;
}

int run_hurwitz(const RunConfig& cfg) {
  const auto h = build_cardy(load(cfg).nset);
  const auto specs = load_surfaces(cfg, h.catalog);
  Rational value = 1;
  json traces = json::array();
  for (const auto& s : specs) {
    const auto r = evaluate(h, s, cfg.trace);
    value *= r.value;
    traces.push_back(r.trace);
  }
  json j;
  j["hurwitz"] = to_string(value);
  if (cfg.trace) j["trace"] = traces;
  emit(j);
  return 0;
}

int run_oracle(const RunConfig& cfg) {
  const auto h = build_cardy(load(cfg).nset);
  const auto specs = load_surfaces(cfg, h.catalog);
  Rational value = 1;
  std::uint64_t tuples = 0;
  for (const auto& s : specs) {
    const auto r = oracle_for(h, s, cfg.tuple_bound);
    value *= r.value;
    tuples += r.tuples_examined;
  }
  emit({{"hurwitz_oracle", to_string(value)}, {"tuples", tuples}});
  return 0;
}

int run_hecke(const RunConfig& cfg) {
  const auto pair = load(cfg);
  json gens;
  try {
    gens = json::parse(cfg.subgroup_generators);
  } catch (const json::parse_error& e) {
    throw io::ParseError("--subgroup-generators", std::string("invalid JSON: ") + e.what());
  }
  const Subgroup s = io::parse_subgroup_generators(pair.g, gens, "--subgroup-generators");
  const auto r = hecke_check(pair.g, s);
  json j;
  j["S_order"] = s.order();
  j["double_cosets"] = r.double_cosets;
  j["dim_B"] = r.b.dim();
  j["report"] = io::report_to_json(r.report);
  j["all_passed"] = r.report.all_passed();
  emit(j);
  return r.report.all_passed() ? 0 : 1;
}

int dispatch(const RunConfig& cfg) {
  if (cfg.command == "info") return run_info(cfg);
  if (cfg.command == "fields") return run_fields(cfg);
  if (cfg.command == "algebra") return run_algebra(cfg);
  if (cfg.command == "check") return run_check(cfg);
  if (cfg.command == "hurwitz") return run_hurwitz(cfg);
  if (cfg.command == "oracle") return run_oracle(cfg);
  return run_hecke(cfg);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cardy-Frobenius algebras of finite groups and Hurwitz numbers of seamed surfaces"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group_file, "group document (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--order-bound", cfg.order_bound, "maximum |G| accepted");
    return sub;
  };
  common(app.add_subcommand("info", "orders of G, K, N_G(K), N and X"));
  common(app.add_subcommand("fields", "interior and boundary field catalog"));
  common(app.add_subcommand("algebra", "the algebras A and B"))->add_flag("--dump", cfg.dump, "structure constants and forms");
  common(app.add_subcommand("check", "verify every algebra axiom"));
  auto* hurwitz = common(app.add_subcommand("hurwitz", "Hurwitz number of a surface spec"));
  hurwitz->add_option("--surface", cfg.surface_file, "surface spec or list of specs (JSON)")->required()->check(CLI::ExistingFile);
  hurwitz->add_flag("--trace", cfg.trace, "include intermediate A and B elements");
  auto* oracle = common(app.add_subcommand("oracle", "brute-force evaluation of a surface spec"));
  oracle->add_option("--surface", cfg.surface_file, "surface spec or list of specs (JSON)")->required()->check(CLI::ExistingFile);
  oracle->add_option("--tuple-bound", cfg.tuple_bound, "maximum tuple enumeration");
  auto* hecke = common(app.add_subcommand("hecke", "compare B for G/S with double-coset convolution"));
  hecke->add_option("--subgroup-generators", cfg.subgroup_generators, "JSON array of permutations generating S")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return dispatch(cfg);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return 3;
  } catch (const LogicError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return 1;
  }
}
