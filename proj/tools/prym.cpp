#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "prym/error.hpp"
#include "prym/generator.hpp"
#include "prym/io.hpp"
#include "prym/oracle.hpp"
#include "prym/verify.hpp"
#include "prym/volumes.hpp"

namespace {

using namespace prym;

enum Exit { kOk = 0, kFailed = 1, kInvalid = 2, kInapplicable = 3, kInfeasible = 4 };

DoubleCover load_valid(const std::string& file) {
  DoubleCover c = io::load_cover(file);
  require_valid(c);
  return c;
}

int cmd_info(const std::string& file) {
  const DoubleCover c = load_valid(file);
  const auto s = dilation_stats(c);
  std::cout << "g_base=" << s.g_base << " g_total=" << s.g_total << " h=" << s.h << " m_d=" << s.m_d
            << " n_d=" << s.n_d << " d=" << s.d;
  if (s.A) std::cout << " A=" << *s.A << " B=" << *s.B << " C=" << *s.C;
  std::cout << " class=" << to_string(s.cover_class) << "\n";
  return kOk;
}

MultiPoly jacobian_by(const MetricGraph& g, const LengthSymbols& symbols, Method method) {
  switch (method) {
    case Method::Combinatorial:
      return jacobian_polynomial(g, symbols);
    case Method::Homology:
      return gram_det(symbols, cycle_basis(g).cycles);
    case Method::Kernel:
      break;
  }
  throw InapplicableError("kernel method applies to the prym target only");
}

int cmd_volume(const std::string& file, const std::string& target, const std::string& method_name,
               const std::string& eval_file, bool json) {
  const Method method = parse_method(method_name);
  const DoubleCover c = load_valid(file);
  std::optional<VolumeReport> report;
  MultiPoly value;
  if (target == "prym") {
    report = prym_volume(c, method);
    value = report->value;
  } else if (target == "jac-base") {
    value = jacobian_by(c.base(), edge_symbols(c.base()), method);
  } else if (target == "jac-cover") {
    value = jacobian_by(c.total(), total_symbols(c), method);
  } else {
    throw ParseError("unknown target '" + target + "'");
  }

  if (!eval_file.empty()) {
    const Rational x = value.eval(io::lengths_from_json(io::read_json(eval_file)));
    if (json)
      std::cout << io::Json{{"target", target}, {"method", to_string(method)}, {"value", to_string(x)}}.dump(2)
                << "\n";
    else
      std::cout << to_string(x) << "\n";
    return kOk;
  }
  if (json) {
    if (report)
      std::cout << io::volume_report_to_json(*report).dump(2) << "\n";
    else
      std::cout << io::Json{{"target", target},
                            {"method", to_string(method)},
                            {"value", io::poly_to_json(value)},
                            {"string", value.to_string()}}
                       .dump(2)
                << "\n";
  } else {
    std::cout << value.to_string() << "\n";
  }
  return kOk;
}

int cmd_ogods(const std::string& file, const std::string& route, bool json) {
  const DoubleCover c = load_valid(file);
  std::vector<Ogod> ogods;
  if (route == "pruned")
    ogods = enumerate_ogods(c);
  else if (route == "classified")
    ogods = enumerate_ogods_classified(c);
  else if (route == "brute")
    ogods = oracle::brute_ogods(c);
  else
    throw ParseError("unknown route '" + route + "'");
  if (json) {
    std::cout << io::ogods_to_json(c.base(), ogods).dump(2) << "\n";
    return kOk;
  }
  for (const auto& o : ogods) {
    std::cout << "{";
    const auto ids = o.edges.ids(c.base());
    for (std::size_t i = 0; i < ids.size(); ++i) std::cout << (i ? "," : "") << ids[i];
    std::cout << "} rank=" << o.rank << "\n";
  }
  return kOk;
}

int cmd_verify(const std::string& file, const std::string& identity) {
  const DoubleCover c = load_valid(file);
  const Report report = verify_identity(c, identity);
  std::cout << io::report_to_json(report).dump(2) << "\n";
  return report.ok() ? kOk : kFailed;
}

int cmd_gen(int vertices, int edges, const std::string& mode, std::uint64_t seed) {
  const VoltageSpec spec = generate_cover(vertices, edges, parse_gen_mode(mode), seed);
  std::cout << io::voltage_to_json(spec).dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Volumes of tropical Jacobians and Prym varieties of harmonic double covers"};
  app.require_subcommand(1);

  std::string file, target = "prym", method = "combinatorial", eval_file, identity = "all", route = "pruned";
  std::string mode = "general";
  bool json = false;
  int vertices = 0, edges = 0;
  std::uint64_t seed = 1;

  auto* info = app.add_subcommand("info", "Print genera, dilation counts and cover class");
  info->add_option("file", file, "Cover JSON file")->required();

  auto* volume = app.add_subcommand("volume", "Compute a volume polynomial");
  volume->add_option("file", file, "Cover JSON file")->required();
  volume->add_option("--target", target, "prym | jac-base | jac-cover")
      ->check(CLI::IsMember({"prym", "jac-base", "jac-cover"}));
  volume->add_option("--method", method, "combinatorial | homology | kernel")
      ->check(CLI::IsMember({"combinatorial", "homology", "kernel"}));
  volume->add_option("--eval", eval_file, "JSON file of edge lengths to evaluate at");
  volume->add_flag("--json", json, "Emit JSON");

  auto* ogods = app.add_subcommand("ogods", "List ogods with their ranks");
  ogods->add_option("file", file, "Cover JSON file")->required();
  ogods->add_option("--route", route, "pruned | classified | brute")
      ->check(CLI::IsMember({"pruned", "classified", "brute"}));
  ogods->add_flag("--json", json, "Emit JSON");

  auto* verify = app.add_subcommand("verify", "Check identities exactly; exit 0 iff all hold");
  verify->add_option("file", file, "Cover JSON file")->required();
  std::vector<std::string> allowed = identity_names();
  allowed.push_back("all");
  verify->add_option("--identity", identity, "Identity name or 'all'")->check(CLI::IsMember(allowed));

  auto* gen = app.add_subcommand("gen", "Emit a random cover as voltage JSON");
  gen->add_option("--vertices", vertices, "Number of base vertices")->required();
  gen->add_option("--edges", edges, "Number of base edges")->required();
  gen->add_option("--mode", mode, "free | edge-free | general")
      ->check(CLI::IsMember({"free", "edge-free", "general"}));
  gen->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*info) return cmd_info(file);
    if (*volume) return cmd_volume(file, target, method, eval_file, json);
    if (*ogods) return cmd_ogods(file, route, json);
    if (*verify) return cmd_verify(file, identity);
    if (*gen) return cmd_gen(vertices, edges, mode, seed);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const InapplicableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInapplicable;
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kFailed;
}
