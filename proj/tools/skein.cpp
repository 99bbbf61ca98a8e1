#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "skein/dimensions.hpp"
#include "skein/invariants.hpp"
#include "skein/serialize.hpp"

using namespace skein;

namespace {

struct CategoryArgs {
  int rank = 2;
  int level = 2;
  std::string mode = "spin";
  std::optional<int> alpha;
  std::string cache_dir;
  std::string calibration = "anchored";
};

void add_category_args(CLI::App* cmd, CategoryArgs& a, bool mode_required = true) {
  cmd->add_option("--rank,-N", a.rank, "rank N")->required();
  cmd->add_option("--level,-K", a.level, "level K")->required();
  auto* m = cmd->add_option("--mode", a.mode, "spin or coh")->check(CLI::IsMember({"spin", "coh"}));
  if (mode_required) m->required();
  cmd->add_option("--alpha", a.alpha, "alpha in d = alpha*beta when several are admissible");
  cmd->add_option("--cache-dir", a.cache_dir, "category cache directory")->envname("SKEIN_CACHE_DIR");
  cmd->add_option("--calibration", a.calibration, "twist calibration family")
      ->check(CLI::IsMember({"anchored", "unanchored", "linear"}));
}

Params params_of(const CategoryArgs& a) {
  return build_params(a.rank, a.level, parse_mode(a.mode), a.alpha);
}

CategoryData category_of(const CategoryArgs& a) {
  std::optional<std::filesystem::path> dir;
  if (!a.cache_dir.empty()) dir = a.cache_dir;
  return load_or_build_category(params_of(a), dir, parse_calibration_family(a.calibration));
}

PlumbingForest read_manifold(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidForest, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return PlumbingForest::from_json(ss.str());
}

std::string show(const ExactValue& v) {
  std::ostringstream os;
  os << to_string(v);
  if (v.field().has_eta()) {
    auto z = v.approx();
    auto clean = [](double t) { return std::abs(t) < 1e-12 ? 0.0 : t; };
    z = {clean(z.real()), clean(z.imag())};
    os << "  (~ " << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i)";
  }
  return os.str();
}

int run_category(const CategoryArgs& a, bool as_json) {
  const CategoryData cat = category_of(a);
  if (as_json) {
    std::cout << category_to_json(cat).dump(2) << "\n";
    return 0;
  }
  const Params& p = cat.params();
  std::cout << "SU(" << p.N << "," << p.K << ") " << to_string(p.mode) << "  d=" << p.d
            << " alpha=" << p.alpha << " beta=" << p.beta << "  zeta order " << p.M
            << "  s=zeta^" << p.s_exp << " a=zeta^" << p.a_exp << "\n";
  std::cout << "twist convention " << to_string(cat.convention()) << "\n";
  std::cout << "eta^-2 = " << show(cat.eta_inverse_square()) << "\n";
  std::cout << "Delta = " << show(cat.delta()) << "\n";
  std::cout << cat.size() << " colors\n";
  for (std::size_t x = 0; x < cat.size(); ++x) {
    std::cout << "  " << x << "  " << to_string(cat.color(x)) << "  grading " << cat.grading(x)
              << "  dual " << cat.dual(x) << "  twist zeta^" << cat.twist_exponent(x)
              << "  qdim " << show(cat.qdim(x)) << "\n";
  }
  std::cout << "fusion\n";
  for (std::size_t x = 0; x < cat.size(); ++x) {
    for (std::size_t y = x; y < cat.size(); ++y) {
      std::cout << "  " << x << " * " << y << " =";
      for (const auto& e : cat.fusion(x, y))
        std::cout << " " << (e.multiplicity == 1 ? "" : std::to_string(e.multiplicity)) << "[" << e.color << "]";
      std::cout << "\n";
    }
  }
  std::cout << "hopf\n";
  for (std::size_t x = 0; x < cat.size(); ++x)
    for (std::size_t y = x; y < cat.size(); ++y)
      std::cout << "  H(" << x << "," << y << ") = " << show(cat.hopf(x, y)) << "\n";
  return 0;
}

int run_structures(const CategoryArgs& a, const std::string& file, bool as_json) {
  const Params p = params_of(a);
  const PlumbingForest f = read_manifold(file);
  const StructureKind kind = structure_kind(p.mode);
  const CongruenceSolution sol = structure_system(f, p.d, kind);
  if (as_json) {
    json out;
    out["kind"] = kind == StructureKind::spin_d ? "spin_d" : "cohomology";
    out["d"] = p.d;
    json ids = json::array();
    for (std::size_t v = 0; v < f.size(); ++v) ids.push_back(f.id(v));
    out["vertices"] = ids;
    out["count"] = sol.solutions.size();
    if (sol.solvable()) {
      out["base"] = sol.base;
      out["generators"] = sol.generators;
    }
    json list = json::array();
    for (const auto& s : sol.solutions) list.push_back(to_json(Structure{kind, s}, f));
    out["structures"] = list;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << sol.solutions.size() << (kind == StructureKind::spin_d ? " spin^" : " Z_")
            << p.d << (kind == StructureKind::spin_d ? " structures" : " cohomology classes") << "\n";
  for (const auto& s : sol.solutions) {
    std::cout << " ";
    for (std::size_t v = 0; v < f.size(); ++v) std::cout << " " << f.id(v) << "=" << s[v];
    std::cout << "\n";
  }
  return 0;
}

int run_invariant(const CategoryArgs& a, const std::string& file, bool refined, bool as_json) {
  const CategoryData cat = category_of(a);
  const PlumbingForest f = read_manifold(file);
  if (!refined) {
    const ExactValue t = tau(cat, f);
    if (as_json)
      std::cout << json{{"tau", to_json(t)}}.dump(2) << "\n";
    else
      std::cout << "tau = " << show(t) << "\n";
    return 0;
  }
  const RefinedTable t = refined_table(cat, f);
  if (as_json) {
    std::cout << refined_table_to_json(t, f).dump(2) << "\n";
    return 0;
  }
  std::cout << "tau = " << show(t.tau) << "\n";
  std::cout << "tau(mirror) = " << show(t.tau_mirror) << "\n";
  std::cout << "Z = " << show(t.tv) << "\n";
  for (std::size_t i = 0; i < t.structures.size(); ++i) {
    std::cout << "tau(s=";
    for (int v : t.structures[i].values) std::cout << v;
    std::cout << ") = " << show(t.tau_refined[i]) << "\n";
  }
  for (const auto& e : t.entries) {
    std::cout << "Z(s=";
    for (int v : e.s.values) std::cout << v;
    std::cout << ",h=";
    for (int v : e.h.values) std::cout << v;
    std::cout << ") = " << show(e.value) << "\n";
  }
  auto line = [](const char* name, bool ok) { std::cout << name << ": " << (ok ? "pass" : "fail") << "\n"; };
  line("transfer", t.transfer);
  line("decomposition", t.decomposition);
  line("product symmetry", t.product_symmetry);
  line("orientation symmetry", t.orientation_symmetry);
  return 0;
}

std::vector<int> parse_grading(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--grading", "expected comma-separated integers");
    }
  }
  return out;
}

int run_dims(const CategoryArgs& a, int genus, const std::string& grading, bool as_json) {
  const CategoryData cat = category_of(a);
  SpineSpec spec{genus, std::nullopt};
  if (!grading.empty()) spec.grading = parse_grading(grading);
  const mpz_class count = count_colorings(cat, spec);
  if (as_json) {
    json out{{"genus", genus}, {"count", count.get_str()}};
    if (!spec.grading) out["verlinde"] = verlinde_dim(cat, genus).get_str();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << count.get_str() << "\n";
  }
  return 0;
}

int run_check(const CategoryArgs& a, bool as_json) {
  const Params p = params_of(a);
  auto skel = build_skeleton(p);
  const CalibrationReport report = calibrate(skel, parse_calibration_family(a.calibration));
  json out;
  out["calibration"] = report.diagnostic();
  if (!report.determined()) {
    if (as_json) {
      out["result"] = "fail";
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << report.diagnostic() << "\n";
    }
    std::cerr << "calibration is not determined: " << report.survivors.size()
              << " surviving conventions in " << report.classes.size() << " regression classes\n";
    return 1;
  }
  const CategoryData cat =
      assemble_category(skel, report.survivors[report.classes.front().front()].convention);
  std::vector<IdentityCheck> checks = identity_suite(cat).checks;
  checks.push_back(dimension_homomorphism_check(cat));
  checks.push_back(verlinde_check(cat));
  bool ok = true;
  json list = json::array();
  if (!as_json) std::cout << report.diagnostic() << "\n";
  for (const auto& c : checks) {
    ok = ok && c.passed;
    if (as_json)
      list.push_back({{"name", c.name}, {"result", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
    else
      std::cout << (c.passed ? "pass  " : "FAIL  ") << c.name << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
  }
  if (as_json) {
    out["checks"] = list;
    out["result"] = ok ? "pass" : "fail";
    std::cout << out.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced SU(N,K) category data and refined quantum invariants"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output")->configurable(false);

  CategoryArgs cat_args, struct_args, inv_args, dims_args, check_args;
  std::string manifold_file;
  bool refined = false;
  int genus = 0;
  std::string grading;

  auto* cat_cmd = app.add_subcommand("category", "build and dump the category tables");
  add_category_args(cat_cmd, cat_args);
  cat_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* st_cmd = app.add_subcommand("structures", "list spin^d structures or cohomology classes");
  st_cmd->add_option("--manifold", manifold_file, "manifold JSON")->required()->check(CLI::ExistingFile);
  st_cmd->add_option("--mode", struct_args.mode, "spin or coh")
      ->required()
      ->check(CLI::IsMember({"spin", "coh"}));
  st_cmd->add_option("--rank,-N", struct_args.rank, "rank N (fixes d, default 2)");
  st_cmd->add_option("--level,-K", struct_args.level, "level K (fixes d, default 2)");
  st_cmd->add_option("--alpha", struct_args.alpha, "alpha in d = alpha*beta");
  st_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* inv_cmd = app.add_subcommand("invariant", "refined RT and TV invariants of a plumbing forest");
  add_category_args(inv_cmd, inv_args);
  inv_cmd->add_option("--manifold", manifold_file, "manifold JSON")->required()->check(CLI::ExistingFile);
  inv_cmd->add_flag("--refined", refined, "include the full refined table");
  inv_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* dims_cmd = app.add_subcommand("dims", "TQFT dimensions of a closed surface");
  add_category_args(dims_cmd, dims_args, false);
  dims_cmd->add_option("--genus,-g", genus, "genus")->required()->check(CLI::NonNegativeNumber);
  dims_cmd->add_option("--grading", grading, "loop gradings z1,...,zg");
  dims_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* check_cmd = app.add_subcommand("check", "run the identity suite and Verlinde integrality");
  add_category_args(check_cmd, check_args);
  check_cmd->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cat_cmd) return run_category(cat_args, as_json);
    if (*st_cmd) return run_structures(struct_args, manifold_file, as_json);
    if (*inv_cmd) return run_invariant(inv_args, manifold_file, refined, as_json);
    if (*dims_cmd) {
      if (!grading.empty() && static_cast<int>(parse_grading(grading).size()) != genus)
        throw CLI::ValidationError("--grading", "needs exactly one entry per loop");
      return run_dims(dims_args, genus, grading, as_json);
    }
    if (*check_cmd) return run_check(check_args, as_json);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::AmbiguousFactorization) {
      std::cerr << e.what() << "\n";
      return 2;
    }
    if (as_json)
      std::cerr << json{{"error", {{"kind", std::string(to_string(e.kind())) }, {"message", e.what()}}}}.dump() << "\n";
    else
      std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    if (as_json)
      std::cerr << json{{"error", {{"kind", "Internal"}, {"message", e.what()}}}}.dump() << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
