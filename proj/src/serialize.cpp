#include "skein/serialize.hpp"

#include <fstream>
#include <sstream>

namespace skein {

namespace {

constexpr int kCacheFormat = 1;

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw Error(ErrorKind::InvalidParameters, "expected an integer");
}

json convention_json(const TwistConvention& c) {
  return {{"quadratic", c.quadratic}, {"content_sign", c.content_sign}, {"linear", c.linear}};
}

TwistConvention convention_from_json(const json& j) {
  return {j.at("quadratic").get<int>(), j.at("content_sign").get<int>(), j.at("linear").get<int>()};
}

Params params_from_json(const json& j) {
  Params p;
  p.N = j.at("N");
  p.K = j.at("K");
  p.mode = parse_mode(j.at("mode").get<std::string>());
  p.d = j.at("d");
  p.n_prime = p.N / p.d;
  p.k_prime = p.K / p.d;
  p.alpha = j.at("alpha");
  p.beta = j.at("beta");
  p.M = j.at("M");
  p.s_exp = j.at("s_exp");
  p.a_exp = j.at("a_exp");
  return p;
}

std::string pass(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

json to_json(const ExactValue& v) {
  json coeffs = json::array();
  for (const auto& c : v.coeffs()) coeffs.push_back({integer_json(c.get_num()), integer_json(c.get_den())});
  json out{{"eta_power", v.is_zero() ? 0 : v.eta_power()}, {"coeffs", coeffs}};
  if (v.field().has_eta() || v.eta_power() == 0) {
    const auto z = v.approx();
    out["approx"] = {{"re", z.real()}, {"im", z.imag()}};
  }
  if (v.field().has_eta() || v.eta_power() % 2 == 0)
    if (auto r = v.as_rational())
      out["rational"] = r->get_den() == 1 && r->get_num().fits_slong_p() ? json(r->get_num().get_si())
                                                                         : json(r->get_str());
  return out;
}

ExactValue exact_value_from_json(const FieldPtr& field, const json& j) {
  std::vector<mpq_class> coeffs;
  for (const auto& c : j.at("coeffs"))
    coeffs.emplace_back(integer_from_json(c.at(0)), integer_from_json(c.at(1)));
  return ExactValue::from_coefficients(field, std::move(coeffs), j.at("eta_power").get<int>());
}

json to_json(const YoungDiagram& d) { return d.rows(); }

json to_json(const Params& p) {
  return {{"N", p.N},         {"K", p.K},           {"mode", std::string(to_string(p.mode))},
          {"d", p.d},         {"alpha", p.alpha},   {"beta", p.beta},
          {"M", p.M},         {"s_exp", p.s_exp},   {"a_exp", p.a_exp},
          {"s_order", p.s_order()}};
}

json to_json(const Structure& s, const PlumbingForest& f) {
  json values = json::object();
  for (std::size_t v = 0; v < f.size(); ++v) values[f.id(v)] = s.values[v];
  return values;
}

json category_to_json(const CategoryData& cat) {
  const std::size_t n = cat.size();
  json out;
  out["params"] = to_json(cat.params());
  out["convention"] = convention_json(cat.convention());
  out["eta_inverse_square"] = to_json(cat.eta_inverse_square());
  out["eta"] = to_json(cat.eta());
  out["delta"] = to_json(cat.delta());
  json colors = json::array();
  for (std::size_t x = 0; x < n; ++x) {
    const Color& c = cat.color(x);
    colors.push_back({{"index", x},
                      {"columns", c.columns},
                      {"shape", to_json(c.shape)},
                      {"diagram", to_json(full_diagram(cat.params(), c))},
                      {"grading", cat.grading(x)},
                      {"dual", cat.dual(x)},
                      {"qdim", to_json(cat.qdim(x))},
                      {"twist_exponent", cat.twist_exponent(x)},
                      {"twist", to_json(cat.twist(x))}});
  }
  out["colors"] = colors;
  json fusion = json::array();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      json terms = json::array();
      for (const auto& e : cat.fusion(x, y)) terms.push_back({e.color, e.multiplicity});
      fusion.push_back({{"x", x}, {"y", y}, {"terms", terms}});
    }
  }
  out["fusion"] = fusion;
  json hopf = json::array();
  for (std::size_t x = 0; x < n; ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < n; ++y) row.push_back(to_json(cat.hopf(x, y)));
    hopf.push_back(row);
  }
  out["hopf"] = hopf;
  return out;
}

json category_cache_to_json(const CategoryData& cat) {
  const CategorySkeleton& s = cat.skeleton();
  const std::size_t n = cat.size();
  json out;
  out["format"] = kCacheFormat;
  out["params"] = to_json(s.params);
  out["convention"] = convention_json(cat.convention());
  json colors = json::array();
  for (const auto& c : s.colors) colors.push_back({c.columns, to_json(c.shape)});
  out["colors"] = colors;
  out["box_count"] = s.box_count;
  out["content"] = s.content;
  out["grading"] = s.grading;
  out["dual"] = s.dual;
  out["flows"] = s.flows;
  json qdim = json::array();
  for (const auto& q : s.qdim) qdim.push_back(to_json(q));
  out["qdim"] = qdim;
  json fusion = json::array();
  for (const auto& row : s.fusion) {
    json terms = json::array();
    for (const auto& e : row) terms.push_back({e.color, e.multiplicity});
    fusion.push_back(terms);
  }
  out["fusion"] = fusion;
  out["eta_inverse_square"] = to_json(s.eta_inverse_square);
  std::vector<long> tw;
  for (std::size_t x = 0; x < n; ++x) tw.push_back(cat.twist_exponent(x));
  out["twist_exponents"] = tw;
  json hopf = json::array();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) hopf.push_back(to_json(cat.hopf(x, y)));
  out["hopf"] = hopf;
  out["delta"] = to_json(cat.delta());
  return out;
}

CategoryData category_from_cache_json(const json& j) {
  if (j.at("format").get<int>() != kCacheFormat)
    throw Error(ErrorKind::InvalidParameters, "unsupported cache format");
  const Params p = params_from_json(j.at("params"));
  auto field = make_field(p.M);
  auto skel = std::make_shared<CategorySkeleton>(p, field);
  for (const auto& c : j.at("colors"))
    skel->colors.push_back({c.at(0).get<int>(), YoungDiagram(c.at(1).get<std::vector<int>>())});
  skel->box_count = j.at("box_count").get<std::vector<int>>();
  skel->content = j.at("content").get<std::vector<int>>();
  skel->grading = j.at("grading").get<std::vector<int>>();
  skel->dual = j.at("dual").get<std::vector<std::size_t>>();
  skel->flows = j.at("flows").get<std::vector<std::size_t>>();
  for (const auto& q : j.at("qdim")) skel->qdim.push_back(exact_value_from_json(field, q));
  for (const auto& row : j.at("fusion")) {
    std::vector<FusionEntry> terms;
    for (const auto& e : row) terms.push_back({e.at(0).get<std::size_t>(), e.at(1).get<long long>()});
    skel->fusion.push_back(std::move(terms));
  }
  skel->eta_inverse_square = exact_value_from_json(field, j.at("eta_inverse_square"));
  const auto& eis = skel->eta_inverse_square;
  field->set_eta(std::vector<mpq_class>(eis.coeffs().begin(), eis.coeffs().end()), eta_branch(eis));

  const std::size_t n = skel->colors.size();
  if (skel->qdim.size() != n || skel->fusion.size() != n * n)
    throw Error(ErrorKind::InvalidParameters, "cache tables have inconsistent sizes");
  auto tw = j.at("twist_exponents").get<std::vector<long>>();
  std::vector<ExactValue> hopf;
  for (const auto& h : j.at("hopf")) hopf.push_back(exact_value_from_json(field, h));
  if (tw.size() != n || hopf.size() != n * n)
    throw Error(ErrorKind::InvalidParameters, "cache tables have inconsistent sizes");
  ExactValue delta = exact_value_from_json(field, j.at("delta"));
  return CategoryData(std::move(skel), convention_from_json(j.at("convention")), std::move(tw),
                      std::move(hopf), std::move(delta));
}

std::string cache_file_name(const Params& p) {
  std::ostringstream os;
  os << "category-N" << p.N << "-K" << p.K << "-" << to_string(p.mode) << "-alpha" << p.alpha
     << "-a" << p.a_exp << "-M" << p.M << ".json";
  return os.str();
}

CategoryData load_or_build_category(const Params& p, const std::optional<std::filesystem::path>& dir,
                                    CalibrationFamily family) {
  namespace fs = std::filesystem;
  const bool cacheable = dir.has_value() && family == CalibrationFamily::anchored;
  if (cacheable) {
    const fs::path file = *dir / cache_file_name(p);
    std::ifstream in(file);
    if (in) {
      try {
        CategoryData cat = category_from_cache_json(json::parse(in));
        if (cat.params() == p) return cat;
      } catch (const std::exception&) {
        // unreadable or stale entry, rebuilt below
      }
    }
  }
  CategoryData cat = build_category(p, family);
  if (cacheable) {
    std::error_code ec;
    fs::create_directories(*dir, ec);
    const fs::path file = *dir / cache_file_name(p);
    const fs::path tmp = file.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << category_cache_to_json(cat).dump();
    }
    fs::rename(tmp, file, ec);
  }
  return cat;
}

json refined_table_to_json(const RefinedTable& t, const PlumbingForest& f) {
  json out;
  out["tau"] = to_json(t.tau);
  out["tau_mirror"] = to_json(t.tau_mirror);
  out["tv"] = to_json(t.tv);
  json ids = json::array();
  for (std::size_t v = 0; v < f.size(); ++v) ids.push_back(f.id(v));
  out["vertices"] = ids;
  json per = json::array();
  for (std::size_t i = 0; i < t.structures.size(); ++i)
    per.push_back({{"s", t.structures[i].values}, {"value", to_json(t.tau_refined[i])}});
  out["tau_refined"] = per;
  json refined = json::array();
  for (const auto& e : t.entries)
    refined.push_back({{"s", e.s.values}, {"h", e.h.values}, {"value", to_json(e.value)}});
  out["refined"] = refined;
  out["checks"] = {{"transfer", pass(t.transfer)},
                   {"decomposition", pass(t.decomposition)},
                   {"product_symmetry", pass(t.product_symmetry)},
                   {"orientation_symmetry", pass(t.orientation_symmetry)}};
  return out;
}

}  // namespace skein
