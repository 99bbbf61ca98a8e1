#include <algorithm>
#include <map>
#include <sstream>

#include "skein/category.hpp"
#include "skein/invariants.hpp"

namespace skein {

std::string_view to_string(CalibrationFamily f) {
  switch (f) {
    case CalibrationFamily::anchored: return "anchored";
    case CalibrationFamily::unanchored: return "unanchored";
    case CalibrationFamily::linear: return "linear";
  }
  return "anchored";
}

CalibrationFamily parse_calibration_family(std::string_view text) {
  if (text == "anchored") return CalibrationFamily::anchored;
  if (text == "unanchored") return CalibrationFamily::unanchored;
  if (text == "linear") return CalibrationFamily::linear;
  throw Error(ErrorKind::InvalidParameters, "calibration family must be anchored, unanchored or linear");
}

std::string CalibrationReport::diagnostic() const {
  std::ostringstream os;
  os << "twist calibration (" << to_string(family) << "): examined " << examined << " conventions, "
     << survivors.size() << " survive, " << classes.size() << " regression class"
     << (classes.size() == 1 ? "" : "es");
  for (std::size_t c = 0; c < classes.size(); ++c) {
    os << "\n  class " << c << ":";
    for (std::size_t i : classes[c]) os << " " << to_string(survivors[i].convention);
    const auto& fp = survivors[classes[c].front()].fingerprint;
    if (!fp.empty()) os << "\n    tau(L(2,1)) = " << fp.front();
  }
  return os.str();
}

namespace {

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long exponent_of(const Params& p, const TwistConvention& c, const Color& x) {
  const YoungDiagram full = full_diagram(p, x);
  const long n = full.size();
  return mod(c.quadratic * p.a_exp * n * n + c.content_sign * 2L * p.s_exp * full.content_sum() +
                 static_cast<long>(c.linear) * n,
             p.M);
}

// The twist must not depend on the representative of an identified color.
bool well_defined(const CategorySkeleton& skel, const TwistConvention& c) {
  const Params& p = skel.params;
  for (const auto& x : skel.colors) {
    const long e = exponent_of(p, c, x);
    Color y = x;
    for (;;) {
      for (int t = 0; t < p.beta; ++t) y = sigma(p, y);
      if (y == x) break;
      if (exponent_of(p, c, y) != e) return false;
    }
  }
  return true;
}

std::vector<TwistConvention> candidates(const Params& p, CalibrationFamily family) {
  std::vector<TwistConvention> out;
  if (family == CalibrationFamily::linear) {
    for (int k = 0; k < p.M; ++k) out.push_back({0, 1, k});
    return out;
  }
  for (int q : {-1, 0, 1}) {
    for (int sg : {-1, 1}) {
      if (family == CalibrationFamily::anchored) {
        // single box framing a s^N fixes the linear term
        out.push_back({q, sg, static_cast<int>(mod(p.a_exp + static_cast<long>(p.N) * p.s_exp -
                                                       static_cast<long>(q) * p.a_exp,
                                                   p.M))});
      } else {
        for (int k = 0; k < p.M; ++k) out.push_back({q, sg, k});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> refined_multiset(const CategoryData& cat, const PlumbingForest& f) {
  std::vector<std::string> out;
  const auto kind = structure_kind(cat.params().mode);
  for (const auto& s : structures(f, cat.params().d, kind)) out.push_back(to_string(tau_refined(cat, f, s)));
  std::sort(out.begin(), out.end());
  return out;
}

// Blow-down pairs that present the same manifold.
bool presentation_invariant(const CategoryData& cat) {
  const std::vector<std::pair<PlumbingForest, std::string>> moves = {
      {chain({1}), "v1"},
      {chain({-1}), "v1"},
      {chain({3, 1}), "v2"},
      {chain({-2, -1, -2}), "v2"},
      {chain({-3, 1, 2}), "v2"},
      {chain({2, -1, -4, -2}), "v2"},
  };
  for (const auto& [f, v] : moves) {
    const PlumbingForest g = blow_down(f, v);
    if (!(tau(cat, f) == tau(cat, g))) return false;
    if (refined_multiset(cat, f) != refined_multiset(cat, g)) return false;
  }
  return true;
}

std::vector<std::string> fingerprint(const CategoryData& cat) {
  std::vector<std::string> out;
  for (auto [p, q] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {4, 1}, {5, 2}, {7, 3}}) {
    const PlumbingForest f = lens_space(p, q);
    out.push_back(to_string(tau(cat, f)));
    for (auto& s : refined_multiset(cat, f)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

CalibrationReport calibrate(std::shared_ptr<const CategorySkeleton> skel, CalibrationFamily family) {
  CalibrationReport report;
  report.family = family;
  const Params& p = skel->params;
  const bool anchored = family != CalibrationFamily::unanchored;
  const ExactValue one = ExactValue::rational(skel->field, 1);
  for (const auto& conv : candidates(p, family)) {
    ++report.examined;
    if (!well_defined(*skel, conv)) continue;
    const CategoryData cat = assemble_category(skel, conv);
    if (anchored && !anchors_hold(cat)) continue;
    const ExactValue up = cat.framed_unknot(1);
    if (!(up * cat.framed_unknot(-1) == one)) continue;
    if (!identity_suite(cat).all_passed()) continue;
    if (!presentation_invariant(cat)) continue;
    report.survivors.push_back({conv, fingerprint(cat)});
  }
  std::map<std::vector<std::string>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < report.survivors.size(); ++i)
    groups[report.survivors[i].fingerprint].push_back(i);
  for (auto& [fp, members] : groups) report.classes.push_back(std::move(members));
  std::sort(report.classes.begin(), report.classes.end());
  return report;
}

CategoryData build_category(const Params& p, CalibrationFamily family) {
  auto skel = build_skeleton(p);
  const CalibrationReport report = calibrate(skel, family);
  if (!report.determined()) throw Error(ErrorKind::CalibrationFailure, report.diagnostic());
  return assemble_category(skel, report.survivors[report.classes.front().front()].convention);
}

}  // namespace skein
