#include "skein/invariants.hpp"

#include <functional>

namespace skein {

ColorAssignment omega_assignment(const CategoryData& cat, const PlumbingForest& f,
                                 const std::optional<std::vector<int>>& gradings) {
  if (gradings && gradings->size() != f.size())
    throw Error(ErrorKind::InvalidStructure, "one grading per vertex is required");
  ColorAssignment a(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) {
    std::optional<int> g;
    if (gradings) g = (*gradings)[v];
    for (std::size_t x = 0; x < cat.size(); ++x) a[v].push_back(cat.omega_coeff(g, x));
  }
  return a;
}

ExactValue evaluate_forest(const CategoryData& cat, const PlumbingForest& f, const ColorAssignment& a) {
  const auto& field = cat.field();
  const std::size_t n = cat.size();
  if (a.size() != f.size()) throw Error(ErrorKind::InvalidForest, "color assignment does not match forest");

  std::vector<ExactValue> inv_qdim;
  for (std::size_t x = 0; x < n; ++x) inv_qdim.push_back(cat.qdim(x).inverse());

  // weight of vertex v colored x: coeff * f(x)^framing * <x>^(1-deg)
  auto weight = [&](std::size_t v, std::size_t x) {
    const ExactValue& c = a[v][x];
    if (c.is_zero()) return ExactValue(field);
    ExactValue w = c.times_root(cat.twist_exponent(x) * f.framing(v));
    const std::size_t deg = f.degree(v);
    if (deg == 0) return w * cat.qdim(x);
    for (std::size_t k = 1; k < deg; ++k) w *= inv_qdim[x];
    return w;
  };

  std::vector<bool> seen(f.size(), false);
  // returns, for each color x of v, weight(v,x) times the messages of its children
  std::function<std::vector<ExactValue>(std::size_t, std::size_t)> local =
      [&](std::size_t v, std::size_t parent) {
        seen[v] = true;
        std::vector<ExactValue> p;
        for (std::size_t x = 0; x < n; ++x) p.push_back(weight(v, x));
        for (std::size_t c : f.neighbors(v)) {
          if (c == parent) continue;
          std::vector<ExactValue> pc = local(c, v);
          std::vector<std::size_t> support;
          for (std::size_t y = 0; y < n; ++y)
            if (!pc[y].is_zero()) support.push_back(y);
          for (std::size_t x = 0; x < n; ++x) {
            if (p[x].is_zero()) continue;
            ExactValue msg(field);
            for (std::size_t y : support) msg += pc[y] * cat.hopf(y, x);
            p[x] *= msg;
          }
        }
        return p;
      };

  ExactValue total = ExactValue::rational(field, 1);
  for (std::size_t root = 0; root < f.size(); ++root) {
    if (seen[root]) continue;
    ExactValue tree(field);
    for (const auto& v : local(root, f.size())) tree += v;
    total *= tree;
  }
  return total;
}

StructureKind structure_kind(Mode mode) {
  return mode == Mode::spin ? StructureKind::spin_d : StructureKind::cohomology;
}

namespace {

ExactValue anomaly(const CategoryData& cat, const PlumbingForest& f) {
  return cat.delta().pow(-signature(linking_matrix(f)));
}

}  // namespace

ExactValue tau(const CategoryData& cat, const PlumbingForest& f) {
  return anomaly(cat, f) * evaluate_forest(cat, f, omega_assignment(cat, f));
}

ExactValue tau_refined(const CategoryData& cat, const PlumbingForest& f, const Structure& s) {
  const int d = cat.params().d;
  const StructureKind kind = structure_kind(cat.params().mode);
  if (s.kind != kind || !is_structure(f, d, kind, s.values))
    throw Error(ErrorKind::InvalidStructure, "structure does not solve the characteristic system");
  return anomaly(cat, f) * evaluate_forest(cat, f, omega_assignment(cat, f, s.values));
}

Structure transport_to_mirror(const PlumbingForest& f, const Structure& s, int d) {
  Structure out = s;
  const auto side = f.bipartition();
  for (std::size_t v = 0; v < f.size(); ++v)
    if (side[v] == 1) out.values[v] = (d - out.values[v]) % d;
  return out;
}

Structure add_structures(const Structure& s, const Structure& h, int d) {
  if (s.values.size() != h.values.size())
    throw Error(ErrorKind::InvalidStructure, "structures of different length");
  Structure out = s;
  for (std::size_t i = 0; i < s.values.size(); ++i) out.values[i] = (s.values[i] + h.values[i]) % d;
  return out;
}

ExactValue tv(const CategoryData& cat, const PlumbingForest& f) {
  return tau(cat, f) * tau(cat, mirror(f));
}

ExactValue tv_refined(const CategoryData& cat, const PlumbingForest& f, const Structure& s,
                      const Structure& h) {
  const int d = cat.params().d;
  if (h.kind != StructureKind::cohomology || !is_structure(f, d, StructureKind::cohomology, h.values))
    throw Error(ErrorKind::InvalidStructure, "h must be a mod-d kernel element");
  const ExactValue left = tau_refined(cat, f, s);
  Structure moved = transport_to_mirror(f, add_structures(s, h, d), d);
  moved.kind = s.kind;
  return left * tau_refined(cat, mirror(f), moved);
}

RefinedTable refined_table(const CategoryData& cat, const PlumbingForest& f) {
  const int d = cat.params().d;
  const StructureKind kind = structure_kind(cat.params().mode);
  const PlumbingForest g = mirror(f);
  RefinedTable t{tau(cat, f), tau(cat, g), ExactValue(cat.field()), {}, {}, {}, {}, {}};
  t.tv = t.tau * t.tau_mirror;
  t.structures = structures(f, d, kind);
  t.kernel = structures(f, d, StructureKind::cohomology);

  ExactValue sum_tau(cat.field());
  for (const auto& s : t.structures) {
    t.tau_refined.push_back(tau_refined(cat, f, s));
    t.tau_refined_mirror.push_back(tau_refined(cat, g, transport_to_mirror(f, s, d)));
    sum_tau += t.tau_refined.back();
  }
  t.transfer = sum_tau == t.tau;

  auto position = [&](const Structure& s) {
    return static_cast<std::size_t>(
        std::lower_bound(t.structures.begin(), t.structures.end(), s) - t.structures.begin());
  };
  ExactValue sum_tv(cat.field());
  t.product_symmetry = true;
  for (std::size_t i = 0; i < t.structures.size(); ++i) {
    for (const auto& h : t.kernel) {
      Structure sh = add_structures(t.structures[i], h, d);
      const std::size_t j = position(sh);
      if (j >= t.structures.size() || t.structures[j] != sh)
        throw Error(ErrorKind::Internal, "structure set is not closed under the kernel action");
      ExactValue z = t.tau_refined[i] * t.tau_refined_mirror[j];
      if (!(z == t.tau_refined[j] * t.tau_refined_mirror[i])) t.product_symmetry = false;
      sum_tv += z;
      t.entries.push_back({t.structures[i], h, std::move(z)});
    }
  }
  t.decomposition = sum_tv == t.tv;
  // Z(-M,s,h) with structures carried over by the mirror transport
  t.orientation_symmetry = true;
  std::size_t k = 0;
  for (std::size_t i = 0; i < t.structures.size(); ++i) {
    for (const auto& h : t.kernel) {
      const std::size_t j = position(add_structures(t.structures[i], h, d));
      if (!(t.tau_refined_mirror[i] * t.tau_refined[j] == t.entries[k++].value))
        t.orientation_symmetry = false;
    }
  }
  return t;
}

}  // namespace skein
