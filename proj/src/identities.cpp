#include <algorithm>

#include "skein/category.hpp"

namespace skein {

bool IdentityReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

namespace {

void append_item(std::string& detail, const std::string& item) {
  if (detail.size() > 400) {
    if (detail.back() != '.') detail += " ...";
    return;
  }
  if (!detail.empty()) detail += ", ";
  detail += item;
}

}  // namespace

IdentityReport identity_suite(const CategoryData& cat) {
  const Params& p = cat.params();
  const std::size_t n = cat.size();
  const int d = p.d;
  const auto& field = cat.field();
  const ExactValue one = ExactValue::rational(field, 1);
  IdentityReport report;

  {
    IdentityCheck c{"normalization", true, ""};
    ExactValue target = cat.eta_inverse_square();
    target.scale(mpq_class(1, d));
    for (int i = 0; i < d; ++i) {
      ExactValue acc(field);
      for (std::size_t x = 0; x < n; ++x)
        if (cat.grading(x) == i) acc += cat.qdim(x) * cat.qdim(x);
      if (!(acc == target)) {
        c.passed = false;
        append_item(c.detail, "grading " + std::to_string(i));
      }
    }
    report.checks.push_back(c);
  }

  // g[x][j] = sum over grading j of <y> H(x,y)
  std::vector<std::vector<ExactValue>> graded(n, std::vector<ExactValue>(static_cast<std::size_t>(d),
                                                                          ExactValue(field)));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      graded[x][static_cast<std::size_t>(cat.grading(y))] += cat.qdim(y) * cat.hopf(x, y);

  {
    IdentityCheck c{"killing", true, ""};
    for (std::size_t l = 1; l < n; ++l) {
      ExactValue acc(field);
      for (const auto& v : graded[l]) acc += v;
      if (!acc.is_zero()) {
        c.passed = false;
        append_item(c.detail, to_string(cat.color(l)));
      }
    }
    report.checks.push_back(c);
  }

  {
    IdentityCheck c{"graded killing", true, ""};
    const auto& flows = cat.flow_colors();
    for (std::size_t l = 0; l < n; ++l) {
      if (std::find(flows.begin(), flows.end(), l) != flows.end()) continue;
      for (int i = 0; i < d; ++i) {
        if (!graded[l][static_cast<std::size_t>(i)].is_zero()) {
          c.passed = false;
          append_item(c.detail, to_string(cat.color(l)) + " in grading " + std::to_string(i));
        }
      }
    }
    report.checks.push_back(c);
  }

  {
    IdentityCheck c{"hopf pairing table", true, ""};
    const ExactValue eta2 = ExactValue::eta(field, 2);
    for (int eps : {0, 1, -1}) {
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          ExactValue acc(field);
          for (std::size_t x = 0; x < n; ++x) {
            if (cat.grading(x) != i) continue;
            acc += (cat.qdim(x) * graded[x][static_cast<std::size_t>(j)])
                       .times_root(eps * cat.twist_exponent(x));
          }
          acc *= eta2;
          const bool expect_one =
              (eps == 0 && i == 0 && j == 0) || (eps != 0 && i == 0 && j == p.delta_grading());
          const bool ok = expect_one ? acc == one : acc.is_zero();
          if (!ok) {
            c.passed = false;
            append_item(c.detail, "(" + std::to_string(eps) + "," + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
          }
        }
      }
    }
    report.checks.push_back(c);
  }

  {
    IdentityCheck c{"gauss sums", true, ""};
    const ExactValue up = cat.framed_unknot(1), down = cat.framed_unknot(-1);
    if (!(up * down == one)) {
      c.passed = false;
      append_item(c.detail, "<U_1(w)><U_-1(w)> != 1");
    }
    if (!(up == cat.framed_unknot(1, p.delta_grading()))) {
      c.passed = false;
      append_item(c.detail, "<U_1(w)> differs from its graded part");
    }
    if (!(up == cat.delta())) {
      c.passed = false;
      append_item(c.detail, "<U_1(w)> != Delta");
    }
    report.checks.push_back(c);
  }
  return report;
}

IdentityCheck dimension_homomorphism_check(const CategoryData& cat) {
  IdentityCheck c{"dimension homomorphism", true, ""};
  const std::size_t n = cat.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      ExactValue acc(cat.field());
      for (const auto& e : cat.fusion(x, y)) {
        ExactValue t = cat.qdim(e.color);
        acc += t.scale(mpq_class(static_cast<long>(e.multiplicity)));
      }
      if (!(acc == cat.qdim(x) * cat.qdim(y))) {
        c.passed = false;
        append_item(c.detail, to_string(cat.color(x)) + "*" + to_string(cat.color(y)));
      }
    }
  }
  return c;
}

IdentityCheck verlinde_check(const CategoryData& cat) {
  // N^z_xy = eta^2 sum_w H(x,w) H(y,w) H(w,z*) / <w>
  IdentityCheck c{"verlinde", true, ""};
  const std::size_t n = cat.size();
  const auto& field = cat.field();
  std::vector<ExactValue> inv_qdim;
  for (std::size_t w = 0; w < n; ++w) inv_qdim.push_back(cat.qdim(w).inverse());
  const ExactValue eta2 = ExactValue::eta(field, 2);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      std::vector<ExactValue> t;
      t.reserve(n);
      for (std::size_t w = 0; w < n; ++w) t.push_back(cat.hopf(x, w) * cat.hopf(y, w) * inv_qdim[w]);
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t zd = cat.dual(z);
        ExactValue acc(field);
        for (std::size_t w = 0; w < n; ++w) acc += t[w] * cat.hopf(w, zd);
        acc *= eta2;
        const auto r = acc.as_rational();
        const long long expected = cat.fusion_multiplicity(x, y, z);
        if (!r || *r != mpq_class(static_cast<long>(expected))) {
          c.passed = false;
          append_item(c.detail, to_string(cat.color(x)) + "*" + to_string(cat.color(y)) + "->" +
                                    to_string(cat.color(z)));
        }
      }
    }
  }
  return c;
}

bool anchors_hold(const CategoryData& cat) {
  const Params& p = cat.params();
  const std::size_t n = cat.size();
  const long M = p.M;
  auto m = [M](long v) { return ((v % M) + M) % M; };
  const std::size_t box = cat.index_of(Color{0, YoungDiagram({1})});
  if (m(cat.twist_exponent(box)) != m(p.a_exp + static_cast<long>(p.N) * p.s_exp)) return false;

  auto monodromy = [&](std::size_t u, long step) {
    for (std::size_t x = 0; x < n; ++x) {
      const ExactValue expected =
          (cat.qdim(u) * cat.qdim(x)).times_root(2L * cat.grading(x) * step);
      if (!(cat.hopf(u, x) == expected)) return false;
    }
    return true;
  };
  const std::size_t krow = cat.index_of(Color{0, YoungDiagram({p.K})});
  if (!monodromy(krow, static_cast<long>(p.K) * p.a_exp - p.s_exp)) return false;
  if (p.alpha > 1) {
    const std::size_t det = cat.index_of(Color{1, YoungDiagram{}});
    if (!monodromy(det, static_cast<long>(p.N) * p.a_exp + p.s_exp)) return false;
  }
  return true;
}

}  // namespace skein
