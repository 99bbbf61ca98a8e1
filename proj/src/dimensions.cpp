#include "skein/dimensions.hpp"

namespace skein {

mpz_class verlinde_dim(const CategoryData& cat, int genus) {
  if (genus < 0) throw Error(ErrorKind::InvalidParameters, "genus must be nonnegative");
  ExactValue acc(cat.field());
  for (std::size_t x = 0; x < cat.size(); ++x)
    acc += (cat.qdim(x) * cat.eta()).pow(2 - 2 * genus);
  const auto r = acc.as_rational();
  if (!r || r->get_den() != 1 || *r < 0)
    throw Error(ErrorKind::NonIntegerDimension,
                "Verlinde sum at genus " + std::to_string(genus) + " is " + to_string(acc));
  return r->get_num();
}

mpz_class count_colorings(const CategoryData& cat, const SpineSpec& spec) {
  if (spec.genus < 0) throw Error(ErrorKind::InvalidParameters, "genus must be nonnegative");
  if (spec.grading && static_cast<int>(spec.grading->size()) != spec.genus)
    throw Error(ErrorKind::InvalidParameters, "one grading per loop is required");
  const std::size_t n = cat.size();
  const int d = cat.params().d;

  // transfer[t][t'] restricted to loop colors of grading z (or all)
  auto transfer = [&](std::optional<int> z) {
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    for (std::size_t a = 0; a < n; ++a) {
      if (z && cat.grading(a) != ((*z % d) + d) % d) continue;
      const std::size_t ad = cat.dual(a);
      for (std::size_t t = 0; t < n; ++t)
        for (const auto& e : cat.fusion(t, a))
          for (const auto& f : cat.fusion(e.color, ad))
            m[t][f.color] += mpz_class(static_cast<long>(e.multiplicity * f.multiplicity));
    }
    return m;
  };

  std::vector<mpz_class> state(n);
  state[cat.vacuum()] = 1;
  std::optional<std::vector<std::vector<mpz_class>>> ungraded;
  for (int j = 0; j < spec.genus; ++j) {
    std::vector<std::vector<mpz_class>> m;
    if (spec.grading) {
      m = transfer((*spec.grading)[static_cast<std::size_t>(j)]);
    } else {
      if (!ungraded) ungraded = transfer(std::nullopt);
      m = *ungraded;
    }
    std::vector<mpz_class> next(n);
    for (std::size_t t = 0; t < n; ++t) {
      if (state[t] == 0) continue;
      for (std::size_t u = 0; u < n; ++u) next[u] += state[t] * m[t][u];
    }
    state = std::move(next);
  }
  return state[cat.vacuum()];
}

}  // namespace skein
