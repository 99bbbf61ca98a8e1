#include <doctest.h>

#include "skein/dimensions.hpp"
#include "support.hpp"

using namespace skein;
using test_support::category;

TEST_CASE("verlinde dimensions") {
  const auto& c = category(2, 2);
  CHECK(verlinde_dim(c, 0) == 1);
  CHECK(verlinde_dim(c, 1) == 3);
  CHECK(verlinde_dim(c, 2) == 10);
  CHECK(count_colorings(c, {2, std::nullopt}) == 10);
  CHECK(count_colorings(c, {0, std::nullopt}) == 1);
  CHECK_THROWS_AS(verlinde_dim(c, -1), Error);
}

TEST_CASE("colorings match verlinde") {
  for (auto [N, K] : {std::pair{2, 2}, std::pair{2, 6}, std::pair{4, 4}}) {
    const auto& c = category(N, K);
    for (int g = 0; g <= 3; ++g) CHECK(count_colorings(c, {g, std::nullopt}) == verlinde_dim(c, g));
    CHECK(verlinde_dim(c, 1) == static_cast<long>(c.size()));
  }
}

TEST_CASE("graded counts partition the total") {
  for (auto [N, K, m] : {std::tuple{2, 2, Mode::spin}, std::tuple{4, 4, Mode::spin}, std::tuple{2, 4, Mode::coh}}) {
    const auto& c = category(N, K, m);
    const int d = c.params().d;
    for (int g = 1; g <= 2; ++g) {
      mpz_class sum = 0;
      std::vector<int> z(static_cast<std::size_t>(g), 0);
      for (;;) {
        sum += count_colorings(c, {g, z});
        std::size_t i = 0;
        while (i < z.size() && ++z[i] == d) z[i++] = 0;
        if (i == z.size()) break;
      }
      CHECK(sum == count_colorings(c, {g, std::nullopt}));
    }
  }
  CHECK_THROWS_AS(count_colorings(category(2, 2), {2, std::vector<int>{0}}), Error);
}
