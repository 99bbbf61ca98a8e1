#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "skein/category.hpp"

namespace skein {

/// Genus g spine: a baseline with g loops, optionally with prescribed loop gradings.
struct SpineSpec {
  int genus = 0;
  std::optional<std::vector<int>> grading;
};

/// sum_x (eta<x>)^(2-2g); throws NonIntegerDimension unless a nonnegative integer.
mpz_class verlinde_dim(const CategoryData& cat, int genus);

/// Admissible colorings of the spine, counted by transfer along the baseline.
mpz_class count_colorings(const CategoryData& cat, const SpineSpec& spec);

}  // namespace skein
