#pragma once

#include <map>
#include <mutex>
#include <tuple>

#include "skein/category.hpp"

namespace test_support {

inline const skein::CategoryData& category(int N, int K, skein::Mode mode = skein::Mode::spin) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, skein::Mode>, skein::CategoryData> cache;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(N, K, mode);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, skein::build_category(skein::build_params(N, K, mode))).first;
  return it->second;
}

inline skein::ExactValue q(const skein::CategoryData& cat, long num, long den = 1) {
  return skein::ExactValue::rational(cat.field(), mpq_class(num, den));
}

}  // namespace test_support
