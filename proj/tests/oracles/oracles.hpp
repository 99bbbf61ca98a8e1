#pragma once

#include <string>
#include <vector>

#include "skein/category.hpp"
#include "skein/invariants.hpp"

namespace oracle {

using skein::ExactValue;
using skein::FieldPtr;

/// [k]_A = (A^2k - A^-2k) / (A^2 - A^-2) with A = zeta^a_exp.
ExactValue quantum_integer_a(const FieldPtr& field, long a_exp, long k);

struct TLData {
  ExactValue qdim;
  ExactValue twist;
  ExactValue hopf;
};

/// Kauffman-bracket data of colors n, m: qdim_n, twist_n and the Hopf link.
TLData tl_data(const FieldPtr& field, long a_exp, int n, int m);

/// How TL color n relates to the single-row color (n):
///   <(n)> = box_sign^n qdim_n,  H((n),(m)) = box_sign^(n+m) hopf_nm,
///   f((n)) = zeta^(twist_character*n) twist_n.
struct TLConventionMap {
  long a_exp = 0;
  int box_sign = 1;
  long twist_character = 0;
  friend bool operator==(const TLConventionMap&, const TLConventionMap&) = default;
};

/// Every (A, sign, character) under which the N=2 category equals the TL data.
std::vector<TLConventionMap> tl_convention_search(const skein::CategoryData& cat);

/// prod over boxes [N + content] / [hook], evaluated at s.
ExactValue hook_content_qdim(const skein::CategoryData& cat, const skein::YoungDiagram& d);

/// Every x in (Z_d)^m with a x = b mod d. Throws TooLarge beyond 8 unknowns or d > 4.
std::vector<std::vector<int>> brute_solve(const skein::IntMatrix& a, const std::vector<long long>& b,
                                          int d);

/// Sum over all |colors|^vertices colorings, no contraction.
ExactValue brute_evaluate(const skein::CategoryData& cat, const skein::PlumbingForest& f,
                          const skein::ColorAssignment& a);

}  // namespace oracle
