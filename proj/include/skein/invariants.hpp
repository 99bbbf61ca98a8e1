#pragma once

#include <optional>
#include <vector>

#include "skein/category.hpp"
#include "skein/manifolds.hpp"

namespace skein {

/// Per vertex, the coefficient of every color (indexed like cat.colors()).
using ColorAssignment = std::vector<std::vector<ExactValue>>;

/// w on every vertex, or w_{c_v} on vertex v when gradings are given.
ColorAssignment omega_assignment(const CategoryData& cat, const PlumbingForest& f,
                                 const std::optional<std::vector<int>>& gradings = {});

/// Sum over colorings of the vertex weights coeff * f^framing * <x>^(1-deg)
/// times a Hopf value per edge. Contracted tree by tree, leaves first.
ExactValue evaluate_forest(const CategoryData& cat, const PlumbingForest& f,
                           const ColorAssignment& a);

StructureKind structure_kind(Mode mode);

ExactValue tau(const CategoryData& cat, const PlumbingForest& f);
/// Throws InvalidStructure unless s solves the system of the category's mode.
ExactValue tau_refined(const CategoryData& cat, const PlumbingForest& f, const Structure& s);

/// The structure of mirror(f) corresponding to s: residues are negated on one
/// side of the bipartition of each tree.
Structure transport_to_mirror(const PlumbingForest& f, const Structure& s, int d);
Structure add_structures(const Structure& s, const Structure& h, int d);

ExactValue tv(const CategoryData& cat, const PlumbingForest& f);
/// Z(M,s,h) = tau(M,s) tau(-M,s+h).
ExactValue tv_refined(const CategoryData& cat, const PlumbingForest& f, const Structure& s,
                      const Structure& h);

struct RefinedEntry {
  Structure s;
  Structure h;
  ExactValue value;
};

struct RefinedTable {
  ExactValue tau;
  ExactValue tau_mirror;
  ExactValue tv;
  std::vector<Structure> structures;
  std::vector<ExactValue> tau_refined;         // aligned with structures
  std::vector<ExactValue> tau_refined_mirror;  // transported structures of mirror(f)
  std::vector<Structure> kernel;
  std::vector<RefinedEntry> entries;
  bool transfer = false;              // sum_s tau(M,s) = tau(M)
  bool decomposition = false;         // sum_{s,h} Z(M,s,h) = tau(M) tau(-M)
  bool product_symmetry = false;      // tau(M,s+h)tau(-M,s) = tau(M,s)tau(-M,s+h) for all s,h
  bool orientation_symmetry = false;  // Z(M,s,h) = Z(-M,s,h) for all s,h
};

RefinedTable refined_table(const CategoryData& cat, const PlumbingForest& f);

}  // namespace skein
