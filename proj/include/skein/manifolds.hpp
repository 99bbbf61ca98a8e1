#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <gmpxx.h>

namespace skein {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

/// Surgery presentation by a framed forest of unknots; edges are single
/// clasps with linking number one.
class PlumbingForest {
 public:
  PlumbingForest() = default;

  std::size_t add_vertex(std::string id, long framing);
  /// Throws InvalidForest for unknown ids, loops, repeated edges and cycles.
  void add_edge(const std::string& a, const std::string& b);
  void add_edge(std::size_t a, std::size_t b);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  const std::string& id(std::size_t v) const { return ids_.at(v); }
  long framing(std::size_t v) const { return framings_.at(v); }
  const std::vector<long>& framings() const noexcept { return framings_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
  std::size_t index_of(const std::string& id) const;
  bool contains(const std::string& id) const;

  /// 0/1 coloring of each tree so that adjacent vertices differ.
  std::vector<int> bipartition() const;

  static PlumbingForest from_json(const std::string& text);
  std::string to_json() const;

  friend bool operator==(const PlumbingForest&, const PlumbingForest&) = default;

 private:
  bool connected(std::size_t a, std::size_t b) const;

  std::vector<std::string> ids_;
  std::vector<long> framings_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

IntMatrix linking_matrix(const PlumbingForest& f);

/// Coefficients of det(tI - A), lowest degree first, computed exactly.
std::vector<mpz_class> characteristic_polynomial(const IntMatrix& a);

int signature(const IntMatrix& a);

template <typename Derived>
int signature(const Eigen::MatrixBase<Derived>& a) {
  return signature(IntMatrix(a.template cast<long long>()));
}

/// U * A * V = D with D diagonal, U and V unimodular.
struct SmithForm {
  IntMatrix U, D, V;
};
SmithForm smith_normal_form(const IntMatrix& a);

/// Affine solution set of A x = b (mod d): every solution is base plus an
/// integer combination of the generators, reduced mod d.
struct CongruenceSolution {
  std::vector<int> base;
  std::vector<std::vector<int>> generators;
  std::vector<std::vector<int>> solutions;  // sorted, complete
  bool solvable() const { return !solutions.empty(); }
};
CongruenceSolution solve_congruences(const IntMatrix& a, const std::vector<long long>& b, int d);

enum class StructureKind { spin_d, cohomology };

struct Structure {
  StructureKind kind = StructureKind::spin_d;
  std::vector<int> values;  // residue per vertex, vertex order of the forest
  friend auto operator<=>(const Structure&, const Structure&) = default;
};

/// Spin^d structures solve L c = (d/2) diag(L) mod d; cohomology classes
/// solve L c = 0 mod d.
std::vector<Structure> structures(const PlumbingForest& f, int d, StructureKind kind);
CongruenceSolution structure_system(const PlumbingForest& f, int d, StructureKind kind);
bool is_structure(const PlumbingForest& f, int d, StructureKind kind, const std::vector<int>& values);

PlumbingForest chain(const std::vector<long>& framings);
/// Chain -a_1, ..., -a_k from p/q = a_1 - 1/(a_2 - ...), a_i >= 2.
PlumbingForest lens_space(long p, long q);
PlumbingForest e8_sphere();
PlumbingForest s1_x_s2();
/// Colliding ids of the second forest receive a suffix.
PlumbingForest disjoint_union(const PlumbingForest& a, const PlumbingForest& b);
PlumbingForest mirror(const PlumbingForest& f);
/// Removes a vertex of framing +-1 and degree at most two.
PlumbingForest blow_down(const PlumbingForest& f, const std::string& id);

}  // namespace skein
