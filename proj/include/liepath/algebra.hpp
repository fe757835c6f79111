#pragma once

#include <string>
#include <vector>

#include "liepath/rational.hpp"

namespace liepath {

enum class Family : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

/// A positive root written in the simple-root basis.
///
/// `coords` gives beta = sum coords[i] * alpha_{i+1}; `coroot_coords` gives
/// the coroot beta^vee = 2*beta/(beta,beta) in the simple-coroot basis. Both
/// are integral for every root of every simple algebra.
struct PositiveRoot {
  std::vector<int> coords;
  std::vector<int> coroot_coords;
  int height = 0;
};

/// Cartan data for one simple Lie algebra, fixed at construction.
///
/// Index convention: simple roots are numbered 1..rank (Bourbaki numbering
/// for B, C, D, E, F). The stored matrix satisfies cartan()[j-1][i-1] = A_ji,
/// the eigenvalue of the coroot H_i on the root alpha_j. Consequently the
/// lowering operator for alpha_j shifts a weight's Dynkin labels by minus
/// row j of the matrix.
///
/// All data is immutable after construction; every query is const and safe
/// for concurrent use.
class AlgebraSpec {
 public:
  AlgebraSpec(Family family, int rank);

  /// Parses names like "A3", "G2", "E7".
  static AlgebraSpec parse(const std::string& name);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  /// A_ji with 1-based root indices.
  int cartan_entry(int j, int i) const { return cartan_[j - 1][i - 1]; }

  /// Smallest positive integers d with d_i * A_ij = d_j * A_ji.
  const std::vector<int>& symmetrizers() const { return symmetrizers_; }

  /// Exact inverse of the Cartan matrix.
  const std::vector<std::vector<Rat>>& inverse_cartan() const {
    return inverse_cartan_;
  }

  /// All positive roots, ordered by height then lexicographic coordinates.
  const std::vector<PositiveRoot>& positive_roots() const {
    return positive_roots_;
  }

  /// 1-based indices s for which the fundamental weight omega_s is minuscule.
  const std::vector<int>& minuscule_indices() const { return minuscule_; }

  /// Coefficients c with omega_s = sum c_j * alpha_j (row s of the inverse
  /// Cartan matrix). 1-based s.
  std::vector<Rat> fundamental_weight_in_roots(int s) const;

  /// B_s = 2 * sum_j inverse_cartan[s][j].
  Rat b_constant(int s) const;

  /// Invariant bilinear form on the root lattice, normalized so that
  /// (alpha_i, alpha_i) = 2 / d_i. Arguments are simple-root coordinates.
  Rat bilinear(const std::vector<int>& a, const std::vector<int>& b) const;

 private:
  Family family_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> symmetrizers_;
  std::vector<std::vector<Rat>> inverse_cartan_;
  std::vector<PositiveRoot> positive_roots_;
  std::vector<int> minuscule_;
};

/// Builds the Cartan matrix without constructing the full spec.
/// Throws DomainError when the rank is invalid for the family.
std::vector<std::vector<int>> cartan_matrix(Family family, int rank);

/// Minuscule node set for the family at the given rank (1-based indices).
std::vector<int> minuscule_indices(Family family, int rank);

/// Number of positive roots predicted by the dimension of the algebra;
/// used as an independent cross-check on root generation.
std::size_t positive_root_count_reference(Family family, int rank);

}  // namespace liepath
