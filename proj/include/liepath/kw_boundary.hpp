#pragma once

#include <vector>

#include "liepath/shapovalov.hpp"

namespace liepath {

/// The evaluation data m_i = alpha_i(w_hat) of a shifted cocharacter. All
/// entries must be strictly positive; that keeps every path-coefficient
/// denominator nonzero. Integer entries are the 't Hooft case; positive
/// rationals are accepted for continuity experiments.
class Cocharacter {
 public:
  explicit Cocharacter(std::vector<Rat> m);

  const std::vector<Rat>& values() const { return m_; }
  std::size_t size() const { return m_.size(); }
  const Rat& value(int i) const { return m_[i - 1]; }  // 1-based

  bool integral() const;

 private:
  std::vector<Rat> m_;
};

/// Evaluates a vector written in the simple-root basis on the cocharacter:
/// sum_i c_i * m_i.
Rat pair_with_cocharacter(const std::vector<Rat>& alpha_coords,
                          const Cocharacter& m);
Rat pair_with_cocharacter(const std::vector<int>& alpha_coords,
                          const Cocharacter& m);

/// w(w_hat) for a weight of the system: the highest weight evaluated via its
/// fundamental-weight expansion minus the depth paired with m.
Rat weight_rate(const WeightSystem& ws, const Weight& w, const Cocharacter& m);

/// Per-path coefficients of the summed state at weight w: for each path, the
/// product over the intermediate weights strictly above w (the highest weight
/// included, w itself excluded) of 1/(w(w_hat) - w_a(w_hat)). Every factor is
/// minus the reciprocal of a positive sum of m's. Paths follow
/// enumerate_paths order; the highest weight yields the single coefficient 1.
std::vector<Rat> state_coefficients(const WeightSystem& ws, const Weight& w,
                                    const Cocharacter& m);

/// Norm of the summed state: c^T G c with c = state_coefficients and
/// G = gram_matrix.
Rat weight_norm(const WeightSystem& ws, const Weight& w, const Cocharacter& m);
Rat weight_norm(const WeightSystem& ws, const Weight& w, const Cocharacter& m,
                InnerProductEngine& engine);

struct ChiTerm {
  Weight weight;
  int level = 0;
  Rat coefficient;
  Rat rate;
};

/// Exact expansion of the boundary profile exp(-chi_s(sigma)) as
/// 2^prefactor_log2 * sum_k coefficient_k * exp(2 * sigma * rate_k),
/// one term per distinct weight of the fundamental representation rho_s.
/// Terms are sorted by descending rate (ties broken by weight labels; ties
/// occur only for degenerate m). The top rate is the highest weight's.
struct ChiExpansion {
  std::string algebra;
  int s = 0;
  Rat prefactor_log2;
  std::vector<ChiTerm> terms;
};

ChiExpansion chi_expansion(const AlgebraSpec& spec, int s, const Cocharacter& m,
                           int level_cap = WeightSystem::kDefaultLevelCap);

/// Exact sum of all expansion coefficients: the sigma -> 0 value of the
/// bracketed sum. Returns whatever the sum is; vanishing is the conjectured
/// boundary condition, not an assumption.
Rat boundary_residual(const AlgebraSpec& spec, int s, const Cocharacter& m);

/// Double-precision evaluation at a sigma value. Throws OverflowError when
/// the result is not finite.
double evaluate_chi(const ChiExpansion& expansion, double sigma);

}  // namespace liepath
