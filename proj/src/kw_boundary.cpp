#include "liepath/kw_boundary.hpp"

#include <algorithm>
#include <cmath>

#include "liepath/errors.hpp"

namespace liepath {

Cocharacter::Cocharacter(std::vector<Rat> m) : m_(std::move(m)) {
  if (m_.empty()) throw DomainError("cocharacter values must be nonempty");
  for (const Rat& x : m_) {
    if (x <= 0) {
      throw DomainError("cocharacter value " + to_fraction(x) +
                        " is not positive");
    }
  }
}

bool Cocharacter::integral() const {
  return std::all_of(m_.begin(), m_.end(),
                     [](const Rat& x) { return denominator(x) == 1; });
}

namespace {

void check_dimension(std::size_t got, const Cocharacter& m) {
  if (got != m.size()) {
    throw DomainError("dimension mismatch: vector has " + std::to_string(got) +
                      " coordinates, cocharacter has " +
                      std::to_string(m.size()));
  }
}

}  // namespace

Rat pair_with_cocharacter(const std::vector<Rat>& alpha_coords,
                          const Cocharacter& m) {
  check_dimension(alpha_coords.size(), m);
  Rat sum(0);
  for (std::size_t i = 0; i < alpha_coords.size(); ++i) {
    sum += alpha_coords[i] * m.values()[i];
  }
  return sum;
}

Rat pair_with_cocharacter(const std::vector<int>& alpha_coords,
                          const Cocharacter& m) {
  check_dimension(alpha_coords.size(), m);
  Rat sum(0);
  for (std::size_t i = 0; i < alpha_coords.size(); ++i) {
    sum += Rat(alpha_coords[i]) * m.values()[i];
  }
  return sum;
}

Rat weight_rate(const WeightSystem& ws, const Weight& w, const Cocharacter& m) {
  const AlgebraSpec& spec = ws.spec();
  check_dimension(static_cast<std::size_t>(spec.rank()), m);
  Rat rate(0);
  for (int s = 1; s <= spec.rank(); ++s) {
    const int label = ws.highest().labels[s - 1];
    if (label == 0) continue;
    rate += Rat(label) *
            pair_with_cocharacter(spec.fundamental_weight_in_roots(s), m);
  }
  const auto& depth = ws.depth(w);
  for (int i = 0; i < spec.rank(); ++i) {
    rate -= Rat(depth[i]) * m.values()[i];
  }
  return rate;
}

std::vector<Rat> state_coefficients(const WeightSystem& ws, const Weight& w,
                                    const Cocharacter& m) {
  check_dimension(static_cast<std::size_t>(ws.spec().rank()), m);
  ws.level_of(w);  // membership check
  std::vector<Rat> coefficients;
  for (const Word& path : ws.enumerate_paths(w)) {
    // Partial sums of m over the path letters; the denominator for the
    // intermediate weight after a-1 steps is minus (S_n - S_{a-1}), which is
    // strictly negative because every m_i is positive.
    std::vector<Rat> partial{Rat(0)};
    for (int letter : path) {
      partial.push_back(partial.back() + m.value(letter));
    }
    Rat product(1);
    for (std::size_t a = 1; a <= path.size(); ++a) {
      product /= -(partial.back() - partial[a - 1]);
    }
    coefficients.push_back(product);
  }
  return coefficients;
}

Rat weight_norm(const WeightSystem& ws, const Weight& w, const Cocharacter& m,
                InnerProductEngine& engine) {
  const std::vector<Rat> c = state_coefficients(ws, w, m);
  const GramMatrix gram = gram_matrix(ws, w, engine);
  Rat sum(0);
  for (std::size_t s = 0; s < c.size(); ++s) {
    for (std::size_t t = 0; t < c.size(); ++t) {
      sum += c[s] * c[t] * Rat(gram.entries[s][t]);
    }
  }
  return sum;
}

Rat weight_norm(const WeightSystem& ws, const Weight& w, const Cocharacter& m) {
  InnerProductEngine engine(ws.spec(), ws.highest());
  return weight_norm(ws, w, m, engine);
}

ChiExpansion chi_expansion(const AlgebraSpec& spec, int s, const Cocharacter& m,
                           int level_cap) {
  if (s < 1 || s > spec.rank()) {
    throw DomainError("fundamental weight index " + std::to_string(s) +
                      " out of range 1.." + std::to_string(spec.rank()));
  }
  check_dimension(static_cast<std::size_t>(spec.rank()), m);

  Weight fundamental{std::vector<int>(spec.rank(), 0)};
  fundamental.labels[s - 1] = 1;
  const WeightSystem ws = WeightSystem::build(spec, fundamental, level_cap);
  InnerProductEngine engine(spec, fundamental);

  ChiExpansion expansion;
  expansion.algebra = spec.name();
  expansion.s = s;
  expansion.prefactor_log2 = -spec.b_constant(s);

  for (const Weight& w : ws.weights()) {
    ChiTerm term;
    term.weight = w;
    term.level = ws.level_of(w);
    term.rate = weight_rate(ws, w, m);

    Rat product(1);
    for (const PositiveRoot& beta : spec.positive_roots()) {
      // Integer exponent 2<w,beta>/<beta,beta> via the coroot pairing, with
      // the bilinear-form route as a consistency check.
      long exponent = 0;
      for (int i = 0; i < spec.rank(); ++i) {
        exponent += static_cast<long>(beta.coroot_coords[i]) * w.labels[i];
      }
      Rat pairing(0);
      for (int j = 0; j < spec.rank(); ++j) {
        pairing += Rat(beta.coords[j]) * Rat(w.labels[j], spec.symmetrizers()[j]);
      }
      const Rat via_form = 2 * pairing / spec.bilinear(beta.coords, beta.coords);
      if (via_form != Rat(exponent)) {
        throw InternalError("exponent mismatch between coroot pairing and "
                            "bilinear form");
      }
      product *= pow_exact(pair_with_cocharacter(beta.coords, m), -exponent);
    }

    const Rat w_norm = weight_norm(ws, w, m, engine);
    term.coefficient = w_norm * product;
    if (term.level % 2 != 0) term.coefficient = -term.coefficient;
    expansion.terms.push_back(std::move(term));
  }

  std::sort(expansion.terms.begin(), expansion.terms.end(),
            [](const ChiTerm& a, const ChiTerm& b) {
              if (a.rate != b.rate) return a.rate > b.rate;
              return a.weight.labels < b.weight.labels;
            });
  return expansion;
}

Rat boundary_residual(const AlgebraSpec& spec, int s, const Cocharacter& m) {
  Rat sum(0);
  for (const ChiTerm& term : chi_expansion(spec, s, m).terms) {
    sum += term.coefficient;
  }
  return sum;
}

double evaluate_chi(const ChiExpansion& expansion, double sigma) {
  if (!std::isfinite(sigma)) throw DomainError("sigma must be finite");
  double sum = 0.0;
  for (const ChiTerm& term : expansion.terms) {
    sum += term.coefficient.convert_to<double>() *
           std::exp(2.0 * sigma * term.rate.convert_to<double>());
  }
  const double value =
      std::exp2(expansion.prefactor_log2.convert_to<double>()) * sum;
  if (!std::isfinite(value)) {
    throw OverflowError("expansion evaluation overflowed at sigma = " +
                        std::to_string(sigma));
  }
  return value;
}

}  // namespace liepath
