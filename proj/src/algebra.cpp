#include "liepath/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "liepath/errors.hpp"

namespace liepath {

namespace {

void validate_rank(Family family, int rank) {
  auto fail = [&](const std::string& constraint) {
    throw DomainError("rank " + std::to_string(rank) + " invalid for family " +
                      std::string(1, static_cast<char>(family)) + " (" +
                      constraint + ")");
  };
  switch (family) {
    case Family::A:
      if (rank < 1) fail("rank >= 1 required");
      break;
    case Family::B:
      if (rank < 2) fail("rank >= 2 required");
      break;
    case Family::C:
      if (rank < 2) fail("rank >= 2 required");
      break;
    case Family::D:
      if (rank < 3) fail("rank >= 3 required");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) fail("rank must be 6, 7 or 8");
      break;
    case Family::F:
      if (rank != 4) fail("rank must be 4");
      break;
    case Family::G:
      if (rank != 2) fail("rank must be 2");
      break;
  }
}

// Exact Gauss-Jordan inverse; the Cartan matrix of a simple algebra is
// always nonsingular.
std::vector<std::vector<Rat>> invert_exact(
    const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw InternalError("singular Cartan matrix");
    std::swap(a[col], a[pivot]);
    const Rat inv = Rat(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rat factor = a[row][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[row][j] -= factor * a[col][j];
    }
  }
  std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

// Smallest positive integers d with d_i A_ij = d_j A_ji, found by
// propagating ratios along the (connected) Dynkin diagram.
std::vector<int> compute_symmetrizers(const std::vector<std::vector<int>>& c) {
  const int n = static_cast<int>(c.size());
  std::vector<Rat> d(n, Rat(0));
  d[0] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (d[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (i == j || c[i][j] == 0 || d[j] != 0) continue;
        d[j] = d[i] * Rat(c[i][j]) / Rat(c[j][i]);
        changed = true;
      }
    }
  }
  Int lcm_den(1);
  for (const auto& x : d) {
    if (x == 0) throw InternalError("disconnected Dynkin diagram");
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  }
  std::vector<Int> scaled(n);
  Int g(0);
  for (int i = 0; i < n; ++i) {
    scaled[i] = numerator(d[i]) * (lcm_den / denominator(d[i]));
    g = boost::multiprecision::gcd(g, scaled[i]);
  }
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<int>(scaled[i] / g);
  return out;
}

}  // namespace

std::vector<std::vector<int>> cartan_matrix(Family family, int rank) {
  validate_rank(family, rank);
  std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j) {  // 0-based simply laced edge
    c[i][j] = -1;
    c[j][i] = -1;
  };
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < rank; ++i) bond(i, i + 1);
      break;
    case Family::B:
      // alpha_rank is the short root.
      for (int i = 0; i + 1 < rank; ++i) bond(i, i + 1);
      c[rank - 2][rank - 1] = -2;
      break;
    case Family::C:
      // alpha_rank is the long root.
      for (int i = 0; i + 1 < rank; ++i) bond(i, i + 1);
      c[rank - 1][rank - 2] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < rank; ++i) bond(i, i + 1);
      bond(rank - 3, rank - 1);
      break;
    case Family::E:
      // Chain 1-3-4-5-..., node 2 attached to node 4.
      bond(0, 2);
      for (int i = 2; i + 1 < rank; ++i) bond(i, i + 1);
      bond(1, 3);
      break;
    case Family::F:
      bond(0, 1);
      bond(2, 3);
      c[1][2] = -2;
      c[2][1] = -1;
      break;
    case Family::G:
      c[0][1] = -1;
      c[1][0] = -3;
      break;
  }
  return c;
}

std::vector<int> minuscule_indices(Family family, int rank) {
  validate_rank(family, rank);
  switch (family) {
    case Family::A: {
      std::vector<int> all(rank);
      std::iota(all.begin(), all.end(), 1);
      return all;
    }
    case Family::B:
      return {rank};
    case Family::C:
      return {1};
    case Family::D:
      return {1, rank - 1, rank};
    case Family::E:
      if (rank == 6) return {1, 6};
      if (rank == 7) return {7};
      return {};
    case Family::F:
    case Family::G:
      return {};
  }
  return {};
}

std::size_t positive_root_count_reference(Family family, int rank) {
  validate_rank(family, rank);
  const std::size_t n = static_cast<std::size_t>(rank);
  switch (family) {
    case Family::A:
      return n * (n + 1) / 2;
    case Family::B:
    case Family::C:
      return n * n;
    case Family::D:
      return n * (n - 1);
    case Family::E:
      return rank == 6 ? 36 : (rank == 7 ? 63 : 120);
    case Family::F:
      return 24;
    case Family::G:
      return 6;
  }
  return 0;
}

AlgebraSpec::AlgebraSpec(Family family, int rank)
    : family_(family), rank_(rank) {
  cartan_ = cartan_matrix(family, rank);
  symmetrizers_ = compute_symmetrizers(cartan_);
  inverse_cartan_ = invert_exact(cartan_);
  minuscule_ = liepath::minuscule_indices(family, rank);

  // Positive roots by additive closure: a root extends one step along
  // alpha_i exactly when its string through alpha_i still has room, that is
  // when (down steps) - (i-th Dynkin label) > 0.
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> e(rank_, 0);
    e[i] = 1;
    known.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& k : frontier) {
      for (int i = 0; i < rank_; ++i) {
        int label = 0;
        for (int a = 0; a < rank_; ++a) label += k[a] * cartan_[a][i];
        int down = 0;
        std::vector<int> probe = k;
        while (probe[i] > 0) {
          --probe[i];
          if (!known.count(probe)) break;
          ++down;
        }
        if (down - label > 0) {
          std::vector<int> up = k;
          ++up[i];
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }

  for (const auto& k : known) {
    PositiveRoot root;
    root.coords = k;
    root.height = std::accumulate(k.begin(), k.end(), 0);
    const Rat norm2 = bilinear(k, k);
    root.coroot_coords.resize(rank_);
    for (int i = 0; i < rank_; ++i) {
      // beta^vee coordinate: k_i (alpha_i, alpha_i) / (beta, beta).
      const Rat coord = Rat(k[i]) * Rat(2, symmetrizers_[i]) / norm2;
      if (denominator(coord) != 1) {
        throw InternalError("non-integral coroot coordinate");
      }
      root.coroot_coords[i] = static_cast<int>(numerator(coord));
    }
    positive_roots_.push_back(std::move(root));
  }
  std::sort(positive_roots_.begin(), positive_roots_.end(),
            [](const PositiveRoot& a, const PositiveRoot& b) {
              if (a.height != b.height) return a.height < b.height;
              return a.coords < b.coords;
            });
  if (positive_roots_.size() != positive_root_count_reference(family, rank)) {
    throw InternalError("positive root closure produced " +
                        std::to_string(positive_roots_.size()) + " roots for " +
                        name());
  }
}

AlgebraSpec AlgebraSpec::parse(const std::string& name) {
  auto fail = [&] {
    throw DomainError("unknown algebra '" + name +
                      "': expected a family letter A-G followed by a rank, "
                      "e.g. A3, G2, D4");
  };
  if (name.size() < 2) fail();
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  if (f < 'A' || f > 'G') fail();
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) fail();
  }
  const long rank = std::stol(name.substr(1));
  if (rank < 1 || rank > 512) fail();
  return AlgebraSpec(static_cast<Family>(f), static_cast<int>(rank));
}

std::string AlgebraSpec::name() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

std::vector<Rat> AlgebraSpec::fundamental_weight_in_roots(int s) const {
  if (s < 1 || s > rank_) {
    throw DomainError("fundamental weight index " + std::to_string(s) +
                      " out of range 1.." + std::to_string(rank_));
  }
  return inverse_cartan_[s - 1];
}

Rat AlgebraSpec::b_constant(int s) const {
  const auto row = fundamental_weight_in_roots(s);
  Rat sum(0);
  for (const auto& x : row) sum += x;
  return 2 * sum;
}

Rat AlgebraSpec::bilinear(const std::vector<int>& a,
                          const std::vector<int>& b) const {
  if (a.size() != static_cast<std::size_t>(rank_) ||
      b.size() != static_cast<std::size_t>(rank_)) {
    throw DomainError("bilinear form: dimension mismatch");
  }
  // (alpha_i, alpha_j) = A_ji / d_i, symmetric by the defining property of d.
  Rat sum(0);
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (b[j] == 0) continue;
      sum += Rat(a[i]) * Rat(b[j]) * Rat(cartan_[j][i], symmetrizers_[i]);
    }
  }
  return sum;
}

}  // namespace liepath
