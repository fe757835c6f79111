#include "liepath/weightsys.hpp"

#include <algorithm>
#include <set>

#include "liepath/errors.hpp"

namespace liepath {

std::string format_weight(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.labels.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w.labels[i]);
  }
  return out + ")";
}

std::string format_word(const Word& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out + "]";
}

namespace {

void check_letters(const AlgebraSpec& spec, const Word& word) {
  for (int letter : word) {
    if (letter < 1 || letter > spec.rank()) {
      throw DomainError("word letter " + std::to_string(letter) +
                        " out of range 1.." + std::to_string(spec.rank()));
    }
  }
}

void check_dimension(const AlgebraSpec& spec, const Weight& w) {
  if (w.labels.size() != static_cast<std::size_t>(spec.rank())) {
    throw DomainError("weight " + format_weight(w) + " has " +
                      std::to_string(w.labels.size()) + " labels, expected " +
                      std::to_string(spec.rank()));
  }
}

}  // namespace

Weight weight_of_word(const AlgebraSpec& spec, const Weight& highest,
                      const Word& word) {
  check_dimension(spec, highest);
  check_letters(spec, word);
  Weight w = highest;
  for (int letter : word) {
    const auto& row = spec.cartan()[letter - 1];
    for (int i = 0; i < spec.rank(); ++i) w.labels[i] -= row[i];
  }
  return w;
}

WeightSystem::WeightSystem(AlgebraSpec spec, Weight highest)
    : spec_(std::move(spec)), highest_(std::move(highest)) {}

WeightSystem WeightSystem::build(const AlgebraSpec& spec, const Weight& highest,
                                 int level_cap) {
  check_dimension(spec, highest);
  for (int label : highest.labels) {
    if (label < 0) {
      throw DomainError("highest weight " + format_weight(highest) +
                        " is not dominant (all labels must be >= 0)");
    }
  }

  WeightSystem ws(spec, highest);
  const int rank = spec.rank();
  ws.nodes_[highest] = Node{0, std::vector<int>(rank, 0), {}};
  ws.levels_.push_back({highest});

  for (int level = 0;; ++level) {
    std::set<Weight> next;
    for (const Weight& w : ws.levels_[level]) {
      Node& node = ws.nodes_.at(w);
      node.strings.resize(rank);
      for (int i = 1; i <= rank; ++i) {
        const auto& row = spec.cartan()[i - 1];
        // Steps up the alpha_i string; every weight above sits on an earlier
        // level, which is already complete.
        int p = 0;
        Weight up = w;
        for (;;) {
          for (int a = 0; a < rank; ++a) up.labels[a] += row[a];
          if (!ws.nodes_.count(up)) break;
          ++p;
        }
        const int q = w.labels[i - 1] + p;
        if (q < 0) throw InternalError("negative string length");
        node.strings[i - 1] = WeightString{p, q};
        if (q > 0) {
          Weight down = w;
          for (int a = 0; a < rank; ++a) down.labels[a] -= row[a];
          auto [it, inserted] = ws.nodes_.try_emplace(down);
          if (inserted) {
            it->second.level = level + 1;
            it->second.depth = node.depth;
            ++it->second.depth[i - 1];
            next.insert(down);
          } else if (it->second.level != level + 1) {
            throw InternalError("weight reached at two different levels");
          }
        }
      }
    }
    if (next.empty()) break;
    if (level + 1 > level_cap) {
      throw ResourceError("level cap (" + std::to_string(level_cap) +
                          ") exceeded while building the weight system of " +
                          spec.name() + " " + format_weight(highest));
    }
    ws.levels_.emplace_back(next.begin(), next.end());
  }
  return ws;
}

std::size_t WeightSystem::weight_count() const { return nodes_.size(); }

bool WeightSystem::contains(const Weight& w) const { return nodes_.count(w) > 0; }

const WeightSystem::Node& WeightSystem::node(const Weight& w) const {
  auto it = nodes_.find(w);
  if (it == nodes_.end()) {
    throw DomainError("weight " + format_weight(w) +
                      " is not in the weight system of " + spec_.name() + " " +
                      format_weight(highest_));
  }
  return it->second;
}

int WeightSystem::level_of(const Weight& w) const { return node(w).level; }

const std::vector<int>& WeightSystem::depth(const Weight& w) const {
  return node(w).depth;
}

WeightString WeightSystem::weight_string(const Weight& w, int i) const {
  if (i < 1 || i > spec_.rank()) {
    throw DomainError("root index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(spec_.rank()));
  }
  return node(w).strings[i - 1];
}

bool WeightSystem::has_edge(const Weight& w, int i) const {
  return weight_string(w, i).q > 0;
}

std::vector<Word> WeightSystem::enumerate_paths(const Weight& target) const {
  const int target_level = level_of(target);

  // Restrict the search to weights that can still reach the target.
  std::set<Weight> can_reach{target};
  std::vector<Weight> frontier{target};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& w : frontier) {
      for (int i = 1; i <= spec_.rank(); ++i) {
        Weight up = w;
        const auto& row = spec_.cartan()[i - 1];
        for (int a = 0; a < spec_.rank(); ++a) up.labels[a] += row[a];
        if (contains(up) && has_edge(up, i) && can_reach.insert(up).second) {
          next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<Word> paths;
  Word word;
  auto dfs = [&](auto&& self, const Weight& w, int level) -> void {
    if (w == target) {
      paths.push_back(word);
      return;
    }
    if (level >= target_level) return;
    for (int i = 1; i <= spec_.rank(); ++i) {
      if (!has_edge(w, i)) continue;
      Weight down = w;
      const auto& row = spec_.cartan()[i - 1];
      for (int a = 0; a < spec_.rank(); ++a) down.labels[a] -= row[a];
      if (!can_reach.count(down)) continue;
      word.push_back(i);
      self(self, down, level + 1);
      word.pop_back();
    }
  };
  if (can_reach.count(highest_)) dfs(dfs, highest_, 0);
  return paths;
}

bool WeightSystem::is_path(const Word& word) const {
  check_letters(spec_, word);
  Weight w = highest_;
  for (int letter : word) {
    const auto& row = spec_.cartan()[letter - 1];
    for (int a = 0; a < spec_.rank(); ++a) w.labels[a] -= row[a];
    if (!contains(w)) return false;
  }
  return true;
}

std::vector<Weight> WeightSystem::weights() const {
  std::vector<Weight> out;
  out.reserve(nodes_.size());
  for (const auto& level : levels_) {
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string to_dot(const WeightSystem& ws) {
  std::string out = "digraph weights {\n  rankdir=TB;\n";
  auto id = [](const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.labels.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(w.labels[i]);
    }
    return s;
  };
  for (std::size_t level = 0; level < ws.levels().size(); ++level) {
    for (const Weight& w : ws.levels()[level]) {
      out += "  \"" + id(w) + "\" [label=\"" + format_weight(w) + " L" +
             std::to_string(level) + "\"];\n";
    }
  }
  for (const auto& level : ws.levels()) {
    for (const Weight& w : level) {
      for (int i = 1; i <= ws.spec().rank(); ++i) {
        if (!ws.has_edge(w, i)) continue;
        Weight down = w;
        const auto& row = ws.spec().cartan()[i - 1];
        for (int a = 0; a < ws.spec().rank(); ++a) down.labels[a] -= row[a];
        out += "  \"" + id(w) + "\" -> \"" + id(down) + "\" [label=\"" +
               std::to_string(i) + "\"];\n";
      }
    }
  }
  out += "}\n";
  return out;
}

}  // namespace liepath
