#include "abstree/enumerate.hpp"

#include <algorithm>
#include <string>

namespace abstree {
namespace {

// Beyer-Hedetniemi successor of a rooted level sequence. With p unset, p is
// the last position whose level exceeds 1.
bool next_rooted(std::vector<int>& levels, std::optional<std::size_t> p_hint = std::nullopt) {
  std::size_t p;
  if (p_hint) {
    p = *p_hint;
  } else {
    p = levels.size() - 1;
    while (p > 0 && levels[p] == 1) --p;
  }
  if (p == 0) return false;
  std::size_t q = p - 1;
  while (levels[q] != levels[p] - 1) --q;
  for (std::size_t i = p; i < levels.size(); ++i) levels[i] = levels[i - p + q];
  return true;
}

struct Split {
  std::size_t left_size = 0;  // vertices in the first subtree of the root
  int left_height = 0;
  int rest_height = 0;
  std::size_t rest_size = 0;  // including the root
};

// The first root subtree occupies positions 1..m-1, where m is the second
// position at level 1.
Split split(const std::vector<int>& levels) {
  std::size_t m = levels.size();
  for (std::size_t i = 2; i < levels.size(); ++i) {
    if (levels[i] == 1) {
      m = i;
      break;
    }
  }
  Split s;
  s.left_size = m - 1;
  for (std::size_t i = 1; i < m; ++i) s.left_height = std::max(s.left_height, levels[i] - 1);
  for (std::size_t i = m; i < levels.size(); ++i) s.rest_height = std::max(s.rest_height, levels[i]);
  s.rest_size = levels.size() - m + 1;
  return s;
}

// Left subtree (levels shifted down by one) compared to the remainder
// (root followed by everything after the left subtree).
bool left_after_rest(const std::vector<int>& levels, std::size_t left_size) {
  const std::size_t m = left_size + 1;
  // left[i] = levels[1 + i] - 1, rest[0] = 0, rest[i] = levels[m + i - 1]
  for (std::size_t i = 0; i < left_size; ++i) {
    const int l = levels[1 + i] - 1;
    const int r = i == 0 ? 0 : levels[m + i - 1];
    if (l != r) return l > r;
  }
  return false;
}

// Canonical-for-free-tree test, with a jump to the next candidate when it
// fails. Returns false when no further candidate exists.
bool settle(std::vector<int>& levels) {
  const Split s = split(levels);
  bool valid = s.rest_height >= s.left_height;
  if (valid && s.rest_height == s.left_height) {
    if (s.left_size > s.rest_size) {
      valid = false;
    } else if (s.left_size == s.rest_size && left_after_rest(levels, s.left_size)) {
      valid = false;
    }
  }
  if (valid) return true;

  const std::size_t p = s.left_size;
  const int old_level = levels[p];
  if (!next_rooted(levels, p)) return false;
  if (old_level > 2) {
    const Split t = split(levels);
    const std::size_t len = static_cast<std::size_t>(t.left_height) + 1;
    for (std::size_t j = 0; j < len; ++j) {
      levels[levels.size() - len + j] = static_cast<int>(j) + 1;
    }
  }
  return true;
}

}  // namespace

void validate(const EnumSpec& spec) {
  if (spec.n < 1 || spec.n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::OutOfRange,
                "vertex count must be in 1.." + std::to_string(kMaxEnumerationOrder) +
                    ", got " + std::to_string(spec.n));
  }
  if (spec.leaves) {
    const int k = *spec.leaves;
    if (spec.n < 3 || k < 2 || static_cast<std::size_t>(k) > spec.n - 1) {
      throw Error(ErrorCode::OutOfRange,
                  "leaf count must satisfy 2 <= k <= n-1, got n=" +
                      std::to_string(spec.n) + " k=" + std::to_string(k));
    }
  }
  if (spec.max_degree && *spec.max_degree < 1) {
    throw Error(ErrorCode::OutOfRange, "maximum degree cap must be at least 1");
  }
}

FreeTreeGenerator::FreeTreeGenerator(std::size_t n) : n_(n) {
  validate(EnumSpec{n, std::nullopt, std::nullopt});
}

bool FreeTreeGenerator::next() {
  switch (state_) {
    case State::Done:
      return false;
    case State::Fresh:
      state_ = State::Active;
      if (n_ <= 2) {
        levels_.assign(n_, 0);
        if (n_ == 2) levels_[1] = 1;
        return true;
      }
      // Path rooted at its center.
      for (std::size_t i = 0; i <= n_ / 2; ++i) levels_.push_back(static_cast<int>(i));
      for (std::size_t i = 1; i < (n_ + 1) / 2; ++i) levels_.push_back(static_cast<int>(i));
      if (!settle(levels_)) {
        state_ = State::Done;
        return false;
      }
      return true;
    case State::Active:
      if (n_ <= 2 || !next_rooted(levels_) || !settle(levels_)) {
        state_ = State::Done;
        return false;
      }
      return true;
  }
  return false;
}

Tree FreeTreeGenerator::tree() const { return tree_from_levels(levels_); }

Tree tree_from_levels(std::span<const int> levels) {
  std::vector<Edge> edges;
  edges.reserve(levels.size());
  std::vector<Vertex> last_at_level(levels.size() + 1, 0);
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const int level = levels[i];
    if (level < 1 || level > levels[i - 1] + 1) {
      throw Error(ErrorCode::BadParameters, "malformed level sequence");
    }
    edges.emplace_back(last_at_level[level - 1], static_cast<Vertex>(i));
    last_at_level[level] = static_cast<Vertex>(i);
  }
  return Tree::from_edges(levels.size(), edges);
}

void for_each_tree(const EnumSpec& spec, const std::function<bool(const Tree&)>& visit) {
  validate(spec);
  FreeTreeGenerator gen(spec.n);
  while (gen.next()) {
    Tree t = gen.tree();
    if (spec.max_degree && t.max_degree() > *spec.max_degree) continue;
    if (spec.leaves) {
      auto counts = degree_counts(t);
      auto it = counts.find(1);
      const std::size_t leaves = it == counts.end() ? 0 : it->second;
      if (leaves != static_cast<std::size_t>(*spec.leaves)) continue;
    }
    if (!visit(t)) return;
  }
}

std::vector<Tree> enumerate_trees(const EnumSpec& spec) {
  std::vector<Tree> out;
  for_each_tree(spec, [&out](const Tree& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::uint64_t count_trees(const EnumSpec& spec) {
  std::uint64_t count = 0;
  for_each_tree(spec, [&count](const Tree&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<Tree> free_trees(std::size_t n) {
  return enumerate_trees(EnumSpec{n, std::nullopt, std::nullopt});
}

std::vector<Tree> trees_with_k_leaves(std::size_t n, int k) {
  return enumerate_trees(EnumSpec{n, k, std::nullopt});
}

std::vector<Tree> chemical_trees(std::size_t n, int k) {
  return enumerate_trees(EnumSpec{n, k, 4});
}

}  // namespace abstree
