#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "abstree/tree.hpp"

namespace abstree {

// Largest vertex count the enumerator accepts (823065 trees at n = 20).
inline constexpr std::size_t kMaxEnumerationOrder = 20;

struct EnumSpec {
  std::size_t n = 1;
  std::optional<int> leaves;      // exact number of degree-1 vertices
  std::optional<int> max_degree;  // 4 selects chemical trees
};

// Throws OutOfRange unless 1 <= n <= kMaxEnumerationOrder, and, when a leaf
// count k is given, 2 <= k <= n - 1.
void validate(const EnumSpec& spec);

// Yields one level sequence per isomorphism class of free trees on n
// vertices. Each sequence is the preorder depth list of the tree rooted at
// a center, in the canonical form of Wright, Richmond, Odlyzko and McKay;
// successive trees come from the rooted-tree successor rule plus a jump
// over rootings that are not canonical for the free tree.
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(std::size_t n);

  // Advances to the next tree; false once the sequence is exhausted.
  bool next();

  std::span<const int> levels() const noexcept { return levels_; }
  Tree tree() const;

 private:
  std::size_t n_;
  std::vector<int> levels_;
  enum class State { Fresh, Active, Done } state_ = State::Fresh;
};

// Parent links from a preorder level sequence.
Tree tree_from_levels(std::span<const int> levels);

// Streams the matching trees in generation order. The callback may return
// false to stop early.
void for_each_tree(const EnumSpec& spec, const std::function<bool(const Tree&)>& visit);

std::vector<Tree> enumerate_trees(const EnumSpec& spec);
std::uint64_t count_trees(const EnumSpec& spec);

std::vector<Tree> free_trees(std::size_t n);
std::vector<Tree> trees_with_k_leaves(std::size_t n, int k);
std::vector<Tree> chemical_trees(std::size_t n, int k);

}  // namespace abstree
