#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "abstree/tree.hpp"

namespace abstree {

// Vertices 0..n-1 in order.
Tree make_path(std::size_t n);
// Center 0.
Tree make_star(std::size_t n);
// Center 0; legs are laid out in the given order. Needs >= 3 legs, each >= 1.
Tree make_spider(std::span<const int> legs);

enum class FamilyKind { Path, Star, Spider, KThreeRegular, TStar };

struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::Path;
  std::size_t n = 0;     // Path, Star, TStar
  int k = 0;             // KThreeRegular (leaf count s), TStar
  std::vector<int> legs; // Spider
};

std::vector<Tree> make_family(const FamilyDescriptor& family);

// 3 <= k <= floor((n + 2) / 3).
bool tstar_parameters_valid(std::size_t n, int k) noexcept;

// All non-isomorphic trees on n vertices obtained from a (k,3)-regular tree
// by subdividing each pendent edge at least once. Deduplicated by canonical
// code, in order of first construction. Throws OutOfRange.
std::vector<Tree> tstar_family(std::size_t n, int k);

// Degree-based membership test: maximum degree 3, the degree-3 vertices
// induce a connected subtree, and no leaf is adjacent to a degree-3 vertex.
bool is_tstar_member(const Tree& tree);

}  // namespace abstree
