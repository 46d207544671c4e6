#pragma once

#include <utility>
#include <vector>

#include "abstree/tree.hpp"

namespace abstree {

// Result of a vertex-deleting operation. label_map[old] is the new label of
// each vertex of the input; both endpoints of a contracted edge map to the
// merged vertex.
struct Contraction {
  Tree tree;
  std::vector<Vertex> label_map;
};

// Edge contraction. The merged vertex takes the smaller endpoint label and
// labels above the larger one shift down by one. Throws NotAnEdge.
Contraction contract_edge(const Tree& tree, Edge edge);

// Neighbor partition for split_vertex.
struct SplitSpec {
  Vertex v = 0;
  std::vector<Vertex> left;   // stays on v
  std::vector<Vertex> right;  // moves to the new vertex n
};

// Vertex split: v becomes the edge (v, n); v keeps `left` and the new
// vertex n takes `right`. Throws BadPartition.
Tree split_vertex(const Tree& tree, const SplitSpec& spec);

// Every non-isomorphic tree with s leaves whose other vertices all have
// degree 3 (2s - 2 vertices each). The one whose internal vertices form a
// path comes first; the rest are ordered by canonical code. Throws BadArity
// for s < 3.
std::vector<Tree> k3_regular_shapes(int s);

// The path-backbone (caterpillar) member of k3_regular_shapes(s), built
// directly so it is available for any s >= 3.
Tree default_k3_shape(int s);

// Pendent vertices of a shape in ascending label order; this is the order
// default assignments use.
std::vector<Vertex> shape_leaves(const Tree& shape);

// (shape leaf, neighbor of the replaced vertex) pairs.
using LeafAssignment = std::vector<std::pair<Vertex, Vertex>>;

// Neighbors sorted by descending degree (ties by label) matched to
// shape_leaves(shape) in order.
LeafAssignment default_assignment(const Tree& tree, Vertex v, const Tree& shape);

// Vertex replacement. The shape's internal vertices, in ascending shape
// label order, get labels v, n, n+1, ...; the result has n + s - 3 vertices.
// Throws BadArity (deg v < 4), ShapeMismatch, BadAssignment.
Tree replace_with_3regular(const Tree& tree, Vertex v, const Tree& shape,
                           const LeafAssignment& assignment);

// Default shape and default assignment.
Tree replace_with_3regular(const Tree& tree, Vertex v);

// Adds a new vertex n joined to x.
Tree add_pendent_vertex(const Tree& tree, Vertex x);

// Inserts `count` new vertices (labels n, n+1, ...) along an edge.
Tree subdivide_edge(const Tree& tree, Edge edge, int count);

}  // namespace abstree
