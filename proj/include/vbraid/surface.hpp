#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vbraid/gauss.hpp"

namespace vbraid {

// Ribbon graph of a braid diagram drawn between two marked circles: one
// trivalent vertex per endpoint on either circle, one 4-valent vertex per
// crossing. Virtual letters leave no vertex at all. Rotations are clockwise:
//   marked C0 vertex: (arc toward next, strand, arc from previous)
//   crossing:         (in lower, in upper, out upper, out lower)
//   marked C1 vertex: (arc toward next, arc from previous, strand)
enum class VertexKind { C0Marked, Crossing, C1Marked };
enum class EdgeKind { C0Arc, C1Arc, Strand };

struct RibbonEdge {
  int h1 = 0;
  int h2 = 0;
  EdgeKind kind = EdgeKind::Strand;
};

struct RibbonGraph {
  int n = 1;
  std::vector<std::vector<int>> rotations;
  std::vector<VertexKind> vertex_kinds;
  std::vector<int> partner;          // half-edge involution
  std::vector<EdgeKind> edge_kinds;  // per half-edge
  std::vector<RibbonEdge> edges;
  int c0_probe = 0;  // half-edge on the C0 boundary face
  int c1_probe = 0;  // half-edge on the C1 boundary face
};

RibbonGraph build_ribbon_graph(const BraidWord &w);

// Boundary faces: orbits of h -> rotation-successor of partner(h). Each face
// starts at its least half-edge; faces sorted by that. Validates rotations
// and the partner involution, throwing MalformedRotation.
std::vector<std::vector<int>> boundary_components(const RibbonGraph &g);

// Indices of the faces carrying the two marked circles. Throws
// AmbiguousDistinguished if they coincide.
std::pair<int, int> identify_distinguished(const RibbonGraph &g,
                                           const std::vector<std::vector<int>> &faces);

struct SurfaceSummary {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int genus = 0;
  int c0_face = 0;
  int c1_face = 0;
};

// Surface of the word exactly as drawn.
SurfaceSummary surface_summary(const BraidWord &w);
int word_genus(const BraidWord &w);

// Genus of the canonical presentation of the diagram's class: the surface of
// realize(canonical_form(g)). Well defined on virtual-move classes.
int canonical_genus(const BraidGaussDiagram &g);
int canonical_genus(const BraidWord &w);

std::string graph_to_text(const RibbonGraph &g);

}  // namespace vbraid
