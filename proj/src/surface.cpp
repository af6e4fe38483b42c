#include "vbraid/surface.hpp"

#include <utility>

#include "vbraid/realize.hpp"

namespace vbraid {

RibbonGraph build_ribbon_graph(const BraidWord &w) {
  const int n = w.n;
  if (n < 1) throw ParseError(ParseCode::Malformed, "strand count must be >= 1");
  int crossings = 0;
  for (const auto &l : w.letters) {
    if (l.index < 1 || l.index >= n)
      throw ParseError(ParseCode::IndexOutOfRange, "letter index out of range");
    if (l.kind == GenKind::Sigma) ++crossings;
  }
  const int b_base = 3 * n + 4 * crossings;
  RibbonGraph g;
  g.n = n;
  g.partner.assign(static_cast<size_t>(b_base + 3 * n), -1);
  g.edge_kinds.assign(g.partner.size(), EdgeKind::Strand);
  for (int k = 0; k < n; ++k) {
    g.rotations.push_back({3 * k, 3 * k + 1, 3 * k + 2});
    g.vertex_kinds.push_back(VertexKind::C0Marked);
  }
  for (int v = 0; v < crossings; ++v) {
    int b = 3 * n + 4 * v;
    g.rotations.push_back({b, b + 1, b + 2, b + 3});
    g.vertex_kinds.push_back(VertexKind::Crossing);
  }
  for (int k = 0; k < n; ++k) {
    int b = b_base + 3 * k;
    g.rotations.push_back({b, b + 1, b + 2});
    g.vertex_kinds.push_back(VertexKind::C1Marked);
  }
  auto link = [&g](int h1, int h2, EdgeKind kind) {
    g.partner[static_cast<size_t>(h1)] = h2;
    g.partner[static_cast<size_t>(h2)] = h1;
    g.edge_kinds[static_cast<size_t>(h1)] = kind;
    g.edge_kinds[static_cast<size_t>(h2)] = kind;
    g.edges.push_back({h1, h2, kind});
  };
  for (int k = 0; k < n; ++k)
    link(3 * k, 3 * ((k + 1) % n) + 2, EdgeKind::C0Arc);
  for (int k = 0; k < n; ++k)
    link(b_base + 3 * k, b_base + 3 * ((k + 1) % n) + 1, EdgeKind::C1Arc);
  std::vector<int> dangling(static_cast<size_t>(n) + 1);
  for (int p = 1; p <= n; ++p) dangling[static_cast<size_t>(p)] = 3 * (p - 1) + 1;
  int v = 0;
  for (const auto &l : w.letters) {
    if (l.kind == GenKind::Tau) {
      std::swap(dangling[static_cast<size_t>(l.index)],
                dangling[static_cast<size_t>(l.index) + 1]);
      continue;
    }
    int b = 3 * n + 4 * v;
    link(dangling[static_cast<size_t>(l.index)], b, EdgeKind::Strand);
    link(dangling[static_cast<size_t>(l.index) + 1], b + 1, EdgeKind::Strand);
    dangling[static_cast<size_t>(l.index)] = b + 3;
    dangling[static_cast<size_t>(l.index) + 1] = b + 2;
    ++v;
  }
  for (int p = 1; p <= n; ++p)
    link(dangling[static_cast<size_t>(p)], b_base + 3 * (p - 1) + 2, EdgeKind::Strand);
  g.c0_probe = 0;
  g.c1_probe = b_base + 1;
  return g;
}

std::vector<std::vector<int>> boundary_components(const RibbonGraph &g) {
  const int h_count = static_cast<int>(g.partner.size());
  std::vector<int> vertex_of(static_cast<size_t>(h_count), -1);
  std::vector<int> pos_of(static_cast<size_t>(h_count), -1);
  for (size_t v = 0; v < g.rotations.size(); ++v)
    for (size_t p = 0; p < g.rotations[v].size(); ++p) {
      int h = g.rotations[v][p];
      if (h < 0 || h >= h_count || vertex_of[static_cast<size_t>(h)] != -1)
        throw MalformedRotation("half-edge repeated or out of range in rotations");
      vertex_of[static_cast<size_t>(h)] = static_cast<int>(v);
      pos_of[static_cast<size_t>(h)] = static_cast<int>(p);
    }
  for (int h = 0; h < h_count; ++h) {
    if (vertex_of[static_cast<size_t>(h)] == -1)
      throw MalformedRotation("half-edge missing from rotations");
    int q = g.partner[static_cast<size_t>(h)];
    if (q < 0 || q >= h_count || q == h || g.partner[static_cast<size_t>(q)] != h)
      throw MalformedRotation("partner is not a fixed-point-free involution");
  }
  auto succ = [&](int h) {
    int q = g.partner[static_cast<size_t>(h)];
    const auto &rot = g.rotations[static_cast<size_t>(vertex_of[static_cast<size_t>(q)])];
    return rot[(static_cast<size_t>(pos_of[static_cast<size_t>(q)]) + 1) % rot.size()];
  };
  std::vector<bool> seen(static_cast<size_t>(h_count), false);
  std::vector<std::vector<int>> faces;
  for (int h = 0; h < h_count; ++h) {
    if (seen[static_cast<size_t>(h)]) continue;
    std::vector<int> face;
    int cur = h;
    do {
      seen[static_cast<size_t>(cur)] = true;
      face.push_back(cur);
      cur = succ(cur);
    } while (cur != h);
    faces.push_back(std::move(face));
  }
  return faces;
}

std::pair<int, int> identify_distinguished(const RibbonGraph &g,
                                           const std::vector<std::vector<int>> &faces) {
  int c0 = -1, c1 = -1;
  for (size_t f = 0; f < faces.size(); ++f)
    for (int h : faces[f]) {
      if (h == g.c0_probe) c0 = static_cast<int>(f);
      if (h == g.c1_probe) c1 = static_cast<int>(f);
    }
  if (c0 < 0 || c1 < 0) throw MalformedRotation("probe half-edge missing from faces");
  if (c0 == c1)
    throw AmbiguousDistinguished("the two marked circles lie on a single face");
  return {c0, c1};
}

SurfaceSummary surface_summary(const BraidWord &w) {
  RibbonGraph g = build_ribbon_graph(w);
  auto faces = boundary_components(g);
  auto [c0f, c1f] = identify_distinguished(g, faces);
  SurfaceSummary s;
  s.vertices = static_cast<int>(g.rotations.size());
  s.edges = static_cast<int>(g.edges.size());
  s.faces = static_cast<int>(faces.size());
  int chi = s.vertices - s.edges + s.faces;
  if ((2 - chi) % 2 != 0) throw Error("euler characteristic is odd");
  s.genus = (2 - chi) / 2;
  s.c0_face = c0f;
  s.c1_face = c1f;
  return s;
}

int word_genus(const BraidWord &w) { return surface_summary(w).genus; }

int canonical_genus(const BraidGaussDiagram &g) {
  return word_genus(realize(canonical_form(g)));
}

int canonical_genus(const BraidWord &w) { return canonical_genus(word_to_gauss(w)); }

static const char *vertex_token(VertexKind k) {
  switch (k) {
    case VertexKind::C0Marked: return "c0";
    case VertexKind::Crossing: return "x";
    case VertexKind::C1Marked: return "c1";
  }
  return "?";
}

static const char *edge_token(EdgeKind k) {
  switch (k) {
    case EdgeKind::C0Arc: return "arc0";
    case EdgeKind::C1Arc: return "arc1";
    case EdgeKind::Strand: return "strand";
  }
  return "?";
}

std::string graph_to_text(const RibbonGraph &g) {
  std::string s = "ribbon n=" + std::to_string(g.n) +
                  " vertices=" + std::to_string(g.rotations.size()) +
                  " edges=" + std::to_string(g.edges.size()) + "\n";
  for (size_t v = 0; v < g.rotations.size(); ++v) {
    s += "v " + std::to_string(v) + ' ' + vertex_token(g.vertex_kinds[v]);
    for (int h : g.rotations[v]) s += ' ' + std::to_string(h);
    s += '\n';
  }
  for (const auto &e : g.edges)
    s += "e " + std::to_string(e.h1) + ' ' + std::to_string(e.h2) + ' ' +
         edge_token(e.kind) + '\n';
  return s;
}

}  // namespace vbraid
