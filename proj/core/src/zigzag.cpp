#include "hurwitz/zigzag.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

std::vector<std::vector<int>> incidence(const TropicalCover& c) {
  std::vector<std::vector<int>> at(c.r + 1);
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto& e = c.edges[i];
    if (e.from != kBoundary) at[e.from].push_back(static_cast<int>(i));
    if (e.to != kBoundary) at[e.to].push_back(static_cast<int>(i));
  }
  return at;
}

int other_end(const Edge& e, int v) { return e.from == v ? e.to : e.from; }

// Edges of symmetric cycles (any parity) and of odd symmetric forks.
std::vector<char> sym_edges(const TropicalCover& c) {
  std::vector<char> out(c.edges.size(), 0);
  for (const auto& p : symmetry_sets(c).pairs) {
    if (p.cycle || p.odd()) out[p.first] = out[p.second] = 1;
  }
  return out;
}

struct Candidate {
  StringKind kind = StringKind::path;
  std::vector<int> edges;
  std::vector<int> vertices;
};

void extend_paths(const TropicalCover& c, const std::vector<std::vector<int>>& at, const std::vector<char>& allowed,
                  int v, int came, std::vector<char>& visited, Candidate& cur, std::vector<Candidate>& out) {
  for (int f : at[v]) {
    if (f == came || !allowed[f]) continue;
    const auto& e = c.edges[f];
    if (e.is_end()) {
      cur.edges.push_back(f);
      out.push_back(cur);
      cur.edges.pop_back();
      continue;
    }
    const int w = other_end(e, v);
    if (visited[w]) continue;
    visited[w] = 1;
    cur.edges.push_back(f);
    cur.vertices.push_back(w);
    extend_paths(c, at, allowed, w, f, visited, cur, out);
    cur.vertices.pop_back();
    cur.edges.pop_back();
    visited[w] = 0;
  }
}

void extend_cycles(const TropicalCover& c, const std::vector<std::vector<int>>& at, const std::vector<char>& allowed,
                   int start, int v, int came, std::vector<char>& visited, Candidate& cur,
                   std::set<std::vector<int>>& seen, std::vector<Candidate>& out) {
  for (int f : at[v]) {
    if (f == came || !allowed[f] || c.edges[f].is_end()) continue;
    const int w = other_end(c.edges[f], v);
    if (w == start && cur.edges.size() >= 1) {
      cur.edges.push_back(f);
      auto key = cur.edges;
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) out.push_back(cur);
      cur.edges.pop_back();
      continue;
    }
    if (visited[w] || w < start) continue;
    visited[w] = 1;
    cur.edges.push_back(f);
    cur.vertices.push_back(w);
    extend_cycles(c, at, allowed, start, w, f, visited, cur, seen, out);
    cur.vertices.pop_back();
    cur.edges.pop_back();
    visited[w] = 0;
  }
}

std::vector<Candidate> candidates(const TropicalCover& c, const std::vector<std::vector<int>>& at) {
  const auto sym = sym_edges(c);
  std::vector<char> allowed(c.edges.size(), 0);
  for (std::size_t i = 0; i < c.edges.size(); ++i) allowed[i] = c.edges[i].weight % 2 != 0 && !sym[i];

  std::vector<Candidate> out;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto& e = c.edges[i];
    if (!allowed[i] || !e.is_end() || (e.is_left_end() && e.is_right_end())) continue;
    const int v = e.is_left_end() ? e.to : e.from;
    std::vector<char> visited(c.r + 1, 0);
    visited[v] = 1;
    Candidate cur{StringKind::path, {static_cast<int>(i)}, {v}};
    extend_paths(c, at, allowed, v, static_cast<int>(i), visited, cur, out);
  }
  std::set<std::vector<int>> seen;
  for (int s = 1; s <= c.r; ++s) {
    std::vector<char> visited(c.r + 1, 0);
    visited[s] = 1;
    Candidate cur{StringKind::cycle, {}, {s}};
    extend_cycles(c, at, allowed, s, s, -1, visited, cur, seen, out);
  }
  for (int v = 1; v <= c.r; ++v) out.push_back({StringKind::vertex, {}, {v}});
  return out;
}

// Walks a tail away from the string; nullopt unless it is one of the three tail shapes.
std::optional<Tail> walk_tail(const TropicalCover& c, const std::vector<std::vector<int>>& at, int v, int t,
                              std::vector<char>& used) {
  Tail tail;
  tail.attachment = v;
  tail.edge = t;
  tail.weight = c.edges[t].weight;
  tail.in_tail = c.edges[t].to == v;
  const int w = tail.weight;
  if (w % 2 != 0) return std::nullopt;
  const bool in = tail.in_tail;
  int e = t;
  while (true) {
    const auto& edge = c.edges[e];
    const int u = in ? edge.from : edge.to;
    if (u == kBoundary) break;
    if (used[u] || at[u].size() != 3) return std::nullopt;
    used[u] = 1;
    tail.vertices.push_back(u);
    std::vector<int> pair;
    for (int f : at[u]) {
      if (f == e) continue;
      const auto& fe = c.edges[f];
      const bool far_side = in ? fe.to == u : fe.from == u;
      if (!far_side) return std::nullopt;
      pair.push_back(f);
    }
    if (pair.size() != 2) return std::nullopt;
    const auto& a = c.edges[pair[0]];
    const auto& b = c.edges[pair[1]];
    if (a.weight != w / 2 || b.weight != w / 2 || (w / 2) % 2 == 0) return std::nullopt;
    const int xa = in ? a.from : a.to;
    const int xb = in ? b.from : b.to;
    if (xa == kBoundary && xb == kBoundary) {
      tail.fork = true;
      break;
    }
    if (xa != xb || xa == kBoundary) return std::nullopt;
    const int u2 = xa;
    if (used[u2] || at[u2].size() != 3) return std::nullopt;
    used[u2] = 1;
    tail.vertices.push_back(u2);
    tail.cycle_split.push_back(u);
    tail.cycle_far.push_back(u2);
    int next = -1;
    for (int f : at[u2]) {
      if (f == pair[0] || f == pair[1]) continue;
      next = f;
    }
    const auto& ne = c.edges[next];
    const bool far_side = in ? ne.to == u2 : ne.from == u2;
    if (!far_side || ne.weight != w) return std::nullopt;
    e = next;
  }
  return tail;
}

bool traversed_right(const Edge& e, int entry_vertex) {
  // entry_vertex is kBoundary for the starting end of the path.
  if (entry_vertex == kBoundary) return e.is_left_end();
  return e.from == entry_vertex;
}

std::optional<ZigzagStructure> build_structure(const TropicalCover& c, const std::vector<std::vector<int>>& at,
                                               const Candidate& cand) {
  ZigzagStructure z;
  z.kind = cand.kind;
  z.string_edges = cand.edges;
  z.string_vertices = cand.vertices;

  std::vector<char> used(c.r + 1, 0);
  std::vector<char> in_string(c.edges.size(), 0);
  for (int e : cand.edges) in_string[e] = 1;
  for (int v : cand.vertices) used[v] = 1;

  std::set<int> bent;
  if (cand.kind == StringKind::path) {
    // Edge j enters vertex j (vertices[j]) and edge j+1 leaves it.
    for (std::size_t j = 0; j < cand.vertices.size(); ++j) {
      const int entry = j == 0 ? kBoundary : cand.vertices[j - 1];
      const bool r_in = traversed_right(c.edges[cand.edges[j]], entry);
      const bool r_out = traversed_right(c.edges[cand.edges[j + 1]], cand.vertices[j]);
      if (r_in != r_out) bent.insert(cand.vertices[j]);
    }
  } else if (cand.kind == StringKind::cycle) {
    for (int v : cand.vertices) {
      int left = 0;
      for (int f : at[v])
        if (in_string[f] && c.edges[f].to == v) ++left;
      if (left != 1) bent.insert(v);
    }
  }
  z.bent_vertices.assign(bent.begin(), bent.end());

  for (int v : cand.vertices) {
    std::vector<int> rest;
    for (int f : at[v])
      if (!in_string[f]) rest.push_back(f);
    const std::size_t expected = cand.kind == StringKind::vertex ? 3 : 1;
    if (rest.size() != expected) return std::nullopt;
    for (int t : rest) {
      auto tail = walk_tail(c, at, v, t, used);
      if (!tail) return std::nullopt;
      tail->bent = bent.count(v) > 0;
      z.tails.push_back(std::move(*tail));
    }
  }
  if (std::count(used.begin() + 1, used.end(), 1) != c.r) return std::nullopt;
  // Every inner vertex is trivalent and its edges were all inspected, so covering vertices covers edges.
  if (cand.kind != StringKind::path) return z;

  // Pieces: split at bent vertices.
  Piece cur;
  cur.in_piece = traversed_right(c.edges[cand.edges[0]], kBoundary);
  cur.edges.push_back(cand.edges[0]);
  for (std::size_t j = 0; j < cand.vertices.size(); ++j) {
    const int v = cand.vertices[j];
    if (bent.count(v)) {
      cur.bent_ends.push_back(v);
      z.pieces.push_back(cur);
      cur = Piece{};
      cur.bent_ends.push_back(v);
      cur.in_piece = traversed_right(c.edges[cand.edges[j + 1]], v);
    } else {
      cur.unbent.push_back(v);
    }
    cur.edges.push_back(cand.edges[j + 1]);
  }
  z.pieces.push_back(cur);

  std::map<int, const Tail*> tail_at;
  for (const auto& t : z.tails) tail_at[t.attachment] = &t;
  for (std::size_t p = 0; p < z.pieces.size(); ++p) {
    const auto& piece = z.pieces[p];
    ZigzagComponent comp;
    comp.piece = static_cast<int>(p);
    comp.in_component = piece.in_piece;
    auto take = [&](int v) {
      comp.vertices.push_back(v);
      const auto* t = tail_at.at(v);
      comp.vertices.insert(comp.vertices.end(), t->vertices.begin(), t->vertices.end());
    };
    for (int v : piece.unbent) take(v);
    if (piece.in_piece)
      for (int v : piece.bent_ends) take(v);
    if (comp.vertices.empty()) continue;
    std::sort(comp.vertices.begin(), comp.vertices.end());
    z.components.push_back(std::move(comp));
  }
  return z;
}

bool path_orientation_allowed(const TropicalCover& c, const Candidate& cand) {
  if (cand.kind != StringKind::path) return true;
  const bool start_left = c.edges[cand.edges.front()].is_left_end();
  const bool end_left = c.edges[cand.edges.back()].is_left_end();
  return start_left || !end_left;
}

const Piece* piece_of_unbent(const ZigzagStructure& z, int v) {
  for (const auto& p : z.pieces)
    if (std::find(p.unbent.begin(), p.unbent.end(), v) != p.unbent.end()) return &p;
  return nullptr;
}

bool intervals_disjoint(const std::vector<std::pair<int, int>>& iv) {
  auto sorted = iv;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i].first <= sorted[i - 1].second) return false;
  return true;
}

std::optional<std::pair<int, int>> interval(const std::vector<int>& vs, int limit) {
  std::optional<std::pair<int, int>> out;
  for (int v : vs) {
    if (v > limit) continue;
    if (!out) out = std::pair(v, v);
    out->first = std::min(out->first, v);
    out->second = std::max(out->second, v);
  }
  return out;
}

}  // namespace

int TailDecomposition::even_max() const { return even.empty() ? 0 : even[0]; }

int TailDecomposition::ones_pairs() const {
  return static_cast<int>(std::count(odd_paired.parts().begin(), odd_paired.parts().end(), 1));
}

TailDecomposition tail_decomposition(const Partition& lambda) {
  std::map<int, int> mult;
  for (int p : lambda.parts()) ++mult[p];
  std::vector<int> even, paired, distinct;
  for (const auto& [part, n] : mult) {
    if (part % 2 == 0) {
      even.insert(even.end(), n, part);
    } else {
      paired.insert(paired.end(), n / 2, part);
      if (n % 2 != 0) distinct.push_back(part);
    }
  }
  return {Partition(even), Partition(paired), Partition(distinct)};
}

std::string ZigzagStructure::str() const {
  std::ostringstream out;
  out << (kind == StringKind::path ? "path" : kind == StringKind::cycle ? "cycle" : "vertex") << " edges";
  for (int e : string_edges) out << ' ' << e;
  out << " | vertices";
  for (int v : string_vertices) out << ' ' << v;
  out << " | bent";
  for (int v : bent_vertices) out << ' ' << v;
  out << " | pieces";
  for (const auto& p : pieces) out << ' ' << (p.in_piece ? "in" : "out");
  out << " | tails";
  for (const auto& t : tails) {
    out << " [" << t.attachment << (t.in_tail ? " in" : " out") << (t.bent ? " bent" : "") << " w" << t.weight;
    if (t.fork) out << " fork";
    if (!t.cycle_split.empty()) out << " cycles " << t.cycle_split.size();
    out << ']';
  }
  return out.str();
}

std::string_view to_string(ZigzagClass c) {
  switch (c) {
    case ZigzagClass::not_zigzag: return "not_zigzag";
    case ZigzagClass::zigzag: return "zigzag";
    case ZigzagClass::monotone: return "monotone_zigzag";
    case ZigzagClass::universally_monotone: return "universally_monotone_zigzag";
  }
  return "?";
}

std::string_view to_string(ZigzagFamily f) {
  switch (f) {
    case ZigzagFamily::monotone: return "monotone";
    case ZigzagFamily::universal: return "universal";
    case ZigzagFamily::kmixed: return "kmixed";
  }
  return "?";
}

std::vector<ZigzagStructure> zigzag_structures(const TropicalCover& c) {
  const auto at = incidence(c);
  for (int v = 1; v <= c.r; ++v)
    if (at[v].size() != 3) return {};
  std::vector<ZigzagStructure> out;
  for (const auto& cand : candidates(c, at)) {
    if (!path_orientation_allowed(c, cand)) continue;
    if (auto z = build_structure(c, at, cand)) out.push_back(std::move(*z));
  }
  return out;
}

bool satisfies_monotone(const TropicalCover& c, const ZigzagStructure& z, int limit) {
  (void)c;
  if (z.kind != StringKind::path) return false;
  auto inside = [&](int v) { return v <= limit; };
  std::vector<std::pair<int, int>> tail_iv;
  for (const auto& t : z.tails) {
    if (inside(t.attachment)) {
      int full_cycles = 0;
      bool partial_fork = t.fork && inside(t.vertices.back());
      for (std::size_t i = 0; i < t.cycle_split.size(); ++i) {
        if (inside(t.cycle_split[i]) && inside(t.cycle_far[i])) ++full_cycles;
        if (inside(t.cycle_split[i]) != inside(t.cycle_far[i])) partial_fork = true;
      }
      if (!t.bent) {
        const Piece* p = piece_of_unbent(z, t.attachment);
        if (p == nullptr) return false;
        if (p->in_piece == t.in_tail) return false;
        if (full_cycles > 0) return false;
        if (!t.in_tail && partial_fork) return false;
      } else if ((full_cycles > 0 || partial_fork) && t.weight != 2) {
        return false;
      }
    }
    if (auto iv = interval(t.vertices, limit)) tail_iv.push_back(*iv);
  }
  if (!intervals_disjoint(tail_iv)) return false;
  std::vector<std::pair<int, int>> comp_iv;
  for (const auto& comp : z.components)
    if (auto iv = interval(comp.vertices, limit)) comp_iv.push_back(*iv);
  return intervals_disjoint(comp_iv);
}

bool satisfies_universal(const TropicalCover& c, const ZigzagStructure& z, int limit) {
  if (!satisfies_monotone(c, z, limit)) return false;
  for (const auto& p : z.pieces) {
    if (!p.in_piece) continue;
    int unbent_out = 0;
    for (const auto& t : z.tails) {
      if (t.bent || t.in_tail || t.attachment > limit) continue;
      if (std::find(p.unbent.begin(), p.unbent.end(), t.attachment) != p.unbent.end()) ++unbent_out;
    }
    if (unbent_out > 1) return false;
  }
  return true;
}

Classification classify(const TropicalCover& c) {
  Classification best;
  for (auto& z : zigzag_structures(c)) {
    ZigzagClass cls = ZigzagClass::zigzag;
    if (satisfies_universal(c, z, c.r)) {
      cls = ZigzagClass::universally_monotone;
    } else if (satisfies_monotone(c, z, c.r)) {
      cls = ZigzagClass::monotone;
    }
    if (cls > best.cls) {
      best.cls = cls;
      best.witness = std::move(z);
    }
    if (best.cls == ZigzagClass::universally_monotone) break;
  }
  return best;
}

KMixedResult is_kmixed(const TropicalCover& c, int k) {
  if (k < 0 || k > c.r) throw InvalidInput("k must lie in 0..r");
  for (auto& z : zigzag_structures(c)) {
    if (k == 0) return {true, std::move(z)};
    if (z.kind != StringKind::path) continue;
    if (!satisfies_universal(c, z, k)) continue;
    // String vertices beyond the first k branch points must form one run along the string.
    int runs = 0;
    bool prev_outside = false;
    for (int v : z.string_vertices) {
      const bool outside = v > k;
      if (outside && !prev_outside) ++runs;
      prev_outside = outside;
    }
    if (runs <= 1) return {true, std::move(z)};
  }
  return {};
}

Colouring unique_colouring(const TropicalCover& c, const SignSequence& signs) {
  if (signs.size() != c.r) throw InvalidInput("sign sequence length differs from r");
  if (classify(c).cls == ZigzagClass::not_zigzag) throw InvalidInput("cover is not a zigzag cover");
  std::vector<Colouring> hits;
  for (auto& col : enumerate_colourings(c)) {
    if (vertex_splitting(RealTropicalCover{c, col}) == signs) hits.push_back(std::move(col));
  }
  if (hits.size() != 1) {
    throw InvariantViolation("zigzag cover has " + std::to_string(hits.size()) + " colourings for splitting " +
                             signs.str());
  }
  return hits.front();
}

ZigzagNumber zigzag_number(int g, const Partition& lambda, const Partition& mu, ZigzagFamily family, int k,
                           const SearchOptions& options) {
  ZigzagNumber out;
  for (const auto& cover : enumerate_covers(g, lambda, mu, options.limits)) {
    const auto cls = classify(cover).cls;
    bool member = false;
    SplittingRange range = SplittingRange::per_sequence;
    std::optional<int> kk;
    switch (family) {
      case ZigzagFamily::monotone:
        member = cls >= ZigzagClass::monotone;
        range = SplittingRange::per_simple_s;
        break;
      case ZigzagFamily::universal:
        member = cls == ZigzagClass::universally_monotone;
        break;
      case ZigzagFamily::kmixed:
        member = cls != ZigzagClass::not_zigzag && is_kmixed(cover, k).value;
        kk = k;
        break;
    }
    if (!member) continue;
    const auto n = n_numbers(cover, g, range, kk, options);
    if (n.non_unique_colouring) throw InvariantViolation("zigzag cover without a unique colouring");
    out.terms.push_back({canonicalize(cover), cls, n.minimum});
    out.value += n.minimum;
  }
  return out;
}

}  // namespace hurwitz
