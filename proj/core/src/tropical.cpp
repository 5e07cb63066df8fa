#include "hurwitz/tropical.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

int colour_code(EdgeColour c) { return static_cast<int>(c); }

}  // namespace

std::string_view to_string(EdgeColour c) {
  switch (c) {
    case EdgeColour::black: return "black";
    case EdgeColour::red: return "red";
    case EdgeColour::blue: return "blue";
    case EdgeColour::dotted: return "dotted";
  }
  return "?";
}

Partition TropicalCover::left_weights() const {
  std::vector<int> w;
  for (const auto& e : edges) {
    if (e.is_left_end()) w.push_back(e.weight);
  }
  return Partition(std::move(w));
}

Partition TropicalCover::right_weights() const {
  std::vector<int> w;
  for (const auto& e : edges) {
    if (e.is_right_end()) w.push_back(e.weight);
  }
  return Partition(std::move(w));
}

int TropicalCover::genus() const {
  int ends = 0;
  for (const auto& e : edges) ends += e.is_end() ? 1 : 0;
  return static_cast<int>(edges.size()) - (r + ends) + 1;
}

bool TropicalCover::connected() const {
  if (r < 1) return false;
  UnionFind uf(r + 1);
  for (const auto& e : edges) {
    if (e.is_left_end() && e.is_right_end()) return false;
    if (e.is_inner()) uf.unite(e.from, e.to);
  }
  for (int v = 2; v <= r; ++v) {
    if (uf.find(v) != uf.find(1)) return false;
  }
  return true;
}

std::vector<int> TropicalCover::slab_degrees() const {
  std::vector<int> out(r + 1, 0);
  for (const auto& e : edges) {
    const int lo = e.from;
    const int hi = e.is_right_end() ? r + 1 : e.to;
    for (int j = lo; j < hi && j <= r; ++j) out[j] += e.weight;
  }
  return out;
}

std::vector<int> TropicalCover::incident(int v) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].from == v || edges[i].to == v) out.push_back(static_cast<int>(i));
  }
  return out;
}

int SymmetrySets::cycle_count() const {
  return static_cast<int>(std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return p.cycle; }));
}

int SymmetrySets::fork_count() const { return static_cast<int>(pairs.size()) - cycle_count(); }

std::string CanonicalForm::str() const {
  std::ostringstream out;
  for (const auto& [from, to, w, colour] : items) {
    out << '[' << (from == kBoundary ? std::string("L") : std::to_string(from)) << "->"
        << (to == kBoundary ? std::string("R") : std::to_string(to)) << ' ' << w;
    if (colour) out << ' ' << to_string(static_cast<EdgeColour>(colour));
    out << ']';
  }
  return out.str();
}

TropicalCover parse_cover(std::string_view text) {
  static const std::regex item(R"(\[\s*(L|\d+)\s*->\s*(R|\d+)\s+(\d+)(\s+[a-z]+)?\s*\])");
  TropicalCover out;
  std::string rest(text);
  std::smatch m;
  std::string::const_iterator pos = rest.cbegin();
  while (pos != rest.cend()) {
    if (std::isspace(static_cast<unsigned char>(*pos))) {
      ++pos;
      continue;
    }
    if (!std::regex_search(pos, rest.cend(), m, item, std::regex_constants::match_continuous)) {
      throw InvalidInput("cannot parse cover near \"" + std::string(pos, rest.cend()) + "\"");
    }
    Edge e;
    e.from = m[1] == "L" ? kBoundary : std::stoi(m[1]);
    e.to = m[2] == "R" ? kBoundary : std::stoi(m[2]);
    e.weight = std::stoi(m[3]);
    if ((m[1] != "L" && e.from == kBoundary) || (m[2] != "R" && e.to == kBoundary)) {
      throw InvalidInput("inner vertices are numbered from 1");
    }
    out.r = std::max({out.r, e.from, e.to});
    out.edges.push_back(e);
    pos = m[0].second;
  }
  if (out.edges.empty()) throw InvalidInput("cover has no edges");
  check_structure(out);
  return out;
}

void check_structure(const TropicalCover& c) {
  if (c.r < 0) throw InvalidInput("negative vertex count");
  for (const auto& e : c.edges) {
    if (e.from < 0 || e.from > c.r || e.to < 0 || e.to > c.r) {
      throw InvalidInput("edge references a vertex outside 1.." + std::to_string(c.r));
    }
    if (e.weight < 1) throw InvalidInput("edge weights must be positive");
    if (e.from == kBoundary && e.to == kBoundary) throw InvalidInput("edge joins the two boundaries");
    if (e.is_inner() && e.from >= e.to) throw InvalidInput("inner edges must run from a lower to a higher vertex");
  }
}

bool validate_cover(const TropicalCover& c, int g, const Partition& lambda, const Partition& mu) {
  check_structure(c);
  int r = 0;
  try {
    r = r_length(g, lambda, mu);
  } catch (const InvalidInput&) {
    return false;
  }
  if (c.r != r) return false;
  for (int v = 1; v <= c.r; ++v) {
    int in = 0, out = 0, win = 0, wout = 0;
    for (const auto& e : c.edges) {
      if (e.to == v) {
        ++in;
        win += e.weight;
      }
      if (e.from == v) {
        ++out;
        wout += e.weight;
      }
    }
    if (in + out != 3 || in == 0 || out == 0 || win != wout) return false;
  }
  auto slabs = c.slab_degrees();
  if (std::adjacent_find(slabs.begin(), slabs.end(), std::not_equal_to<>()) != slabs.end()) return false;
  if (c.left_weights() != lambda || c.right_weights() != mu) return false;
  if (!c.connected()) return false;
  return c.genus() == g;
}

SymmetrySets symmetry_sets(const TropicalCover& c) {
  SymmetrySets out;
  // Keyed by (kind, attachment(s), weight); a group of exactly two equal edges is a pair.
  std::map<std::array<int, 4>, std::vector<int>> groups;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto& e = c.edges[i];
    std::array<int, 4> key;
    if (e.is_inner()) {
      key = {0, e.from, e.to, e.weight};
    } else if (e.is_left_end()) {
      key = {1, e.to, 0, e.weight};
    } else {
      key = {2, e.from, 0, e.weight};
    }
    groups[key].push_back(static_cast<int>(i));
  }
  for (const auto& [key, members] : groups) {
    if (members.size() == 2) out.pairs.push_back({members[0], members[1], key[0] == 0, key[3]});
  }
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const auto& a, const auto& b) { return std::pair(a.first, a.second) < std::pair(b.first, b.second); });
  return out;
}

CanonicalForm canonicalize(const TropicalCover& c) {
  CanonicalForm f;
  for (const auto& e : c.edges) f.items.push_back({e.from, e.to, e.weight, 0});
  std::sort(f.items.begin(), f.items.end());
  return f;
}

CanonicalForm canonicalize(const RealTropicalCover& rc) {
  CanonicalForm f;
  const auto& edges = rc.cover.edges;
  if (rc.colouring.edge_colours.size() != edges.size()) throw InvalidInput("colouring does not match the edge list");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    f.items.push_back({edges[i].from, edges[i].to, edges[i].weight, colour_code(rc.colouring.edge_colours[i])});
  }
  std::sort(f.items.begin(), f.items.end());
  return f;
}

TropicalCover from_canonical(const CanonicalForm& form, int r) {
  TropicalCover c;
  c.r = r;
  for (const auto& [from, to, w, colour] : form.items) c.edges.push_back({from, to, w});
  return c;
}

RealTropicalCover real_from_canonical(const CanonicalForm& form, int r) {
  RealTropicalCover rc;
  rc.cover = from_canonical(form, r);
  for (const auto& item : form.items) rc.colouring.edge_colours.push_back(static_cast<EdgeColour>(item[3]));
  auto sym = symmetry_sets(rc.cover);
  for (std::size_t p = 0; p < sym.pairs.size(); ++p) {
    if (rc.colouring.edge_colours[sym.pairs[p].first] == EdgeColour::dotted &&
        rc.colouring.edge_colours[sym.pairs[p].second] == EdgeColour::dotted) {
      rc.colouring.i_rho.push_back(static_cast<int>(p));
    }
  }
  return rc;
}

std::vector<TropicalCover> enumerate_covers(int g, const Partition& lambda, const Partition& mu,
                                            const SearchLimits& limits) {
  const int r = r_length(g, lambda, mu);
  if (lambda.weight() > limits.max_degree) throw ResourceLimit("degree exceeds limit");
  if (r > limits.max_r) throw ResourceLimit("r exceeds limit");
  const int target = mu.length();

  struct Open {
    int origin;
    int weight;
    auto operator<=>(const Open&) const = default;
  };
  std::vector<Open> open;
  for (int w : lambda.parts()) open.push_back({kBoundary, w});
  std::vector<Edge> closed;
  std::set<CanonicalForm> seen;
  std::vector<TropicalCover> out;

  std::function<void(int)> sweep = [&](int v) {
    if (v > r) {
      std::vector<int> weights;
      for (const auto& o : open) weights.push_back(o.weight);
      if (Partition(weights) != mu) return;
      TropicalCover c;
      c.r = r;
      c.edges = closed;
      for (const auto& o : open) c.edges.push_back({o.origin, kBoundary, o.weight});
      if (!c.connected()) return;
      auto form = canonicalize(c);
      if (seen.insert(form).second) out.push_back(from_canonical(form, r));
      return;
    }
    const int remaining = r - v;
    std::sort(open.begin(), open.end());
    const std::vector<Open> snapshot = open;
    // Cut one open edge.
    if (std::abs(static_cast<int>(snapshot.size()) + 1 - target) <= remaining) {
      for (std::size_t i = 0; i < snapshot.size(); ++i) {
        if (i > 0 && snapshot[i] == snapshot[i - 1]) continue;
        const auto e = snapshot[i];
        for (int a = 1; 2 * a <= e.weight; ++a) {
          open = snapshot;
          open.erase(open.begin() + static_cast<long>(i));
          open.push_back({v, a});
          open.push_back({v, e.weight - a});
          closed.push_back({e.origin, v, e.weight});
          sweep(v + 1);
          closed.pop_back();
        }
      }
    }
    // Join two open edges.
    if (snapshot.size() >= 2 && std::abs(static_cast<int>(snapshot.size()) - 1 - target) <= remaining) {
      std::set<std::pair<Open, Open>> tried;
      for (std::size_t i = 0; i < snapshot.size(); ++i) {
        for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
          if (!tried.insert({snapshot[i], snapshot[j]}).second) continue;
          open = snapshot;
          open.erase(open.begin() + static_cast<long>(j));
          open.erase(open.begin() + static_cast<long>(i));
          open.push_back({v, snapshot[i].weight + snapshot[j].weight});
          closed.push_back({snapshot[i].origin, v, snapshot[i].weight});
          closed.push_back({snapshot[j].origin, v, snapshot[j].weight});
          sweep(v + 1);
          closed.pop_back();
          closed.pop_back();
        }
      }
    }
    open = snapshot;
  };
  sweep(1);
  std::sort(out.begin(), out.end(),
            [](const TropicalCover& a, const TropicalCover& b) { return canonicalize(a) < canonicalize(b); });
  return out;
}

std::vector<std::vector<int>> even_components(const TropicalCover& c, const SymmetrySets& sym,
                                              const std::vector<int>& i_rho) {
  const int n = static_cast<int>(c.edges.size());
  std::vector<bool> in_rho(n, false);
  for (int p : i_rho) {
    in_rho[sym.pairs[p].first] = true;
    in_rho[sym.pairs[p].second] = true;
  }
  std::vector<int> members;
  for (int i = 0; i < n; ++i) {
    if (c.edges[i].weight % 2 == 0 && !in_rho[i]) members.push_back(i);
  }
  UnionFind uf(n);
  for (int v = 1; v <= c.r; ++v) {
    int first = -1;
    for (int i : members) {
      if (c.edges[i].from != v && c.edges[i].to != v) continue;
      if (first < 0) {
        first = i;
      } else {
        uf.unite(i, first);
      }
    }
  }
  std::vector<std::vector<int>> out;
  std::map<int, int> slot;
  for (int i : members) {
    int root = uf.find(i);
    auto [it, fresh] = slot.emplace(root, static_cast<int>(out.size()));
    if (fresh) out.emplace_back();
    out[it->second].push_back(i);
  }
  return out;
}

std::vector<Colouring> enumerate_colourings(const TropicalCover& c) {
  const auto sym = symmetry_sets(c);
  const int ncf = static_cast<int>(sym.pairs.size());
  std::vector<Colouring> out;
  std::set<CanonicalForm> seen;
  for (std::uint32_t mask = 0; mask < (1u << ncf); ++mask) {
    std::vector<int> i_rho;
    for (int p = 0; p < ncf; ++p) {
      if (mask & (1u << p)) i_rho.push_back(p);
    }
    const auto comps = even_components(c, sym, i_rho);
    for (std::uint32_t cm = 0; cm < (1u << comps.size()); ++cm) {
      Colouring col;
      col.i_rho = i_rho;
      col.edge_colours.assign(c.edges.size(), EdgeColour::black);
      for (int p : i_rho) {
        col.edge_colours[sym.pairs[p].first] = EdgeColour::dotted;
        col.edge_colours[sym.pairs[p].second] = EdgeColour::dotted;
      }
      for (std::size_t k = 0; k < comps.size(); ++k) {
        const EdgeColour colour = (cm & (1u << k)) ? EdgeColour::red : EdgeColour::blue;
        for (int i : comps[k]) col.edge_colours[i] = colour;
      }
      // Automorphisms only swap the members of a pair, so this never merges two colourings.
      if (seen.insert(canonicalize(RealTropicalCover{c, col})).second) out.push_back(std::move(col));
    }
  }
  return out;
}

void check_colouring(const RealTropicalCover& rc) {
  const auto& c = rc.cover;
  const auto& col = rc.colouring;
  if (col.edge_colours.size() != c.edges.size()) throw InvariantViolation("colouring does not match the edge list");
  const auto sym = symmetry_sets(c);
  std::vector<bool> in_rho(c.edges.size(), false);
  for (int p : col.i_rho) {
    if (p < 0 || p >= static_cast<int>(sym.pairs.size())) throw InvariantViolation("I_rho index out of range");
    in_rho[sym.pairs[p].first] = in_rho[sym.pairs[p].second] = true;
  }
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto colour = col.edge_colours[i];
    if ((colour == EdgeColour::dotted) != in_rho[i]) {
      throw InvariantViolation("dotted edges are not exactly the edges of I_rho");
    }
    if (colour == EdgeColour::dotted) continue;
    const bool even = c.edges[i].weight % 2 == 0;
    if (even != (colour == EdgeColour::red || colour == EdgeColour::blue)) {
      throw InvariantViolation("edge colour does not match weight parity");
    }
  }
  for (const auto& comp : even_components(c, sym, col.i_rho)) {
    for (int i : comp) {
      if (col.edge_colours[i] != col.edge_colours[comp.front()]) {
        throw InvariantViolation("an even component carries two colours");
      }
    }
  }
}

SignSequence vertex_splitting(const RealTropicalCover& rc) {
  const auto& c = rc.cover;
  const auto& colours = rc.colouring.edge_colours;
  if (colours.size() != c.edges.size()) throw InvariantViolation("colouring does not match the edge list");
  std::vector<int> signs;
  for (int v = 1; v <= c.r; ++v) {
    std::vector<int> left, right;
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
      if (c.edges[i].to == v) left.push_back(static_cast<int>(i));
      if (c.edges[i].from == v) right.push_back(static_cast<int>(i));
    }
    if (left.size() + right.size() != 3 || left.empty() || right.empty()) {
      throw InvariantViolation("vertex " + std::to_string(v) + " is not 3-valent");
    }
    const auto& single = left.size() == 1 ? left : right;
    const auto& pair = left.size() == 1 ? right : left;
    const EdgeColour e0 = colours[single[0]];
    const EdgeColour e1 = colours[pair[0]];
    const EdgeColour e2 = colours[pair[1]];
    const bool odd1 = e1 == EdgeColour::black;
    const bool odd2 = e2 == EdgeColour::black;
    int sign = 0;
    auto by_single = [&](EdgeColour positive) {
      if (e0 == positive) return 1;
      if (e0 == EdgeColour::red || e0 == EdgeColour::blue) return -1;
      return 0;
    };
    if (e1 == EdgeColour::dotted && e2 == EdgeColour::dotted) {
      sign = by_single(EdgeColour::blue);
    } else if (e1 == EdgeColour::dotted || e2 == EdgeColour::dotted) {
      sign = 0;
    } else if (odd1 && odd2) {
      sign = by_single(EdgeColour::red);
    } else if (odd1 || odd2) {
      const EdgeColour even = odd1 ? e2 : e1;
      if (e0 == EdgeColour::black) sign = even == EdgeColour::blue ? 1 : -1;
    } else if (e1 == e2 && e0 == e1) {
      sign = e0 == EdgeColour::blue ? 1 : -1;
    }
    if (sign == 0) {
      throw InvariantViolation("vertex " + std::to_string(v) + " has no entry in the sign table (" +
                               std::string(to_string(e0)) + " | " + std::string(to_string(e1)) + "+" +
                               std::string(to_string(e2)) + ")");
    }
    signs.push_back(sign);
  }
  return SignSequence(std::move(signs));
}

Rational real_multiplicity(const RealTropicalCover& rc) {
  const auto& c = rc.cover;
  const auto sym = symmetry_sets(c);
  int even_inner = 0;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    if (c.edges[i].is_inner() && c.edges[i].weight % 2 == 0 &&
        rc.colouring.edge_colours[i] != EdgeColour::dotted) {
      ++even_inner;
    }
  }
  const int exponent = even_inner - static_cast<int>(sym.pairs.size());
  Rational m(1);
  if (exponent >= 0) {
    m = Rational(1LL << exponent);
  } else {
    m = Rational(1, 1LL << (-exponent));
  }
  for (int p : rc.colouring.i_rho) {
    if (sym.pairs[p].cycle) m *= sym.pairs[p].weight;
  }
  return m;
}

std::string to_dot(const TropicalCover& c, const Colouring* colouring) {
  std::ostringstream out;
  out << "digraph cover {\n  rankdir=LR;\n";
  for (int v = 1; v <= c.r; ++v) out << "  v" << v << " [label=\"" << v << "\", shape=circle];\n";
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto& e = c.edges[i];
    std::string from = e.is_left_end() ? "l" + std::to_string(i) : "v" + std::to_string(e.from);
    std::string to = e.is_right_end() ? "r" + std::to_string(i) : "v" + std::to_string(e.to);
    if (e.is_left_end()) out << "  " << from << " [shape=point];\n";
    if (e.is_right_end()) out << "  " << to << " [shape=point];\n";
    out << "  " << from << " -> " << to << " [label=\"" << e.weight << "\"";
    if (colouring) {
      const auto colour = colouring->edge_colours[i];
      if (colour == EdgeColour::dotted) {
        out << ", style=dotted";
      } else {
        out << ", color=" << to_string(colour);
      }
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hurwitz
