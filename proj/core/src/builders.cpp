#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "hurwitz/errors.hpp"
#include "hurwitz/zigzag.hpp"

namespace hurwitz {

namespace {

// Graph with arbitrary vertex labels 1..n; edges still point left to right.
struct Draft {
  int n = 0;
  std::vector<Edge> edges;

  int vertex() { return ++n; }
  int add(int from, int to, int w) {
    edges.push_back({from, to, w});
    return static_cast<int>(edges.size()) - 1;
  }
  TropicalCover cover() const { return {n, edges}; }

  // Fork of two weight-1 left ends feeding `into` with weight 2 through `cycles` symmetric cycles.
  void in_fork(int into, int cycles = 0) {
    const int f = vertex();
    add(kBoundary, f, 1);
    add(kBoundary, f, 1);
    int prev = f;
    for (int i = 0; i < cycles; ++i) {
      const int a = vertex();
      const int b = vertex();
      add(prev, a, 2);
      add(a, b, 1);
      add(a, b, 1);
      prev = b;
    }
    add(prev, into, 2);
  }
  void out_fork(int from) {
    const int f = vertex();
    add(from, f, 2);
    add(f, kBoundary, 1);
    add(f, kBoundary, 1);
  }
};

// Tree of vertex groups that must stay consecutive; leaves carry a vertex.
struct OrderNode {
  int vertex = 0;
  std::vector<OrderNode> children;
};

void collect(const OrderNode& node, std::vector<int>& out) {
  if (node.vertex != 0) out.push_back(node.vertex);
  for (const auto& ch : node.children) collect(ch, out);
}

// Topological order of the children of `node` (ties by smallest label), recursively.
bool order_node(const OrderNode& node, const std::vector<Edge>& edges, std::vector<int>& out) {
  if (node.children.empty()) {
    if (node.vertex != 0) out.push_back(node.vertex);
    return true;
  }
  const std::size_t q = node.children.size();
  std::map<int, std::size_t> owner;
  std::vector<int> min_label(q, 1 << 30);
  for (std::size_t i = 0; i < q; ++i) {
    std::vector<int> leaves;
    collect(node.children[i], leaves);
    for (int v : leaves) {
      owner[v] = i;
      min_label[i] = std::min(min_label[i], v);
    }
  }
  std::vector<std::set<std::size_t>> succ(q);
  std::vector<int> indeg(q, 0);
  for (const auto& e : edges) {
    auto a = owner.find(e.from);
    auto b = owner.find(e.to);
    if (a == owner.end() || b == owner.end() || a->second == b->second) continue;
    if (succ[a->second].insert(b->second).second) ++indeg[b->second];
  }
  std::vector<char> done(q, 0);
  for (std::size_t step = 0; step < q; ++step) {
    std::size_t pick = q;
    for (std::size_t i = 0; i < q; ++i) {
      if (done[i] || indeg[i] != 0) continue;
      if (pick == q || min_label[i] < min_label[pick]) pick = i;
    }
    if (pick == q) return false;
    done[pick] = 1;
    for (auto s : succ[pick]) --indeg[s];
    if (!order_node(node.children[pick], edges, out)) return false;
  }
  return true;
}

TropicalCover relabel(const TropicalCover& draft, const std::vector<int>& order) {
  std::vector<int> label(draft.r + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) label[order[i]] = static_cast<int>(i) + 1;
  TropicalCover out{draft.r, {}};
  for (const auto& e : draft.edges) {
    Edge f{label[e.from], label[e.to], e.weight};
    if (f.from != kBoundary && f.to != kBoundary && f.from >= f.to) {
      throw InvariantViolation("vertex order contradicts an edge");
    }
    out.edges.push_back(f);
  }
  return out;
}

std::optional<TropicalCover> order_tree(const TropicalCover& draft, const OrderNode& root) {
  std::vector<int> order;
  if (!order_node(root, draft.edges, order)) return std::nullopt;
  if (static_cast<int>(order.size()) != draft.r) throw InvariantViolation("order tree does not cover every vertex");
  return relabel(draft, order);
}

OrderNode plain_tree(const std::vector<int>& vertices) {
  OrderNode node;
  for (int v : vertices) node.children.push_back({v, {}});
  return node;
}

std::vector<int> all_vertices(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

TropicalCover topological(const TropicalCover& draft) {
  auto out = order_tree(draft, plain_tree(all_vertices(draft.r)));
  if (!out) throw InvariantViolation("draft graph has a directed cycle");
  return *out;
}

// Orders a zigzag draft so that tails and components occupy consecutive blocks; the first
// string reaching at least `target` wins.
std::optional<TropicalCover> arrange(const TropicalCover& draft, ZigzagClass target) {
  for (const auto& z : zigzag_structures(draft)) {
    if (z.kind != StringKind::path) continue;
    std::map<int, const Tail*> tail_at;
    for (const auto& t : z.tails) tail_at[t.attachment] = &t;
    OrderNode root;
    std::set<int> placed;
    for (const auto& comp : z.components) {
      OrderNode block;
      for (int v : comp.vertices) {
        if (!tail_at.count(v)) continue;
        block.children.push_back({v, {}});
        if (!tail_at[v]->vertices.empty()) block.children.push_back(plain_tree(tail_at[v]->vertices));
        placed.insert(v);
        placed.insert(tail_at[v]->vertices.begin(), tail_at[v]->vertices.end());
      }
      root.children.push_back(std::move(block));
    }
    for (int v = 1; v <= draft.r; ++v)
      if (!placed.count(v)) root.children.push_back({v, {}});
    auto ordered = order_tree(draft, root);
    if (!ordered) continue;
    if (classify(*ordered).cls >= target) return ordered;
  }
  return std::nullopt;
}

bool has_simple_colouring(const TropicalCover& c, int s) {
  const auto want = SignSequence::simple(c.r, s);
  for (const auto& col : enumerate_colourings(c))
    if (vertex_splitting(RealTropicalCover{c, col}) == want) return true;
  return false;
}

void check_type(const TropicalCover& c, int g, const Partition& lambda, const Partition& mu, const char* what) {
  check_structure(c);
  if (!validate_cover(c, g, lambda, mu)) {
    throw InvariantViolation(std::string(what) + " does not have type (" + std::to_string(g) + ",(" + lambda.str() +
                             "),(" + mu.str() + "))");
  }
}

Partition join(const Partition& a, const std::vector<int>& extra) {
  auto parts = a.parts();
  parts.insert(parts.end(), extra.begin(), extra.end());
  return Partition(parts);
}

// Ports of a chain component: half-edges to glue or to turn into ends.
struct Port {
  int vertex = 0;
  bool outgoing = false;
};

struct ChainComponent {
  ComponentType type;
  std::vector<int> vertices;  // internal left-to-right order
  Port e1, e2, e3;            // e3 unused for types three and four
  int in_fork_vertex = 0;     // fork vertex feeding the component, 0 if none
  int in_fork_target = 0;
  int out_fork_vertex = 0;    // fork vertex fed by the component, 0 if none
  int out_fork_source = 0;
  int in_end_vertex = 0;      // weight-2 left end of types three and four
  int out_end_vertex = 0;     // weight-2 right end of types three and four
};

struct ChainDraft {
  Draft draft;
  std::vector<ChainComponent> comps;
  int left_port_edge = -1;   // unglued e2 of the last component (a string in-end of weight 1)
  int right_port_edge = -1;  // unglued e1 of the first component (a string out-end of weight 1)
};

ChainComponent make_component(Draft& d, ComponentType type) {
  ChainComponent c{type, {}, {}, {}, {}};
  switch (type) {
    case ComponentType::one: {
      const int f = d.vertex(), j = d.vertex(), k = d.vertex(), o = d.vertex();
      d.add(kBoundary, f, 1);
      d.add(kBoundary, f, 1);
      d.add(f, j, 2);
      d.add(j, k, 1);
      d.add(k, o, 2);
      d.add(o, kBoundary, 1);
      c.vertices = {f, j, k, o};
      c.e1 = {j, true};
      c.e2 = {k, false};
      c.e3 = {o, true};
      c.in_fork_vertex = f;
      c.in_fork_target = j;
      break;
    }
    case ComponentType::two: {
      const int f = d.vertex(), k = d.vertex(), j = d.vertex(), o = d.vertex();
      d.add(kBoundary, f, 1);
      d.add(f, k, 2);
      d.add(k, j, 1);
      d.add(j, o, 2);
      d.add(o, kBoundary, 1);
      d.add(o, kBoundary, 1);
      c.vertices = {f, k, j, o};
      c.e1 = {j, false};
      c.e2 = {k, true};
      c.e3 = {f, false};
      c.out_fork_vertex = o;
      c.out_fork_source = j;
      break;
    }
    case ComponentType::three: {
      const int j = d.vertex(), k = d.vertex();
      d.add(kBoundary, j, 2);
      d.add(j, k, 1);
      d.add(k, kBoundary, 2);
      c.vertices = {j, k};
      c.e1 = {j, true};
      c.e2 = {k, false};
      c.in_end_vertex = j;
      c.out_end_vertex = k;
      break;
    }
    case ComponentType::four: {
      const int k = d.vertex(), j = d.vertex();
      d.add(kBoundary, k, 2);
      d.add(k, j, 1);
      d.add(j, kBoundary, 2);
      c.vertices = {k, j};
      c.e1 = {j, false};
      c.e2 = {k, true};
      c.in_end_vertex = k;
      c.out_end_vertex = j;
      break;
    }
  }
  return c;
}

int close_port(Draft& d, const Port& p) {
  return p.outgoing ? d.add(p.vertex, kBoundary, 1) : d.add(kBoundary, p.vertex, 1);
}

void glue(Draft& d, const Port& a, const Port& b) {
  if (a.outgoing == b.outgoing) throw InvalidInput("gluing two half-edges of the same direction");
  if (a.outgoing) {
    d.add(a.vertex, b.vertex, 1);
  } else {
    d.add(b.vertex, a.vertex, 1);
  }
}

bool is_one_or_three(ComponentType t) { return t == ComponentType::one || t == ComponentType::three; }

ChainDraft chain_draft(int m, const std::vector<ComponentType>& types) {
  if (m < 1) throw InvalidInput("m must be at least 1");
  if (static_cast<int>(types.size()) != m) throw InvalidInput("need one component type per component");
  for (int i = 0; i < m; ++i) {
    const bool last = i == m - 1;
    const bool small = types[i] == ComponentType::three || types[i] == ComponentType::four;
    if (last != small) throw InvalidInput("components 1..m-1 must be of type 1 or 2 and the last of type 3 or 4");
  }
  ChainDraft out;
  for (auto t : types) out.comps.push_back(make_component(out.draft, t));
  for (int i = 0; i + 1 < m; ++i) {
    auto& a = out.comps[i];
    const auto& b = out.comps[i + 1];
    const bool b13 = is_one_or_three(b.type);
    // Type one glues e2 to types one/three and e3 to types two/four; type two the other way round.
    const bool use_e2 = a.type == ComponentType::one ? b13 : !b13;
    glue(out.draft, use_e2 ? a.e2 : a.e3, b.e1);
    const Port& spare = use_e2 ? a.e3 : a.e2;
    close_port(out.draft, spare);
  }
  out.right_port_edge = -1;
  out.left_port_edge = -1;
  const int first_e1 = close_port(out.draft, out.comps.front().e1);
  if (out.comps.front().e1.outgoing) out.right_port_edge = first_e1;
  const auto& last = out.comps.back();
  const int last_e2 = close_port(out.draft, last.e2);
  if (!last.e2.outgoing) out.left_port_edge = last_e2;
  if (last.type == ComponentType::three && m == 1) out.right_port_edge = first_e1;
  return out;
}

OrderNode chain_tree(const ChainDraft& cd, const std::vector<int>& order, const std::vector<int>& moved_to,
                     const std::vector<int>& moved_vertex) {
  const int m = static_cast<int>(cd.comps.size());
  std::vector<int> by_position(m);
  for (int i = 0; i < m; ++i) by_position[order[i] - 1] = i;
  OrderNode root;
  for (int p = 0; p < m; ++p) {
    const int i = by_position[p];
    std::vector<int> vs;
    for (int v : cd.comps[i].vertices)
      if (std::find(moved_vertex.begin(), moved_vertex.end(), v) == moved_vertex.end()) vs.push_back(v);
    for (std::size_t t = 0; t < moved_to.size(); ++t)
      if (moved_to[t] == i) vs.push_back(moved_vertex[t]);
    root.children.push_back(plain_tree(vs));
  }
  return root;
}

void check_order(int m, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != m) throw InvalidInput("order must list one block per component");
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < m; ++i)
    if (sorted[i] != i + 1) throw InvalidInput("order must be a permutation of 1..m");
}

TropicalCover strict_order(const TropicalCover& draft, const OrderNode& root) {
  std::vector<int> out;
  for (const auto& block : root.children) {
    if (!order_node(block, draft.edges, out)) throw InvariantViolation("component block has a directed cycle");
  }
  std::vector<int> label(draft.r + 1, 0);
  for (std::size_t i = 0; i < out.size(); ++i) label[out[i]] = static_cast<int>(i) + 1;
  for (const auto& e : draft.edges) {
    if (e.from != kBoundary && e.to != kBoundary && label[e.from] >= label[e.to]) {
      throw InvalidInput("block order is incompatible with the component types");
    }
  }
  return relabel(draft, out);
}

struct ChainResult {
  TropicalCover cover;
  int left_port_edge = -1;
  int right_port_edge = -1;
};

// Tail exchange between a fork tail of an inner component and the matching end of the last component.
std::vector<Draft> exchanges(const ChainDraft& cd, std::vector<std::pair<int, int>>& moves) {
  std::vector<Draft> out;
  const auto& last = cd.comps.back();
  const int last_index = static_cast<int>(cd.comps.size()) - 1;
  for (int i = 0; i < last_index; ++i) {
    const auto& c = cd.comps[i];
    for (int side = 0; side < 2; ++side) {
      const int fork = side == 0 ? c.in_fork_vertex : c.out_fork_vertex;
      if (fork == 0) continue;
      Draft d = cd.draft;
      bool ok = false;
      for (auto& e : d.edges) {
        if (side == 0) {
          // fork -> target (w2) becomes fork -> last in-end vertex; the last in-end moves to target.
          if (e.from == fork && e.to == c.in_fork_target && e.weight == 2) {
            e.to = last.in_end_vertex;
            ok = true;
          } else if (e.from == kBoundary && e.to == last.in_end_vertex && e.weight == 2) {
            e.to = c.in_fork_target;
          }
        } else {
          if (e.from == c.out_fork_source && e.to == fork && e.weight == 2) {
            e.from = last.out_end_vertex;
            ok = true;
          } else if (e.from == last.out_end_vertex && e.to == kBoundary && e.weight == 2) {
            e.from = c.out_fork_source;
          }
        }
      }
      if (!ok) continue;
      out.push_back(std::move(d));
      moves.push_back({fork, last_index});
    }
  }
  return out;
}

ChainResult chain(int m, const std::vector<ComponentType>& types, const std::vector<int>& order,
                  std::optional<int> split_positives) {
  check_order(m, order);
  const auto cd = chain_draft(m, types);
  ChainResult res{strict_order(cd.draft.cover(), chain_tree(cd, order, {}, {})), cd.left_port_edge,
                  cd.right_port_edge};
  if (!split_positives) return res;
  const int s = *split_positives;
  if (s < 0 || s > res.cover.r) throw InvalidInput("split_positives must lie in 0..r");
  if (has_simple_colouring(res.cover, s)) return res;
  std::vector<std::pair<int, int>> moves;
  auto alts = exchanges(cd, moves);
  for (std::size_t i = 0; i < alts.size(); ++i) {
    TropicalCover cand;
    try {
      cand = strict_order(alts[i].cover(), chain_tree(cd, order, {moves[i].second}, {moves[i].first}));
    } catch (const InvalidInput&) {
      continue;
    }
    if (has_simple_colouring(cand, s)) return {cand, cd.left_port_edge, cd.right_port_edge};
  }
  return res;
}

struct SideLists {
  std::vector<TailStep> lambda_side;  // consumed while k <= 0
  std::vector<TailStep> mu_side;      // consumed while k > 0
};

TailSequence run_sequence(int k0, SideLists lists) {
  TailSequence out;
  out.k.push_back(k0);
  int k = k0;
  std::size_t li = 0, mi = 0;
  while (li < lists.lambda_side.size() || mi < lists.mu_side.size()) {
    bool take_mu = k > 0 ? mi < lists.mu_side.size() : li >= lists.lambda_side.size();
    TailStep step = take_mu ? lists.mu_side[mi++] : lists.lambda_side[li++];
    const int next = take_mu ? k - step.weight : k + step.weight;
    if (next == 0) throw InvariantViolation("string edge of weight 0");
    step.bent = (k > 0) != (next > 0);
    out.steps.push_back(step);
    out.k.push_back(next);
    k = next;
  }
  return out;
}

std::vector<TailStep> as_steps(const std::vector<int>& weights, bool in, bool fork) {
  std::vector<TailStep> out;
  for (int w : weights) out.push_back({w, in, false, fork});
  return out;
}

// Draws the string with tails following the sequence into an empty draft; returns v_0..v_N (v_0 unused).
// Edge 0 is the string end at v_1 and edge N the string end at v_N.
std::vector<int> draw_sequence(Draft& d, const TailSequence& seq, int g, bool cycles_on_first_fork) {
  if (!d.edges.empty()) throw InvariantViolation("draw_sequence needs an empty draft");
  const int n = static_cast<int>(seq.steps.size());
  std::vector<int> v(n + 1, 0);
  for (int i = 1; i <= n; ++i) v[i] = d.vertex();
  const auto& k = seq.k;
  if (k[0] > 0) {
    d.add(kBoundary, v[1], k[0]);
  } else {
    d.add(v[1], kBoundary, -k[0]);
  }
  for (int i = 1; i < n; ++i) {
    if (k[i] > 0) {
      d.add(v[i], v[i + 1], k[i]);
    } else {
      d.add(v[i + 1], v[i], -k[i]);
    }
  }
  if (k[n] > 0) {
    d.add(v[n], kBoundary, k[n]);
  } else {
    d.add(kBoundary, v[n], -k[n]);
  }
  bool cycles_placed = !cycles_on_first_fork || g == 0;
  for (int i = 1; i <= n; ++i) {
    const auto& st = seq.steps[i - 1];
    if (st.in_tail && st.fork) {
      int cycles = 0;
      if (!cycles_placed) {
        cycles = g;
        cycles_placed = true;
      }
      // A fork of two parts w/2 joined to weight w.
      const int f = d.vertex();
      d.add(kBoundary, f, st.weight / 2);
      d.add(kBoundary, f, st.weight / 2);
      int prev = f;
      for (int c = 0; c < cycles; ++c) {
        const int a = d.vertex();
        const int b = d.vertex();
        d.add(prev, a, st.weight);
        d.add(a, b, st.weight / 2);
        d.add(a, b, st.weight / 2);
        prev = b;
      }
      d.add(prev, v[i], st.weight);
    } else if (st.in_tail) {
      d.add(kBoundary, v[i], st.weight);
    } else if (st.fork) {
      const int f = d.vertex();
      d.add(v[i], f, st.weight);
      d.add(f, kBoundary, st.weight / 2);
      d.add(f, kBoundary, st.weight / 2);
    } else {
      d.add(v[i], kBoundary, st.weight);
    }
  }
  if (!cycles_placed) throw InvalidInput("genus needs at least one in-tail with a symmetric fork");
  return v;
}

int find_edge(const Draft& d, int from, int to) {
  for (std::size_t i = 0; i < d.edges.size(); ++i)
    if (d.edges[i].from == from && d.edges[i].to == to) return static_cast<int>(i);
  throw InvariantViolation("missing edge in draft");
}

// Replaces edge idx by a chain through new vertices, each carrying a weight-2 fork tail; in_tails lists
// the tail sides walking from source to target. Edge idx becomes the first segment. Returns the chain vertices.
std::vector<int> subdivide(Draft& d, int idx, const std::vector<bool>& in_tails) {
  const Edge e = d.edges[idx];
  int delta = 0;
  for (bool in : in_tails) delta += in ? 2 : -2;
  int w = e.weight - delta;
  if (w <= 0) throw InvariantViolation("subdivision drives a string weight to zero");
  std::vector<int> chain;
  int prev = e.from;
  for (std::size_t i = 0; i < in_tails.size(); ++i) {
    const int u = d.vertex();
    if (i == 0) {
      d.edges[idx] = {prev, u, w};
    } else {
      d.add(prev, u, w);
    }
    chain.push_back(u);
    if (in_tails[i]) {
      d.in_fork(u);
      w += 2;
    } else {
      d.out_fork(u);
      w -= 2;
    }
    prev = u;
  }
  if (!in_tails.empty()) d.add(prev, e.to, w);
  return chain;
}

std::vector<int> component_of(const Draft& d, int start, int skip_edge) {
  std::vector<std::vector<int>> adj(d.n + 1);
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    if (static_cast<int>(i) == skip_edge) continue;
    const auto& e = d.edges[i];
    if (e.from != kBoundary && e.to != kBoundary) {
      adj[e.from].push_back(e.to);
      adj[e.to].push_back(e.from);
    }
  }
  std::vector<int> out;
  if (start == kBoundary) return out;
  std::vector<char> seen(d.n + 1, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Cuts edge cut_edge of d and splices `mid` in: source -> mid's left port vertex, mid's right port vertex -> target.
TropicalCover splice(const Draft& d, int cut_edge, const ChainResult& mid) {
  const Edge cut = d.edges[cut_edge];
  if (cut.weight != 1) throw InvariantViolation("surgery edge must have weight 1");
  const auto left_part = component_of(d, cut.from, cut_edge);
  const auto right_part = component_of(d, cut.to, cut_edge);

  Draft out;
  out.n = d.n;
  for (std::size_t i = 0; i < d.edges.size(); ++i)
    if (static_cast<int>(i) != cut_edge) out.edges.push_back(d.edges[i]);
  const int offset = d.n;
  const auto& mc = mid.cover;
  for (std::size_t i = 0; i < mc.edges.size(); ++i) {
    Edge e = mc.edges[i];
    if (e.from != kBoundary) e.from += offset;
    if (e.to != kBoundary) e.to += offset;
    if (static_cast<int>(i) == mid.left_port_edge && cut.from != kBoundary) e.from = cut.from;
    if (static_cast<int>(i) == mid.right_port_edge && cut.to != kBoundary) e.to = cut.to;
    out.edges.push_back(e);
  }
  out.n = d.n + mc.r;

  OrderNode root;
  root.children.push_back(plain_tree(left_part));
  std::vector<int> mid_vertices;
  for (int v = 1; v <= mc.r; ++v) mid_vertices.push_back(v + offset);
  root.children.push_back(plain_tree(mid_vertices));
  root.children.push_back(plain_tree(right_part));
  std::vector<int> order;
  for (const auto& block : root.children)
    if (!order_node(block, out.edges, order)) throw InvariantViolation("surgery part has a directed cycle");
  if (static_cast<int>(order.size()) != out.n) throw InvariantViolation("surgery lost vertices");
  return relabel(out.cover(), order);
}

// String L -> B1 <- B2 -> ... <- B2m -> R; edge 0 is the in-end and edge 2m the out-end.
Draft standard_draft(int m, int g) {
  if (m < 1) throw InvalidInput("m must be at least 1");
  if (g < 0) throw InvalidInput("genus must be non-negative");
  Draft d;
  std::vector<int> b(2 * m + 1, 0);
  for (int j = 1; j <= 2 * m; ++j) b[j] = d.vertex();
  d.add(kBoundary, b[1], 1);
  for (int j = 1; j < 2 * m; ++j) {
    if (j % 2 == 1) {
      d.add(b[j + 1], b[j], 1);
    } else {
      d.add(b[j], b[j + 1], 1);
    }
  }
  d.add(b[2 * m], kBoundary, 1);
  for (int j = 1; j <= 2 * m; ++j) {
    if (j % 2 == 1) {
      d.out_fork(b[j]);
    } else {
      d.in_fork(b[j], j == 2 ? g : 0);
    }
  }
  return d;
}

// Copies `from` into `into` with shifted labels; returns the index shift of its edges.
int append(Draft& into, const Draft& from) {
  const int offset = into.n;
  const int shift = static_cast<int>(into.edges.size());
  for (Edge e : from.edges) {
    if (e.from != kBoundary) e.from += offset;
    if (e.to != kBoundary) e.to += offset;
    into.edges.push_back(e);
  }
  into.n += from.n;
  return shift;
}

// Joins the right end `out_end` to the left end `in_end` into one inner edge.
void fuse(Draft& d, int out_end, int in_end) {
  auto& a = d.edges[out_end];
  const auto& b = d.edges[in_end];
  if (!a.is_right_end() || !b.is_left_end() || a.weight != b.weight) {
    throw InvariantViolation("fused ends must be a right and a left end of equal weight");
  }
  a.to = b.to;
  d.edges.erase(d.edges.begin() + in_end);
}

// Blocks: vertices of each draft part, kept consecutive in the given order.
TropicalCover arrange_parts(const Draft& d, const std::vector<std::pair<int, int>>& parts, ZigzagClass target) {
  if (auto out = arrange(d.cover(), target)) return *out;
  OrderNode root;
  for (auto [first, last] : parts) {
    std::vector<int> vs;
    for (int v = first; v <= last; ++v) vs.push_back(v);
    root.children.push_back(plain_tree(vs));
  }
  auto out = order_tree(d.cover(), root);
  if (!out) throw InvariantViolation("glued parts cannot be ordered");
  return *out;
}

struct CaseData {
  TailDecomposition l, m;
};

void check_common(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw InvalidInput("lambda and mu must have equal weight");
  const auto m = tail_decomposition(mu);
  if (!m.odd_paired.empty()) throw InvalidInput("hypothesis failed: mu_{o,o} must be empty");
  const auto l = tail_decomposition(lambda);
  for (int p : l.odd_paired.parts())
    if (p != 1) throw InvalidInput("hypothesis failed: lambda_{o,o} may contain only ones");
}

}  // namespace

TropicalCover order_by_blocks(const TropicalCover& draft, const std::vector<std::vector<int>>& blocks) {
  OrderNode root;
  std::set<int> placed;
  for (const auto& b : blocks) {
    root.children.push_back(plain_tree(b));
    placed.insert(b.begin(), b.end());
  }
  for (int v = 1; v <= draft.r; ++v)
    if (!placed.count(v)) root.children.push_back({v, {}});
  auto out = order_tree(draft, root);
  if (!out) throw InvalidInput("blocks cannot be ordered consistently with the edges");
  return *out;
}

TropicalCover build_standard_universal(int m, int g) {
  const auto d = standard_draft(m, g);
  auto out = arrange(d.cover(), ZigzagClass::universally_monotone);
  if (!out) throw InvariantViolation("standard construction is not universally monotone");
  const Partition ones(std::vector<int>(2 * m + 1, 1));
  check_type(*out, g, ones, ones, "standard universal cover");
  return *out;
}

std::vector<ComponentType> chain_types_for_order(const std::vector<int>& order) {
  const int m = static_cast<int>(order.size());
  check_order(m, order);
  std::vector<ComponentType> types(m);
  for (int i = 0; i < m; ++i) {
    bool left_of_previous = i > 0 && order[i] < order[i - 1];
    const bool last = i == m - 1;
    if (i == 0) left_of_previous = true;
    if (last) {
      types[i] = left_of_previous ? ComponentType::three : ComponentType::four;
    } else {
      types[i] = left_of_previous ? ComponentType::one : ComponentType::two;
    }
  }
  return types;
}

TropicalCover build_component_chain(int m, const std::vector<ComponentType>& types, const std::vector<int>& order,
                                    std::optional<int> split_positives) {
  auto res = chain(m, types, order, split_positives);
  std::vector<int> ones(2 * m - 1, 1);
  const Partition side = join(Partition(ones), {2});
  check_type(res.cover, 0, side, side, "component chain");
  return res.cover;
}

TailSequence tail_sequence(const Partition& lambda, const Partition& mu, int case_number) {
  check_common(lambda, mu);
  const auto l = tail_decomposition(lambda);
  const auto u = tail_decomposition(mu);
  const auto& lo = l.odd_distinct.parts();
  const auto& uo = u.odd_distinct.parts();
  const int pairs = l.ones_pairs();

  std::vector<int> lam_even = l.even.parts();  // descending
  std::vector<int> mu_even = u.even.parts();
  SideLists lists;
  auto lambda_steps = [&](int pair_count, bool defer_max) {
    std::vector<TailStep> out;
    std::vector<int> evens = lam_even;
    int deferred = 0;
    if (defer_max && !evens.empty()) {
      deferred = evens.front();
      evens.erase(evens.begin());
    }
    for (auto s : as_steps(evens, true, false)) out.push_back(s);
    for (int i = 0; i < pair_count; ++i) out.push_back({2, true, false, true});
    if (deferred) out.push_back({deferred, true, false, false});
    return out;
  };
  auto mu_steps = [&](bool defer_max) {
    std::vector<int> evens = mu_even;
    int deferred = 0;
    if (defer_max && !evens.empty()) {
      deferred = evens.front();
      evens.erase(evens.begin());
    }
    auto out = as_steps(evens, false, false);
    if (deferred) out.push_back({deferred, false, false, false});
    return out;
  };

  int k0 = 0, expected = 0;
  switch (case_number) {
    case 1:
      if (lo.size() != 1 || uo.size() != 1) throw InvalidInput("case 1 needs l(lambda_o) = l(mu_o) = 1");
      if (l.even_max() <= uo[0]) throw InvalidInput("case 1 needs lambda_e^max > mu_o");
      k0 = lo[0];
      expected = uo[0];
      lists = {lambda_steps(pairs, true), mu_steps(false)};
      break;
    case 2:
      if (lo.size() != 2 || !uo.empty()) throw InvalidInput("case 2 needs l(lambda_o) = 2 and l(mu_o) = 0");
      if (u.even_max() <= std::max(lo[0], lo[1])) throw InvalidInput("case 2 needs mu_e^max > max(lambda_o)");
      k0 = std::max(lo[0], lo[1]);
      expected = -std::min(lo[0], lo[1]);
      lists = {lambda_steps(pairs, false), mu_steps(true)};
      break;
    case 3:
      if (!lo.empty() || uo.size() != 2) throw InvalidInput("case 3 needs l(lambda_o) = 0 and l(mu_o) = 2");
      if (l.even_max() <= std::max(uo[0], uo[1])) throw InvalidInput("case 3 needs lambda_e^max > max(mu_o)");
      k0 = -std::max(uo[0], uo[1]);
      expected = std::min(uo[0], uo[1]);
      lists = {lambda_steps(pairs, true), mu_steps(false)};
      break;
    case 4:
      if (!lo.empty() || !uo.empty()) throw InvalidInput("case 4 needs l(lambda_o) = l(mu_o) = 0");
      if (pairs < 1) throw InvalidInput("case 4 needs a pair of ones in lambda");
      k0 = 1;
      expected = -1;
      lists = {lambda_steps(pairs - 1, false), mu_steps(false)};
      break;
    default:
      throw InvalidInput("case must be 1..4");
  }
  auto seq = run_sequence(k0, std::move(lists));
  if (seq.k.back() != expected) {
    throw InvariantViolation("tail sequence ends at " + std::to_string(seq.k.back()) + ", expected " +
                             std::to_string(expected));
  }
  return seq;
}

TropicalCover build_case_zigzag(const Partition& lambda, const Partition& mu, int g, int case_number) {
  if (g < 0) throw InvalidInput("genus must be non-negative");
  const auto seq = tail_sequence(lambda, mu, case_number);
  Draft d;
  draw_sequence(d, seq, g, true);
  auto out = arrange(d.cover(), ZigzagClass::monotone);
  if (!out) throw InvariantViolation("case construction is not a monotone zigzag cover");
  check_type(*out, g, lambda, mu, "case construction");
  return *out;
}

TropicalCover build_case_cover(const Partition& lambda, const Partition& mu, int g, int case_number, int m,
                               CaseFamily family) {
  if (m < 1) throw InvalidInput("m must be at least 1");
  if (g < 0) throw InvalidInput("genus must be non-negative");
  const auto seq = tail_sequence(lambda, mu, case_number);
  Draft d;
  const auto v = draw_sequence(d, seq, g, true);
  const int n = static_cast<int>(seq.steps.size());
  const auto& k = seq.k;

  if (family == CaseFamily::arbitrary_splitting) {
    if (!arrange(d.cover(), ZigzagClass::universally_monotone)) {
      throw InvalidInput("hypotheses do not give a universally monotone cover");
    }
    if (std::abs(k[n]) != 1 || (case_number == 1 && k[0] != 1)) {
      throw InvalidInput("hypothesis failed: the odd parts of the glued string ends must be 1");
    }
    // Glue the weight-1 string end at v_N to the opposite end of the standard string.
    const Draft tilde = standard_draft(m, 0);
    Draft glued;
    const bool base_first = k[n] > 0;
    if (base_first) {
      append(glued, d);
      const int shift = append(glued, tilde);
      fuse(glued, n, shift);
    } else {
      append(glued, tilde);
      const int shift = append(glued, d);
      fuse(glued, 2 * m, shift + n);
    }
    const int split = base_first ? d.n : tilde.n;
    const auto out = arrange_parts(glued, {{1, split}, {split + 1, glued.n}}, ZigzagClass::universally_monotone);
    std::vector<int> ones(2 * m, 1);
    check_type(out, g, join(lambda, ones), join(mu, ones), "arbitrary-splitting cover");
    return out;
  }

  // Simple splitting: subdivide around a weight-1 edge E', cut it and splice in a component chain.
  int a = 0;
  int cut_edge = -1;
  if (case_number == 1) {
    int j = -1;  // index with k[j-1] < 0 < k[j], the last left-pointing bent vertex v[j]
    for (int i = 1; i <= n; ++i)
      if (k[i - 1] < 0 && k[i] > 0) j = i;
    if (j < 2) throw InvariantViolation("case 1 sequence has no left-pointing bent vertex");
    const int w_prime = -k[j - 1];
    a = (w_prime - 1) / 2;
    const int vv = v[j];
    const int in_edge = find_edge(d, vv, v[j - 1]);
    const auto u = subdivide(d, in_edge, std::vector<bool>(a, true));
    subdivide(d, j < n ? find_edge(d, vv, v[j + 1]) : n, std::vector<bool>(a, false));
    cut_edge = find_edge(d, vv, a > 0 ? u.front() : v[j - 1]);
  } else if (case_number == 2 || case_number == 4) {
    const int w_end = -k[n];
    a = (w_end - 1) / 2;
    std::vector<bool> tails(a, false);
    tails.insert(tails.end(), a, true);
    const auto chain_vs = subdivide(d, n, tails);
    cut_edge = a > 0 ? find_edge(d, chain_vs[a - 1], chain_vs[a]) : n;
  } else {
    const int w_end = k[n];
    a = (w_end - 1) / 2;
    std::vector<bool> tails(a, false);
    tails.insert(tails.end(), a, true);
    const auto chain_vs = subdivide(d, n, tails);
    cut_edge = a > 0 ? find_edge(d, chain_vs[a - 1], chain_vs[a]) : n;
  }
  const int m_tilde = m - a + 1;
  if (m_tilde < 1) throw InvalidInput("m is too small for the weight of the cut edge");
  std::vector<int> order(m_tilde);
  for (int i = 0; i < m_tilde; ++i) order[i] = m_tilde - i;
  const auto mid = chain(m_tilde, chain_types_for_order(order), order, std::nullopt);
  const auto out = splice(d, cut_edge, mid);
  std::vector<int> extra(2 * m, 1);
  extra.push_back(2);
  check_type(out, g, join(lambda, extra), join(mu, extra), "simple-splitting cover");
  return out;
}

TropicalCover build_kmixed_cover(const Partition& lambda, const Partition& mu, const Partition& lambda_prime,
                                 const Partition& mu_prime, int g, int m) {
  if (m < 1) throw InvalidInput("m must be at least 1");
  if (g < 0) throw InvalidInput("genus must be non-negative");
  if (lambda.weight() != mu.weight() || lambda_prime.weight() != mu_prime.weight()) {
    throw InvalidInput("partitions must have matching weights");
  }
  const auto l = tail_decomposition(lambda);
  const auto u = tail_decomposition(mu);
  const auto lp = tail_decomposition(lambda_prime);
  const auto up = tail_decomposition(mu_prime);
  if (l.odd_distinct.length() != 1 || u.odd_distinct.length() != 1) {
    throw InvalidInput("hypothesis failed: l(lambda_o) = l(mu_o) = 1");
  }
  if (lp.odd_distinct != l.odd_distinct) throw InvalidInput("hypothesis failed: lambda'_o = lambda_o");
  if (!lp.odd_paired.empty() || !up.odd_paired.empty()) throw InvalidInput("hypothesis failed: no (o,o) pairs in lambda', mu'");
  if (up.odd_distinct.length() != 1) throw InvalidInput("hypothesis failed: l(mu'_o) = 1");
  auto remove_all = [](std::vector<int> from, const std::vector<int>& what, const char* msg) {
    for (int w : what) {
      auto it = std::find(from.begin(), from.end(), w);
      if (it == from.end()) throw InvalidInput(msg);
      from.erase(it);
    }
    return from;
  };
  const auto lam_rest = remove_all(lambda.parts(), lambda_prime.parts(), "hypothesis failed: lambda' must lie in lambda");
  const auto mu_rest = remove_all(mu.parts(), up.even.parts(), "hypothesis failed: mu'_e must lie in mu_e");
  remove_all(l.even.parts(), lp.even.parts(), "hypothesis failed: lambda' \\ lambda'_o must lie in lambda_e");
  const int lam_max = lp.even_max();
  const auto& me = up.even.parts();
  for (std::size_t i = 0; i < me.size(); ++i)
    for (std::size_t j = i + 1; j < me.size(); ++j)
      if (me[i] + me[j] <= std::max(l.odd_distinct[0], lam_max)) {
        throw InvalidInput("hypothesis failed: mu'_i + mu'_j > max(lambda_o, lambda'_max)");
      }
  if (lam_max <= up.odd_distinct[0]) throw InvalidInput("hypothesis failed: lambda'_max > mu'_o");

  // First part: universally monotone cover of type (0, lambda', mu') from the case 1 sequence.
  const auto seq1 = run_sequence(lp.odd_distinct[0],
                                 {[&] {
                                    std::vector<TailStep> s;
                                    auto ev = lp.even.parts();
                                    for (std::size_t i = 1; i < ev.size(); ++i) s.push_back({ev[i], true, false, false});
                                    if (!ev.empty()) s.push_back({ev[0], true, false, false});
                                    return s;
                                  }(),
                                  as_steps(up.even.parts(), false, false)});
  if (seq1.k.back() != up.odd_distinct[0]) throw InvariantViolation("first part does not end at mu'_o");
  Draft d1;
  draw_sequence(d1, seq1, 0, false);
  const auto first = arrange(d1.cover(), ZigzagClass::universally_monotone);
  if (!first) throw InvalidInput("hypotheses do not give a universally monotone first part");

  // Second part: zigzag cover with in-end mu'_o and out-end mu_o, carrying the remaining tails and 1^{2m}.
  std::vector<TailStep> lam_side, mu_side;
  const auto lr = tail_decomposition(Partition(lam_rest));
  for (int w : lr.even.parts()) lam_side.push_back({w, true, false, false});
  for (int p : lr.odd_paired.parts()) lam_side.push_back({2 * p, true, false, true});
  if (!lr.odd_distinct.empty()) throw InvalidInput("lambda \\ lambda' must not contain unpaired odd parts");
  for (int i = 0; i < m; ++i) lam_side.push_back({2, true, false, true});
  const auto ur = tail_decomposition(Partition(mu_rest));
  if (ur.odd_distinct.length() != 1 || ur.odd_distinct[0] != u.odd_distinct[0]) {
    throw InvariantViolation("remaining mu must keep exactly mu_o unpaired");
  }
  for (int w : ur.even.parts()) mu_side.push_back({w, false, false, false});
  for (int p : ur.odd_paired.parts()) mu_side.push_back({2 * p, false, false, true});
  for (int i = 0; i < m; ++i) mu_side.push_back({2, false, false, true});
  const auto seq2 = run_sequence(up.odd_distinct[0], {lam_side, mu_side});
  if (seq2.k.back() != u.odd_distinct[0]) throw InvariantViolation("second part does not end at mu_o");
  Draft d2;
  draw_sequence(d2, seq2, g, true);
  const auto second = topological(d2.cover());

  // Glue the out-end of the first string to the in-end of the second; relabelling keeps edge indices.
  Draft glued;
  append(glued, Draft{first->r, first->edges});
  const int shift = append(glued, Draft{second.r, second.edges});
  fuse(glued, static_cast<int>(seq1.steps.size()), shift);
  const auto out = glued.cover();
  std::vector<int> ones(2 * m, 1);
  check_type(out, g, join(lambda, ones), join(mu, ones), "k-mixed cover");
  return out;
}

TropicalCover build_heavy_string_cover(int m) {
  if (m < 1) throw InvalidInput("m must be at least 1");
  Draft d;
  int prev = kBoundary;
  for (int i = 0; i < m; ++i) {
    const int a = d.vertex();
    const int b = d.vertex();
    d.add(prev, a, 1);
    d.in_fork(a);
    d.add(a, b, 3);
    d.out_fork(b);
    prev = b;
  }
  d.add(prev, kBoundary, 1);
  const auto out = topological(d.cover());
  const Partition ones(std::vector<int>(2 * m + 1, 1));
  check_type(out, 0, ones, ones, "heavy-string cover");
  return out;
}

}  // namespace hurwitz
