#include "hurwitz/bridge.hpp"

#include <algorithm>
#include <bit>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

bool even_kind(EdgeKind k) { return k == EdgeKind::even_red || k == EdgeKind::even_blue; }

EdgeKind kind_of(EdgeColour c) {
  switch (c) {
    case EdgeColour::black: return EdgeKind::odd;
    case EdgeColour::red: return EdgeKind::even_red;
    case EdgeColour::blue: return EdgeKind::even_blue;
    case EdgeColour::dotted: return EdgeKind::dotted;
  }
  return EdgeKind::odd;
}

std::uint32_t image_mask(const Permutation& g, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (int x = 1; x <= g.degree(); ++x) {
    if (mask & (1u << (x - 1))) out |= 1u << (g(x) - 1);
  }
  return out;
}

// Colour of a cycle of pi_i under gamma_i; flag selects the opposite fixed-point rule.
EdgeColour classify_cycle(std::uint32_t mask, const Permutation& gamma, bool flag) {
  if (image_mask(gamma, mask) != mask) return EdgeColour::dotted;
  if (std::popcount(mask) % 2 != 0) return EdgeColour::black;
  int fixed = 0;
  for (int x = 1; x <= gamma.degree(); ++x) {
    if ((mask & (1u << (x - 1))) && gamma(x) == x) ++fixed;
  }
  if (fixed != 0 && fixed != 2) throw InvariantViolation("inverted even cycle with " + std::to_string(fixed) + " fixed points");
  return ((fixed == 2) != flag) ? EdgeColour::red : EdgeColour::blue;
}

int genus_of(const Factorization& f) {
  const int r = static_cast<int>(f.taus.size());
  const int twice = r - cycle_type(f.sigma1).length() - cycle_type(f.sigma2).length() + 2;
  if (twice < 0 || twice % 2 != 0) throw InvalidInput("factorization length is inconsistent with its cycle types");
  return twice / 2;
}

struct OpenCycle {
  std::uint32_t mask;
  int origin;
  EdgeColour colour;
};

// Shared sweep of Construction 2; colours are black when no involution is supplied.
RealTropicalCover sweep(const Factorization& f, const std::vector<Permutation>* gammas, const std::vector<bool>* flags) {
  const int r = static_cast<int>(f.taus.size());
  auto colour = [&](std::uint32_t mask, int step) {
    if (!gammas) return EdgeColour::black;
    if (step == 0) return classify_cycle(mask, *f.gamma, false);
    return classify_cycle(mask, (*gammas)[step - 1], (*flags)[step - 1]);
  };
  std::vector<OpenCycle> open;
  for (const auto& cyc : f.sigma1.cycles()) {
    std::uint32_t mask = 0;
    for (int x : cyc) mask |= 1u << (x - 1);
    open.push_back({mask, kBoundary, colour(mask, 0)});
  }
  RealTropicalCover rc;
  rc.cover.r = r;
  auto close = [&](std::uint32_t mask, int v) {
    auto it = std::find_if(open.begin(), open.end(), [&](const OpenCycle& o) { return o.mask == mask; });
    if (it == open.end()) throw InvariantViolation("Construction 2 lost track of a cycle");
    rc.cover.edges.push_back({it->origin, v, std::popcount(mask)});
    rc.colouring.edge_colours.push_back(it->colour);
    open.erase(it);
  };
  Permutation pi = f.sigma1;
  for (int i = 1; i <= r; ++i) {
    const auto [a, b] = f.taus[i - 1];
    const bool cut = pi.same_cycle(a, b);
    if (cut) {
      close(pi.cycle_mask(a), i);
    } else {
      const auto ma = pi.cycle_mask(a), mb = pi.cycle_mask(b);
      close(ma, i);
      close(mb, i);
    }
    pi.left_multiply(a, b);
    std::vector<std::uint32_t> born{pi.cycle_mask(a)};
    if (cut) born.push_back(pi.cycle_mask(b));
    for (auto mask : born) {
      const auto c = colour(mask, i);
      if (c == EdgeColour::dotted && gammas) {
        const auto partner = image_mask((*gammas)[i - 1], mask);
        if (std::find(born.begin(), born.end(), partner) == born.end()) {
          throw InvariantViolation("exchanged cycle at vertex " + std::to_string(i) + " has no partner born with it");
        }
      }
      open.push_back({mask, i, c});
    }
  }
  for (const auto& o : open) {
    rc.cover.edges.push_back({o.origin, kBoundary, std::popcount(o.mask)});
    rc.colouring.edge_colours.push_back(o.colour);
  }
  return rc;
}

}  // namespace

int cut_join_multiplicity(const CutJoinLocal& local, int k) {
  const EdgeKind s = local.single;
  const EdgeKind p = local.pair_first;
  const EdgeKind q = local.pair_second;
  const bool dotted = p == EdgeKind::dotted && q == EdgeKind::dotted;
  const bool odd_odd = p == EdgeKind::odd && q == EdgeKind::odd;
  const bool odd_even = (p == EdgeKind::odd && even_kind(q)) || (q == EdgeKind::odd && even_kind(p));
  const bool even_even = even_kind(p) && p == q;
  // The involution kind never enters: shifting gamma by sigma permutes the admissible transpositions.
  if (local.operation == CutJoinLocal::Operation::cut) {
    if (s == EdgeKind::odd && odd_even) return 1;
    if (even_kind(s) && even_even && p == s) return local.symmetric ? 1 : 2;
    if (even_kind(s) && odd_odd) return local.symmetric ? 1 : 2;
    if (even_kind(s) && dotted) return 1;
  } else {
    if (s == EdgeKind::odd && odd_even) return 2;
    if (even_kind(s) && even_even && p == s) return 4;
    if (even_kind(s) && odd_odd) return 1;
    if (even_kind(s) && dotted) return k;
  }
  throw InvariantViolation("local vertex type is not in the cut and join table");
}

CutJoinLocal local_at(const RealTropicalCover& rc, int v) {
  const auto& c = rc.cover;
  std::vector<int> left, right;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    if (c.edges[i].to == v) left.push_back(static_cast<int>(i));
    if (c.edges[i].from == v) right.push_back(static_cast<int>(i));
  }
  if (left.size() + right.size() != 3 || left.empty() || right.empty()) {
    throw InvalidInput("vertex " + std::to_string(v) + " is not 3-valent");
  }
  CutJoinLocal local;
  local.operation = left.size() == 1 ? CutJoinLocal::Operation::cut : CutJoinLocal::Operation::join;
  const auto& single = left.size() == 1 ? left : right;
  const auto& pair = left.size() == 1 ? right : left;
  local.single = kind_of(rc.colouring.edge_colours[single[0]]);
  local.pair_first = kind_of(rc.colouring.edge_colours[pair[0]]);
  local.pair_second = kind_of(rc.colouring.edge_colours[pair[1]]);
  const auto sym = symmetry_sets(c);
  for (const auto& sp : sym.pairs) {
    if ((sp.first == pair[0] && sp.second == pair[1]) || (sp.first == pair[1] && sp.second == pair[0])) {
      local.symmetric = true;
    }
  }
  return local;
}

RealTropicalCover cover_from_factorization(const Factorization& f, const SignSequence& signs) {
  if (!f.gamma) throw InvalidInput("cover_from_factorization needs a real factorization");
  FactorizationSpec spec{genus_of(f), cycle_type(f.sigma1), cycle_type(f.sigma2), Variant::real, signs, 0};
  spec.validate();
  if (!is_factorization_of(f, spec)) throw InvalidInput("not a real factorization for signs " + signs.str());
  const auto gammas = gamma_sequence(f, signs);
  std::vector<bool> flags;
  for (int i = 0; i < signs.size(); ++i) {
    if (i == 0) {
      flags.push_back(signs[0] < 0);
    } else {
      flags.push_back(flags.back() != (signs[i] != signs[i - 1]));
    }
  }
  auto raw = sweep(f, &gammas, &flags);
  auto rc = real_from_canonical(canonicalize(raw), raw.cover.r);
  check_colouring(rc);
  return rc;
}

TropicalCover monodromy_graph(const Factorization& f) {
  auto raw = sweep(f, nullptr, nullptr);
  return from_canonical(canonicalize(raw.cover), raw.cover.r);
}

std::vector<Partition> slab_types(const TropicalCover& c) {
  std::vector<std::vector<int>> weights(c.r + 1);
  for (const auto& e : c.edges) {
    const int hi = e.is_right_end() ? c.r + 1 : e.to;
    for (int j = e.from; j < hi && j <= c.r; ++j) weights[j].push_back(e.weight);
  }
  std::vector<Partition> out;
  for (auto& w : weights) out.emplace_back(std::move(w));
  return out;
}

std::uint64_t fibre_count(const RealTropicalCover& rc, int g, Variant variant, int k, const SearchOptions& options) {
  if (!is_real(variant)) throw InvalidInput("fibre_count needs a real variant");
  const auto signs = vertex_splitting(rc);
  FactorizationSpec spec{g, rc.cover.left_weights(), rc.cover.right_weights(), variant, signs, k};
  spec.validate();
  SearchOptions guided = options;
  guided.cycle_type_guide = slab_types(rc.cover);
  const auto target = canonicalize(rc);
  std::uint64_t n = 0;
  for (const auto& f : enumerate(spec, guided)) {
    if (canonicalize(cover_from_factorization(f, signs)) == target) ++n;
  }
  return n;
}

std::map<CanonicalForm, std::uint64_t> fibre_table(const FactorizationSpec& spec, const SearchOptions& options) {
  if (!is_real(spec.variant)) throw InvalidInput("fibre_table needs a real variant");
  std::map<CanonicalForm, std::uint64_t> table;
  for (const auto& f : enumerate(spec, options)) ++table[canonicalize(cover_from_factorization(f, spec.signs))];
  return table;
}

CorrespondenceReport verify_correspondence(int g, const Partition& lambda, const Partition& mu,
                                           const SignSequence& signs, const SearchOptions& options,
                                           MultiplicityConvention convention) {
  CorrespondenceReport report;
  report.genus = g;
  report.lambda = lambda;
  report.mu = mu;
  report.signs = signs;
  FactorizationSpec spec{g, lambda, mu, Variant::real, signs, 0};
  report.lhs = count(spec, options);
  const auto d_factorial = static_cast<long long>(factorial(lambda.weight()));
  report.rhs = 0;
  for (const auto& cover : enumerate_covers(g, lambda, mu, options.limits)) {
    const auto cf = static_cast<int>(symmetry_sets(cover).pairs.size());
    for (const auto& col : enumerate_colourings(cover)) {
      RealTropicalCover rc{cover, col};
      if (vertex_splitting(rc) != signs) continue;
      Rational m = real_multiplicity(rc);
      if (convention == MultiplicityConvention::ignore_symmetry) m *= Rational(1LL << cf);
      CorrespondenceTerm term{canonicalize(rc), m, m * d_factorial};
      report.rhs += term.contribution;
      report.terms.push_back(std::move(term));
    }
  }
  report.equal = report.rhs == Rational(static_cast<long long>(report.lhs));
  return report;
}

NNumbers n_numbers(const TropicalCover& cover, int g, SplittingRange range, std::optional<int> k,
                   const SearchOptions& options) {
  std::vector<SignSequence> sequences;
  if (range == SplittingRange::per_simple_s) {
    for (int s = 0; s <= cover.r; ++s) sequences.push_back(SignSequence::simple(cover.r, s));
  } else {
    sequences = SignSequence::all(cover.r);
  }
  const auto colourings = enumerate_colourings(cover);
  std::vector<SignSequence> splits;
  for (const auto& col : colourings) splits.push_back(vertex_splitting(RealTropicalCover{cover, col}));
  const Variant variant = k ? Variant::real_kmixed : Variant::real_monotone;
  NNumbers out;
  bool first = true;
  for (const auto& seq : sequences) {
    NEntry entry{seq, 0, 0};
    for (std::size_t i = 0; i < colourings.size(); ++i) {
      if (splits[i] != seq) continue;
      ++entry.matching_colourings;
      entry.count += fibre_count(RealTropicalCover{cover, colourings[i]}, g, variant, k.value_or(0), options);
    }
    if (entry.matching_colourings != 1) out.non_unique_colouring = true;
    out.minimum = first ? entry.count : std::min(out.minimum, entry.count);
    first = false;
    out.entries.push_back(std::move(entry));
  }
  return out;
}

}  // namespace hurwitz
