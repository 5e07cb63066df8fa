// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hurwitz/bridge.hpp"
#include "hurwitz/zigzag.hpp"
#include "naive_oracle.hpp"
#include "tables.hpp"

using namespace hurwitz;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;  // 0 = no runtime bound
  std::function<Outcome()> run;
};

Partition P(const char* text) { return Partition::parse(text); }

FactorizationSpec spec_of(const char* lambda, const char* mu, Variant v, const char* signs = "") {
  FactorizationSpec s{0, P(lambda), P(mu), v, {}, 0};
  if (is_real(v)) s.signs = SignSequence::parse(signs);
  return s;
}

struct Type {
  const char* lambda;
  const char* mu;
};

const std::vector<Type> kCorrespondenceTypes = {{"1,1,1", "1,1,1"}, {"1,3", "2,2"}, {"2,1,1", "2,1,1"}, {"1,1,1,1", "2,2"}};

Outcome monotone_ones() {
  const auto spec = spec_of("1,1,1", "1,1,1", Variant::monotone);
  const auto n = count(spec);
  const bool rows = tables::keys(enumerate(spec)) == tables::keys(tables::kMonotoneOnes, 3);
  return {n == 8 && rows, "count=" + std::to_string(n) + (rows ? ", rows match" : ", rows differ")};
}

Outcome real_monotone_pppm() {
  const auto spec = spec_of("1,1,1", "1,1,1", Variant::real_monotone, "+++-");
  const auto n = count(spec);
  const bool rows = tables::keys(enumerate(spec)) == tables::keys(tables::kRealMonotonePPPM, 3);
  return {n == 6 && rows, "count=" + std::to_string(n) + (rows ? ", rows and gamma match" : ", rows differ")};
}

Outcome real_monotone_pmpp() {
  const auto spec = spec_of("1,1,1", "1,1,1", Variant::real_monotone, "+-++");
  const auto n = count(spec);
  const bool rows = tables::keys(enumerate(spec)) == tables::keys(tables::kRealMonotonePMPP, 3);
  return {n == 4 && rows, "count=" + std::to_string(n) + (rows ? ", rows match" : ", rows differ")};
}

Outcome example_fixed_start() {
  const auto real = spec_of("1,3", "2,2", Variant::real, "++");
  const auto mono = spec_of("1,3", "2,2", Variant::real_monotone, "++");
  std::ostringstream detail;
  bool ok = true;
  const auto total = count(real);
  ok &= total == 24;
  detail << "count=" << total;
  int starts = 0;
  for (const auto& s1 : permutations_of_type(P("3,1"))) {
    ++starts;
    if (count_with_fixed_start(real, s1) != 3) {
      ok = false;
      detail << ", fixed start " << s1.str() << " != 3";
    }
  }
  ok &= starts == 8;
  const auto a = Permutation::parse("(1)(234)", 4);
  const auto b = Permutation::parse("(4)(132)", 4);
  const auto mono_a = count_with_fixed_start(mono, a);
  const auto mono_b = count_with_fixed_start(mono, b);
  ok &= mono_a == 1 && mono_b == 3;
  const bool rows_a = tables::keys(enumerate_with_fixed_start(real, a)) == tables::keys(tables::kRealFixedStartA, 4);
  const bool rows_b =
      tables::keys(enumerate_with_fixed_start(mono, b)) == tables::keys(tables::kRealMonotoneFixedStartB, 4);
  ok &= rows_a && rows_b;
  detail << ", 8 starts x 3, monotone " << mono_a << " and " << mono_b << (rows_a && rows_b ? ", rows match" : ", rows differ");
  return {ok, detail.str()};
}

Outcome two_vertex_cover() {
  const Factorization f{Permutation::parse("(24)", 4), Permutation::parse("(1)(234)", 4), {{3, 4}, {1, 3}},
                        Permutation::parse("(24)(13)", 4)};
  const auto rc = cover_from_factorization(f, SignSequence::parse("+-"));
  // Left ends 3 and 1, blue weight-2 right ends, one weight-1 inner edge.
  const CanonicalForm expected{{{kBoundary, 1, 3, static_cast<int>(EdgeColour::black)},
                                {kBoundary, 2, 1, static_cast<int>(EdgeColour::black)},
                                {1, kBoundary, 2, static_cast<int>(EdgeColour::blue)},
                                {1, 2, 1, static_cast<int>(EdgeColour::black)},
                                {2, kBoundary, 2, static_cast<int>(EdgeColour::blue)}}};
  auto want = expected;
  std::sort(want.items.begin(), want.items.end());
  const auto got = canonicalize(rc);
  const auto split = vertex_splitting(rc);
  const bool ok = got == want && split == SignSequence::parse("+-") && validate_cover(rc.cover, 0, P("1,3"), P("2,2"));
  return {ok, got.str() + " signs " + split.str()};
}

Outcome correspondence() {
  int checked = 0;
  for (const auto& t : kCorrespondenceTypes) {
    const int r = r_length(0, P(t.lambda), P(t.mu));
    for (const auto& s : SignSequence::all(r)) {
      const auto rep = verify_correspondence(0, P(t.lambda), P(t.mu), s);
      if (!rep.equal) {
        std::ostringstream os;
        os << t.lambda << "|" << t.mu << " " << s.str() << ": lhs=" << rep.lhs << " rhs=" << rep.rhs;
        return {false, os.str()};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " (type, signs) pairs, lhs = rhs"};
}

std::vector<Partition> partitions(int n, int max_part) {
  std::vector<Partition> out;
  if (n == 0) return {Partition()};
  for (int p = std::min(n, max_part); p >= 1; --p) {
    for (const auto& rest : partitions(n - p, p)) {
      auto parts = rest.parts();
      parts.insert(parts.begin(), p);
      out.emplace_back(parts);
    }
  }
  return out;
}

Outcome fibre_law() {
  int classes = 0;
  bool saw_two_vertex = false;
  for (int d = 1; d <= 4; ++d) {
    for (const auto& lambda : partitions(d, d)) {
      for (const auto& mu : partitions(d, d)) {
        for (int g = 0; g <= 2; ++g) {
          const int r = lambda.length() + mu.length() + 2 * g - 2;
          if (r < 1 || r > 4) continue;
          for (const auto& cover : enumerate_covers(g, lambda, mu)) {
            for (const auto& col : enumerate_colourings(cover)) {
              const RealTropicalCover rc{cover, col};
              const auto fibre = fibre_count(rc, g, Variant::real);
              const Rational expected = Rational(static_cast<long long>(factorial(d))) * real_multiplicity(rc);
              if (Rational(static_cast<long long>(fibre)) != expected) {
                std::ostringstream os;
                os << canonicalize(rc).str() << " fibre " << fibre << " != " << expected;
                return {false, os.str()};
              }
              if (d == 4 && lambda == P("3,1") && mu == P("2,2") && vertex_splitting(rc) == SignSequence::parse("+-") &&
                  fibre == 24) {
                saw_two_vertex = true;
              }
              ++classes;
            }
          }
        }
      }
    }
  }
  return {saw_two_vertex, std::to_string(classes) + " coloured classes, fibre = d! mult; two-vertex class fibre 24"};
}

Outcome sequence_independence() {
  for (const auto& t : kCorrespondenceTypes) {
    const int r = r_length(0, P(t.lambda), P(t.mu));
    std::map<int, std::set<std::uint64_t>> by_s;
    for (const auto& s : SignSequence::all(r)) {
      FactorizationSpec spec{0, P(t.lambda), P(t.mu), Variant::real, s, 0};
      by_s[s.positives()].insert(count(spec));
    }
    for (const auto& [s, values] : by_s) {
      if (values.size() != 1) return {false, std::string(t.lambda) + "|" + t.mu + " differs at s=" + std::to_string(s)};
    }
  }
  return {true, "4 types, one value per s"};
}

Outcome unique_colouring_standard() {
  std::ostringstream detail;
  for (int m = 1; m <= 2; ++m) {
    const auto cover = build_standard_universal(m, 0);
    const auto colourings = enumerate_colourings(cover);
    std::map<std::vector<int>, int> hits;
    for (const auto& col : colourings) ++hits[vertex_splitting({cover, col}).entries()];
    for (const auto& s : SignSequence::all(cover.r)) {
      if (hits[s.entries()] != 1) return {false, "m=" + std::to_string(m) + " signs " + s.str()};
    }
    detail << "m=" << m << ": " << (1 << cover.r) << " splittings ";
  }
  detail << "each with one colouring";
  return {true, detail.str()};
}

Outcome lower_bound_standard() {
  std::ostringstream detail;
  bool ok = true;
  for (int m = 1; m <= 2; ++m) {
    const auto n = n_numbers(build_standard_universal(m, 0), 0, SplittingRange::per_sequence);
    ok &= n.minimum >= factorial(m) && !n.non_unique_colouring;
    detail << "m=" << m << ": N=" << n.minimum << " >= " << factorial(m) << "; ";
  }
  return {ok, detail.str()};
}

Outcome vanishing() {
  const auto cover = build_heavy_string_cover(2);
  bool heavy = false;
  for (const auto& e : cover.edges) heavy |= e.weight == 3;
  const bool typed = validate_cover(cover, 0, P("1,1,1,1,1"), P("1,1,1,1,1"));
  const bool zig = classify(cover).cls != ZigzagClass::not_zigzag;
  const auto n = n_numbers(cover, 0, SplittingRange::per_sequence);
  return {heavy && typed && zig && n.minimum == 0, "weight-3 string edge, N=" + std::to_string(n.minimum)};
}

Outcome component_chain() {
  std::set<CanonicalForm> forms;
  std::ostringstream detail;
  for (const std::vector<int>& order : {std::vector<int>{1, 2}, std::vector<int>{2, 1}}) {
    const auto types = chain_types_for_order(order);
    const auto plain = build_component_chain(2, types, order);
    if (!validate_cover(plain, 0, P("2,1,1,1"), P("2,1,1,1"))) return {false, "invalid chain"};
    forms.insert(canonicalize(plain));
    std::uint64_t least = ~std::uint64_t{0};
    for (int s = 0; s <= plain.r; ++s) {
      const auto cover = build_component_chain(2, types, order, s);
      if (!validate_cover(cover, 0, P("2,1,1,1"), P("2,1,1,1"))) return {false, "invalid exchanged chain"};
      const auto want = SignSequence::simple(cover.r, s);
      bool coloured = false;
      std::uint64_t n = 0;
      for (const auto& col : enumerate_colourings(cover)) {
        const RealTropicalCover rc{cover, col};
        if (vertex_splitting(rc) != want) continue;
        coloured = true;
        n += fibre_count(rc, 0, Variant::real_monotone);
      }
      if (!coloured) return {false, "no colouring at s=" + std::to_string(s)};
      least = std::min(least, n);
    }
    if (least < 2) return {false, "N(phi,s) < 2"};
    detail << "order " << order[0] << order[1] << ": min N " << least << "; ";
  }
  detail << forms.size() << " classes";
  return {forms.size() == 2, detail.str()};
}

Outcome inequality_chain() {
  const std::vector<Type> types = {{"1,1", "1,1"}, {"1,1,1", "1,1,1"}, {"2,1", "2,1"},     {"1,3", "2,2"},
                                   {"2,1,1", "2,1,1"}, {"1,1,1,1", "2,2"}, {"3", "2,1"}};
  int checks = 0;
  for (const auto& t : types) {
    const auto l = P(t.lambda);
    const auto m = P(t.mu);
    const int r = r_length(0, l, m);
    const auto fail = [&](const std::string& what) { return Outcome{false, std::string(t.lambda) + "|" + t.mu + " " + what}; };
    if (zigzag_number(0, l, m, ZigzagFamily::monotone).value > infimum_number(0, l, m, InfimumMode::simple).value) {
      return fail("monotone");
    }
    if (zigzag_number(0, l, m, ZigzagFamily::universal).value > infimum_number(0, l, m, InfimumMode::arbitrary).value) {
      return fail("universal");
    }
    checks += 2;
    for (int k = 0; k <= r; ++k) {
      if (zigzag_number(0, l, m, ZigzagFamily::kmixed, k).value >
          infimum_number(0, l, m, InfimumMode::arbitrary, k).value) {
        return fail("kmixed k=" + std::to_string(k));
      }
      ++checks;
    }
  }
  return {true, std::to_string(checks) + " inequalities over 7 types"};
}

Outcome derived_oracle() {
  naive::Query q;
  q.lambda = {1, 1, 1};
  q.mu = {1, 1, 1};
  q.r = 4;
  const auto oracle = naive::count(q);
  const auto engine = count(spec_of("1,1,1", "1,1,1", Variant::complex));
  return {oracle == 24 && engine == oracle,
          "oracle=" + std::to_string(oracle) + " engine=" + std::to_string(engine)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "monotone count of (0,(1^3),(1^3))", 1, monotone_ones},
      {2, "real monotone count, signs +++-", 0, real_monotone_pppm},
      {3, "real monotone count, signs +-++", 0, real_monotone_pmpp},
      {4, "real and fixed-start counts of (0,(1,3),(2,2))", 0, example_fixed_start},
      {5, "cover from the (1)(234) factorization", 0, two_vertex_cover},
      {6, "correspondence for four types and all signs", 300, correspondence},
      {7, "fibre law at d <= 4, r <= 4", 0, fibre_law},
      {8, "real counts depend only on s", 0, sequence_independence},
      {9, "unique colourings of the standard cover", 0, unique_colouring_standard},
      {10, "N(phi) >= m! for the standard cover", 600, lower_bound_standard},
      {11, "weight-3 string edge forces N(phi) = 0", 0, vanishing},
      {12, "component chain at m = 2", 0, component_chain},
      {13, "zigzag numbers bound infimum numbers", 0, inequality_chain},
      {14, "complex count matches the naive oracle", 0, derived_oracle},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      out.pass = false;
      out.detail += ", over the time budget";
    }
    if (!out.pass) ++failed;
    std::printf("%s %2d %s: %s (%.2fs)\n", out.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
