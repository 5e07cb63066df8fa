#include "hurwitz/factorize.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "hurwitz/errors.hpp"

namespace hurwitz {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::complex: return "complex";
    case Variant::monotone: return "monotone";
    case Variant::real: return "real";
    case Variant::real_monotone: return "real-monotone";
    case Variant::real_kmixed: return "real-kmixed";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  std::string n(name);
  std::replace(n.begin(), n.end(), '_', '-');
  if (n == "complex") return Variant::complex;
  if (n == "monotone") return Variant::monotone;
  if (n == "real") return Variant::real;
  if (n == "real-monotone") return Variant::real_monotone;
  if (n == "real-kmixed" || n == "kmixed" || n == "real-k-mixed") return Variant::real_kmixed;
  throw InvalidInput("unknown variant '" + std::string(name) + "'");
}

bool is_real(Variant v) {
  return v == Variant::real || v == Variant::real_monotone || v == Variant::real_kmixed;
}

SignSequence::SignSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e != 1 && e != -1) throw InvalidInput("sign entries must be +1 or -1");
  }
}

SignSequence SignSequence::parse(std::string_view text) {
  std::vector<int> e;
  for (char c : text) {
    if (c == '+') {
      e.push_back(1);
    } else if (c == '-') {
      e.push_back(-1);
    } else {
      throw InvalidInput("sign sequence may contain only '+' and '-'");
    }
  }
  return SignSequence(std::move(e));
}

SignSequence SignSequence::simple(int r, int s) {
  if (s < 0 || s > r) throw InvalidInput("s outside 0..r");
  std::vector<int> e(r, -1);
  std::fill(e.begin(), e.begin() + s, 1);
  return SignSequence(std::move(e));
}

std::vector<SignSequence> SignSequence::all(int r) {
  std::vector<SignSequence> out;
  for (std::uint32_t m = 0; m < (1u << r); ++m) {
    std::vector<int> e(r);
    for (int i = 0; i < r; ++i) e[i] = (m >> (r - 1 - i)) & 1u ? -1 : 1;
    out.emplace_back(std::move(e));
  }
  return out;
}

int SignSequence::positives() const {
  return static_cast<int>(std::count(entries_.begin(), entries_.end(), 1));
}

bool SignSequence::is_simple() const {
  return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>());
}

std::string SignSequence::str() const {
  std::string out;
  for (int e : entries_) out += e > 0 ? '+' : '-';
  return out;
}

bool SignSequence::operator<(const SignSequence& other) const {
  // + < - is the reverse of the integer order.
  return std::lexicographical_compare(entries_.begin(), entries_.end(), other.entries_.begin(),
                                      other.entries_.end(), std::greater<>());
}

int r_length(int g, const Partition& lambda, const Partition& mu) {
  if (lambda.empty() || mu.empty()) throw InvalidInput("lambda and mu must be non-empty");
  if (lambda.weight() != mu.weight()) throw InvalidInput("|lambda| != |mu|");
  if (g < 0) throw InvalidInput("genus must be non-negative");
  int r = lambda.length() + mu.length() + 2 * g - 2;
  if (r <= 0) throw InvalidInput("r = l(lambda)+l(mu)+2g-2 must be positive");
  return r;
}

int FactorizationSpec::r() const { return r_length(genus, lambda, mu); }

void FactorizationSpec::validate() const {
  int rr = r();
  if (degree() > kMaxDegree) throw InvalidInput("degree exceeds compile-time maximum");
  if (is_real(variant)) {
    if (signs.size() != rr) {
      throw InvalidInput("sign sequence has length " + std::to_string(signs.size()) + ", expected r = " +
                         std::to_string(rr));
    }
  }
  if (variant == Variant::real_kmixed && (k < 0 || k > rr)) throw InvalidInput("k outside 0..r");
}

std::string FactorizationSpec::str() const {
  std::string out = std::string(to_string(variant)) + " g=" + std::to_string(genus) + " lambda=" + lambda.str() +
                    " mu=" + mu.str();
  if (is_real(variant)) out += " signs=" + signs.str();
  if (variant == Variant::real_kmixed) out += " k=" + std::to_string(k);
  return out;
}

std::vector<Permutation> partial_products(const Factorization& f) {
  std::vector<Permutation> pi{f.sigma1};
  for (const auto& [a, b] : f.taus) {
    Permutation next = pi.back();
    next.left_multiply(a, b);
    pi.push_back(next);
  }
  return pi;
}

std::vector<Permutation> gamma_sequence(const Factorization& f, const SignSequence& signs) {
  if (!f.gamma) throw InvalidInput("gamma_sequence needs a real factorization");
  if (signs.size() != static_cast<int>(f.taus.size())) throw InvalidInput("sign sequence length != r");
  auto pi = partial_products(f);
  std::vector<Permutation> out;
  for (int i = 0; i < signs.size(); ++i) {
    if (i == 0) {
      out.push_back(signs[0] > 0 ? *f.gamma : compose(*f.gamma, f.sigma1));
    } else if (signs[i] == signs[i - 1]) {
      out.push_back(out.back());
    } else {
      out.push_back(compose(out.back(), pi[i]));
    }
  }
  return out;
}

namespace {

int monotone_limit(const FactorizationSpec& spec, int r) {
  switch (spec.variant) {
    case Variant::monotone:
    case Variant::real_monotone: return r;
    case Variant::real_kmixed: return spec.k;
    default: return 0;
  }
}

std::vector<Transposition> transposition_list(int d) {
  std::vector<Transposition> out;
  for (int a = 1; a <= d; ++a) {
    for (int b = a + 1; b <= d; ++b) out.emplace_back(a, b);
  }
  return out;
}

void check_limits(const FactorizationSpec& spec, const SearchLimits& limits) {
  if (spec.degree() > limits.max_degree) {
    throw ResourceLimit("degree " + std::to_string(spec.degree()) + " exceeds limit " +
                        std::to_string(limits.max_degree));
  }
  if (spec.r() > limits.max_r) {
    throw ResourceLimit("r = " + std::to_string(spec.r()) + " exceeds limit " + std::to_string(limits.max_r));
  }
}

// Depth-first search over tau_1..tau_r from a fixed (sigma_1, gamma).
class Engine {
public:
  Engine(const FactorizationSpec& spec, const std::vector<Partition>& guide)
      : spec_(spec),
        guide_(guide),
        d_(spec.degree()),
        r_(spec.r()),
        mu_len_(spec.mu.length()),
        real_(is_real(spec.variant)),
        mono_(monotone_limit(spec, spec.r())),
        taus_(transposition_list(spec.degree())),
        pi_(spec.r() + 1),
        gam_(spec.r() + 1),
        chosen_(spec.r() + 1, 0) {}

  template <class Leaf>
  void run(const Permutation& sigma1, const std::optional<Permutation>& gamma, int first, Leaf&& leaf) {
    pi_[0] = sigma1;
    if (real_) gam_[0] = *gamma;
    gamma_ = gamma;
    first_ = first;
    descend(1, leaf);
  }

  Factorization current() const {
    Factorization f;
    f.gamma = gamma_;
    f.sigma1 = pi_[0];
    for (int i = 1; i <= r_; ++i) f.taus.push_back(taus_[chosen_[i]]);
    f.sigma2 = inverse(pi_[r_]);
    return f;
  }

  int transposition_count() const { return static_cast<int>(taus_.size()); }

private:
  template <class Leaf>
  void descend(int level, Leaf& leaf) {
    if (level > r_) {
      if (cycle_type(pi_[r_]) == spec_.mu && transitive()) leaf(*this);
      return;
    }
    const Permutation& prev = pi_[level - 1];
    if (real_) {
      const auto& signs = spec_.signs;
      if (level == 1) {
        gam_[1] = signs[0] > 0 ? gam_[0] : compose(gam_[0], pi_[0]);
      } else if (signs[level - 1] != signs[level - 2]) {
        gam_[level] = compose(gam_[level - 1], prev);
      } else {
        gam_[level] = gam_[level - 1];
      }
    }
    const int prev_cycles = prev.cycle_count();
    const int remaining = r_ - level;
    const int min_b = (level >= 2 && level <= mono_) ? taus_[chosen_[level - 1]].second : 0;
    const int begin = (level == 1 && first_ >= 0) ? first_ : 0;
    const int end = (level == 1 && first_ >= 0) ? first_ + 1 : static_cast<int>(taus_.size());
    for (int t = begin; t < end; ++t) {
      const auto [a, b] = taus_[t];
      if (b < min_b) continue;
      const int cycles = prev.same_cycle(a, b) ? prev_cycles + 1 : prev_cycles - 1;
      if (std::abs(cycles - mu_len_) > remaining) continue;
      Permutation& cur = pi_[level];
      cur = prev;
      cur.left_multiply(a, b);
      if (real_ && !inverts(gam_[level], cur)) continue;
      if (!guide_.empty() && cycle_type(cur) != guide_[level]) continue;
      chosen_[level] = t;
      descend(level + 1, leaf);
    }
  }

  bool transitive() const {
    std::array<std::uint32_t, kMaxDegree> comp{};
    for (int x = 1; x <= d_; ++x) comp[x - 1] = pi_[0].cycle_mask(x);
    for (int i = 1; i <= r_; ++i) {
      const auto [a, b] = taus_[chosen_[i]];
      std::uint32_t merged = comp[a - 1] | comp[b - 1];
      if (comp[a - 1] == comp[b - 1]) continue;
      for (int x = 0; x < d_; ++x) {
        if (merged & (1u << x)) comp[x] = merged;
      }
    }
    return comp[0] == (d_ == 32 ? ~0u : (1u << d_) - 1);
  }

  const FactorizationSpec& spec_;
  const std::vector<Partition>& guide_;
  int d_, r_, mu_len_;
  bool real_;
  int mono_;
  std::vector<Transposition> taus_;
  std::vector<Permutation> pi_;
  std::vector<Permutation> gam_;
  std::vector<int> chosen_;
  std::optional<Permutation> gamma_;
  int first_ = -1;
};

struct Start {
  Permutation sigma1;
  std::optional<Permutation> gamma;
};

std::vector<Start> starts_for(const FactorizationSpec& spec, const std::vector<Permutation>& sigma1s) {
  std::vector<Start> out;
  for (const auto& s : sigma1s) {
    if (is_real(spec.variant)) {
      for (const auto& g : inverting_involutions(s)) out.push_back({s, g});
    } else {
      out.push_back({s, std::nullopt});
    }
  }
  return out;
}

int worker_count(const SearchOptions& options, std::size_t jobs) {
  int n = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
  n = std::max(1, n);
  return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(n), std::max<std::size_t>(jobs, 1)));
}

// Runs job(i) for i in [0, n) on a pool; each job writes only its own slot.
template <class Job>
void parallel_jobs(std::size_t n, int workers, Job&& job) {
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) job(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::vector<Factorization> run_enumerate(const FactorizationSpec& spec, const std::vector<Start>& starts,
                                         const SearchOptions& options) {
  const int ntau = spec.degree() * (spec.degree() - 1) / 2;
  const std::size_t njobs = starts.size() * static_cast<std::size_t>(ntau);
  std::vector<std::vector<Factorization>> slots(njobs);
  parallel_jobs(njobs, worker_count(options, njobs), [&](std::size_t j) {
    Engine engine(spec, options.cycle_type_guide);
    const auto& s = starts[j / ntau];
    engine.run(s.sigma1, s.gamma, static_cast<int>(j % ntau),
               [&](const Engine& e) { slots[j].push_back(e.current()); });
  });
  std::vector<Factorization> out;
  for (auto& slot : slots) {
    for (auto& f : slot) out.push_back(std::move(f));
  }
  return out;
}

std::uint64_t run_count(const FactorizationSpec& spec, const std::vector<Start>& starts,
                        const SearchOptions& options) {
  const int ntau = spec.degree() * (spec.degree() - 1) / 2;
  const std::size_t njobs = starts.size() * static_cast<std::size_t>(ntau);
  std::vector<std::uint64_t> slots(njobs, 0);
  parallel_jobs(njobs, worker_count(options, njobs), [&](std::size_t j) {
    Engine engine(spec, options.cycle_type_guide);
    const auto& s = starts[j / ntau];
    engine.run(s.sigma1, s.gamma, static_cast<int>(j % ntau), [&](const Engine&) { ++slots[j]; });
  });
  std::uint64_t total = 0;
  for (auto v : slots) total += v;
  return total;
}

void require_start_type(const FactorizationSpec& spec, const Permutation& sigma1) {
  if (sigma1.degree() != spec.degree() || cycle_type(sigma1) != spec.lambda) {
    throw InvalidInput("sigma_1 = " + sigma1.str() + " is not of cycle type " + spec.lambda.str());
  }
}

std::uint64_t class_size(const Partition& type) {
  std::map<int, int> mult;
  for (int p : type.parts()) ++mult[p];
  std::uint64_t z = 1;
  for (auto [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= static_cast<std::uint64_t>(part);
    z *= factorial(m);
  }
  return factorial(type.weight()) / z;
}

bool conjugation_invariant(const FactorizationSpec& spec) {
  return spec.variant == Variant::complex || spec.variant == Variant::real ||
         (spec.variant == Variant::real_kmixed && spec.k <= 1);
}

}  // namespace

std::vector<Factorization> enumerate(const FactorizationSpec& spec, const SearchOptions& options) {
  spec.validate();
  check_limits(spec, options.limits);
  return run_enumerate(spec, starts_for(spec, permutations_of_type(spec.lambda)), options);
}

std::vector<Factorization> enumerate_with_fixed_start(const FactorizationSpec& spec, const Permutation& sigma1,
                                                      const SearchOptions& options) {
  spec.validate();
  check_limits(spec, options.limits);
  require_start_type(spec, sigma1);
  return run_enumerate(spec, starts_for(spec, {sigma1}), options);
}

std::uint64_t count(const FactorizationSpec& spec, const SearchOptions& options) {
  spec.validate();
  check_limits(spec, options.limits);
  if (options.use_class_symmetry && conjugation_invariant(spec)) {
    return class_size(spec.lambda) *
           run_count(spec, starts_for(spec, {canonical_of_type(spec.lambda)}), options);
  }
  return run_count(spec, starts_for(spec, permutations_of_type(spec.lambda)), options);
}

std::uint64_t count_with_fixed_start(const FactorizationSpec& spec, const Permutation& sigma1,
                                     const SearchOptions& options) {
  spec.validate();
  check_limits(spec, options.limits);
  require_start_type(spec, sigma1);
  return run_count(spec, starts_for(spec, {sigma1}), options);
}

bool is_monotone(const Factorization& f, int prefix) {
  const int limit = prefix < 0 ? static_cast<int>(f.taus.size()) : prefix;
  for (int j = 2; j <= limit && j <= static_cast<int>(f.taus.size()); ++j) {
    if (f.taus[j - 1].second < f.taus[j - 2].second) return false;
  }
  return true;
}

bool is_factorization_of(const Factorization& f, const FactorizationSpec& spec) {
  const int d = spec.degree();
  const int r = spec.r();
  if (static_cast<int>(f.taus.size()) != r) return false;
  if (f.sigma1.degree() != d || f.sigma2.degree() != d) return false;
  std::vector<Permutation> gens{f.sigma1, f.sigma2};
  Permutation product = f.sigma1;
  for (const auto& [a, b] : f.taus) {
    if (a < 1 || b > d || a >= b) return false;
    Permutation t = Permutation::transposition(d, a, b);
    product = compose(t, product);
    gens.push_back(t);
  }
  if (!compose(f.sigma2, product).is_identity()) return false;
  if (cycle_type(f.sigma1) != spec.lambda || cycle_type(f.sigma2) != spec.mu) return false;
  if (!is_transitive(gens, d)) return false;
  if (is_real(spec.variant) != f.gamma.has_value()) return false;
  if (f.gamma) {
    const auto& g = *f.gamma;
    if (g.degree() != d || !compose(g, g).is_identity()) return false;
    if (compose(compose(g, f.sigma1), g) != inverse(f.sigma1)) return false;
    auto gammas = gamma_sequence(f, spec.signs);
    auto pi = partial_products(f);
    for (int i = 1; i <= r; ++i) {
      const auto& gi = gammas[i - 1];
      if (compose(compose(gi, pi[i]), gi) != inverse(pi[i])) return false;
    }
  }
  return is_monotone(f, monotone_limit(spec, r));
}

InfimumResult infimum_number(int g, const Partition& lambda, const Partition& mu, InfimumMode mode,
                             std::optional<int> k, const SearchOptions& options) {
  const int r = r_length(g, lambda, mu);
  std::vector<SignSequence> sequences;
  if (mode == InfimumMode::simple) {
    for (int s = 0; s <= r; ++s) sequences.push_back(SignSequence::simple(r, s));
  } else {
    sequences = SignSequence::all(r);
  }
  std::sort(sequences.begin(), sequences.end());
  InfimumResult result;
  bool have = false;
  for (const auto& seq : sequences) {
    FactorizationSpec spec{g, lambda, mu, k ? Variant::real_kmixed : Variant::real_monotone, seq, k.value_or(0)};
    std::uint64_t c = count(spec, options);
    result.table.emplace_back(seq, c);
    if (!have || c < result.value) {
      result.value = c;
      result.witness = seq;
      have = true;
    }
  }
  return result;
}

std::optional<int> star_violation(const Factorization& f) {
  const int r = static_cast<int>(f.taus.size());
  std::uint32_t seen = 0;
  for (int i = 1; i <= r; ++i) {
    const auto [a, b] = f.taus[i - 1];
    const std::uint32_t pair = (1u << (a - 1)) | (1u << (b - 1));
    if (i >= 2 && (seen & pair) == pair) {
      for (int j = 1; j < i; ++j) {
        if (f.taus[j - 1].first != b && f.taus[j - 1].second != b) continue;
        // Smallest such j; the run b_j = ... = b_i must be constant.
        for (int m = j; m <= i; ++m) {
          if (f.taus[m - 1].second != b) return i;
        }
        break;
      }
    }
    seen |= pair;
  }
  return std::nullopt;
}

bool check_star_condition(const Factorization& f) { return !star_violation(f).has_value(); }

Factorization conjugate(const Factorization& f, int x, int y) {
  if (x == y) return f;
  const int d = f.sigma1.degree();
  const Permutation h = Permutation::transposition(d, x, y);
  auto conj = [&](const Permutation& p) { return compose(compose(h, p), h); };
  Factorization out;
  if (f.gamma) out.gamma = conj(*f.gamma);
  out.sigma1 = conj(f.sigma1);
  out.sigma2 = conj(f.sigma2);
  for (const auto& [a, b] : f.taus) {
    int ha = h(a), hb = h(b);
    out.taus.emplace_back(std::min(ha, hb), std::max(ha, hb));
  }
  return out;
}

namespace {

// Designates one letter b_i of each tau_i so that b_i = b_{i-1} or b_i is new; larger letters are tried first.
bool designate(const std::vector<Transposition>& taus, std::size_t i, std::uint32_t seen, std::vector<int>& b) {
  if (i == taus.size()) return true;
  const auto [lo, hi] = taus[i];
  for (int cand : {hi, lo}) {
    const bool repeats = i > 0 && b[i - 1] == cand;
    const bool fresh = (seen & (1u << (cand - 1))) == 0;
    if (!repeats && !fresh) continue;
    b[i] = cand;
    if (designate(taus, i + 1, seen | (1u << (lo - 1)) | (1u << (hi - 1)), b)) return true;
  }
  return false;
}

}  // namespace

Factorization monotonize(const Factorization& f) {
  if (auto bad = star_violation(f)) {
    throw InvalidInput("star condition fails at index " + std::to_string(*bad));
  }
  if (is_monotone(f)) return f;
  const int r = static_cast<int>(f.taus.size());
  const int d = f.sigma1.degree();
  std::vector<int> b(r, 0);
  if (!designate(f.taus, 0, 0, b)) {
    throw InvariantViolation("monotonize: no b-sequence with new letters at every change");
  }
  // Relabel along a topological order of a_j < b_j and b_{i_1} < b_{i_2} < ... (new b letters never occur earlier).
  std::vector<std::vector<int>> succ(d + 1);
  std::vector<int> indeg(d + 1, 0);
  auto edge = [&](int x, int y) {
    succ[x].push_back(y);
    ++indeg[y];
  };
  for (int i = 0; i < r; ++i) {
    const auto [lo, hi] = f.taus[i];
    edge(b[i] == hi ? lo : hi, b[i]);
    if (i > 0 && b[i] != b[i - 1]) edge(b[i - 1], b[i]);
  }
  std::vector<int> target(d + 1, 0);
  int next = 1;
  std::vector<char> done(d + 1, 0);
  for (int step = 0; step < d; ++step) {
    int pick = 0;
    for (int x = 1; x <= d && pick == 0; ++x)
      if (!done[x] && indeg[x] == 0) pick = x;
    if (pick == 0) throw InvariantViolation("monotonize: letter constraints are cyclic");
    done[pick] = 1;
    target[pick] = next++;
    for (int y : succ[pick]) --indeg[y];
  }
  // Realise x -> target[x] as a sequence of coordinate-wise conjugations by transpositions.
  Factorization cur = f;
  std::vector<int> name(d + 1);
  std::vector<int> owner(d + 1);
  for (int x = 1; x <= d; ++x) name[x] = owner[x] = x;
  for (int x = 1; x <= d; ++x) {
    const int from = name[x];
    const int to = target[x];
    if (from == to) continue;
    cur = conjugate(cur, from, to);
    const int other = owner[to];
    std::swap(name[x], name[other]);
    owner[from] = other;
    owner[to] = x;
  }
  if (!is_monotone(cur)) {
    throw InvariantViolation("monotonize: relabelled factorization is not monotone");
  }
  return cur;
}

}  // namespace hurwitz
