#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

void check_degree(int d) {
  if (d < 1 || d > kMaxDegree) {
    throw InvalidInput("degree " + std::to_string(d) + " outside 1.." + std::to_string(kMaxDegree));
  }
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidInput("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw InvalidInput("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(start, end - start);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (tok.empty()) throw InvalidInput("empty part in partition '" + std::string(text) + "'");
    parts.push_back(parse_int(tok));
    start = end + 1;
  }
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Permutation Permutation::identity(int degree) {
  check_degree(degree);
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(degree);
  for (int i = 0; i < degree; ++i) p.map_[i] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  int d = static_cast<int>(images.size());
  check_degree(d);
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(d);
  std::uint32_t seen = 0;
  for (int i = 0; i < d; ++i) {
    int y = images[i];
    if (y < 1 || y > d) throw InvalidInput("image out of range");
    if (seen & (1u << (y - 1))) throw InvalidInput("images do not form a bijection");
    seen |= 1u << (y - 1);
    p.map_[i] = static_cast<std::uint8_t>(y - 1);
  }
  return p;
}

Permutation Permutation::transposition(int degree, int a, int b) {
  Permutation p = identity(degree);
  if (a < 1 || b < 1 || a > degree || b > degree || a == b) {
    throw InvalidInput("transposition points out of range");
  }
  std::swap(p.map_[a - 1], p.map_[b - 1]);
  return p;
}

Permutation Permutation::parse(std::string_view text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int max_point = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (text.substr(i) == "id" || text.substr(i) == "()") {
    i = text.size();
  }
  while (i < text.size()) {
    if (text[i] != '(') throw InvalidInput("expected '(' in '" + std::string(text) + "'");
    ++i;
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw InvalidInput("unbalanced '(' in '" + std::string(text) + "'");
    std::string_view body = text.substr(i, close - i);
    std::vector<int> cycle;
    bool has_separator = body.find_first_of(" ,") != std::string_view::npos;
    if (has_separator) {
      std::size_t j = 0;
      while (j < body.size()) {
        while (j < body.size() && (body[j] == ' ' || body[j] == ',')) ++j;
        std::size_t k = j;
        while (k < body.size() && body[k] != ' ' && body[k] != ',') ++k;
        if (k > j) cycle.push_back(parse_int(body.substr(j, k - j)));
        j = k;
      }
    } else {
      // Juxtaposed single digits, as in "(234)".
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidInput("bad cycle '" + std::string(body) + "'");
        cycle.push_back(c - '0');
      }
    }
    for (int x : cycle) {
      if (x < 1) throw InvalidInput("points are 1-based");
      max_point = std::max(max_point, x);
    }
    cycles.push_back(std::move(cycle));
    i = close + 1;
    skip_space();
  }
  if (degree == 0) degree = std::max(max_point, 1);
  if (max_point > degree) throw InvalidInput("point exceeds degree in '" + std::string(text) + "'");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(degree + 1, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int x = cycle[k];
      if (used[x]) throw InvalidInput("point repeated in '" + std::string(text) + "'");
      used[x] = true;
      images[x - 1] = cycle[(k + 1) % cycle.size()];
    }
  }
  return from_images(images);
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree_; ++i) {
    if (map_[i] != i) return false;
  }
  return true;
}

bool Permutation::is_involution() const {
  for (int i = 0; i < degree_; ++i) {
    if (map_[map_[i]] != i) return false;
  }
  return true;
}

void Permutation::left_multiply(int a, int b) {
  auto ua = static_cast<std::uint8_t>(a - 1);
  auto ub = static_cast<std::uint8_t>(b - 1);
  for (int i = 0; i < degree_; ++i) {
    if (map_[i] == ua) {
      map_[i] = ub;
    } else if (map_[i] == ub) {
      map_[i] = ua;
    }
  }
}

bool Permutation::same_cycle(int a, int b) const {
  int x = a - 1;
  int target = b - 1;
  do {
    if (x == target) return true;
    x = map_[x];
  } while (x != a - 1);
  return false;
}

int Permutation::cycle_count() const {
  std::uint32_t seen = 0;
  int count = 0;
  for (int i = 0; i < degree_; ++i) {
    if (seen & (1u << i)) continue;
    ++count;
    int x = i;
    do {
      seen |= 1u << x;
      x = map_[x];
    } while (x != i);
  }
  return count;
}

std::uint32_t Permutation::cycle_mask(int x) const {
  std::uint32_t mask = 0;
  int y = x - 1;
  do {
    mask |= 1u << y;
    y = map_[y];
  } while (y != x - 1);
  return mask;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::uint32_t seen = 0;
  for (int i = 0; i < degree_; ++i) {
    if (seen & (1u << i)) continue;
    std::vector<int> cycle;
    int x = i;
    do {
      seen |= 1u << x;
      cycle.push_back(x + 1);
      x = map_[x];
    } while (x != i);
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::str() const {
  std::string out;
  for (const auto& cycle : cycles()) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(degree_);
  for (int i = 0; i < degree_; ++i) out[i] = map_[i] + 1;
  return out;
}

std::size_t Permutation::hash() const {
  std::size_t h = degree_;
  for (int i = 0; i < degree_; ++i) h = h * 31 + map_[i];
  return h;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw InvalidInput("compose: degree mismatch");
  std::vector<int> images(p.degree());
  for (int x = 1; x <= p.degree(); ++x) images[x - 1] = p(q(x));
  return Permutation::from_images(images);
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(p.degree());
  for (int x = 1; x <= p.degree(); ++x) images[p(x) - 1] = x;
  return Permutation::from_images(images);
}

Partition cycle_type(const Permutation& p) {
  std::vector<int> parts;
  for (const auto& c : p.cycles()) parts.push_back(static_cast<int>(c.size()));
  return Partition(std::move(parts));
}

bool is_transitive(const std::vector<Permutation>& gens, int d) {
  if (d < 1) return false;
  for (const auto& g : gens) {
    if (g.degree() != d) throw InvalidInput("is_transitive: generator degree mismatch");
  }
  std::uint32_t orbit = 1;
  std::vector<int> stack{1};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      int y = g(x);
      if (!(orbit & (1u << (y - 1)))) {
        orbit |= 1u << (y - 1);
        stack.push_back(y);
      }
    }
  }
  return std::popcount(orbit) == d;
}

bool inverts(const Permutation& gamma, const Permutation& sigma) {
  // gamma sigma gamma (x) = sigma^-1 (x)  <=>  sigma(gamma(sigma(gamma(x)))) = x.
  for (int x = 1; x <= sigma.degree(); ++x) {
    if (sigma(gamma(sigma(gamma(x)))) != x) return false;
  }
  return true;
}

namespace {

void require_inverting_involution(const Permutation& gamma, const Permutation& sigma) {
  if (gamma.degree() != sigma.degree()) throw InvalidInput("degree mismatch between gamma and sigma");
  if (!gamma.is_involution()) throw InvalidInput("gamma^2 != id");
  if (!inverts(gamma, sigma)) throw InvalidInput("gamma o sigma o gamma != sigma^-1");
}

}  // namespace

InvolutionAction classify_involution_action(const Permutation& gamma, const Permutation& sigma) {
  require_inverting_involution(gamma, sigma);
  InvolutionAction action;
  action.cycles = sigma.cycles();
  const int d = sigma.degree();
  std::vector<int> cycle_of(d + 1), position(d + 1);
  for (std::size_t c = 0; c < action.cycles.size(); ++c) {
    for (std::size_t k = 0; k < action.cycles[c].size(); ++k) {
      cycle_of[action.cycles[c][k]] = static_cast<int>(c);
      position[action.cycles[c][k]] = static_cast<int>(k);
    }
  }
  for (std::size_t c = 0; c < action.cycles.size(); ++c) {
    const auto& cyc = action.cycles[c];
    int image = cycle_of[gamma(cyc[0])];
    if (image != static_cast<int>(c)) {
      if (image > static_cast<int>(c)) action.exchanged_pairs.emplace_back(static_cast<int>(c), image);
      continue;
    }
    // gamma(c_j) = c_{t-j} (mod l) since gamma reverses the cycle.
    const int l = static_cast<int>(cyc.size());
    const int t = position[gamma(cyc[0])];
    InvertedCycle inv;
    inv.cycle = static_cast<int>(c);
    for (int j = 0; j < l; ++j) {
      if ((2 * j - t) % l == 0) inv.fixed_points.push_back(cyc[j]);
    }
    if (inv.fixed_points.empty()) {
      std::vector<int> a, b;
      const int start = (t + 1) / 2;
      for (int i = 0; i < l / 2; ++i) a.push_back(cyc[(start + i) % l]);
      for (int i = 0; i < l / 2; ++i) b.push_back(cyc[(start + l / 2 + i) % l]);
      inv.exchanged_halves = std::make_pair(std::move(a), std::move(b));
    }
    action.inverted.push_back(std::move(inv));
  }
  return action;
}

Permutation shift_involution(const Permutation& gamma, const Permutation& sigma) {
  require_inverting_involution(gamma, sigma);
  return compose(gamma, sigma);
}

std::vector<Permutation> all_permutations(int d) {
  check_degree(d);
  std::vector<int> images(d);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<Permutation> permutations_of_type(const Partition& type) {
  std::vector<Permutation> out;
  for (const auto& p : all_permutations(type.weight())) {
    if (cycle_type(p) == type) out.push_back(p);
  }
  return out;
}

std::vector<Permutation> involutions(int d) {
  check_degree(d);
  std::vector<Permutation> out;
  std::vector<int> images(d, 0);
  std::function<void(int)> rec = [&](int x) {
    while (x <= d && images[x - 1] != 0) ++x;
    if (x > d) {
      out.push_back(Permutation::from_images(images));
      return;
    }
    images[x - 1] = x;
    rec(x + 1);
    for (int y = x + 1; y <= d; ++y) {
      if (images[y - 1] != 0) continue;
      images[x - 1] = y;
      images[y - 1] = x;
      rec(x + 1);
      images[y - 1] = 0;
    }
    images[x - 1] = 0;
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> inverting_involutions(const Permutation& sigma) {
  std::vector<Permutation> out;
  for (const auto& g : involutions(sigma.degree())) {
    if (inverts(g, sigma)) out.push_back(g);
  }
  return out;
}

Permutation canonical_of_type(const Partition& type) {
  std::vector<int> images(type.weight());
  int start = 1;
  for (int part : type.parts()) {
    for (int k = 0; k < part; ++k) images[start + k - 1] = start + (k + 1) % part;
    start += part;
  }
  return Permutation::from_images(images);
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace hurwitz
