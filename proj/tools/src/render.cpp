#include "render.hpp"

namespace hurwitz::cli {

using nlohmann::json;

std::string rational_str(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

json to_json(const Edge& e) {
  return {{"from", e.from == kBoundary ? json("L") : json(e.from)},
          {"to", e.to == kBoundary ? json("R") : json(e.to)},
          {"weight", e.weight}};
}

json to_json(const TropicalCover& c) {
  json edges = json::array();
  for (const auto& e : c.edges) edges.push_back(to_json(e));
  return {{"r", c.r},
          {"genus", c.genus()},
          {"lambda", c.left_weights().str()},
          {"mu", c.right_weights().str()},
          {"edges", edges},
          {"canonical", canonicalize(c).str()}};
}

json to_json(const RealTropicalCover& rc) {
  json out = to_json(rc.cover);
  json colours = json::array();
  for (auto col : rc.colouring.edge_colours) colours.push_back(std::string(to_string(col)));
  out["colours"] = colours;
  out["canonical"] = canonicalize(rc).str();
  out["splitting"] = vertex_splitting(rc).str();
  out["multiplicity"] = rational_str(real_multiplicity(rc));
  return out;
}

json to_json(const Factorization& f, const SignSequence& signs) {
  json taus = json::array();
  for (const auto& [a, b] : f.taus) taus.push_back({a, b});
  json out{{"sigma1", f.sigma1.str()}, {"taus", taus}, {"sigma2", f.sigma2.str()}};
  if (f.gamma) out["gamma"] = f.gamma->str();
  if (!signs.empty()) out["signs"] = signs.str();
  return out;
}

json to_json(const FactorizationSpec& spec) {
  json out{{"genus", spec.genus},
           {"lambda", spec.lambda.str()},
           {"mu", spec.mu.str()},
           {"variant", std::string(to_string(spec.variant))}};
  if (!spec.signs.empty()) out["signs"] = spec.signs.str();
  if (spec.variant == Variant::real_kmixed) out["k"] = spec.k;
  return out;
}

json to_json(const TropicalCover& c, const ZigzagStructure& z) {
  json edges = json::array();
  for (int i : z.string_edges) edges.push_back(to_json(c.edges[i]));
  json tails = json::array();
  for (const auto& t : z.tails) {
    tails.push_back({{"attachment", t.attachment},
                     {"weight", t.weight},
                     {"side", t.in_tail ? "in" : "out"},
                     {"bent", t.bent},
                     {"fork", t.fork},
                     {"cycles", t.cycle_split.size()},
                     {"vertices", t.vertices}});
  }
  json comps = json::array();
  for (const auto& comp : z.components) {
    comps.push_back({{"kind", comp.in_component ? "in" : "out"}, {"vertices", comp.vertices}});
  }
  const char* kind = z.kind == StringKind::path ? "path" : z.kind == StringKind::cycle ? "cycle" : "vertex";
  return {{"kind", kind},
          {"string_edges", edges},
          {"string_vertices", z.string_vertices},
          {"bent_vertices", z.bent_vertices},
          {"tails", tails},
          {"components", comps}};
}

json to_json(const CorrespondenceReport& report) {
  json terms = json::array();
  for (const auto& t : report.terms) {
    terms.push_back(
        {{"cover", t.cover.str()}, {"mult", rational_str(t.mult)}, {"contribution", rational_str(t.contribution)}});
  }
  return {{"genus", report.genus},
          {"lambda", report.lambda.str()},
          {"mu", report.mu.str()},
          {"signs", report.signs.str()},
          {"lhs", report.lhs},
          {"rhs", rational_str(report.rhs)},
          {"equal", report.equal},
          {"terms", terms}};
}

}  // namespace hurwitz::cli
