#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cache.hpp"
#include "experiment.hpp"
#include "hurwitz/bridge.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/zigzag.hpp"
#include "render.hpp"

namespace {

using namespace hurwitz;
using nlohmann::json;

enum class Format { table, json, csv };

constexpr int kAsymptoticsMaxR = 8;

struct Common {
  int genus = 0;
  std::string lambda;
  std::string mu;
  std::string signs;
  std::optional<int> k;
  std::string variant = "complex";
  int threads = 0;
  bool json = false;
  bool csv = false;
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  int limit_d = SearchLimits{}.max_degree;
  int limit_r = SearchLimits{}.max_r;
  bool unbounded = false;

  Format format() const {
    if (json && csv) throw InvalidInput("--json and --csv are exclusive");
    return json ? Format::json : csv ? Format::csv : Format::table;
  }
  Partition lambda_partition() const { return need(lambda, "--lambda"); }
  Partition mu_partition() const { return need(mu, "--mu"); }
  SignSequence sign_sequence() const { return SignSequence::parse(signs); }

  SearchOptions options() const {
    SearchOptions o;
    o.threads = threads;
    if (unbounded) {
      o.limits = {kMaxDegree, 64};
    } else {
      if (limit_d < 1 || limit_r < 1) throw InvalidInput("limits must be positive; use --unbounded to lift them");
      o.limits = {limit_d, limit_r};
    }
    return o;
  }

  FactorizationSpec spec() const {
    FactorizationSpec s{genus, lambda_partition(), mu_partition(), parse_variant(variant), {}, k.value_or(0)};
    if (is_real(s.variant)) s.signs = sign_sequence();
    if (s.variant == Variant::real_kmixed && !k) throw InvalidInput("variant real-kmixed needs --k");
    s.validate();
    return s;
  }

private:
  static Partition need(const std::string& text, const char* flag) {
    if (text.empty()) throw InvalidInput(std::string(flag) + " is required");
    return Partition::parse(text);
  }
};

void add_type_flags(CLI::App* app, Common& c) {
  app->add_option("--genus", c.genus, "Genus g")->capture_default_str();
  app->add_option("--lambda", c.lambda, "Partition over the left end, e.g. 1,1,1");
  app->add_option("--mu", c.mu, "Partition over the right end");
}

void add_run_flags(CLI::App* app, Common& c) {
  app->add_option("--threads", c.threads, "Worker threads (0 = available parallelism)")->capture_default_str();
  app->add_option("--limit-d", c.limit_d, "Largest degree d accepted")->capture_default_str();
  app->add_option("--limit-r", c.limit_r, "Largest number of branch points r accepted")->capture_default_str();
  app->add_flag("--unbounded", c.unbounded, "Lift the d and r caps (long runs)");
  app->add_flag("--json", c.json, "JSON output");
  app->add_flag("--csv", c.csv, "CSV output");
}

void add_sign_flags(CLI::App* app, Common& c) {
  app->add_option("--signs", c.signs, "Sign sequence such as ++-+ (use --signs=-+ when it starts with -)");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

// Prints a list of flat JSON objects in the requested format.
void emit_rows(const std::vector<std::string>& columns, const json& rows, Format format) {
  if (format == Format::json) {
    std::cout << rows.dump(2) << '\n';
    return;
  }
  auto cell = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.is_null() ? std::string() : v.dump(); };
  if (format == Format::csv) {
    for (std::size_t i = 0; i < columns.size(); ++i) std::cout << (i ? "," : "") << columns[i];
    std::cout << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        std::cout << (i ? "," : "") << csv_field(row.contains(columns[i]) ? cell(row[columns[i]]) : "");
      }
      std::cout << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    width[i] = columns[i].size();
    for (const auto& row : rows)
      if (row.contains(columns[i])) width[i] = std::max(width[i], cell(row[columns[i]]).size());
  }
  auto line = [&](auto get) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const std::string v = get(i);
      std::cout << v << std::string(width[i] - v.size() + (i + 1 < columns.size() ? 2 : 0), ' ');
    }
    std::cout << '\n';
  };
  line([&](std::size_t i) { return columns[i]; });
  for (const auto& row : rows) line([&](std::size_t i) { return row.contains(columns[i]) ? cell(row[columns[i]]) : ""; });
}

int cmd_count(const Common& c) {
  const auto spec = c.spec();
  const auto format = c.format();
  cli::ResultCache cache(cli::ResultCache::resolve_dir(c.cache_dir));
  const std::string key = spec.str();
  std::optional<std::string> value;
  bool cached = false;
  if (!c.no_cache) {
    value = cache.lookup(key);
    cached = value.has_value();
  }
  if (!value) {
    value = std::to_string(count(spec, c.options()));
    if (!c.no_cache) cache.store(key, cli::to_json(spec), *value);
  }
  if (format == Format::json) {
    json out = cli::to_json(spec);
    out["count"] = std::stoull(*value);
    out["cached"] = cached;
    std::cout << out.dump(2) << '\n';
  } else if (format == Format::csv) {
    std::cout << "spec,count\n" << csv_field(key) << ',' << *value << '\n';
  } else {
    std::cout << *value << '\n';
  }
  return 0;
}

int cmd_covers(const Common& c) {
  const auto lambda = c.lambda_partition();
  const auto mu = c.mu_partition();
  const auto format = c.format();
  const auto covers = enumerate_covers(c.genus, lambda, mu, c.options().limits);
  json rows = json::array();
  if (c.signs.empty()) {
    for (const auto& cov : covers) {
      rows.push_back({{"cover", canonicalize(cov).str()},
                      {"r", cov.r},
                      {"colourings", enumerate_colourings(cov).size()},
                      {"class", std::string(to_string(classify(cov).cls))}});
    }
    emit_rows({"cover", "r", "colourings", "class"}, rows, format);
    return 0;
  }
  const auto signs = c.sign_sequence();
  const int d = lambda.weight();
  Rational total = 0;
  for (const auto& cov : covers) {
    for (const auto& col : enumerate_colourings(cov)) {
      const RealTropicalCover rc{cov, col};
      if (vertex_splitting(rc) != signs) continue;
      const Rational mult = real_multiplicity(rc);
      const Rational contribution = mult * static_cast<long long>(factorial(d));
      total += contribution;
      rows.push_back({{"cover", canonicalize(rc).str()},
                      {"multiplicity", cli::rational_str(mult)},
                      {"contribution", cli::rational_str(contribution)}});
    }
  }
  if (format == Format::json) {
    std::cout << json{{"signs", signs.str()}, {"covers", rows}, {"total", cli::rational_str(total)}}.dump(2) << '\n';
  } else {
    emit_rows({"cover", "multiplicity", "contribution"}, rows, format);
    if (format == Format::table) std::cout << "total d!*mult: " << cli::rational_str(total) << '\n';
  }
  return 0;
}

int cmd_verify(const Common& c) {
  const auto report = verify_correspondence(c.genus, c.lambda_partition(), c.mu_partition(), c.sign_sequence(),
                                            c.options());
  const auto format = c.format();
  if (format == Format::json) {
    std::cout << cli::to_json(report).dump(2) << '\n';
  } else {
    json rows = json::array();
    for (const auto& t : report.terms) {
      rows.push_back(
          {{"cover", t.cover.str()}, {"mult", cli::rational_str(t.mult)}, {"d!*mult", cli::rational_str(t.contribution)}});
    }
    emit_rows({"cover", "mult", "d!*mult"}, rows, format);
    if (format == Format::table) {
      std::cout << "lhs=" << report.lhs << " rhs=" << cli::rational_str(report.rhs)
                << (report.equal ? " equal" : " DIFFERENT") << '\n';
    }
  }
  return report.equal ? 0 : 1;
}

struct ZigzagArgs {
  std::string cover;
  std::string family = "monotone";
  std::string builder = "standard";
  int m = 1;
  std::string order;
  std::string types;
  std::optional<int> split;
  int case_number = 1;
  std::string splitting = "simple";
  std::string lambda_prime;
  std::string mu_prime;
};

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw InvalidInput("bad integer list: " + text);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad integer list: " + text);
    }
  }
  return out;
}

json classify_json(const TropicalCover& cover, std::optional<int> k) {
  const auto cls = classify(cover);
  json out{{"cover", canonicalize(cover).str()}, {"class", std::string(to_string(cls.cls))}};
  if (cls.witness) out["witness"] = cli::to_json(cover, *cls.witness);
  if (k) {
    const auto km = is_kmixed(cover, *k);
    out["kmixed"] = {{"k", *k}, {"value", km.value}};
    if (km.witness) out["kmixed"]["witness"] = cli::to_json(cover, *km.witness);
  }
  return out;
}

int cmd_zigzag_classify(const Common& c, const ZigzagArgs& z) {
  const auto format = c.format();
  std::vector<TropicalCover> covers;
  if (!z.cover.empty()) {
    covers.push_back(parse_cover(z.cover));
  } else {
    covers = enumerate_covers(c.genus, c.lambda_partition(), c.mu_partition(), c.options().limits);
  }
  json rows = json::array();
  for (const auto& cov : covers) rows.push_back(classify_json(cov, c.k));
  if (format == Format::json) {
    std::cout << (z.cover.empty() ? rows : rows[0]).dump(2) << '\n';
    return 0;
  }
  for (auto& row : rows) {
    if (row.contains("kmixed")) row["kmixed"] = row["kmixed"]["value"];
  }
  emit_rows(c.k ? std::vector<std::string>{"cover", "class", "kmixed"} : std::vector<std::string>{"cover", "class"},
            rows, format);
  return 0;
}

int cmd_zigzag_number(const Common& c, const ZigzagArgs& z) {
  ZigzagFamily family;
  if (z.family == "monotone") {
    family = ZigzagFamily::monotone;
  } else if (z.family == "universal") {
    family = ZigzagFamily::universal;
  } else if (z.family == "kmixed") {
    family = ZigzagFamily::kmixed;
    if (!c.k) throw InvalidInput("family kmixed needs --k");
  } else {
    throw InvalidInput("unknown zigzag family: " + z.family);
  }
  const auto result = zigzag_number(c.genus, c.lambda_partition(), c.mu_partition(), family, c.k.value_or(0),
                                    c.options());
  const auto format = c.format();
  json rows = json::array();
  for (const auto& t : result.terms) {
    rows.push_back({{"cover", t.cover.str()}, {"class", std::string(to_string(t.cls))}, {"N", t.n}});
  }
  if (format == Format::json) {
    std::cout << json{{"family", z.family}, {"value", result.value}, {"terms", rows}}.dump(2) << '\n';
  } else {
    emit_rows({"cover", "class", "N"}, rows, format);
    if (format == Format::table) std::cout << "zigzag number: " << result.value << '\n';
  }
  return 0;
}

int cmd_zigzag_build(const Common& c, const ZigzagArgs& z) {
  TropicalCover cover;
  if (z.builder == "standard") {
    cover = build_standard_universal(z.m, c.genus);
  } else if (z.builder == "chain") {
    std::vector<int> order = z.order.empty() ? std::vector<int>{} : parse_ints(z.order);
    if (order.empty()) {
      for (int i = 1; i <= z.m; ++i) order.push_back(i);
    }
    std::vector<ComponentType> types;
    if (z.types.empty()) {
      types = chain_types_for_order(order);
    } else {
      for (int t : parse_ints(z.types)) {
        if (t < 1 || t > 4) throw InvalidInput("component types are 1..4");
        types.push_back(static_cast<ComponentType>(t));
      }
    }
    cover = build_component_chain(static_cast<int>(order.size()), types, order, z.split);
  } else if (z.builder == "case-zigzag") {
    cover = build_case_zigzag(c.lambda_partition(), c.mu_partition(), c.genus, z.case_number);
  } else if (z.builder == "case") {
    CaseFamily family;
    if (z.splitting == "simple") {
      family = CaseFamily::simple_splitting;
    } else if (z.splitting == "arbitrary") {
      family = CaseFamily::arbitrary_splitting;
    } else {
      throw InvalidInput("--splitting is simple or arbitrary");
    }
    cover = build_case_cover(c.lambda_partition(), c.mu_partition(), c.genus, z.case_number, z.m, family);
  } else if (z.builder == "kmixed") {
    if (z.lambda_prime.empty() || z.mu_prime.empty()) throw InvalidInput("kmixed needs --lambda-prime and --mu-prime");
    cover = build_kmixed_cover(c.lambda_partition(), c.mu_partition(), Partition::parse(z.lambda_prime),
                               Partition::parse(z.mu_prime), c.genus, z.m);
  } else if (z.builder == "heavy") {
    cover = build_heavy_string_cover(z.m);
  } else {
    throw InvalidInput("unknown builder: " + z.builder);
  }
  json out = cli::to_json(cover);
  out["class"] = std::string(to_string(classify(cover).cls));
  if (c.format() == Format::json) {
    std::cout << out.dump(2) << '\n';
  } else {
    emit_rows({"canonical", "r", "genus", "lambda", "mu", "class"}, json::array({out}), c.format());
  }
  return 0;
}

int cmd_asymptotics(const Common& c, const std::string& family, int m_max) {
  const auto rows = cli::run_experiment(cli::parse_family(family), m_max, c.options());
  json out = json::array();
  for (const auto& row : rows) {
    json j{{"m", row.m},
           {"family", std::string(cli::to_string(row.family))},
           {"count", row.count ? json(*row.count) : json(nullptr)},
           {"log_count", row.log_count ? json(*row.log_count) : json(nullptr)},
           {"reference_curve", row.reference_curve},
           {"runtime_ms", row.runtime_ms}};
    if (!row.note.empty()) j["note"] = row.note;
    out.push_back(j);
  }
  emit_rows({"m", "family", "count", "log_count", "reference_curve", "runtime_ms", "note"}, out, c.format());
  return 0;
}

int cmd_cache(const Common& c, const std::string& action) {
  cli::ResultCache cache(cli::ResultCache::resolve_dir(c.cache_dir));
  if (action == "path") {
    std::cout << cache.file().string() << '\n';
  } else if (action == "clear") {
    cache.clear();
    std::cout << "cleared " << cache.file().string() << '\n';
  } else if (action == "show") {
    json rows = json::array();
    for (const auto& rec : cache.records()) {
      rows.push_back({{"key", rec.key.substr(0, 12)},
                      {"spec", rec.spec.dump()},
                      {"value", rec.value},
                      {"engine_version", rec.engine_version},
                      {"timestamp", rec.timestamp}});
    }
    emit_rows({"key", "spec", "value", "engine_version", "timestamp"}, rows, c.format());
  } else {
    throw InvalidInput("cache action is show, clear or path");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact double Hurwitz numbers, real tropical covers and zigzag covers"};
  app.require_subcommand(1);
  Common common;
  ZigzagArgs zz;
  app.add_option("--cache-dir", common.cache_dir, "Result cache directory (overrides HURWITZ_CACHE_DIR)");
  app.add_flag("--no-cache", common.no_cache, "Neither read nor write the result cache");

  auto* count_cmd = app.add_subcommand("count", "Count factorizations of one family");
  add_type_flags(count_cmd, common);
  add_sign_flags(count_cmd, common);
  count_cmd->add_option("--variant", common.variant, "complex, monotone, real, real-monotone or real-kmixed")
      ->capture_default_str();
  count_cmd->add_option("--k", common.k, "k for real-kmixed");
  add_run_flags(count_cmd, common);

  auto* covers_cmd = app.add_subcommand("covers", "Enumerate tropical covers, or coloured covers for --signs");
  add_type_flags(covers_cmd, common);
  add_sign_flags(covers_cmd, common);
  add_run_flags(covers_cmd, common);

  auto* verify_cmd = app.add_subcommand("verify-correspondence", "Compare factorization and tropical counts");
  add_type_flags(verify_cmd, common);
  add_sign_flags(verify_cmd, common);
  add_run_flags(verify_cmd, common);

  auto* zig = app.add_subcommand("zigzag", "Zigzag cover classification, numbers and builders");
  zig->require_subcommand(1);
  auto* zc = zig->add_subcommand("classify", "Classify one cover (--cover) or every cover of a type");
  add_type_flags(zc, common);
  zc->add_option("--cover", zz.cover, "Cover text, e.g. \"[L->1 1][L->1 1][1->R 2]\"");
  zc->add_option("--k", common.k, "Also decide k-mixedness");
  add_run_flags(zc, common);
  auto* zn = zig->add_subcommand("number", "Zigzag number of a type");
  add_type_flags(zn, common);
  zn->add_option("--family", zz.family, "monotone, universal or kmixed")->capture_default_str();
  zn->add_option("--k", common.k, "k for the kmixed family");
  add_run_flags(zn, common);
  auto* zb = zig->add_subcommand("build", "Run one of the explicit constructions");
  add_type_flags(zb, common);
  zb->add_option("--builder", zz.builder, "standard, chain, case-zigzag, case, kmixed or heavy")->capture_default_str();
  zb->add_option("--m", zz.m, "Number of glued pieces")->capture_default_str();
  zb->add_option("--order", zz.order, "Chain block order, e.g. 2,1");
  zb->add_option("--types", zz.types, "Chain component types, e.g. 1,4");
  zb->add_option("--split", zz.split, "Chain: simple splitting s to realise");
  zb->add_option("--case", zz.case_number, "Construction case 1..4")->capture_default_str();
  zb->add_option("--splitting", zz.splitting, "Case cover family: simple or arbitrary")->capture_default_str();
  zb->add_option("--lambda-prime", zz.lambda_prime, "k-mixed: lambda'");
  zb->add_option("--mu-prime", zz.mu_prime, "k-mixed: mu'");
  add_run_flags(zb, common);

  std::string family = "arbitrary-splitting";
  int m_max = 2;
  auto* asym = app.add_subcommand("asymptotics", "Exact lower-bound quantities per m with reference curves");
  asym->add_option("--family", family, "simple-splitting, arbitrary-splitting or kmixed")->capture_default_str();
  asym->add_option("--m-max", m_max, "Largest m")->capture_default_str();
  add_run_flags(asym, common);

  std::string action = "show";
  auto* cache_cmd = app.add_subcommand("cache", "Inspect or clear the result cache");
  cache_cmd->add_option("action", action, "show, clear or path")->capture_default_str();
  cache_cmd->add_flag("--json", common.json, "JSON output");
  cache_cmd->add_flag("--csv", common.csv, "CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*count_cmd) return cmd_count(common);
    if (*covers_cmd) return cmd_covers(common);
    if (*verify_cmd) return cmd_verify(common);
    if (*zc) return cmd_zigzag_classify(common, zz);
    if (*zn) return cmd_zigzag_number(common, zz);
    if (*zb) return cmd_zigzag_build(common, zz);
    if (*asym) {
      // Each row sweeps all 2^r splittings; keep the default run short.
      if (asym->count("--limit-r") == 0) common.limit_r = kAsymptoticsMaxR;
      return cmd_asymptotics(common, family, m_max);
    }
    if (*cache_cmd) return cmd_cache(common, action);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
