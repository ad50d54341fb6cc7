#include "blowup_cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "blowup/classifier.hpp"
#include "blowup/errors.hpp"
#include "blowup/families.hpp"
#include "blowup/search.hpp"
#include "output.hpp"

namespace blowup::cli {
namespace {

constexpr const char* kDatasetEnv = "BLOWUP_SPORADIC_DATA";
constexpr std::int64_t kFamilyBound = 6;

std::vector<std::int64_t> parse_weights(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("weights must be comma-separated integers, got '" + text + "'");
    }
    if (used != item.size()) {
      throw InvalidArgument("weights must be comma-separated integers, got '" + text + "'");
    }
    if (v < 1) throw InvalidArgument("weights must be positive, got " + std::to_string(v));
    out.push_back(v);
  }
  if (out.size() < 2) throw InvalidArgument("need at least two weights");
  return out;
}

Rat parse_epsilon(const std::string& text) {
  const Rat eps = Rat::parse(text);
  if (eps <= Rat(0) || eps > Rat(1)) {
    throw InvalidArgument("epsilon must lie in (0,1], got " + eps.to_string());
  }
  return eps;
}

Sign parse_sign(const std::string& text) {
  if (text == "+") return Sign::Plus;
  if (text == "-") return Sign::Minus;
  throw InvalidArgument("sign must be + or -, got '" + text + "'");
}

std::string_view sign_name(Sign s) { return s == Sign::Plus ? "+" : "-"; }

std::string join(std::span<const std::int64_t> xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

void emit(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  std::string weights;
  std::string epsilon = "1";
  std::string format = "json";
};

int do_classify(const ClassifyArgs& a, std::ostream& out) {
  const WeightVector n(parse_weights(a.weights));
  const Rat eps = parse_epsilon(a.epsilon);
  const auto r = classify(n, eps);
  if (a.format == "csv") {
    out << "weights,V,epsilon,eps_log_terminal,eps_log_canonical\n"
        << join(n.weights(), ';') << ',' << n.index() << ',' << eps << ','
        << r.eps_log_terminal << ',' << r.eps_log_canonical << '\n';
    return kOk;
  }
  Json j{{"weights", to_json(n)},
         {"V", n.index()},
         {"epsilon", to_json(eps)},
         {"eps_log_terminal", r.eps_log_terminal},
         {"eps_log_canonical", r.eps_log_canonical}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  emit(out, j);
  return kOk;
}

// ------------------------------------------------------------------ census

struct CensusArgs {
  std::size_t dim = 4;
  std::int64_t v_min = 1;
  std::int64_t v_max = 0;
  std::string epsilon = "1";
  std::string verdict = "terminal";
  std::optional<std::int64_t> min_weight;
  unsigned threads = 0;
  std::uint64_t budget = CensusOptions{}.budget;
  std::string out_path;
  std::string format = "json";
  std::string table = "histogram";
};

int do_census(const CensusArgs& a, std::ostream& out) {
  CensusQuery q;
  q.dim = a.dim;
  q.v_min = a.v_min;
  q.v_max = a.v_max;
  q.eps = parse_epsilon(a.epsilon);
  q.verdict = parse_verdict(a.verdict);
  q.min_weight = a.min_weight;

  std::ofstream file;
  if (!a.out_path.empty()) {
    file.open(a.out_path);
    if (!file) throw InvalidArgument("cannot write " + a.out_path);
  }
  std::ostream& os = a.out_path.empty() ? out : file;

  const auto r = run_census(q, {.threads = a.threads, .budget = a.budget});
  if (a.format == "csv") {
    if (a.table == "hits") {
      write_hits_csv(os, r.hits);
    } else {
      write_histogram_csv(os, r.histogram);
    }
    return kOk;
  }
  Json hits = Json::array();
  for (const auto& n : r.hits) {
    hits.push_back({{"V", n.index()}, {"weights", to_json(n)}, {"n_min", n.min_weight()}});
  }
  emit(os, Json{{"dim", q.dim},
                {"v_min", q.v_min},
                {"v_max", q.v_max},
                {"epsilon", to_json(q.eps)},
                {"verdict", to_string(q.verdict)},
                {"min_weight", q.min_weight ? Json(*q.min_weight) : Json(nullptr)},
                {"candidates", r.candidates},
                {"total", r.histogram.total},
                {"histogram", to_json(r.histogram)},
                {"hits", hits}});
  return kOk;
}

// ------------------------------------------------------------------ family

struct FamilyArgs {
  std::string id;
  int apex = 0;
  std::optional<std::int64_t> volume;
  std::string sign = "+";
  bool list = false;
  std::string format = "json";
};

int do_family(const FamilyArgs& a, std::ostream& out) {
  if (a.list) {
    out << quintuple_table_csv();
    return kOk;
  }
  if (a.id.empty() || a.apex == 0) throw InvalidArgument("family needs --id and --apex (or --list)");
  const Quintuple& q = find_quintuple(a.id);
  if (a.apex < 1 || a.apex > 5) throw InvalidArgument("apex must be in 1..5");
  const Sign sign = parse_sign(a.sign);

  if (!a.volume) {
    const Rat bound = bound_dim1(q, a.apex);
    if (a.format == "csv") {
      out << "id,apex,bound\n" << q.id << ',' << a.apex << ',' << bound << '\n';
      return kOk;
    }
    emit(out, Json{{"id", q.id},
                   {"apex", a.apex},
                   {"bound", to_json(bound)},
                   {"ratio_lemma", check_ratio_lemma(q)}});
    return kOk;
  }

  const auto tuple = instantiate(q, *a.volume, sign);
  const auto n = blowup_from_quintuple(q, a.apex, *a.volume, sign);
  if (a.format == "csv") {
    out << "id,apex,V,sign,weights\n"
        << q.id << ',' << a.apex << ',' << *a.volume << ',' << sign_name(sign) << ','
        << (n ? join(n->weights(), ';') : "none") << '\n';
    return kOk;
  }
  Json t = Json::array();
  for (const auto& x : tuple) t.push_back(x.num());
  Json j{{"id", q.id}, {"apex", a.apex}, {"V", *a.volume}, {"sign", sign_name(sign)},
         {"tuple", t}, {"weights", nullptr}};
  if (n) {
    const auto c = classify(*n, Rat(1));
    j["weights"] = to_json(*n);
    j["n_min"] = n->min_weight();
    j["terminal"] = c.eps_log_terminal;
    j["canonical"] = c.eps_log_canonical;
  }
  emit(out, j);
  return kOk;
}

// ------------------------------------------------------------- family-scan

struct ScanArgs {
  std::int64_t v_min = 1;
  std::int64_t v_max = 300;
  std::string rows = "all";
  std::string format = "json";
};

int do_family_scan(const ScanArgs& a, std::ostream& out) {
  if (a.v_min < 1 || a.v_max < a.v_min) throw InvalidArgument("need 1 <= vmin <= vmax");
  struct Row {
    std::string_view id;
    Sign sign;
    std::int64_t instances = 0, terminal = 0, canonical = 0, max_n_min = 0, skips = 0;
  };
  std::vector<Row> rows;
  Json violations = Json::array();
  Json non_canonical = Json::array();
  for (const auto& q : quintuple_table()) {
    if (a.rows == "primitive" && !q.primitive()) continue;
    if (a.rows == "nonprimitive" && q.primitive()) continue;
    for (Sign sign : {Sign::Plus, Sign::Minus}) {
      if (sign == Sign::Minus && !q.has_sign) continue;
      Row row{q.id, sign};
      for (std::int64_t V = a.v_min; V <= a.v_max; ++V) {
        if (V % q.modifier_denominator() != 0) {
          ++row.skips;
          continue;
        }
        for (int l = 1; l <= 5; ++l) {
          const auto n = blowup_from_quintuple(q, l, V, sign);
          if (!n) continue;
          ++row.instances;
          const bool t = is_terminal_fast(*n);
          const bool c = is_canonical_fast(*n);
          row.terminal += t;
          row.canonical += c;
          auto where = Json{{"id", q.id}, {"sign", sign_name(sign)}, {"apex", l}, {"V", V},
                            {"weights", to_json(*n)}};
          if (!c) non_canonical.push_back(where);
          if (t) {
            row.max_n_min = std::max(row.max_n_min, n->min_weight());
            if (n->min_weight() > kFamilyBound) violations.push_back(where);
          }
        }
      }
      rows.push_back(row);
    }
  }

  if (a.format == "csv") {
    out << "id,sign,instances,terminal,canonical,max_terminal_n_min,divisibility_skips\n";
    for (const auto& r : rows) {
      out << r.id << ',' << sign_name(r.sign) << ',' << r.instances << ',' << r.terminal << ','
          << r.canonical << ',' << r.max_n_min << ',' << r.skips << '\n';
    }
  } else {
    Json jr = Json::array();
    std::int64_t instances = 0, terminal = 0;
    for (const auto& r : rows) {
      instances += r.instances;
      terminal += r.terminal;
      jr.push_back({{"id", r.id},
                    {"sign", sign_name(r.sign)},
                    {"instances", r.instances},
                    {"terminal", r.terminal},
                    {"canonical", r.canonical},
                    {"max_terminal_n_min", r.max_n_min},
                    {"divisibility_skips", r.skips}});
    }
    emit(out, Json{{"v_min", a.v_min},
                   {"v_max", a.v_max},
                   {"rows", a.rows},
                   {"instances", instances},
                   {"terminal", terminal},
                   {"violations", violations},
                   {"non_canonical", non_canonical},
                   {"per_row", jr}});
  }
  return violations.empty() ? kOk : kFailure;
}

// ------------------------------------------------------------------- width

struct WidthArgs {
  std::string points;
  std::size_t origin = 0;
  std::string format = "json";
};

ProjectedConfig parse_points(const std::string& text, std::size_t origin) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("--points is not valid JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw InvalidArgument("--points must be a JSON array of integer points");
  }
  ProjectedConfig s;
  s.ambient_dim = j[0].size();
  s.origin = origin;
  for (const auto& p : j) {
    if (!p.is_array()) throw InvalidArgument("--points must be a JSON array of integer points");
    std::vector<std::int64_t> v;
    for (const auto& x : p) {
      if (!x.is_number_integer()) throw InvalidArgument("point coordinates must be integers");
      v.push_back(x.get<std::int64_t>());
    }
    s.points.push_back(std::move(v));
  }
  return s;
}

int do_width(const WidthArgs& a, std::ostream& out) {
  const auto s = parse_points(a.points, a.origin);
  const auto fs = facets(s);
  std::optional<Rat> ell;
  try {
    ell = ell_L(s);
  } catch (const InvalidArgument&) {
    // Some facet holds every non-origin point; the bound does not apply.
  }
  if (a.format == "csv") {
    out << "normal,offset,width\n";
    for (const auto& f : fs) out << join(f.normal, ';') << ',' << f.offset << ',' << facet_width(s, f) << '\n';
    return kOk;
  }
  Json jf = Json::array();
  std::int64_t widest = 0;
  for (const auto& f : fs) {
    const auto w = facet_width(s, f);
    widest = std::max(widest, w);
    jf.push_back({{"normal", f.normal}, {"offset", f.offset}, {"incident", f.incident}, {"width", w}});
  }
  emit(out, Json{{"ambient_dim", s.ambient_dim},
                 {"origin_index", s.origin},
                 {"facets", jf},
                 {"max_facet_width", widest},
                 {"ell_L", ell ? to_json(*ell) : Json(nullptr)}});
  return kOk;
}

// ---------------------------------------------------------------- sporadic

struct SporadicArgs {
  std::string input;
  bool strict = false;
  bool histogram = false;
  std::string format = "json";
};

int do_sporadic(const SporadicArgs& a, std::ostream& out) {
  std::string source = a.input;
  if (source.empty()) {
    if (const char* env = std::getenv(kDatasetEnv); env && *env) source = env;
  }
  std::vector<SporadicRecord> records;
  if (source.empty()) {
    records.assign(embedded_fixtures().begin(), embedded_fixtures().end());
  } else {
    records = parse_dataset(std::filesystem::path(source), {.strict = a.strict});
  }

  const auto rep = sporadic_report(records);
  Json non_terminal = Json::array();
  for (const auto& r : records) {
    for (const auto& b : blowups_from_record(r)) {
      if (!is_terminal_fast(b.weights)) {
        non_terminal.push_back({{"record", to_json(r)}, {"apex", b.apex}, {"weights", to_json(b.weights)}});
      }
    }
  }

  if (a.histogram || a.format == "csv") {
    write_histogram_csv(out, rep.histogram);
  } else {
    Json argmax = nullptr;
    if (rep.argmax_record) {
      argmax = {{"record", to_json(*rep.argmax_record)},
                {"weights", to_json(*rep.argmax_weights)},
                {"n_min", rep.argmax_weights->min_weight()}};
    }
    emit(out, Json{{"source", source.empty() ? "embedded" : source},
                   {"records", rep.records},
                   {"total", rep.histogram.total},
                   {"distinct", rep.distinct},
                   {"histogram", to_json(rep.histogram)},
                   {"argmax", argmax},
                   {"non_terminal", non_terminal}});
  }
  return non_terminal.empty() ? kOk : kData;
}

// ---------------------------------------------------------------- selftest

int do_selftest(std::ostream& out) {
  Json checks = Json::array();
  bool all = true;
  auto check = [&](std::string name, const std::function<std::string()>& body) {
    std::string detail = body();
    const bool ok = detail.empty();
    all = all && ok;
    Json c{{"name", std::move(name)}, {"passed", ok}};
    if (!ok) c["detail"] = detail;
    checks.push_back(c);
  };

  check("kawakita d=3 V<=50", [] {
    CensusQuery q;
    q.dim = 3;
    q.v_max = 50;
    std::set<WeightVector> want;
    for (std::int64_t V = 2; V <= 50; ++V) {
      for (std::int64_t a = 1; 2 * a <= V; ++a) {
        if (std::gcd(a, V - a) == 1) want.insert(WeightVector({1, a, V - a}));
      }
    }
    const auto hits = run_census(q, {.threads = 1}).hits;
    const std::set<WeightVector> got(hits.begin(), hits.end());
    return got == want && hits.size() == want.size() ? std::string()
                                                     : "terminal set differs from (1,a,b)";
  });

  check("oracle equivalence V<=20", [] {
    for (std::size_t d = 2; d <= 4; ++d) {
      for (std::int64_t V = 1; V <= 20; ++V) {
        for (const auto& n : enumerate_blowups(d, V)) {
          for (const Rat& eps : {Rat(1), Rat(1, 2), Rat(1, 3)}) {
            bool t = true, c = true;
            for (const auto& p : brute_force_lattice_points(n, eps)) {
              t = t && p.membership == Membership::Vertex;
              c = c && p.membership != Membership::Interior;
            }
            const auto r = classify(n, eps);
            if (r.eps_log_terminal != t || r.eps_log_canonical != c) {
              return n.to_string() + " at eps=" + eps.to_string();
            }
          }
        }
      }
    }
    return std::string();
  });

  check("embedded fixtures", [] {
    const std::vector<WeightVector> named{WeightVector({32, 41, 71, 102}),
                                          WeightVector({20, 57, 133, 210}),
                                          WeightVector({21, 60, 140, 199}),
                                          WeightVector({6, 10, 15, 7})};
    std::set<WeightVector> seen;
    for (const auto& r : embedded_fixtures()) {
      for (const auto& b : blowups_from_record(r)) {
        if (!is_terminal_fast(b.weights)) return "non-terminal " + b.weights.to_string();
        seen.insert(b.weights.sorted());
      }
    }
    for (const auto& n : named) {
      if (!seen.count(n.sorted())) return "missing " + n.to_string();
      const auto back = blowups_from_record(record_from_weights(n));
      const bool round_trip = std::any_of(back.begin(), back.end(), [&](const ApexBlowup& b) {
        return b.apex == 5 && b.weights == n;
      });
      if (!round_trip) return "round trip failed for " + n.to_string();
    }
    return std::string();
  });

  emit(out, Json{{"passed", all}, {"checks", checks}});
  return all ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact classification of terminal and canonical weighted blowups"};
  app.name("blowup");
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"json", "csv"});

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "eps-log terminal/canonical verdict for one blowup");
  classify_cmd->add_option("--weights", ca.weights, "comma-separated positive weights")->required();
  classify_cmd->add_option("--epsilon", ca.epsilon, "p/q in (0,1]")->capture_default_str();
  classify_cmd->add_option("--format", ca.format)->check(formats)->capture_default_str();

  CensusArgs cn;
  auto* census_cmd = app.add_subcommand("census", "exhaustive search over an index range");
  census_cmd->add_option("--dim", cn.dim)->capture_default_str();
  census_cmd->add_option("--vmin", cn.v_min)->capture_default_str();
  census_cmd->add_option("--vmax", cn.v_max)->required();
  census_cmd->add_option("--epsilon", cn.epsilon)->capture_default_str();
  census_cmd->add_option("--verdict", cn.verdict, "terminal, canonical, eps-lt or eps-lc")
      ->check(CLI::IsMember({"terminal", "canonical", "eps-lt", "eps-lc"}))
      ->capture_default_str();
  census_cmd->add_option("--min-weight", cn.min_weight, "list only hits with n_min >= t");
  census_cmd->add_option("--threads", cn.threads, "0 = available parallelism")->capture_default_str();
  census_cmd->add_option("--budget", cn.budget, "cap on projected candidates")->capture_default_str();
  census_cmd->add_option("--out", cn.out_path, "write to a file instead of stdout");
  census_cmd->add_option("--format", cn.format)->check(formats)->capture_default_str();
  census_cmd->add_option("--table", cn.table, "CSV table to print")
      ->check(CLI::IsMember({"histogram", "hits"}))
      ->capture_default_str();

  FamilyArgs fa;
  auto* family_cmd = app.add_subcommand("family", "one quintuple family: bound or instance");
  family_cmd->add_option("--id", fa.id, "Q1..Q29 or N1..N17");
  family_cmd->add_option("--apex", fa.apex, "1..5");
  family_cmd->add_option("--volume", fa.volume, "instantiate at this V (omit for the bound)");
  family_cmd->add_option("--sign", fa.sign, "+ or -")->capture_default_str();
  family_cmd->add_flag("--list", fa.list, "print the quintuple table as CSV");
  family_cmd->add_option("--format", fa.format)->check(formats)->capture_default_str();

  ScanArgs sa;
  auto* scan_cmd = app.add_subcommand("family-scan", "every row, apex, sign and V in range");
  scan_cmd->add_option("--vmin", sa.v_min)->capture_default_str();
  scan_cmd->add_option("--vmax", sa.v_max)->capture_default_str();
  scan_cmd->add_option("--rows", sa.rows)
      ->check(CLI::IsMember({"all", "primitive", "nonprimitive"}))
      ->capture_default_str();
  scan_cmd->add_option("--format", sa.format)->check(formats)->capture_default_str();

  WidthArgs wa;
  auto* width_cmd = app.add_subcommand("width", "facet widths and ell_L of a projected configuration");
  width_cmd->add_option("--points", wa.points, "JSON array of integer points")->required();
  width_cmd->add_option("--origin-index", wa.origin)->capture_default_str();
  width_cmd->add_option("--format", wa.format)->check(formats)->capture_default_str();

  SporadicArgs spa;
  auto* sporadic_cmd = app.add_subcommand("sporadic", "n_min histogram of sporadic simplex records");
  sporadic_cmd->add_option("--input", spa.input,
                           std::string("dataset file (default: $") + kDatasetEnv +
                               ", else the embedded fixtures)");
  sporadic_cmd->add_flag("--strict", spa.strict, "residues must already lie in [0, V-1]");
  sporadic_cmd->add_flag("--histogram", spa.histogram, "print only the n_min,count table");
  sporadic_cmd->add_option("--format", spa.format)->check(formats)->capture_default_str();

  auto* selftest_cmd = app.add_subcommand("selftest", "run the embedded consistency checks");

  std::vector<const char*> argv{"blowup"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (classify_cmd->parsed()) return do_classify(ca, out);
    if (census_cmd->parsed()) return do_census(cn, out);
    if (family_cmd->parsed()) return do_family(fa, out);
    if (scan_cmd->parsed()) return do_family_scan(sa, out);
    if (width_cmd->parsed()) return do_width(wa, out);
    if (sporadic_cmd->parsed()) return do_sporadic(spa, out);
    if (selftest_cmd->parsed()) return do_selftest(out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (projected " << e.projected() << ")\n";
    return kBudget;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  }
  return kUsage;
}

}  // namespace blowup::cli
