#include "hypersimplex/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hypersimplex/ehrhart.hpp"
#include "hypersimplex/general_order.hpp"
#include "hypersimplex/hstar.hpp"
#include "hypersimplex/shelling.hpp"
#include "hypersimplex/triangulation.hpp"

namespace hypersimplex::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string join(const Json& arr, const char* sep = " ") {
  std::string out;
  for (const auto& x : arr) {
    if (!out.empty()) out += sep;
    out += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return out;
}

// Vertices as 0/1 strings separated by spaces.
std::string face_string(const Json& face) {
  std::string out;
  for (const auto& v : face) {
    if (!out.empty()) out += ' ';
    for (const auto& e : v) out += e.dump();
  }
  return out;
}

Deadline deadline_of(const Command& cmd) {
  if (!cmd.budget_seconds) return {};
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*cmd.budget_seconds));
}

bool uses_proven_order(const Command& cmd) { return cmd.order.value_or("paper") == "paper"; }

std::vector<Simplex> ordered_simplices(const Command& cmd, std::vector<int>* layers = nullptr) {
  if (uses_proven_order(cmd)) {
    require(cmd.k == 2, ErrorKind::parameter, "--order paper needs --k 2; use --order general for k > 2");
    auto steps = shelling_order(cmd.n, cmd.r);
    if (layers)
      for (const auto& s : steps) layers->push_back(s.layer);
    return simplices_of(steps);
  }
  auto g = general_order(cmd.n, cmd.k, cmd.r);
  if (layers) *layers = g.layers;
  return std::move(g.simplices);
}

Json params_of(const Command& cmd) {
  Json p{{"n", cmd.n}, {"k", cmd.k}, {"r", cmd.r}};
  if (cmd.verb == "hstar") p["method"] = cmd.method.value_or("shelling");
  if (cmd.verb == "ehrhart") p["t"] = cmd.t ? Json(*cmd.t) : Json(nullptr);
  if (cmd.verb == "shelling" || cmd.verb == "verify-shelling") p["order"] = cmd.order.value_or("paper");
  return p;
}

struct Payload {
  int exit_code = 0;
  Json data;
  bool cacheable = true;
};

Payload run_verb(const Command& cmd) {
  const int n = cmd.n, k = cmd.k, r = cmd.r;
  if (cmd.verb == "hstar") {
    require_supported(n, k, r);
    require(k == 2, ErrorKind::parameter, "hstar methods need --k 2; use the ehrhart verb for k > 2");
    return {0, to_json(compute_hstar(n, r, parse_hstar_method(cmd.method.value_or("shelling"))))};
  }
  if (cmd.verb == "triangulate") return {0, to_json(enumerate_triangulation(n, k, r))};
  if (cmd.verb == "shelling") {
    if (uses_proven_order(cmd)) {
      require(k == 2, ErrorKind::parameter, "--order paper needs --k 2; use --order general for k > 2");
      return {0, to_json(shelling_order(n, r))};
    }
    std::vector<int> layers;
    const auto simplices = ordered_simplices(cmd, &layers);
    const auto faces = restriction_faces(simplices);
    std::vector<ShellingStep> steps;
    for (std::size_t i = 0; i < simplices.size(); ++i)
      steps.push_back({simplices[i], std::nullopt, layers[i], faces[i], static_cast<int>(faces[i].size())});
    return {0, to_json(steps)};
  }
  if (cmd.verb == "verify-shelling") {
    const auto simplices = ordered_simplices(cmd);
    const auto verdict = verify_shelling(simplices, deadline_of(cmd));
    Json data = to_json(verdict);
    if (!verdict.complete) {
      data["error"] = Json{{"kind", "resource"},
                           {"detail", "time budget exhausted after " + std::to_string(verdict.checked) + " of " +
                                          std::to_string(verdict.count) + " simplices"}};
      return {3, data, false};
    }
    // A failed proven order is an inconsistency; a failed k > 2 order is an answer.
    const bool proven = k == 2;
    if (!verdict.ok && proven)
      data["error"] = Json{{"kind", "internal_inconsistency"}, {"detail", "a k = 2 order failed verification"}};
    return {!verdict.ok && proven ? 1 : 0, data};
  }
  if (cmd.verb == "independence") {
    require(k == 2, ErrorKind::parameter, "inhibition diagrams are defined for --k 2");
    require_supported(n, k, r);
    Json diagrams = Json::array();
    IntPolynomial sum;
    for (const auto& d : inhibition_diagrams(n, r)) {
      diagrams.push_back(to_json(d));
      sum = sum + region_polynomial(d);
    }
    return {0, Json{{"n", n}, {"r", r}, {"diagrams", diagrams}, {"sum", to_json(sum)}}};
  }
  if (cmd.verb == "ehrhart") {
    if (cmd.t) {
      const auto count = count_lattice_points(n, k, r, *cmd.t);
      return {0, Json{{"n", n}, {"k", k}, {"r", r}, {"t", *cmd.t}, {"count", count}}};
    }
    return {0, to_json(ehrhart_hstar(n, k, r))};
  }
  if (cmd.verb == "conjecture") {
    const auto rep = check_general_conjecture(n, k, r, deadline_of(cmd));
    Json data = to_json(rep);
    if (!rep.complete) {
      data["error"] = Json{{"kind", "resource"},
                           {"detail", "time budget exhausted after " + std::to_string(rep.checked) + " of " +
                                          std::to_string(rep.simplices) + " simplices"}};
      return {3, data, false};
    }
    if (!rep.shelling_ok && k == 2) {
      data["error"] = Json{{"kind", "internal_inconsistency"}, {"detail", "the k = 2 order failed verification"}};
      return {1, data};
    }
    return {0, data};
  }
  fail(ErrorKind::parameter, "unknown verb '" + cmd.verb + "'");
}

std::string render_csv(const Command& cmd, const Json& d) {
  std::ostringstream os;
  const std::string& v = cmd.verb;
  if (v == "hstar") {
    os << "n,k,r,method,degree,coeff\n";
    for (std::size_t i = 0; i < d["coeffs"].size(); ++i)
      os << d["n"] << ',' << d["k"] << ',' << d["r"] << ',' << d["method"].get<std::string>() << ',' << i << ','
         << join(Json::array({d["coeffs"][i]})) << '\n';
  } else if (v == "ehrhart" && d.contains("t")) {
    os << "n,k,r,t,count\n" << d["n"] << ',' << d["k"] << ',' << d["r"] << ',' << d["t"] << ',' << d["count"] << '\n';
  } else if (v == "ehrhart") {
    os << "n,k,r,method,degree,coeff\n";
    for (std::size_t i = 0; i < d["hstar"].size(); ++i)
      os << d["n"] << ',' << d["k"] << ',' << d["r"] << ",ehrhart," << i << ',' << join(Json::array({d["hstar"][i]}))
         << '\n';
  } else if (v == "independence") {
    os << "n,r,ell,degree,coeff\n";
    for (const auto& g : d["diagrams"])
      for (std::size_t i = 0; i < g["coeffs"].size(); ++i)
        os << d["n"] << ',' << d["r"] << ',' << g["ell"] << ',' << i << ',' << join(Json::array({g["coeffs"][i]}))
           << '\n';
    for (std::size_t i = 0; i < d["sum"]["coeffs"].size(); ++i)
      os << d["n"] << ',' << d["r"] << ",all," << i << ',' << join(Json::array({d["sum"]["coeffs"][i]})) << '\n';
  } else if (v == "triangulate") {
    os << "index,omega,vertices\n";
    for (std::size_t i = 0; i < d["simplices"].size(); ++i)
      os << i << ',' << join(d["simplices"][i]["omega"]) << ',' << face_string(d["simplices"][i]["vertices"]) << '\n';
  } else if (v == "shelling") {
    os << "index,omega,shelling_number,restriction_face\n";
    for (std::size_t i = 0; i < d.size(); ++i)
      os << i << ',' << join(d[i]["omega"]) << ',' << d[i]["shelling_number"] << ','
         << face_string(d[i]["restriction_face"]) << '\n';
  } else if (v == "verify-shelling") {
    os << "ok,count,checked,violation_index\n"
       << d["ok"] << ',' << d["count"] << ',' << (d.contains("checked") ? d["checked"] : d["count"]) << ','
       << (d.contains("violation") ? d["violation"]["index"].dump() : "") << '\n';
  } else if (v == "conjecture") {
    os << "n,k,r,simplices,shelling_ok,complete,checked,violation_index,tiebreak_fallbacks\n"
       << d["n"] << ',' << d["k"] << ',' << d["r"] << ',' << d["simplices"] << ',' << d["shelling_ok"] << ','
       << d["complete"] << ',' << d["checked"] << ','
       << (d["violation"].is_null() ? "" : d["violation"]["index"].dump()) << ',' << d["tiebreak_fallbacks"] << '\n';
  }
  return os.str();
}

Outcome finish(const Command& cmd, Outcome o) {
  const bool is_error = o.payload.is_object() && o.payload.size() == 1 && o.payload.contains("error");
  o.body = cmd.format == "csv" && !is_error ? (cmd.verb == "report" ? o.body : render_csv(cmd, o.payload))
                                            : o.payload.dump() + "\n";
  return o;
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v{"hstar",        "triangulate", "shelling",   "verify-shelling",
                                          "independence", "ehrhart",     "conjecture", "report"};
  return v;
}

void validate(const Command& cmd) {
  const auto& vs = verbs();
  require(std::find(vs.begin(), vs.end(), cmd.verb) != vs.end(), ErrorKind::parameter,
          "unknown verb '" + cmd.verb + "'");
  require(cmd.format == "json" || cmd.format == "csv", ErrorKind::parameter, "--format must be json or csv");
  require(!cmd.method || cmd.verb == "hstar", ErrorKind::parameter, "--method applies to the hstar verb only");
  require(!cmd.t || cmd.verb == "ehrhart", ErrorKind::parameter, "--t applies to the ehrhart verb only");
  require(!cmd.order || cmd.verb == "shelling" || cmd.verb == "verify-shelling", ErrorKind::parameter,
          "--order applies to shelling and verify-shelling only");
  if (cmd.order)
    require(*cmd.order == "paper" || *cmd.order == "general", ErrorKind::parameter, "--order must be paper or general");
  if (cmd.method) parse_hstar_method(*cmd.method);
  if (cmd.t) require(*cmd.t >= 0, ErrorKind::parameter, "--t must be nonnegative");
  if (cmd.budget_seconds)
    require(*cmd.budget_seconds > 0, ErrorKind::parameter, "--budget-seconds must be positive");
  if (cmd.verb == "report") {
    require(cmd.n >= 0 && cmd.n <= kReportMaxN, ErrorKind::parameter,
            "report takes --n in [0, " + std::to_string(kReportMaxN) + "]");
    return;
  }
  require(cmd.n >= 2 && cmd.n <= kMaxN, ErrorKind::parameter, "--n must lie in [2, " + std::to_string(kMaxN) + "]");
  require(cmd.k >= 1 && cmd.k < cmd.n, ErrorKind::parameter, "--k must satisfy 0 < k < n");
  require(cmd.r >= 1 && cmd.r <= cmd.n / cmd.k, ErrorKind::parameter,
          "--r must satisfy 1 <= r <= floor(n/k) = " + std::to_string(cmd.n / cmd.k));
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::resource:
      return 3;
    case ErrorKind::internal_inconsistency:
    case ErrorKind::structural:
      return 1;
    default:
      return 2;
  }
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::string ResultCache::hash(const Json& key) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : key.dump()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<Json> ResultCache::get(const Json& key) const {
  std::ifstream in(dir_ / (hash(key) + ".json"));
  if (!in) return std::nullopt;
  const auto entry = Json::parse(in, nullptr, false);
  if (entry.is_discarded() || !entry.is_object() || !entry.contains("key") || entry["key"] != key) return std::nullopt;
  return entry["value"];
}

void ResultCache::put(const Json& key, const Json& value) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto target = dir_ / (hash(key) + ".json");
  const auto tmp = dir_ / (hash(key) + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp);
    if (!out) return;  // an unwritable cache only costs recomputation
    out << Json{{"key", key}, {"value", value}}.dump();
    if (!out) return;
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

Json cache_key(const std::string& verb, const Json& params) {
  return Json{{"verb", verb}, {"params", params}, {"version", kToolkitVersion}};
}

Outcome execute(const Command& cmd, const ResultCache* cache) {
  const auto start = Clock::now();
  Outcome o;
  o.meta = Json{{"verb", cmd.verb}};
  try {
    validate(cmd);
    if (cmd.verb == "report") {
      const auto rep = run_report(cmd.n, cache, deadline_of(cmd));
      o.payload = to_json(rep);
      o.meta["criteria"] = report_meta(rep)["criteria"];
      o.exit_code = !rep.complete ? 3 : rep.ok() ? 0 : 1;
      if (cmd.format == "csv") o.body = report_csv(rep);
    } else {
      const Json key = cache_key(cmd.verb, params_of(cmd));
      std::optional<Json> hit = cache ? cache->get(key) : std::nullopt;
      o.meta["cache"] = cache ? (hit ? "hit" : "miss") : "off";
      if (hit) {
        o.payload = std::move(*hit);
      } else {
        auto p = run_verb(cmd);
        o.exit_code = p.exit_code;
        o.payload = std::move(p.data);
        if (cache && p.cacheable && p.exit_code == 0) cache->put(key, o.payload);
      }
    }
  } catch (const Error& e) {
    o.exit_code = exit_code(e.kind());
    o.payload = error_json(e);
  }
  o.meta["seconds"] = seconds_since(start);
  o.meta["exit_code"] = o.exit_code;
  return finish(cmd, std::move(o));
}

int run(int argc, char** argv) {
  CLI::App app{"Exact computations on r-stable hypersimplices: triangulations, shellings, h*-polynomials."};
  Command cmd;
  std::string method, order;
  int t = 0;
  double budget = 0;
  app.add_option("verb", cmd.verb, "hstar | triangulate | shelling | verify-shelling | independence | ehrhart | "
                                   "conjecture | report")
      ->required();
  app.add_option("--n", cmd.n, "number of coordinates (report: largest n to check)")->required();
  app.add_option("--k", cmd.k, "number of ones in each vertex")->capture_default_str();
  app.add_option("--r", cmd.r, "stability parameter")->capture_default_str();
  auto* method_opt = app.add_option("--method", method, "hstar route: shelling, katzman, lucas_case, even_gorenstein, "
                                                        "independence_formula, stab2_closed, stab3_closed");
  auto* t_opt = app.add_option("--t", t, "dilation factor; ehrhart then counts lattice points of one dilate");
  auto* order_opt = app.add_option("--order", order, "paper | general");
  app.add_option("--format", cmd.format, "json | csv")->capture_default_str();
  app.add_option("--out", cmd.out, "write the result to this file instead of stdout");
  app.add_option("--cache-dir", cmd.cache_dir, "result cache directory")->envname("HYPERSIMPLEX_CACHE");
  auto* budget_opt = app.add_option("--budget-seconds", budget, "time budget for verification sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_json(Error(ErrorKind::parameter, e.what())).dump() << "\n";
    return 2;
  }
  if (*method_opt) cmd.method = method;
  if (*t_opt) cmd.t = t;
  if (*order_opt) cmd.order = order;
  if (*budget_opt) cmd.budget_seconds = budget;

  std::optional<ResultCache> cache;
  if (!cmd.cache_dir.empty()) cache.emplace(cmd.cache_dir);
  const auto o = execute(cmd, cache ? &*cache : nullptr);

  if (cmd.out.empty()) {
    std::cout << o.body;
  } else {
    std::ofstream out(cmd.out);
    out << o.body;
    if (!out) {
      std::cout << error_json(Error(ErrorKind::parameter, "cannot write " + cmd.out)).dump() << "\n";
      return 2;
    }
  }
  std::cerr << Json{{"meta", o.meta}}.dump() << "\n";
  return o.exit_code;
}

}  // namespace hypersimplex::cli
