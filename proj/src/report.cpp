#include <algorithm>
#include <functional>
#include <sstream>

#include "hypersimplex/cli.hpp"
#include "hypersimplex/ehrhart.hpp"
#include "hypersimplex/general_order.hpp"
#include "hypersimplex/hstar.hpp"
#include "hypersimplex/shelling.hpp"
#include "hypersimplex/triangulation.hpp"

namespace hypersimplex::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  Deadline deadline;
  bool expired() const { return deadline && Clock::now() >= *deadline; }
};

// Signals that the deadline cut a criterion short.
struct OutOfTime {};

class Runner {
 public:
  Runner(int max_n, const ResultCache* cache, Deadline deadline) : max_n_(max_n), cache_(cache), budget_{deadline} {}

  IntPolynomial hstar(int n, int r, HStarMethod m) {
    const Json key = cache_key("hstar", Json{{"n", n}, {"k", 2}, {"r", r}, {"method", std::string(to_string(m))}});
    if (cache_)
      if (auto hit = cache_->get(key)) return polynomial_from_json(*hit);
    const auto res = compute_hstar(n, r, m);
    if (cache_) cache_->put(key, to_json(res));
    return res.poly;
  }

  IntPolynomial oracle(int n, int k, int r) {
    const Json key = cache_key("ehrhart", Json{{"n", n}, {"k", k}, {"r", r}, {"t", nullptr}});
    Json data;
    if (auto hit = cache_ ? cache_->get(key) : std::nullopt) {
      data = std::move(*hit);
    } else {
      data = to_json(ehrhart_hstar(n, k, r));
      if (cache_) cache_->put(key, data);
    }
    return polynomial_from_json(Json{{"coeffs", data["hstar"]}});
  }

  void check_time() const {
    if (budget_.expired()) throw OutOfTime{};
  }

  int max_n() const { return max_n_; }
  Deadline deadline() const { return budget_.deadline; }

 private:
  int max_n_;
  const ResultCache* cache_;
  Budget budget_;
};

// Collects instance verdicts for one criterion.
struct Tally {
  int instances = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    ++instances;
    if (!ok) failures.push_back(what);
  }
};

std::string label(int n, int k, int r) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(r) + ")";
}

std::vector<int> full_dimensional_rs(int n, int k) {
  std::vector<int> out;
  if (k >= n) return out;
  for (int r = 1; r <= n / k; ++r)
    if (is_full_dimensional(n, k, r)) out.push_back(r);
  return out;
}

BigInt choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt c = 1;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

void table_values(Runner& run, Tally& t) {
  struct Row {
    int n, r;
    std::vector<int> coeffs;
  };
  const std::vector<Row> rows{{7, 1, {1, 14, 35, 7}},       {9, 2, {1, 18, 81, 84, 9}},
                              {9, 3, {1, 9, 27, 30, 9}},      {11, 3, {1, 22, 143, 297, 165, 11}},
                              {6, 2, {1, 3, 3, 1}},           {7, 2, {1, 7, 14, 7}},
                              {8, 2, {1, 12, 38, 28, 1}}};
  for (const auto& row : rows) {
    if (row.n > run.max_n()) continue;
    std::vector<BigInt> c(row.coeffs.begin(), row.coeffs.end());
    const auto h = run.hstar(row.n, row.r, HStarMethod::shelling);
    t.check(h == IntPolynomial(c), label(row.n, 2, row.r) + " gave " + h.to_string());
  }
}

void katzman_values(Runner& run, Tally& t) {
  for (int n = 5; n <= std::min(12, run.max_n()); ++n) {
    std::vector<BigInt> c;
    for (int i = 0; 2 * i <= n; ++i) c.push_back(choose(n, 2 * i));
    c[1] -= n;
    const auto h = run.hstar(n, 1, HStarMethod::shelling);
    t.check(h == IntPolynomial(c) && h == run.hstar(n, 1, HStarMethod::katzman), label(n, 2, 1));
  }
}

void lucas_case(Runner& run, Tally& t) {
  for (int n = 5; n <= std::min(13, run.max_n()); n += 2) {
    const int r = n / 2 - 1;
    const auto h = run.hstar(n, r, HStarMethod::shelling);
    t.check(h == lucas_poly(n) && h == independence_poly(cycle_graph(n)) &&
                h == run.hstar(n, r, HStarMethod::independence_formula),
            label(n, 2, r));
  }
}

void even_gorenstein(Runner& run, Tally& t) {
  for (int n = 4; n <= std::min(12, run.max_n()); n += 2) {
    const int r = n / 2 - 1;
    t.check(run.hstar(n, r, HStarMethod::shelling) == one_plus_x_pow(r + 1), label(n, 2, r));
  }
}

void oracle_agreement(Runner& run, Tally& t) {
  for (int n = 2; n <= std::min(9, run.max_n()); ++n)
    for (int r : full_dimensional_rs(n, 2)) {
      run.check_time();
      const auto h = run.hstar(n, r, HStarMethod::shelling);
      const auto e = run.oracle(n, 2, r);
      t.check(h == e, label(n, 2, r) + " oracle " + e.to_string() + " vs shelling " + h.to_string());
    }
}

std::vector<std::uint64_t> face_key(const std::vector<CharVec>& face) {
  std::vector<std::uint64_t> out;
  for (const auto& v : face) out.push_back(v.bits());
  std::sort(out.begin(), out.end());
  return out;
}

void shelling_validity(Runner& run, Tally& t) {
  for (int n = 2; n <= std::min(11, run.max_n()); ++n)
    for (int r : full_dimensional_rs(n, 2)) {
      const auto steps = shelling_order(n, r);
      const auto verdict = verify_shelling(simplices_of(steps), run.deadline());
      if (!verdict.complete) throw OutOfTime{};
      bool faces_match = verdict.restriction_faces.size() == steps.size();
      for (std::size_t i = 0; faces_match && i < steps.size(); ++i)
        faces_match = face_key(verdict.restriction_faces[i]) == face_key(steps[i].restriction_face);
      t.check(verdict.ok && faces_match, label(n, 2, r) + (verdict.ok ? " restriction faces differ" : " not a shelling"));
    }
}

void degree_and_leading(Runner& run, Tally& t) {
  for (int n = 4; n <= std::min(13, run.max_n()); ++n)
    for (int r : full_dimensional_rs(n, 2)) {
      if (r >= n / 2) continue;
      const auto h = run.hstar(n, r, HStarMethod::shelling);
      t.check(h.degree() == n / 2 && h[h.degree()] == (n % 2 ? n : 1), label(n, 2, r) + " gave " + h.to_string());
    }
}

void interior_identity(Runner& run, Tally& t) {
  for (int n = 5; n <= std::min(13, run.max_n()); n += 2) {
    const auto lhs = dangelo_p(n / 2).at_y_equals_x();
    const auto rhs = hstar_interior(n, n / 2 - 1) + IntPolynomial::monomial(1, n);
    t.check(lhs == rhs, "n=" + std::to_string(n));
  }
}

void unimodality(Runner& run, Tally& t) {
  std::set<std::pair<int, int>> proven;
  for (int n = 4; n <= std::min(13, run.max_n()); ++n) {
    const int r = n / 2 - 1;
    if (r >= 1) proven.insert({n, r});
    if (n % 2 && n >= 5) proven.insert({n, 2});
  }
  for (auto [n, r] : proven) t.check(is_unimodal(run.hstar(n, r, HStarMethod::shelling)), label(n, 2, r));
  int scanned = 0, violations = 0;
  for (int n = 2; n <= std::min(13, run.max_n()); ++n)
    for (int r : full_dimensional_rs(n, 2)) {
      if (proven.contains({n, r})) continue;
      ++scanned;
      if (!is_unimodal(run.hstar(n, r, HStarMethod::shelling))) {
        ++violations;
        t.notes.push_back("not unimodal: " + label(n, 2, r));
      }
    }
  t.notes.insert(t.notes.begin(), "scan of " + std::to_string(scanned) + " further instances found " +
                                      std::to_string(violations) + " unimodality violations");
}

void stab3_discrepancy(Runner& run, Tally& t, std::vector<Discrepancy>& found) {
  bool flagged_nine = false;
  for (int n = 7; n <= std::min(13, run.max_n()); n += 2) {
    const auto closed = run.hstar(n, 3, HStarMethod::stab3_closed);
    const auto ref = run.hstar(n, 3, HStarMethod::shelling);
    for (int i = 0; i <= std::max(closed.degree(), ref.degree()); ++i)
      if (closed[i] != ref[i]) {
        found.push_back({"stab3_closed", n, 3, i, closed[i], ref[i]});
        if (n == 9) flagged_nine = true;
      }
  }
  if (run.max_n() >= 9) t.check(flagged_nine, "no discrepancy flagged for n=9");
}

void conjecture_harness(Runner& run, Tally& t) {
  for (int n = 2; n <= std::min(9, run.max_n()); ++n)
    for (int r : full_dimensional_rs(n, 2)) {
      const auto rep = check_general_conjecture(n, 2, r, run.deadline());
      if (!rep.complete) throw OutOfTime{};
      t.check(rep.shelling_ok, label(n, 2, r) + " not a shelling");
    }
  for (int n = 7; n <= std::min(9, run.max_n()); ++n) {
    const auto rep = check_general_conjecture(n, 3, 2, run.deadline());
    if (!rep.complete) throw OutOfTime{};
    t.check(true, label(n, 3, 2));
    t.notes.push_back(label(n, 3, 2) + ": " +
                      (rep.shelling_ok ? std::string("shelling")
                                       : "violation at index " + std::to_string(rep.violation->index)));
  }
}

std::string join_lines(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
  return out;
}

}  // namespace

bool Report::ok() const {
  return complete && std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.pass; });
}

Report run_report(int max_n, const ResultCache* cache, Deadline deadline, const std::set<int>& only) {
  require(max_n >= 0 && max_n <= kReportMaxN, ErrorKind::parameter,
          "report max_n must lie in [0, " + std::to_string(kReportMaxN) + "]");
  Runner run(max_n, cache, deadline);
  Report rep;
  rep.max_n = max_n;

  using Check = std::function<void(Tally&)>;
  const std::vector<std::pair<std::string, Check>> criteria{
      {"h* table values", [&](Tally& t) { table_values(run, t); }},
      {"r = 1 binomial values", [&](Tally& t) { katzman_values(run, t); }},
      {"odd Lucas case", [&](Tally& t) { lucas_case(run, t); }},
      {"even Gorenstein case", [&](Tally& t) { even_gorenstein(run, t); }},
      {"lattice-point oracle agrees with the shelling", [&](Tally& t) { oracle_agreement(run, t); }},
      {"shelling validity and restriction faces", [&](Tally& t) { shelling_validity(run, t); }},
      {"degree and leading coefficient", [&](Tally& t) { degree_and_leading(run, t); }},
      {"interior h* identity", [&](Tally& t) { interior_identity(run, t); }},
      {"unimodality", [&](Tally& t) { unimodality(run, t); }},
      {"stab3 closed-form discrepancy flagged", [&](Tally& t) { stab3_discrepancy(run, t, rep.discrepancies); }},
      {"general order harness", [&](Tally& t) { conjecture_harness(run, t); }},
  };

  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.contains(id)) continue;
    CriterionResult c;
    c.id = id;
    c.name = criteria[i].first;
    const auto start = Clock::now();
    Tally t;
    try {
      if (!rep.complete) throw OutOfTime{};
      criteria[i].second(t);
    } catch (const OutOfTime&) {
      rep.complete = false;
      t.failures.push_back("time budget exhausted");
    } catch (const Error& e) {
      t.failures.push_back(std::string(to_string(e.kind())) + ": " + e.what());
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    c.instances = t.instances;
    c.pass = t.failures.empty();
    c.detail = c.pass ? join_lines(t.notes) : "failed: " + join_lines(t.failures);
    if (c.pass && t.instances == 0)
      rep.warnings.push_back("criterion " + std::to_string(id) + " has no instances with n <= " +
                             std::to_string(max_n));
    rep.criteria.push_back(std::move(c));
  }
  return rep;
}

Json to_json(const Report& report) {
  Json criteria = Json::array();
  for (const auto& c : report.criteria)
    criteria.push_back(Json{{"id", c.id},
                            {"name", c.name},
                            {"status", c.pass ? "PASS" : "FAIL"},
                            {"instances", c.instances},
                            {"detail", c.detail}});
  Json discrepancies = Json::array();
  for (const auto& d : report.discrepancies)
    discrepancies.push_back(Json{{"method", d.method},
                                 {"n", d.n},
                                 {"r", d.r},
                                 {"degree", d.degree},
                                 {"closed_form", big_to_json(d.closed_form)},
                                 {"reference", big_to_json(d.reference)}});
  Json out{{"max_n", report.max_n}, {"ok", report.ok()}, {"complete", report.complete}};
  out["criteria"] = criteria;
  out["discrepancies"] = discrepancies;
  out["warnings"] = report.warnings;
  if (!report.complete) {
    out["error"] = Json{{"kind", "resource"}, {"detail", "time budget exhausted before every criterion ran"}};
  } else if (!report.ok()) {
    std::string failed;
    for (const auto& c : report.criteria)
      if (!c.pass) failed += (failed.empty() ? "" : ", ") + std::to_string(c.id) + " (" + c.name + ")";
    out["error"] = Json{{"kind", "internal_inconsistency"}, {"detail", "failed criteria: " + failed}};
  }
  return out;
}

Json report_meta(const Report& report) {
  Json criteria = Json::array();
  for (const auto& c : report.criteria) criteria.push_back(Json{{"id", c.id}, {"seconds", c.seconds}});
  return Json{{"criteria", criteria}};
}

std::string report_csv(const Report& report) {
  std::ostringstream os;
  os << "criterion,name,status,instances,detail\n";
  for (const auto& c : report.criteria)
    os << c.id << ',' << csv_field(c.name) << ',' << (c.pass ? "PASS" : "FAIL") << ',' << c.instances << ','
       << csv_field(c.detail) << '\n';
  return os.str();
}

}  // namespace hypersimplex::cli
