#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "jobspec.hpp"

using namespace cli;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string job = "-";
  std::uint32_t radius = 0;
  std::size_t vertex_cap = 0;
  std::size_t brute_limit = 12;
  std::string format = "json";
  std::string output;
};

struct Report {
  json doc;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  int exit = kExitOk;
};

template <class T, void (*Destroy)(T*)>
struct Owned {
  T* ptr = nullptr;
  Owned() = default;
  Owned(const Owned&) = delete;
  Owned& operator=(const Owned&) = delete;
  ~Owned() { Destroy(ptr); }
  T** out() { return &ptr; }
  T* get() const { return ptr; }
};

using Ball = Owned<cyclo_ball, cyclo_ball_destroy>;
using Bounds = Owned<cyclo_bounds, cyclo_bounds_destroy>;
using Balanced = Owned<cyclo_balanced, cyclo_balanced_destroy>;
using Prediction = Owned<cyclo_prediction, cyclo_prediction_destroy>;
using Checks = Owned<cyclo_checks, cyclo_checks_destroy>;
using Schreier = Owned<cyclo_schreier, cyclo_schreier_destroy>;

// Exact decimal with six fractional digits, rounded half away from zero.
std::string decimal(cyclo_rational r) {
  const bool negative = r.num < 0;
  const __int128 num = negative ? -static_cast<__int128>(r.num) : r.num;
  const __int128 scaled = num * 1'000'000;
  __int128 q = scaled / r.den;
  if ((scaled % r.den) * 2 >= r.den) ++q;
  const auto whole = static_cast<std::int64_t>(q / 1'000'000);
  const auto frac = static_cast<std::int64_t>(q % 1'000'000);
  std::string f = std::to_string(frac);
  f.insert(0, 6 - f.size(), '0');
  return std::string(negative && q != 0 ? "-" : "") + std::to_string(whole) + "." + f;
}

std::string plain(cyclo_rational r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

json rat(cyclo_rational r) {
  return json{{"num", r.num}, {"den", r.den}, {"decimal", decimal(r)}};
}

cyclo_rational reduce(std::int64_t num, std::int64_t den) {
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

int compare(cyclo_rational a, cyclo_rational b) {
  const __int128 l = static_cast<__int128>(a.num) * b.den;
  const __int128 r = static_cast<__int128>(b.num) * a.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

double as_double(cyclo_rational r) { return static_cast<double>(r.num) / static_cast<double>(r.den); }

json counts_json(const cyclo_counts& c) {
  return json{{"beta0", c.beta0}, {"beta1", c.beta1}, {"alpha", c.alpha},
              {"beta2", c.beta2}, {"e_out", c.e_out}, {"boundary", c.boundary_size}};
}

std::string describe(const cyclo_group* g) {
  const char* text = nullptr;
  check(cyclo_group_describe(g, &text), "describe");
  return text;
}

json header(const char* command, const Job& job) {
  json symbols = json::array();
  for (std::size_t j = 0; j < cyclo_marked_rank(job.marked.get()); ++j)
    symbols.push_back(cyclo_marked_symbol(job.marked.get(), j));
  return json{{"command", command},
              {"group", describe(job.group.get())},
              {"marking", symbols},
              {"default_marking", cyclo_marked_is_default(job.marked.get()) != 0}};
}

json bound_row_json(const cyclo_bound_row& r) {
  return json{{"radius", r.radius},
              {"ball_size", r.ball_size},
              {"xi", rat(r.xi)},
              {"xi_hat_lower", rat(r.xi_hat_lower)},
              {"witness_size", r.witness_size},
              {"connected_witness_size", r.connected_witness_size},
              {"iterations", r.iterations},
              {"method", r.method}};
}

std::vector<cyclo_bound_row> compute_bounds(const Job& job, std::uint32_t radius,
                                            const Options& opt) {
  Bounds b;
  check(cyclo_bounds_compute(job.marked.get(), radius, opt.vertex_cap, b.out()), "estimate");
  std::vector<cyclo_bound_row> rows(cyclo_bounds_count(b.get()));
  for (std::size_t i = 0; i < rows.size(); ++i) check(cyclo_bounds_row(b.get(), i, &rows[i]), "estimate");
  // Method names are static strings, so the rows outlive the handle.
  return rows;
}

// ---- ball ----

Report cmd_ball(const Job& job, const Options& opt) {
  const std::uint32_t radius = opt.radius ? opt.radius : 3;
  Ball ball;
  check(cyclo_ball_build(job.marked.get(), radius, opt.vertex_cap, ball.out()), "ball");
  Report rep;
  rep.doc = header("ball", job);
  rep.doc["radius"] = radius;
  rep.csv_header = {"radius", "sphere", "beta0", "beta1", "alpha", "beta2", "e_out", "boundary", "thickness", "xi"};
  json rows = json::array();
  json spheres = json::array();
  for (std::uint32_t i = 0; i <= radius; ++i) {
    cyclo_counts c;
    std::uint64_t sphere = 0;
    std::uint32_t t = 0;
    int infinite = 0;
    check(cyclo_ball_counts(ball.get(), i, &c), "ball");
    check(cyclo_ball_sphere_size(ball.get(), i, &sphere), "ball");
    check(cyclo_ball_thickness(ball.get(), i, &t, &infinite), "ball");
    const auto xi = reduce(static_cast<std::int64_t>(c.beta2), static_cast<std::int64_t>(c.beta0));
    spheres.push_back(sphere);
    json row{{"radius", i}, {"sphere", sphere}};
    row["vertices"] = c.beta0;
    row["edges"] = c.beta1;
    row["counts"] = counts_json(c);
    row["thickness"] = infinite ? json(nullptr) : json(t);
    row["xi"] = rat(xi);
    rows.push_back(row);
    rep.csv_rows.push_back({std::to_string(i), std::to_string(sphere), std::to_string(c.beta0),
                            std::to_string(c.beta1), std::to_string(c.alpha),
                            std::to_string(c.beta2), std::to_string(c.e_out),
                            std::to_string(c.boundary_size),
                            infinite ? "inf" : std::to_string(t), plain(xi)});
  }
  json girths = json::array();
  for (std::size_t j = 0; j < cyclo_marked_rank(job.marked.get()); ++j) {
    std::uint32_t g = 0;
    int found = 0;
    check(cyclo_girth(job.marked.get(), j, radius, &g, &found), "girth");
    girths.push_back(json{{"symbol", cyclo_marked_symbol(job.marked.get(), j)},
                          {"girth", found ? json(g) : json(nullptr)}});
  }
  rep.doc["sphere_sizes"] = spheres;
  rep.doc["rows"] = rows;
  rep.doc["girth_horizon"] = radius;
  rep.doc["girths"] = girths;
  return rep;
}

// ---- estimate ----

Report cmd_estimate(const Job& job, const Options& opt) {
  const std::uint32_t radius = opt.radius ? opt.radius : 6;
  const auto rows = compute_bounds(job, radius, opt);
  Ball ball;
  check(cyclo_ball_build(job.marked.get(), radius, opt.vertex_cap, ball.out()), "estimate");
  Report rep;
  rep.doc = header("estimate", job);
  rep.doc["radius"] = radius;
  rep.csv_header = {"radius", "ball_size", "xi", "xi_hat_lower", "decimal", "witness_size",
                    "iterations", "method", "brute_xi"};
  json out = json::array();
  for (const auto& r : rows) {
    json row = bound_row_json(r);
    std::string brute = "";
    if (r.ball_size <= opt.brute_limit) {
      cyclo_rational b;
      check(cyclo_ball_brute_xi(ball.get(), r.radius, opt.brute_limit, &b), "brute force");
      row["brute_xi"] = rat(b);
      row["brute_agrees"] = compare(b, r.xi) == 0;
      brute = plain(b);
      if (compare(b, r.xi) != 0) rep.exit = kExitVerifyFailed;
    }
    out.push_back(row);
    rep.csv_rows.push_back({std::to_string(r.radius), std::to_string(r.ball_size), plain(r.xi),
                            plain(r.xi_hat_lower), decimal(r.xi_hat_lower),
                            std::to_string(r.witness_size), std::to_string(r.iterations),
                            r.method, brute});
  }
  rep.doc["rows"] = out;
  return rep;
}

// ---- balanced ----

struct BalancedData {
  std::vector<cyclo_balanced_row> rows;
  std::vector<cyclo_rational> growth;
  cyclo_rational estimate;
};

BalancedData compute_balanced(const Job& job, std::uint32_t radius, const Options& opt) {
  Balanced b;
  check(cyclo_balanced_compute(job.marked.get(), radius, opt.vertex_cap, b.out()), "balanced");
  BalancedData d;
  d.rows.resize(cyclo_balanced_count(b.get()));
  d.growth.resize(d.rows.size());
  for (std::size_t i = 0; i < d.rows.size(); ++i) {
    check(cyclo_balanced_row_at(b.get(), i, &d.rows[i]), "balanced");
    check(cyclo_balanced_growth(b.get(), i, &d.growth[i]), "balanced");
  }
  check(cyclo_balanced_estimate(b.get(), &d.estimate), "balanced");
  return d;
}

Report cmd_balanced(const Job& job, const Options& opt) {
  const std::uint32_t radius = opt.radius ? opt.radius : 10;
  const auto d = compute_balanced(job, radius, opt);
  Report rep;
  rep.doc = header("balanced", job);
  rep.doc["radius"] = radius;
  rep.csv_header = {"i", "beta0", "beta1", "beta2", "xi_ball", "theta_term", "decimal", "growth"};
  json rows = json::array();
  json growth = json::array();
  for (std::size_t i = 0; i < d.rows.size(); ++i) {
    const auto& r = d.rows[i];
    rows.push_back(json{{"i", r.i},
                        {"counts", counts_json(r.counts)},
                        {"xi_ball", rat(r.xi_ball)},
                        {"theta_term", rat(r.theta_term)}});
    growth.push_back(rat(d.growth[i]));
    rep.csv_rows.push_back({std::to_string(r.i), std::to_string(r.counts.beta0),
                            std::to_string(r.counts.beta1), std::to_string(r.counts.beta2),
                            plain(r.xi_ball), plain(r.theta_term), decimal(r.theta_term),
                            plain(d.growth[i])});
  }
  rep.doc["rows"] = rows;
  rep.doc["estimate"] = rat(d.estimate);
  rep.doc["growth_ratios"] = growth;
  return rep;
}

// ---- predict ----

struct PredictionData {
  bool ok = false;
  cyclo_rational value{0, 1};
  cyclo_rational unnormalized{0, 1};
  std::string rule;
  std::vector<std::string> assumptions;
  std::string reason;
};

PredictionData predict(const Job& job, cyclo_quantity q) {
  Prediction p;
  PredictionData d;
  const auto s = cyclo_predict(job.marked.get(), q, p.out());
  if (s == CYCLO_E_UNSUPPORTED) {
    d.reason = cyclo_last_error();
    return d;
  }
  check(s, "predict");
  d.ok = true;
  check(cyclo_prediction_value(p.get(), &d.value), "predict");
  check(cyclo_prediction_unnormalized(p.get(), &d.unnormalized), "predict");
  d.rule = cyclo_prediction_rule(p.get());
  for (std::size_t i = 0; i < cyclo_prediction_assumption_count(p.get()); ++i)
    d.assumptions.emplace_back(cyclo_prediction_assumption(p.get(), i));
  return d;
}

json prediction_json(const PredictionData& d) {
  if (!d.ok) return json{{"status", "unsupported"}, {"reason", d.reason}};
  return json{{"status", "ok"},
              {"value", rat(d.value)},
              {"unnormalized", rat(d.unnormalized)},
              {"rule", d.rule},
              {"assumptions", d.assumptions}};
}

cyclo_facts facts_of(const Job& job) {
  cyclo_facts f;
  check(cyclo_group_facts(job.group.get(), &f), "facts");
  return f;
}

json facts_json(const cyclo_facts& f) {
  static const char* amen[] = {"yes", "no", "unknown"};
  return json{{"order", f.finite ? json(f.order) : json("infinite")},
              {"amenable", amen[f.amenable]},
              {"free_rank", f.free_rank >= 0 ? json(f.free_rank) : json(nullptr)},
              {"generators", f.generators},
              {"minimal", f.minimal != 0},
              {"xi_maximum_attained", f.xi_maximum_attained != 0}};
}

Report cmd_predict(const Job& job, const Options&) {
  Report rep;
  rep.doc = header("predict", job);
  rep.doc["facts"] = facts_json(facts_of(job));
  const auto xi = predict(job, CYCLO_XI_HAT);
  const auto psi = predict(job, CYCLO_PSI_HAT);
  rep.doc["xi_hat"] = prediction_json(xi);
  rep.doc["psi_hat"] = prediction_json(psi);
  rep.csv_header = {"quantity", "status", "value", "decimal", "unnormalized", "rule"};
  for (auto [name, d] : {std::pair{"xi_hat", &xi}, std::pair{"psi_hat", &psi}}) {
    if (d->ok)
      rep.csv_rows.push_back({name, "ok", plain(d->value), decimal(d->value),
                              plain(d->unnormalized), d->rule});
    else
      rep.csv_rows.push_back({name, "unsupported", "", "", "", ""});
  }
  return rep;
}

// ---- schreier ----

json schreier_json(const Job& job, std::uint32_t radius, bool* passed) {
  if (!job.schreier) throw InputError("/schreier", "the job has no schreier block");
  WordBuffer buf;
  buf.assign(job.schreier->images);
  Schreier s;
  const auto status = cyclo_schreier_verify(job.group.get(), job.schreier->target.get(),
                                            buf.words.data(), buf.words.size(), radius, s.out());
  if (status == CYCLO_E_IMAGES_DO_NOT_GENERATE || status == CYCLO_E_UNKNOWN_SYMBOL ||
      status == CYCLO_E_INVALID_ARGUMENT || status == CYCLO_E_UNSUPPORTED ||
      status == CYCLO_E_BACKEND_MISMATCH)
    throw InputError("/schreier", std::string(cyclo_status_name(status)) + ": " + cyclo_last_error());
  check(status, "schreier");
  cyclo_rational lhs, rhs;
  int equal = 0;
  check(cyclo_schreier_sides(s.get(), &lhs, &rhs, &equal), "schreier");
  json basis = json::array();
  for (std::size_t i = 0; i < cyclo_schreier_basis_size(s.get()); ++i)
    basis.push_back(cyclo_schreier_basis(s.get(), i));
  json transversal = json::array();
  for (std::uint64_t i = 0; i < cyclo_schreier_index(s.get()); ++i)
    transversal.push_back(cyclo_schreier_transversal(s.get(), i));
  json checks = json::array();
  *passed = equal != 0;
  const cyclo_checks* cs = cyclo_schreier_checks(s.get());
  for (std::size_t i = 0; i < cyclo_checks_count(cs); ++i) {
    cyclo_check c;
    check(cyclo_checks_get(cs, i, &c), "schreier");
    checks.push_back(json{{"name", c.name}, {"passed", c.passed != 0}, {"detail", c.detail}});
    *passed = *passed && c.passed;
  }
  json rows = json::array();
  for (std::size_t i = 0; i < cyclo_schreier_kernel_row_count(s.get()); ++i) {
    cyclo_bound_row r;
    check(cyclo_schreier_kernel_row(s.get(), i, &r), "schreier");
    rows.push_back(bound_row_json(r));
  }
  return json{{"target", describe(job.schreier->target.get())},
              {"index", cyclo_schreier_index(s.get())},
              {"basis_size", cyclo_schreier_basis_size(s.get())},
              {"expected_basis_size", cyclo_schreier_expected_basis_size(s.get())},
              {"transversal", transversal},
              {"basis", basis},
              {"kernel_xi_hat", rat(lhs)},
              {"index_times_xi_hat", rat(rhs)},
              {"equal", equal != 0},
              {"checks", checks},
              {"kernel_rows", rows}};
}

Report cmd_schreier(const Job& job, const Options& opt) {
  Report rep;
  rep.doc = header("schreier", job);
  bool passed = false;
  rep.doc["schreier"] = schreier_json(job, opt.radius ? opt.radius : 2, &passed);
  rep.doc["passed"] = passed;
  rep.exit = passed ? kExitOk : kExitVerifyFailed;
  rep.csv_header = {"name", "passed", "detail"};
  for (const auto& c : rep.doc["schreier"]["checks"])
    rep.csv_rows.push_back({c["name"].get<std::string>(), c["passed"].get<bool>() ? "pass" : "fail",
                            c["detail"].get<std::string>()});
  return rep;
}

// ---- verify ----

struct CheckList {
  json items = json::array();
  bool all = true;
  void add(const std::string& name, const std::string& rule, bool passed, const std::string& detail) {
    items.push_back(json{{"name", name}, {"rule", rule}, {"passed", passed}, {"detail", detail}});
    all = all && passed;
  }
  void skip(const std::string& name, const std::string& rule, const std::string& why) {
    items.push_back(json{{"name", name}, {"rule", rule}, {"passed", nullptr}, {"detail", why}});
  }
};

void add_library_checks(CheckList& list, const cyclo_group* g, bool direct) {
  Checks cs;
  const auto s = direct ? cyclo_direct_product_checks(g, cs.out()) : cyclo_free_product_checks(g, cs.out());
  if (s == CYCLO_E_UNSUPPORTED) {
    list.skip(direct ? "direct-product" : "free-product", direct ? "direct-product" : "free-product",
              cyclo_last_error());
    return;
  }
  check(s, "checks");
  for (std::size_t i = 0; i < cyclo_checks_count(cs.get()); ++i) {
    cyclo_check c;
    check(cyclo_checks_get(cs.get(), i, &c), "checks");
    list.add(c.name, direct ? "direct-product" : "free-product", c.passed != 0, c.detail);
  }
}

Report cmd_verify(const Job& job, const Options& opt) {
  const std::uint32_t radius = opt.radius ? opt.radius : 6;
  const VerifyConfig& cfg = job.verify;
  const auto facts = facts_of(job);
  const auto xi = predict(job, CYCLO_XI_HAT);
  const auto rows = compute_bounds(job, radius, opt);
  const auto n = static_cast<std::int64_t>(cyclo_marked_rank(job.marked.get()));
  CheckList list;

  bool monotone = true;
  for (std::size_t i = 1; i < rows.size(); ++i)
    monotone = monotone && compare(rows[i - 1].xi_hat_lower, rows[i].xi_hat_lower) <= 0;
  list.add("lower-bounds-monotone", "lower-bounds", monotone,
           std::to_string(rows.size()) + " rows nondecreasing");

  const auto& last = rows.back();
  if (xi.ok) {
    bool below = true;
    for (const auto& r : rows) below = below && compare(r.xi_hat_lower, xi.value) <= 0;
    list.add("lower-bounds-below-prediction", xi.rule, below,
             "every row <= " + plain(xi.value));
    const bool range = compare(xi.value, {1 - n, 1}) >= 0 && compare(xi.value, {1, 1}) <= 0;
    list.add("prediction-range", xi.rule, range,
             plain(xi.value) + " in [" + std::to_string(1 - n) + ", 1]");
    if (facts.finite && last.ball_size == facts.order)
      list.add("finite-exact", xi.rule, compare(last.xi_hat_lower, xi.value) == 0,
               plain(last.xi_hat_lower) + " == " + plain(xi.value) + " on the whole group");
    if (facts.finite || facts.amenable != CYCLO_AMENABLE_YES) {
      if (radius >= cfg.convergence_radius) {
        const double gap = as_double(xi.value) - as_double(last.xi_hat_lower);
        std::ostringstream detail;
        detail << "gap " << gap << " at radius " << radius << ", tolerance "
               << cfg.convergence_tolerance;
        list.add("convergence", xi.rule, gap <= cfg.convergence_tolerance, detail.str());
      } else {
        list.skip("convergence", xi.rule,
                  "radius below " + std::to_string(cfg.convergence_radius));
      }
    } else {
      list.skip("convergence", xi.rule, "not applied to infinite amenable groups");
    }
  } else {
    list.skip("prediction", "closed-form", xi.reason);
  }

  // Circuit gain: when no finite subgraph attains the supremum, a witness
  // from the largest ball improves strictly on its own value.
  std::uint32_t c = 0;
  int c_found = 0;
  check(cyclo_c_value(job.marked.get(), cfg.girth_horizon, &c, &c_found), "girth");
  if (!facts.xi_maximum_attained && xi.ok && cyclo_marked_is_default(job.marked.get())) {
    if (c_found && c >= 2) {
      cyclo_rational bound;
      check(cyclo_circuit_gain_bound(n, c, last.xi, static_cast<std::int64_t>(last.connected_witness_size),
                                     &bound),
            "circuit gain");
      list.add("circuit-gain", "circuit-gain", compare(xi.value, bound) >= 0,
               plain(xi.value) + " >= " + plain(bound) + " with c = " + std::to_string(c) +
                   ", witness of " + std::to_string(last.connected_witness_size) + " vertices");
    } else {
      list.skip("circuit-gain", "circuit-gain",
                "some generator has no circuit within horizon " + std::to_string(cfg.girth_horizon));
    }
  }

  // Balanced quotient against the shortest relator length.
  std::optional<std::uint32_t> shortest;
  for (std::int64_t j = 0; j < n; ++j) {
    std::uint32_t g = 0;
    int found = 0;
    check(cyclo_girth(job.marked.get(), static_cast<std::size_t>(j), cfg.girth_horizon, &g, &found),
          "girth");
    if (found) shortest = std::min(shortest.value_or(g), g);
  }
  if (n >= 2 && shortest) {
    cyclo_rational bound;
    check(cyclo_girth_theta_bound(n, *shortest, &bound), "girth bound");
    const auto balanced = compute_balanced(job, radius, opt);
    list.add("girth-theta-bound", "girth-theta-bound", compare(balanced.estimate, bound) >= 0,
             plain(balanced.estimate) + " >= " + plain(bound) + " with shortest relator " +
                 std::to_string(*shortest));
  }

  add_library_checks(list, job.group.get(), false);
  add_library_checks(list, job.group.get(), true);

  Report rep;
  rep.doc = header("verify", job);
  rep.doc["radius"] = radius;
  rep.doc["config"] = json{{"convergence_tolerance", cfg.convergence_tolerance},
                           {"convergence_radius", cfg.convergence_radius},
                           {"girth_horizon", cfg.girth_horizon}};
  rep.doc["facts"] = facts_json(facts);
  rep.doc["prediction"] = prediction_json(xi);
  json bounds = json::array();
  for (const auto& r : rows) bounds.push_back(bound_row_json(r));
  rep.doc["rows"] = bounds;

  if (job.schreier) {
    bool passed = false;
    rep.doc["schreier"] = schreier_json(job, 2, &passed);
    list.add("schreier-index-equality", "schreier", passed,
             rep.doc["schreier"]["kernel_xi_hat"]["decimal"].get<std::string>() + " == " +
                 rep.doc["schreier"]["index_times_xi_hat"]["decimal"].get<std::string>());
  }

  rep.doc["checks"] = list.items;
  rep.doc["passed"] = list.all;
  rep.exit = list.all ? kExitOk : kExitVerifyFailed;
  rep.csv_header = {"name", "rule", "status", "detail"};
  for (const auto& item : list.items)
    rep.csv_rows.push_back({item["name"].get<std::string>(), item["rule"].get<std::string>(),
                            item["passed"].is_null() ? "skip" : (item["passed"].get<bool>() ? "pass" : "fail"),
                            item["detail"].get<std::string>()});
  return rep;
}

// ---- output ----

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string render(const Report& rep, const std::string& format) {
  if (format == "json") return rep.doc.dump(2) + "\n";
  std::string out;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
    out += "\n";
  };
  line(rep.csv_header);
  for (const auto& r : rep.csv_rows) line(r);
  return out;
}

json read_job(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("", std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclomatic quotient invariants of Cayley graphs of marked groups"};
  app.require_subcommand(1);
  Options opt;

  using Handler = Report (*)(const Job&, const Options&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h, bool radius) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("job", opt.job, "JobSpec JSON file, or - for standard input")->required();
    if (radius) sub->add_option("--radius,-r", opt.radius, "Ball radius (rmax)");
    sub->add_option("--vertex-cap", opt.vertex_cap, "Largest ball to enumerate");
    sub->add_option("--brute-limit", opt.brute_limit,
                    "Cross-check against exhaustive search up to this many vertices");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output,-o", opt.output, "Write the report here instead of standard output");
    commands.emplace_back(sub, h);
  };
  add("ball", "Counts of concentric balls", cmd_ball, true);
  add("estimate", "Exact lower bounds on the normalized quotient", cmd_estimate, true);
  add("balanced", "Balanced quotient over concentric balls", cmd_balanced, true);
  add("predict", "Closed-form values where they apply", cmd_predict, false);
  add("verify", "Cross-check predictions against computed bounds", cmd_verify, true);
  add("schreier", "Schreier basis of the kernel of a map onto a finite group", cmd_schreier, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  Handler handler = nullptr;
  for (auto& [sub, h] : commands)
    if (sub->parsed()) handler = h;

  try {
    const Job job = parse_job(read_job(opt.job));
    const Report rep = handler(job, opt);
    const std::string text = render(rep, opt.format);
    if (opt.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(opt.output);
      if (!out) throw InputError("", "cannot write " + opt.output);
      out << text;
    }
    return rep.exit;
  } catch (const InputError& e) {
    std::cerr << "error: " << (e.pointer().empty() ? "/" : e.pointer()) << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const LibraryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
