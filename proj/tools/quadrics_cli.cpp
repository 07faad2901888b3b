// Command-line front end: parse forms, run the analyses, emit reports.
//
// Exit codes: 0 ok, 2 usage error, 3 form parse error, 4 bound violation
// (census reproducer emitted).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "quadrics/bounds.hpp"
#include "quadrics/census.hpp"
#include "quadrics/form_parser.hpp"
#include "quadrics/pair.hpp"
#include "quadrics/varieties.hpp"

using namespace quadrics;
using ojson = nlohmann::ordered_json;

namespace {

struct CommonOpts {
  int n = 3;
  int p = 2;
  int m = 1;
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_format = true) {
  cmd->add_option("--n", o.n, "ambient projective dimension")->required();
  cmd->add_option("--p", o.p, "field characteristic (prime)")->required();
  cmd->add_option("--m", o.m, "field extension degree (q = p^m)");
  if (with_format)
    cmd->add_option("--format", o.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", o.out, "write the report to this file instead of stdout");
}

void emit(const CommonOpts& o, const ojson& j, const std::string& text) {
  std::string payload = o.format == "json" ? j.dump(2) + "\n" : text;
  if (o.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(o.out, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file " + o.out);
    f << payload;
  }
}

int field_cap_for(int p, int m) {
  long long q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  if (q > Field::kHardCap) throw std::invalid_argument("q exceeds the hard cap");
  return int(q);
}

Field make_field(const CommonOpts& o) { return Field::make(o.p, o.m, field_cap_for(o.p, o.m)); }

ojson profile_json(const Field& f, const QuadricProfile& prof) {
  ojson j;
  j["rank"] = prof.rank;
  j["vertex_dim"] = prof.vertex_dim;
  j["type"] = type_name(prof.type);
  j["point_count"] = prof.point_count;
  j["base_count"] = prof.base_count;
  ojson basis = ojson::array();
  for (const auto& v : prof.vertex_basis) {
    ojson row = ojson::array();
    for (Fel x : v) row.push_back(f.m() == 1 ? ojson(x) : ojson(f.coeffs(x)));
    basis.push_back(std::move(row));
  }
  j["vertex_basis"] = std::move(basis);
  return j;
}

std::string pair_text(const Field& f, const PairReport& r) {
  std::string s;
  s += "order:             " + std::to_string(r.order) + "\n";
  s += "common_hyperplane: " + (r.common_hyperplane ? r.common_hyperplane->str(f) : "none") + "\n";
  s += "count:             " + std::to_string(r.count) + "\n";
  s += "bound_theorem:     " + std::to_string(r.bound_theorem) + "\n";
  s += "slack:             " + std::to_string(r.slack) + "\n";
  s += "bounds:\n";
  for (const auto& b : r.bounds) {
    char line[160];
    std::snprintf(line, sizeof line, "  %-16s %-10s floor %-8lld %s[%s]\n", b.name.c_str(),
                  b.value.str().c_str(), (long long)b.value.floor(),
                  b.applies ? "applies " : "n/a     ", b.hypothesis.c_str());
    s += line;
  }
  return s;
}

// accepts deg=D / dim=S tokens mixed into a form-string list
AlgebraicSet parse_set(const std::vector<std::string>& texts, int n, const Field& f,
                       std::optional<long long>& d, std::optional<int>& s) {
  AlgebraicSet x;
  for (const auto& t : texts) {
    if (t.rfind("deg=", 0) == 0) {
      d = std::stoll(t.substr(4));
      continue;
    }
    if (t.rfind("dim=", 0) == 0) {
      s = std::stoi(t.substr(4));
      continue;
    }
    x.forms.push_back(parse_form(t, n, f));
  }
  x.declared_deg = d;
  x.declared_dim = s;
  return x;
}

int run(int argc, char** argv) {
  CLI::App app{"exact point counts, classification and sharp intersection bounds for "
               "quadrics over small finite fields"};
  app.require_subcommand(1);

  // count
  CommonOpts count_o;
  std::vector<std::string> count_forms;
  int count_k = 1, count_kmax = 3;
  bool count_estimate = false;
  long long point_cap = PointTable::kDefaultPointCap;
  int field_cap = Field::kHardCap;
  auto* cmd_count = app.add_subcommand("count", "count the points of an algebraic set over F_{q^k}");
  add_common(cmd_count, count_o);
  cmd_count->add_option("--forms", count_forms, "form strings (plus optional deg=/dim= tokens)")
      ->required()
      ->expected(-1);
  cmd_count->add_option("--k", count_k, "count over the extension F_{q^k}");
  cmd_count->add_flag("--estimate", count_estimate, "estimate (dimension, degree) from growth");
  cmd_count->add_option("--kmax", count_kmax, "largest extension degree for --estimate");
  cmd_count->add_option("--point-cap", point_cap, "enumeration cap (points)");
  cmd_count->add_option("--field-cap", field_cap, "extension field cardinality cap");

  // classify
  CommonOpts classify_o;
  std::string classify_q1;
  auto* cmd_classify = app.add_subcommand("classify", "rank, vertex, type and point count of a quadric");
  add_common(cmd_classify, classify_o);
  cmd_classify->add_option("--q1", classify_q1, "the quadratic form")->required();

  // order
  CommonOpts order_o;
  std::string order_q1, order_q2;
  auto* cmd_order = app.add_subcommand("order", "order w(Q1, Q2) of a pair");
  add_common(cmd_order, order_o);
  cmd_order->add_option("--q1", order_q1)->required();
  cmd_order->add_option("--q2", order_q2)->required();

  // pair
  CommonOpts pair_o;
  std::string pair_q1, pair_q2;
  auto* cmd_pair = app.add_subcommand("pair", "full intersection report for a pair of quadrics");
  add_common(cmd_pair, pair_o);
  cmd_pair->add_option("--q1", pair_q1)->required();
  cmd_pair->add_option("--q2", pair_q2)->required();

  // bounds
  CommonOpts bounds_o;
  long long bounds_d = 0;
  int bounds_s = -1, bounds_r = 0;
  auto* cmd_bounds = app.add_subcommand("bounds", "the catalogue of closed-form bounds at (n, q)");
  add_common(cmd_bounds, bounds_o);
  cmd_bounds->add_option("--d", bounds_d, "degree for the set bounds");
  cmd_bounds->add_option("--s", bounds_s, "dimension for the set bounds");
  cmd_bounds->add_option("--r", bounds_r, "rank for the cone-pair bound");

  // census
  CommonOpts census_o;
  CensusConfig ccfg;
  std::string census_q1, census_type, census_mode = "exhaustive";
  int census_rank = 0;
  census_o.format = "text";
  auto* cmd_census = app.add_subcommand(
      "census", "sweep quadric pairs, verify the bound, record extremal witnesses");
  cmd_census->add_option("--n", census_o.n, "ambient projective dimension")->required();
  cmd_census->add_option("--p", census_o.p, "field characteristic (prime)")->required();
  cmd_census->add_option("--m", census_o.m, "field extension degree");
  cmd_census->add_option("--q1", census_q1, "explicit first form (default: all canonical classes)");
  cmd_census->add_option("--rank", census_rank, "restrict Q1 classes to this rank");
  cmd_census->add_option("--type", census_type, "restrict Q1 classes to this type")
      ->check(CLI::IsMember({"hyperbolic", "elliptic", "parabolic"}));
  cmd_census->add_option("--mode", census_mode, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  cmd_census->add_option("--samples", ccfg.sample_count, "samples per class in random mode");
  cmd_census->add_option("--seed", ccfg.seed, "seed for random mode");
  cmd_census->add_option("--chunk", ccfg.chunk_size, "Q2 indices per work chunk");
  cmd_census->add_option("--threads", ccfg.threads, "worker threads");
  cmd_census->add_option("--out", ccfg.out_path, "stream JSONL records (and checkpoint) here");
  cmd_census->add_flag("--resume", ccfg.resume, "resume a checkpointed run");
  cmd_census->add_option("--max-chunks", ccfg.max_chunks_this_run,
                         "stop after this many chunks (resumable)");
  cmd_census->add_option("--work-cap", ccfg.work_cap, "cap on #Q2 x pi_n evaluations");
  cmd_census->add_option("--format", census_o.format, "summary format: json, text or csv")
      ->check(CLI::IsMember({"json", "text", "csv"}));

  // conjecture
  CommonOpts conj_o;
  int conj_r = 0;
  std::uint64_t conj_samples = 0, conj_seed = 0;
  std::vector<std::string> conj_forms;
  long long conj_d = 0;
  int conj_s = -1, conj_kmax = 3;
  auto* cmd_conj = app.add_subcommand(
      "conjecture", "probe the conjectured bounds: --r for the cone-pair bound, --forms for "
                    "the point-count bound on an algebraic set");
  add_common(cmd_conj, conj_o);
  cmd_conj->add_option("--r", conj_r, "rank of the degenerate quadric (>= 4)");
  cmd_conj->add_option("--samples", conj_samples, "random samples (0 = exhaustive)");
  cmd_conj->add_option("--seed", conj_seed, "seed for sampling");
  cmd_conj->add_option("--forms", conj_forms, "algebraic set (plus optional deg=/dim= tokens)")
      ->expected(-1);
  cmd_conj->add_option("--d", conj_d, "declared degree of the set");
  cmd_conj->add_option("--s", conj_s, "declared dimension of the set");
  cmd_conj->add_option("--kmax", conj_kmax, "extension reach when estimating (d, s)");

  // extremal
  CommonOpts ext_o;
  std::string ext_name;
  auto* cmd_ext = app.add_subcommand("extremal", "named pairs attaining the catalogued bounds");
  add_common(cmd_ext, ext_o);
  cmd_ext->add_option("--name", ext_name, "fixture name (omit to list)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cmd_count->parsed()) {
    Field f = make_field(count_o);
    std::optional<long long> d;
    std::optional<int> s;
    auto x = parse_set(count_forms, count_o.n, f, d, s);
    long long c = count_points(x, count_k, point_cap, field_cap);
    ojson j;
    j["n"] = count_o.n;
    j["q"] = f.q();
    j["k"] = count_k;
    j["count"] = c;
    std::string text = "count over F_" + std::to_string(f.q()) +
                       (count_k > 1 ? "^" + std::to_string(count_k) : "") + ": " +
                       std::to_string(c) + "\n";
    if (count_estimate) {
      auto est = estimate_dim_degree(x, count_kmax, point_cap, field_cap);
      j["estimate"] = estimate_json(est);
      text += "counts k=1.." + std::to_string(count_kmax) + ":";
      for (long long v : est.counts) text += " " + std::to_string(v);
      text += "\n";
      if (est.s_est)
        text += "estimated dimension " + std::to_string(*est.s_est) + ", degree " +
                std::to_string(*est.d_est) + "\n";
      else
        text += "estimates unavailable (empty set)\n";
    }
    emit(count_o, j, text);
    return 0;
  }

  if (cmd_classify->parsed()) {
    Field f = make_field(classify_o);
    auto q1 = parse_quadratic(classify_q1, classify_o.n, f);
    auto prof = classify(q1);
    ojson j = profile_json(f, prof);
    j["form"] = print_quadratic(q1);
    std::string text = "rank " + std::to_string(prof.rank) + ", type " + type_name(prof.type) +
                       ", vertex dimension " + std::to_string(prof.vertex_dim) + ", " +
                       std::to_string(prof.point_count) + " points (base " +
                       std::to_string(prof.base_count) + ")\n";
    emit(classify_o, j, text);
    return 0;
  }

  if (cmd_order->parsed()) {
    Field f = make_field(order_o);
    auto f1 = parse_quadratic(order_q1, order_o.n, f);
    auto f2 = parse_quadratic(order_q2, order_o.n, f);
    int w = order(f1, f2);
    ojson j;
    j["order"] = w;
    emit(order_o, j, "order: " + std::to_string(w) + "\n");
    return 0;
  }

  if (cmd_pair->parsed()) {
    Field f = make_field(pair_o);
    auto f1 = parse_quadratic(pair_q1, pair_o.n, f);
    auto f2 = parse_quadratic(pair_q2, pair_o.n, f);
    PointTable table(f, pair_o.n);
    auto r = pair_report(f1, f2, table);
    emit(pair_o, pair_report_json(f, r), pair_text(f, r));
    return 0;
  }

  if (cmd_bounds->parsed()) {
    Field f = make_field(bounds_o);
    auto t = bounds::make_bounds_table(
        bounds_o.n, f.q(), bounds_d > 0 ? std::optional<bounds::Int>(bounds_d) : std::nullopt,
        bounds_s >= 0 ? std::optional<int>(bounds_s) : std::nullopt,
        bounds_r > 0 ? std::optional<int>(bounds_r) : std::nullopt);
    ojson j;
    j["n"] = t.n;
    j["q"] = (long long)t.q;
    if (t.d) j["d"] = (long long)*t.d;
    if (t.s) j["s"] = *t.s;
    if (t.r) j["r"] = *t.r;
    ojson entries = ojson::array();
    std::string text;
    for (const auto& e : t.entries) {
      ojson ej;
      ej["name"] = e.name;
      ej["value"] = e.value.is_integer() ? ojson((long long)e.value.floor()) : ojson(e.value.str());
      ej["floor"] = (long long)e.value.floor();
      ej["hypothesis"] = e.hypothesis;
      entries.push_back(std::move(ej));
      char line[192];
      std::snprintf(line, sizeof line, "%-16s %-12s floor %-10lld %s\n", e.name.c_str(),
                    e.value.str().c_str(), (long long)e.value.floor(), e.hypothesis.c_str());
      text += line;
    }
    j["entries"] = std::move(entries);
    emit(bounds_o, j, text);
    return 0;
  }

  if (cmd_census->parsed()) {
    ccfg.n = census_o.n;
    ccfg.p = census_o.p;
    ccfg.m = census_o.m;
    ccfg.mode = census_mode == "random" ? CensusMode::Random : CensusMode::Exhaustive;
    if (census_rank > 0) ccfg.rank_filter = census_rank;
    if (!census_type.empty()) ccfg.type_filter = *type_from_name(census_type);
    if (!census_q1.empty()) {
      Field f = Field::make(ccfg.p, ccfg.m, field_cap_for(ccfg.p, ccfg.m));
      auto q1 = parse_quadratic(census_q1, ccfg.n, f);
      ccfg.q1_explicit = std::vector<Fel>(q1.coeffs().begin(), q1.coeffs().end());
    }
    auto s = run_census(ccfg);
    std::string text;
    if (census_o.format == "csv") {
      text = census_summary_csv(s);
    } else {
      for (const auto& c : s.classes) {
        char line[192];
        std::snprintf(line, sizeof line,
                      "%-16s pairs %-8llu in-hypothesis %-8llu max %-6lld bound %-6lld "
                      "extremal %llu\n",
                      c.q1_class.c_str(), (unsigned long long)c.pairs_checked,
                      (unsigned long long)c.in_hypothesis, c.max_count, c.bound,
                      (unsigned long long)c.extremal_count);
        text += line;
      }
      text += "overall: max " + std::to_string(s.max_count) + " bound " +
              std::to_string(s.bound) + (s.violation ? " VIOLATION\n" : "\n");
      if (!s.completed && !s.violation) text += "(stopped early; resumable via --resume)\n";
    }
    if (census_o.format == "csv") {
      std::cout << text;
    } else {
      CommonOpts out = census_o;
      out.out = "";  // --out is the record stream; the summary goes to stdout
      emit(out, census_summary_json(s), text);
    }
    if (s.violation) {
      std::cerr << "bound violation: reproducer follows\n"
                << ojson(s.violations).dump(2) << "\n";
      return 4;
    }
    return 0;
  }

  if (cmd_conj->parsed()) {
    Field f = make_field(conj_o);
    if (conj_r > 0) {
      auto rep = probe_cone_pair(conj_o.n, f, conj_r, conj_samples, conj_seed);
      std::string text;
      char head[160];
      std::snprintf(head, sizeof head, "cone-pair bound %lld at n=%d r=%d q=%d (%s)\n",
                    rep.bound, rep.n, rep.r, f.q(),
                    rep.exhaustive ? "exhaustive" : "sampled");
      text += head;
      for (const auto& c : rep.classes) {
        char line[192];
        std::snprintf(line, sizeof line,
                      "%-16s checked %-9llu max(degenerate q2) %-6lld max(non-degenerate q2) "
                      "%-6lld counterexamples %zu\n",
                      c.q1_class.c_str(), (unsigned long long)c.q2_checked,
                      c.max_count_degenerate, c.max_count_nondegenerate,
                      c.counterexamples.size());
        text += line;
      }
      if (rep.counterexample_found)
        text += "COUNTEREXAMPLE FOUND: see the report; this would refute the conjectured "
                "bound\n";
      emit(conj_o, cone_probe_json(rep), text);
      return 0;
    }
    if (conj_forms.empty())
      throw std::invalid_argument("conjecture needs --r or --forms");
    std::optional<long long> d = conj_d > 0 ? std::optional<long long>(conj_d) : std::nullopt;
    std::optional<int> s = conj_s >= 0 ? std::optional<int>(conj_s) : std::nullopt;
    auto x = parse_set(conj_forms, conj_o.n, f, d, s);
    if (!d || !s) {
      auto est = estimate_dim_degree(x, conj_kmax, point_cap, field_cap);
      if (!d && est.d_est) d = *est.d_est;
      if (!s && est.s_est) s = *est.s_est;
      if (!d || !s)
        throw std::invalid_argument("supply --d/--s (estimates unavailable for this set)");
    }
    auto rep = check_set_bound(x, *d, *s);
    std::string text = "count " + std::to_string(rep.count) + " with declared degree " +
                       std::to_string(rep.d) + ", dimension " + std::to_string(rep.s) + "\n";
    for (const auto& c : rep.checks) {
      char line[128];
      std::snprintf(line, sizeof line, "  %-14s %-8lld %s (slack %lld)\n", c.name.c_str(),
                    c.value, c.satisfied ? "satisfied" : "EXCEEDED", c.slack);
      text += line;
    }
    if (rep.counterexample)
      text += "COUNTEREXAMPLE CANDIDATE: the set exceeds the conjectured bound\n";
    emit(conj_o, set_bound_report_json(rep), text);
    return 0;
  }

  if (cmd_ext->parsed()) {
    Field f = make_field(ext_o);
    if (ext_name.empty()) {
      ojson j = extremal_names();
      std::string text;
      for (const auto& name : extremal_names()) text += name + "\n";
      emit(ext_o, j, text);
      return 0;
    }
    auto [f1, f2] = extremal_pair(ext_name, ext_o.n, f);
    PointTable table(f, ext_o.n);
    auto r = pair_report(f1, f2, table);
    ojson j;
    j["name"] = ext_name;
    j["q1"] = print_quadratic(f1);
    j["q2"] = print_quadratic(f2);
    j["report"] = pair_report_json(f, r);
    std::string text = ext_name + ": q1 = " + print_quadratic(f1) +
                       ", q2 = " + print_quadratic(f2) + "\n" + pair_text(f, r);
    emit(ext_o, j, text);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "form error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
