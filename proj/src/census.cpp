#include "quadrics/census.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace quadrics {

std::vector<std::pair<std::string, QuadraticForm>> enumerate_canonical_q1(int n, const Field& f) {
  std::vector<std::pair<std::string, QuadraticForm>> out;
  for (int r = 1; r <= n + 1; ++r) {
    if (r % 2 == 1) {
      out.emplace_back("r" + std::to_string(r) + "-parabolic",
                       canonical_form(r, QuadricType::Parabolic, n, f));
    } else {
      out.emplace_back("r" + std::to_string(r) + "-hyperbolic",
                       canonical_form(r, QuadricType::Hyperbolic, n, f));
      out.emplace_back("r" + std::to_string(r) + "-elliptic",
                       canonical_form(r, QuadricType::Elliptic, n, f));
    }
  }
  return out;
}

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Uniform in [0, bound) by rejection; reproducible across platforms.
std::uint64_t uniform_u64(std::mt19937_64& g, std::uint64_t bound) {
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = g();
  } while (x >= limit);
  return x % bound;
}

void append_fel_json(std::string& s, const Field& f, Fel v) {
  if (f.m() == 1) {
    s += std::to_string(v);
    return;
  }
  s += '[';
  auto c = f.coeffs(v);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  s += ']';
}

void append_coeffs_json(std::string& s, const Field& f, std::span<const Fel> coeffs) {
  s += '[';
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ',';
    append_fel_json(s, f, coeffs[i]);
  }
  s += ']';
}

ordered_json coeffs_json(const Field& f, std::span<const Fel> coeffs) {
  std::string s;
  append_coeffs_json(s, f, coeffs);
  return ordered_json::parse(s);
}

struct ClassCtx {
  std::string id;
  QuadraticForm q1;
  std::vector<std::uint32_t> q1_points;
  std::vector<std::vector<std::uint32_t>> factor_points;  // Z(L) per distinct factor of Q1
};

ClassCtx make_class_ctx(const std::string& id, const QuadraticForm& q1, const PointTable& table) {
  ClassCtx ctx{id, q1, {}, {}};
  for (std::size_t i = 0; i < table.size(); ++i)
    if (q1.evaluate_row(table.mono_row(i)) == 0) ctx.q1_points.push_back(std::uint32_t(i));
  if (auto factors = split_linear_factors(q1)) {
    const Field& f = q1.field();
    std::vector<LinearForm> distinct{factors->first.normalized(f)};
    LinearForm second = factors->second.normalized(f);
    if (!(second == distinct[0])) distinct.push_back(second);
    for (const auto& l : distinct) {
      std::vector<std::uint32_t> pts;
      for (std::size_t i = 0; i < table.size(); ++i)
        if (l.evaluate(f, table.points()[i].coords) == 0) pts.push_back(std::uint32_t(i));
      ctx.factor_points.push_back(std::move(pts));
    }
  }
  return ctx;
}

struct ChunkOut {
  std::string jsonl;
  std::uint64_t pairs = 0;
  std::uint64_t in_hyp = 0;
  std::uint64_t extremal = 0;
  long long max_count = -1;
  std::vector<CensusWitness> witnesses;
  std::optional<ordered_json> violation;
};

struct SweepPlan {
  Field field;
  PointTable table;
  std::vector<ClassCtx> classes;
  long long bound = 0;
  std::uint64_t q2_total = 0;
  std::uint64_t per_class = 0;  // Q2 draws per class
  std::uint64_t chunks_per_class = 0;

  SweepPlan(Field f, int n) : field(std::move(f)), table(field, n) {}
};

std::string selector_str(const CensusConfig& cfg) {
  if (cfg.q1_explicit) return "explicit";
  std::string s = "canonical-classes";
  if (cfg.rank_filter) s += ";rank=" + std::to_string(*cfg.rank_filter);
  if (cfg.type_filter) s += std::string(";type=") + type_name(*cfg.type_filter);
  return s;
}

std::string config_fingerprint_text(const CensusConfig& cfg, const Field& field) {
  std::string s = "n=" + std::to_string(cfg.n) + ";p=" + std::to_string(cfg.p) +
                  ";m=" + std::to_string(cfg.m) + ";q=" + std::to_string(field.q()) +
                  ";sel=" + selector_str(cfg) +
                  ";mode=" + (cfg.mode == CensusMode::Exhaustive ? "exhaustive" : "random") +
                  ";samples=" + std::to_string(cfg.sample_count) +
                  ";seed=" + std::to_string(cfg.seed) +
                  ";chunk=" + std::to_string(cfg.chunk_size);
  if (cfg.bound_override) s += ";bound=" + std::to_string(*cfg.bound_override);
  if (cfg.q1_explicit) {
    s += ";q1=";
    for (Fel v : *cfg.q1_explicit) s += std::to_string(v) + ",";
  }
  return s;
}

ChunkOut process_chunk(const CensusConfig& cfg, const SweepPlan& plan, std::size_t cls,
                       std::uint64_t chunk_idx) {
  const Field& field = plan.field;
  const PointTable& table = plan.table;
  const ClassCtx& ctx = plan.classes[cls];
  const int nmono = table.mono_count();
  const long long bound = plan.bound;

  const std::uint64_t begin = chunk_idx * cfg.chunk_size;
  const std::uint64_t end = std::min(begin + cfg.chunk_size, plan.per_class);

  ChunkOut out;
  out.jsonl.reserve(std::size_t(end - begin) * 64);

  QuadraticForm q2(field, table.n());
  std::vector<Fel> coeffs;
  std::mt19937_64 rng;
  if (cfg.mode == CensusMode::Random) {
    std::seed_seq sq{cfg.seed, std::uint64_t(cls), chunk_idx};
    rng.seed(sq);
  } else if (begin < end) {
    coeffs = proj_vector_unrank(field, nmono, begin);
  }

  std::string record;
  for (std::uint64_t i = begin; i < end; ++i) {
    if (cfg.mode == CensusMode::Random) {
      coeffs = proj_vector_unrank(field, nmono, uniform_u64(rng, plan.q2_total));
    } else if (i > begin) {
      proj_vector_advance(field, coeffs);
    }
    q2.raw_coeffs() = coeffs;

    long long count = 0;
    for (std::uint32_t pidx : ctx.q1_points)
      if (q2.evaluate_row(table.mono_row(pidx)) == 0) ++count;

    // "two quadrics" means two distinct varieties: Z(q1) = Z(q2) is the
    // same quadric, not a pair
    bool same_variety = false;
    if (count == (long long)ctx.q1_points.size()) {
      long long q2_count = 0;
      for (std::size_t pidx = 0; pidx < table.size(); ++pidx)
        if (q2.evaluate_row(table.mono_row(pidx)) == 0) ++q2_count;
      same_variety = q2_count == count;
    }

    bool in_hyp = !same_variety;
    if (in_hyp)
      for (const auto& pts : ctx.factor_points) {
        bool contained = true;
        for (std::uint32_t pidx : pts)
          if (q2.evaluate_row(table.mono_row(pidx)) != 0) {
            contained = false;
            break;
          }
        if (contained) {
          in_hyp = false;
          break;
        }
      }
    const bool extremal = in_hyp && count == bound;
    const bool violation = in_hyp && count > bound;

    ++out.pairs;
    if (in_hyp) {
      ++out.in_hyp;
      if (count > out.max_count) out.max_count = count;
    }
    if (extremal) {
      ++out.extremal;
      if (int(out.witnesses.size()) < cfg.witness_cap)
        out.witnesses.push_back({ctx.id, coeffs, count});
    }

    record.clear();
    record += "{\"q1_class\":\"";
    record += ctx.id;
    record += "\",\"q2\":";
    append_coeffs_json(record, field, coeffs);
    record += ",\"count\":";
    record += std::to_string(count);
    record += ",\"bound\":";
    record += std::to_string(bound);
    record += ",\"in_hypothesis\":";
    record += in_hyp ? "true" : "false";
    record += ",\"extremal\":";
    record += extremal ? "true" : "false";
    record += "}\n";
    out.jsonl += record;

    if (violation) {
      ordered_json v;
      v["q1_class"] = ctx.id;
      v["q1"] = coeffs_json(field, ctx.q1.coeffs());
      v["q2"] = coeffs_json(field, coeffs);
      v["n"] = table.n();
      v["field"] = {{"p", field.p()}, {"m", field.m()}, {"modulus", field.modulus()}};
      v["count"] = count;
      v["bound"] = bound;
      out.violation = std::move(v);
      break;  // abort at the reproducer; it indicates a bug, not new mathematics
    }
  }
  return out;
}

}  // namespace

CensusSummary run_census(const CensusConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("census requires n >= 2");
  if (cfg.chunk_size < 1) throw std::invalid_argument("chunk size must be >= 1");
  if (cfg.mode == CensusMode::Random && cfg.sample_count == 0)
    throw std::invalid_argument("random mode needs a sample count");
  if (cfg.resume && cfg.out_path.empty())
    throw std::invalid_argument("resume requires an output path");

  SweepPlan plan(Field::make(cfg.p, cfg.m, Field::kHardCap), cfg.n);
  const Field& field = plan.field;
  const int nmono = mono_count(cfg.n);

  plan.bound = cfg.bound_override ? *cfg.bound_override
                                  : (long long)bounds::two_quadrics_bound(cfg.n, field.q());
  plan.q2_total = proj_vector_count(nmono, field.q());
  plan.per_class = cfg.mode == CensusMode::Exhaustive ? plan.q2_total : cfg.sample_count;

  const unsigned long long work = plan.per_class * (unsigned long long)plan.table.size();
  if (work > cfg.work_cap)
    throw std::runtime_error("census work " + std::to_string(work) +
                             " exceeds the work cap " + std::to_string(cfg.work_cap));

  // Q1 selection
  if (cfg.q1_explicit) {
    if (int(cfg.q1_explicit->size()) != nmono)
      throw std::invalid_argument("explicit q1 coefficient vector has the wrong length");
    QuadraticForm q1(field, cfg.n);
    q1.raw_coeffs() = *cfg.q1_explicit;
    if (q1.is_zero()) throw std::invalid_argument("explicit q1 is the zero form");
    plan.classes.push_back(make_class_ctx("explicit", q1, plan.table));
  } else {
    for (auto& [id, q1] : enumerate_canonical_q1(cfg.n, field)) {
      if (cfg.rank_filter || cfg.type_filter) {
        auto prof = classify(q1);
        if (cfg.rank_filter && prof.rank != *cfg.rank_filter) continue;
        if (cfg.type_filter && prof.type != *cfg.type_filter) continue;
      }
      plan.classes.push_back(make_class_ctx(id, q1, plan.table));
    }
  }
  if (plan.classes.empty()) throw std::invalid_argument("q1 selector matches no class");

  plan.chunks_per_class = (plan.per_class + cfg.chunk_size - 1) / cfg.chunk_size;
  const std::uint64_t total_tasks = plan.chunks_per_class * plan.classes.size();

  CensusSummary summary;
  summary.config = cfg;
  summary.bound = plan.bound;
  for (const auto& c : plan.classes)
    summary.classes.push_back({c.id, 0, 0, -1, plan.bound, 0, {}});

  // Checkpoint state
  const std::string progress_path = cfg.out_path.empty() ? "" : cfg.out_path + ".progress";
  const std::uint64_t fingerprint = fnv1a(config_fingerprint_text(cfg, field));
  std::uint64_t first_task = 0;
  std::uint64_t resume_bytes = 0;

  auto merge_chunk = [&](std::uint64_t task, std::uint64_t pairs, std::uint64_t in_hyp,
                         long long max_count, std::uint64_t extremal,
                         const std::vector<CensusWitness>& wits,
                         const std::optional<ordered_json>& violation) {
    auto& cs = summary.classes[std::size_t(task / plan.chunks_per_class)];
    cs.pairs_checked += pairs;
    cs.in_hypothesis += in_hyp;
    cs.extremal_count += extremal;
    if (max_count > cs.max_count) cs.max_count = max_count;
    for (const auto& w : wits)
      if (int(cs.witnesses.size()) < cfg.witness_cap) cs.witnesses.push_back(w);
    if (violation) {
      summary.violation = true;
      summary.violations.push_back(*violation);
    }
  };

  if (cfg.resume && std::filesystem::exists(progress_path)) {
    std::ifstream in(progress_path);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto j = ordered_json::parse(line);
      if (header) {
        if (j.at("fingerprint").get<std::uint64_t>() != fingerprint)
          throw std::runtime_error("checkpoint belongs to a different census configuration");
        header = false;
        continue;
      }
      std::uint64_t task = j.at("task").get<std::uint64_t>();
      if (task != first_task)
        throw std::runtime_error("checkpoint has a gap; refusing to resume");
      std::vector<CensusWitness> wits;
      for (const auto& w : j.at("witnesses")) {
        CensusWitness cw;
        cw.q1_class = plan.classes[std::size_t(task / plan.chunks_per_class)].id;
        for (const auto& e : w.at("q2")) {
          if (e.is_array()) {
            std::vector<int> c = e.get<std::vector<int>>();
            cw.q2.push_back(field.from_coeffs(c));
          } else {
            cw.q2.push_back(Fel(e.get<int>()));
          }
        }
        cw.count = w.at("count").get<long long>();
        wits.push_back(std::move(cw));
      }
      std::optional<ordered_json> vio;
      if (j.contains("violation") && !j.at("violation").is_null())
        vio = ordered_json(j.at("violation"));
      merge_chunk(task, j.at("pairs").get<std::uint64_t>(), j.at("in_hyp").get<std::uint64_t>(),
                  j.at("max_count").get<long long>(), j.at("extremal").get<std::uint64_t>(),
                  wits, vio);
      resume_bytes = j.at("bytes").get<std::uint64_t>();
      ++first_task;
    }
    if (header) first_task = 0;  // empty or fresh progress file
  }

  std::ofstream out_stream, progress_stream;
  if (!cfg.out_path.empty()) {
    if (first_task > 0) {
      std::filesystem::resize_file(cfg.out_path, resume_bytes);
      out_stream.open(cfg.out_path, std::ios::in | std::ios::out | std::ios::ate);
      progress_stream.open(progress_path, std::ios::app);
    } else {
      out_stream.open(cfg.out_path, std::ios::trunc);
      progress_stream.open(progress_path, std::ios::trunc);
      ordered_json h;
      h["fingerprint"] = fingerprint;
      progress_stream << h.dump() << "\n";
    }
    if (!out_stream || !progress_stream)
      throw std::runtime_error("cannot open census output files under " + cfg.out_path);
  }

  // Deterministic pipeline: workers compute chunks out of order, the merge
  // loop consumes them strictly in task order.
  const int nthreads = std::max(1, cfg.threads);
  std::atomic<std::uint64_t> next_task{first_task};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::condition_variable cv_done, cv_space;
  std::map<std::uint64_t, ChunkOut> ready;
  std::uint64_t write_cursor = first_task;
  const std::uint64_t window = std::uint64_t(4) * nthreads + 4;

  auto worker = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      std::uint64_t task = next_task.fetch_add(1);
      if (task >= total_tasks) break;
      {
        std::unique_lock lk(mu);
        cv_space.wait(lk, [&] {
          return stop.load(std::memory_order_relaxed) || task < write_cursor + window;
        });
        if (stop.load(std::memory_order_relaxed)) break;
      }
      ChunkOut out = process_chunk(cfg, plan, std::size_t(task / plan.chunks_per_class),
                                   task % plan.chunks_per_class);
      std::lock_guard lk(mu);
      ready.emplace(task, std::move(out));
      cv_done.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);

  std::uint64_t bytes_written = resume_bytes;
  std::uint64_t new_chunks = 0;
  summary.completed = first_task >= total_tasks;
  for (std::uint64_t task = first_task; task < total_tasks; ++task) {
    ChunkOut out;
    {
      std::unique_lock lk(mu);
      cv_done.wait(lk, [&] { return ready.count(task) > 0; });
      out = std::move(ready.at(task));
      ready.erase(task);
      ++write_cursor;
      cv_space.notify_all();
    }
    if (!cfg.out_path.empty()) {
      out_stream << out.jsonl;
      out_stream.flush();
      bytes_written += out.jsonl.size();
      ordered_json pj;
      pj["task"] = task;
      pj["bytes"] = bytes_written;
      pj["pairs"] = out.pairs;
      pj["in_hyp"] = out.in_hyp;
      pj["max_count"] = out.max_count;
      pj["extremal"] = out.extremal;
      ordered_json wl = ordered_json::array();
      for (const auto& w : out.witnesses) {
        ordered_json wj;
        wj["q2"] = coeffs_json(field, w.q2);
        wj["count"] = w.count;
        wl.push_back(std::move(wj));
      }
      pj["witnesses"] = std::move(wl);
      pj["violation"] = out.violation ? *out.violation : ordered_json(nullptr);
      progress_stream << pj.dump() << "\n";
      progress_stream.flush();
    }
    merge_chunk(task, out.pairs, out.in_hyp, out.max_count, out.extremal, out.witnesses,
                out.violation);
    ++new_chunks;
    if (out.violation) break;  // the sweep aborts at the violating chunk
    if (cfg.max_chunks_this_run > 0 && new_chunks >= cfg.max_chunks_this_run) break;
    if (task + 1 == total_tasks) summary.completed = true;
  }
  stop.store(true);
  cv_space.notify_all();
  for (auto& t : pool) t.join();

  for (const auto& cs : summary.classes) {
    summary.pairs_checked += cs.pairs_checked;
    summary.in_hypothesis += cs.in_hypothesis;
    summary.extremal_total += cs.extremal_count;
    if (cs.max_count > summary.max_count) summary.max_count = cs.max_count;
  }
  if (summary.violation) summary.completed = false;
  return summary;
}

ordered_json census_summary_json(const CensusSummary& s) {
  ordered_json j;
  ordered_json cfg;
  cfg["n"] = s.config.n;
  cfg["p"] = s.config.p;
  cfg["m"] = s.config.m;
  cfg["q1_selector"] = selector_str(s.config);
  cfg["mode"] = s.config.mode == CensusMode::Exhaustive ? "exhaustive" : "random";
  if (s.config.mode == CensusMode::Random) {
    cfg["sample_count"] = s.config.sample_count;
    cfg["seed"] = s.config.seed;
  }
  cfg["chunk_size"] = s.config.chunk_size;
  j["config"] = std::move(cfg);
  j["bound"] = s.bound;
  j["max_count"] = s.max_count;
  j["pairs_checked"] = s.pairs_checked;
  j["in_hypothesis"] = s.in_hypothesis;
  j["extremal_total"] = s.extremal_total;
  j["violation"] = s.violation;
  j["violations"] = s.violations;
  j["completed"] = s.completed;
  Field field = Field::make(s.config.p, s.config.m, Field::kHardCap);
  ordered_json cl = ordered_json::array();
  for (const auto& c : s.classes) {
    ordered_json e;
    e["q1_class"] = c.q1_class;
    e["pairs_checked"] = c.pairs_checked;
    e["in_hypothesis"] = c.in_hypothesis;
    e["max_count"] = c.max_count;
    e["bound"] = c.bound;
    e["extremal_count"] = c.extremal_count;
    ordered_json wl = ordered_json::array();
    for (const auto& w : c.witnesses) {
      ordered_json wj;
      wj["q2"] = coeffs_json(field, w.q2);
      wj["count"] = w.count;
      wl.push_back(std::move(wj));
    }
    e["witnesses"] = std::move(wl);
    cl.push_back(std::move(e));
  }
  j["classes"] = std::move(cl);
  return j;
}

std::string census_summary_csv(const CensusSummary& s) {
  std::string out = "q1_class,pairs_checked,in_hypothesis,max_count,bound,extremal_count\n";
  for (const auto& c : s.classes) {
    out += c.q1_class + "," + std::to_string(c.pairs_checked) + "," +
           std::to_string(c.in_hypothesis) + "," + std::to_string(c.max_count) + "," +
           std::to_string(c.bound) + "," + std::to_string(c.extremal_count) + "\n";
  }
  return out;
}

ConeProbeReport probe_cone_pair(int n, const Field& f, int r, std::uint64_t sample_count,
                                std::uint64_t seed, std::uint64_t work_cap) {
  if (r < 4) throw std::invalid_argument("the cone-pair bound needs rank >= 4");
  if (r > n + 1) throw std::invalid_argument("rank exceeds n+1");

  PointTable table(f, n);
  const int nmono = mono_count(n);
  const std::uint64_t q2_total = proj_vector_count(nmono, f.q());
  const std::uint64_t draws = sample_count == 0 ? q2_total : sample_count;
  if (draws * (unsigned long long)table.size() > work_cap)
    throw std::runtime_error("probe work exceeds the work cap");

  ConeProbeReport rep;
  rep.n = n;
  rep.r = r;
  rep.p = f.p();
  rep.m = f.m();
  rep.q = f.q();
  rep.bound = (long long)bounds::cone_pair_bound(n, r, f.q());
  rep.exhaustive = sample_count == 0;
  rep.sample_count = sample_count;
  rep.seed = seed;

  std::vector<std::pair<std::string, QuadraticForm>> q1s;
  if (r % 2 == 1) {
    q1s.emplace_back("r" + std::to_string(r) + "-parabolic",
                     canonical_form(r, QuadricType::Parabolic, n, f));
  } else {
    q1s.emplace_back("r" + std::to_string(r) + "-hyperbolic",
                     canonical_form(r, QuadricType::Hyperbolic, n, f));
    q1s.emplace_back("r" + std::to_string(r) + "-elliptic",
                     canonical_form(r, QuadricType::Elliptic, n, f));
  }

  for (std::size_t cls = 0; cls < q1s.size(); ++cls) {
    const auto& [id, q1] = q1s[cls];
    std::vector<std::uint32_t> q1_points;
    for (std::size_t i = 0; i < table.size(); ++i)
      if (q1.evaluate_row(table.mono_row(i)) == 0) q1_points.push_back(std::uint32_t(i));

    ConeProbeClassReport cr;
    cr.q1_class = id;

    QuadraticForm q2(f, n);
    std::vector<Fel> coeffs;
    std::mt19937_64 rng;
    if (!rep.exhaustive) {
      std::seed_seq sq{seed, std::uint64_t(cls)};
      rng.seed(sq);
    } else {
      coeffs = proj_vector_unrank(f, nmono, 0);
    }
    for (std::uint64_t i = 0; i < draws; ++i) {
      if (!rep.exhaustive)
        coeffs = proj_vector_unrank(f, nmono, uniform_u64(rng, q2_total));
      else if (i > 0)
        proj_vector_advance(f, coeffs);
      q2.raw_coeffs() = coeffs;

      long long count = 0;
      for (std::uint32_t pidx : q1_points)
        if (q2.evaluate_row(table.mono_row(pidx)) == 0) ++count;

      // "another quadric": skip q2 cutting the same variety as q1
      if (count == (long long)q1_points.size()) {
        long long q2_count = 0;
        for (std::size_t pidx = 0; pidx < table.size(); ++pidx)
          if (q2.evaluate_row(table.mono_row(pidx)) == 0) ++q2_count;
        if (q2_count == count) {
          ++cr.q2_checked;
          continue;
        }
      }

      const bool degenerate = rank(q2) <= n;
      ++cr.q2_checked;
      if (degenerate) {
        if (count > cr.max_count_degenerate) cr.max_count_degenerate = count;
        if (count > rep.bound) {
          cr.counterexamples.push_back({id, coeffs, count});
          rep.counterexample_found = true;
        }
      } else if (count > cr.max_count_nondegenerate) {
        cr.max_count_nondegenerate = count;
      }
    }
    rep.classes.push_back(std::move(cr));
  }
  return rep;
}

ordered_json cone_probe_json(const ConeProbeReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["r"] = r.r;
  j["q"] = r.q;
  j["bound"] = r.bound;
  j["mode"] = r.exhaustive ? "exhaustive" : "random";
  if (!r.exhaustive) {
    j["sample_count"] = r.sample_count;
    j["seed"] = r.seed;
  }
  j["counterexample_found"] = r.counterexample_found;
  Field field = Field::make(r.p, r.m, Field::kHardCap);
  ordered_json cl = ordered_json::array();
  for (const auto& c : r.classes) {
    ordered_json e;
    e["q1_class"] = c.q1_class;
    e["q2_checked"] = c.q2_checked;
    e["max_count_degenerate"] = c.max_count_degenerate;
    e["max_count_nondegenerate"] = c.max_count_nondegenerate;
    ordered_json xs = ordered_json::array();
    for (const auto& w : c.counterexamples) {
      ordered_json wj;
      wj["q2"] = coeffs_json(field, w.q2);
      wj["count"] = w.count;
      xs.push_back(std::move(wj));
    }
    e["counterexamples"] = std::move(xs);
    cl.push_back(std::move(e));
  }
  j["classes"] = std::move(cl);
  return j;
}

}  // namespace quadrics
