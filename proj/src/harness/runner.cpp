#include "forcelab/harness/runner.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "forcelab/harness/generators.hpp"

namespace forcelab {

using io::json;

namespace {

std::string_view mode_name(Mode m) { return m == Mode::Exhaustive ? "exhaustive" : "sampled"; }

json payload_of(const RunConfig& cfg, const Skeleton& s, const std::string& id, std::uint64_t serial) {
  return {{"property", id},
          {"mode", mode_name(cfg.mode)},
          {"serial", serial},
          {"seed", cfg.seed},
          {"bound", cfg.bound},
          {"skeleton", io::encode(s)},
          {"mutation", mutation_name(cfg.mutation)}};
}

CaseReport execute(const Checker& c, const std::string& id, Mode mode, std::uint64_t serial, std::uint64_t seed) {
  CaseReport r;
  r.property = id;
  r.mode = mode;
  r.serial = serial;
  auto t0 = std::chrono::steady_clock::now();
  CaseResult res;
  try {
    res = mode == Mode::Exhaustive ? c.exhaustive(serial) : c.sampled(serial, case_seed(seed, serial));
  } catch (const std::exception& e) {
    res = {Status::Fail, std::string("exception: ") + e.what(), {}, {}};
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.status = res.status;
  r.detail = std::move(res.detail);
  r.inputs = std::move(res.inputs);
  r.counters = std::move(res.counters);
  return r;
}

}  // namespace

std::string report_line(const CaseReport& r, bool timing) {
  json j = {{"property", r.property},
            {"mode", mode_name(r.mode)},
            {"case", r.serial},
            {"status", status_name(r.status)},
            {"elapsed_ms", timing ? r.elapsed_ms : 0.0}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!r.counters.empty()) j["counters"] = r.counters;
  if (r.status == Status::Fail) {
    j["inputs"] = r.inputs;
    j["payload"] = r.payload;
  }
  return j.dump();
}

bool RunSummary::any_fail() const {
  return std::any_of(by_property.begin(), by_property.end(), [](const auto& kv) { return kv.second.fail > 0; });
}

std::uint64_t RunSummary::total(Status s) const {
  std::uint64_t n = 0;
  for (const auto& [id, p] : by_property) n += s == Status::Pass ? p.pass : s == Status::Fail ? p.fail : p.skip;
  return n;
}

Outcome<RunSummary> run(const RunConfig& cfg, const ReportSink& sink) {
  auto errs = validate_config(cfg);
  if (errs.size() == 1) return errs.front();
  if (!errs.empty()) return make_error(Code::ConfigError, describe(errs));
  ScopedMutation mutation(cfg.mutation);
  const Skeleton s = cfg.effective_skeleton();
  const Env env{s, cfg.bound, cfg.seed};

  std::vector<const PropertyInfo*> selected;
  for (const auto& info : registry()) {
    bool all = std::count(cfg.properties.begin(), cfg.properties.end(), "all") > 0;
    if (all ? (cfg.mode == Mode::Sampled || info.exhaustible)
            : std::count(cfg.properties.begin(), cfg.properties.end(), info.id) > 0)
      selected.push_back(&info);
  }

  RunSummary summary;
  bool stop = false;
  for (const PropertyInfo* info : selected) {
    if (stop) break;
    summary.order.push_back(info->id);
    PropertySummary& ps = summary.by_property[info->id];
    auto chk = info->make(env, cfg.mode);
    const std::uint64_t n = cfg.mode == Mode::Exhaustive ? chk->exhaustive_size() : cfg.cases;

    auto emit = [&](CaseReport& r) {
      if (r.status == Status::Fail) r.payload = payload_of(cfg, s, info->id, r.serial);
      ps.elapsed_ms += r.elapsed_ms;
      (r.status == Status::Pass ? ps.pass : r.status == Status::Fail ? ps.fail : ps.skip) += 1;
      for (const auto& [k, v] : r.counters) ps.counters[k] += v;
      if (sink) sink(r);
      if (r.status == Status::Fail && cfg.stop_on_fail) stop = true;
    };

    const unsigned jobs = std::max(1u, cfg.jobs);
    if (jobs == 1) {
      for (std::uint64_t i = 0; i < n && !stop; ++i) {
        CaseReport r = execute(*chk, info->id, cfg.mode, i, cfg.seed);
        emit(r);
      }
      continue;
    }
    // Chunks run concurrently; each chunk is emitted in index order.
    const std::uint64_t chunk = std::max<std::uint64_t>(jobs * 4, 1);
    for (std::uint64_t lo = 0; lo < n && !stop; lo += chunk) {
      const std::uint64_t hi = std::min(n, lo + chunk);
      std::vector<CaseReport> out(hi - lo);
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
          for (std::uint64_t i = lo + w; i < hi; i += jobs) out[i - lo] = execute(*chk, info->id, cfg.mode, i, cfg.seed);
        });
      for (auto& t : pool) t.join();
      for (auto& r : out) {
        if (stop) break;
        emit(r);
      }
    }
  }
  return summary;
}

Outcome<CaseReport> replay(const json& p) {
  RunConfig cfg;
  std::string id;
  std::uint64_t serial = 0;
  try {
    if (!p.is_object()) return make_error(Code::ParseError, "payload must be an object");
    const json& body = p.contains("payload") ? p.at("payload") : p;
    id = body.at("property").get<std::string>();
    const std::string mode = body.at("mode").get<std::string>();
    if (mode != "exhaustive" && mode != "sampled") return make_error(Code::ParseError, "unknown mode '" + mode + "'");
    cfg.mode = mode == "exhaustive" ? Mode::Exhaustive : Mode::Sampled;
    serial = body.at("serial").get<std::uint64_t>();
    cfg.seed = body.at("seed").get<std::uint64_t>();
    cfg.bound = body.at("bound").get<std::uint32_t>();
    cfg.skeleton = io::decode_skeleton(body.at("skeleton"));
    auto m = parse_mutation(body.value("mutation", std::string("none")));
    if (!m) return make_error(Code::ParseError, "unknown mutation");
    cfg.mutation = *m;
  } catch (const std::exception& e) {
    return make_error(Code::ParseError, e.what());
  }
  cfg.properties = {id};
  cfg.cases = serial + 1;
  auto errs = validate_config(cfg);
  if (!errs.empty()) return make_error(Code::ParseError, describe(errs));
  ScopedMutation mutation(cfg.mutation);
  const PropertyInfo* info = find_property(id);
  auto chk = info->make(Env{cfg.skeleton, cfg.bound, cfg.seed}, cfg.mode);
  if (cfg.mode == Mode::Exhaustive && serial >= chk->exhaustive_size())
    return make_error(Code::ParseError, "case index out of range");
  CaseReport r = execute(*chk, id, cfg.mode, serial, cfg.seed);
  if (r.status == Status::Fail) r.payload = payload_of(cfg, cfg.skeleton, id, serial);
  return r;
}

Outcome<CaseReport> replay_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) return make_error(Code::ParseError, "payload is not JSON");
  return replay(j);
}

std::vector<Regime> default_suite(std::uint64_t seed) {
  std::vector<Regime> out;
  auto add = [&](int criterion, std::string id, Skeleton s, std::uint32_t bound, Mode mode, std::uint64_t cases,
                 std::string note = {}) {
    RunConfig c;
    c.skeleton = std::move(s);
    c.bound = bound;
    c.mode = mode;
    c.cases = cases;
    c.seed = seed;
    c.properties = {id};
    std::string label = id + (mode == Mode::Exhaustive ? " exhaustive" : " sampled x" + std::to_string(cases)) +
                        " B=" + std::to_string(bound) + (note.empty() ? "" : " " + note);
    out.push_back({criterion, std::move(label), std::move(c)});
  };
  const Mode ex = Mode::Exhaustive, sa = Mode::Sampled;
  Skeleton a = skel_a(), h = skel_h(), h4 = skel_h(), a1 = skel_a(), h2 = skel_h();
  h4.block_width = 4;
  a1.block_width = 1;
  h2.block_width = 2;

  add(1, "P0-POSET", a, 1, ex, 0, "SKEL-A");
  add(1, "P1-POSET", a, 1, ex, 0, "SKEL-A");
  add(1, "P0-POSET", a, 3, sa, 500, "SKEL-A");
  add(1, "P1-POSET", a, 3, sa, 500, "SKEL-A");
  for (const char* id : {"P0-RESTRICT-DENSE", "P0-SPLIT-DENSE", "CLOUD-DIFF-DENSE"}) {
    add(2, id, a, 1, ex, 0, "SKEL-A");
    add(2, id, a, 3, sa, 500, "SKEL-A");
  }
  add(3, "HOMOG0", h4, 1, ex, 0, "SKEL-H W=4");
  add(3, "HOMOG0", h, 3, sa, 500, "SKEL-H W=8");
  add(3, "HOMOG1", a, 1, ex, 0, "SKEL-A");
  add(3, "HOMOG1", a, 3, sa, 500, "SKEL-A");
  add(4, "A0-GROUP", a, 1, ex, 0, "SKEL-A");
  add(4, "A1-GROUP-EXT", a, 3, sa, 1000, "SKEL-A");
  add(4, "DPI-CLOSURE", a, 3, sa, 1000, "SKEL-A");
  for (const char* id : {"RHO0-PROJ", "RHO1-PROJ"}) {
    add(5, id, a, 1, ex, 0, "SKEL-A");
    add(5, id, a, 2, sa, 300, "SKEL-A");
  }
  add(6, "NAME-BAR-VAL", a, 2, ex, 0, "SKEL-A");
  add(6, "NAME-EQUIVARIANCE", a, 2, ex, 0, "SKEL-A");
  add(6, "SYM-CANONICAL", a, 2, ex, 0, "SKEL-A");
  add(6, "CLOUD-DISJOINT", a1, 1, ex, 0, "SKEL-A W=1");
  add(6, "CLOUD-DISJOINT", h2, 1, ex, 0, "SKEL-H W=2");
  add(6, "CLOUD-DISJOINT", h4, 1, ex, 0, "SKEL-H W=4");
  add(6, "TPI-COMMUTE", a, 2, sa, 200, "SKEL-A");
  add(6, "TQQ-ISO", a, 2, sa, 200, "SKEL-A");
  add(7, "NORMALITY", a, 3, sa, 500, "SKEL-A");
  add(0, "P0-ANTICHAIN", a, 1, ex, 0, "SKEL-A");
  add(0, "FIX1-COLUMN", a, 3, sa, 500, "SKEL-A");
  add(0, "QT-POSET", a, 1, ex, 0, "SKEL-A");
  add(0, "MBETA-ENUM", a, 1, ex, 0, "SKEL-A");
  // Slowest regime last, so stop-on-fail mutation runs rarely reach it.
  add(3, "HOMOG0", h, 1, ex, 0, "SKEL-H W=8");
  return out;
}

}  // namespace forcelab
