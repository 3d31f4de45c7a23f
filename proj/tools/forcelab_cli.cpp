// forcelab: batch checks over the property registry, plus small inspection
// commands. Records go to stdout one per line; summaries go to stderr.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "forcelab/harness/config.hpp"
#include "forcelab/harness/registry.hpp"
#include "forcelab/harness/runner.hpp"
#include "forcelab/harness/serialize.hpp"

using namespace forcelab;
using io::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure(make_error(Code::ConfigError, "cannot open '" + path + "'"));
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Skeleton skeleton_or_throw(const std::string& path) {
  auto s = load_skeleton(path);
  if (!s) throw Failure(s.error());
  return s.value();
}

Level default_top(const Skeleton& s) {
  for (Level l = s.top(); l >= 2; --l)
    if (s.kind(l) == LevelKind::Successor) return l;
  throw Failure(make_error(Code::ConfigError, "skeleton has no successor level to project onto"));
}

int cmd_validate(const std::string& path) {
  auto s = load_skeleton(path);
  if (!s) {
    std::cout << io::line({{"config", path}, {"ok", false}, {"error", describe(s.error())}}) << "\n";
    return 2;
  }
  std::cout << io::line({{"config", path}, {"ok", true}, {"skeleton", io::encode(s.value())}}) << "\n";
  return 0;
}

int cmd_list() {
  for (const auto& p : registry())
    std::cout << io::line({{"id", p.id}, {"module", p.module}, {"exhaustible", p.exhaustible}, {"statement", p.statement}})
              << "\n";
  return 0;
}

struct CheckArgs {
  std::string property = "all";
  std::string config;
  std::uint64_t seed = 0;
  std::uint64_t cases = 100;
  std::uint32_t bound = 1;
  std::uint32_t width = 0;
  bool exhaustive = false;
  std::string mutation = "none";
  unsigned jobs = 1;
  bool no_timing = false;
  bool stop_on_fail = false;
};

int cmd_check(const CheckArgs& a) {
  RunConfig cfg;
  cfg.skeleton_path = a.config;
  cfg.skeleton = skeleton_or_throw(a.config);
  cfg.seed = a.seed;
  cfg.cases = a.cases;
  cfg.bound = a.bound;
  if (a.width) cfg.width = a.width;
  cfg.mode = a.exhaustive ? Mode::Exhaustive : Mode::Sampled;
  cfg.properties = {a.property};
  auto m = parse_mutation(a.mutation);
  if (!m) throw Failure(make_error(Code::ConfigError, "unknown mutation '" + a.mutation + "'"));
  cfg.mutation = *m;
  cfg.jobs = a.jobs;
  cfg.stop_on_fail = a.stop_on_fail;
  auto sum = run(cfg, [&](const CaseReport& r) { std::cout << report_line(r, !a.no_timing) << "\n"; });
  if (!sum) throw Failure(sum.error());
  for (const auto& id : sum->order) {
    const auto& p = sum->by_property.at(id);
    std::cerr << id << ": " << p.pass << " pass, " << p.fail << " fail, " << p.skip << " skip";
    for (const auto& [k, v] : p.counters) std::cerr << ", " << k << "=" << v;
    std::cerr << " (" << static_cast<long long>(p.elapsed_ms) << " ms)\n";
  }
  std::cerr << (sum->any_fail() ? "FAIL" : "OK") << "\n";
  return sum->any_fail() ? 1 : 0;
}

int cmd_project(const std::string& config, const std::string& cond_path, std::uint32_t beta,
                const std::string& ctx_path, int max_level) {
  Skeleton s = skeleton_or_throw(config);
  json j = io::parse(read_file(cond_path));
  ProductCond p = (j.contains("p0") || j.contains("p1")) ? io::decode_product(j) : ProductCond{io::decode_cond0(j), {}};
  SymContext ctx;
  if (!ctx_path.empty()) {
    ctx = io::decode_ctx(io::parse(read_file(ctx_path)));
  } else {
    ctx.top = default_top(s);
    ctx.beta = beta;
  }
  if (auto errs = validate_ctx(s, ctx); !errs.empty()) throw Failure(errs.front());
  if (auto errs = validate_product(s, p); !errs.empty()) throw Failure(errs.front());
  Level ml = max_level >= 0 ? static_cast<Level>(max_level) : static_cast<Level>(ctx.top - 1);
  json out{{"beta", ctx.beta}, {"max_level", ml}};
  auto r0 = rho0(s, p.c0, ctx);
  if (r0)
    out["rho0"] = io::encode(r0.value());
  else
    out["rho0_error"] = describe(r0.error());
  out["rho1"] = io::encode(rho1(p.c1, ml, ctx.beta));
  std::cout << io::line(out) << "\n";
  return r0 ? 0 : 1;
}

int cmd_orbit(const std::string& config, const std::string& name_path, const std::string& group_path,
              std::size_t samples, std::uint64_t seed, std::uint32_t bound) {
  Skeleton s = skeleton_or_throw(config);
  json jn = io::parse(read_file(name_path));
  PName x = jn.contains("kind") ? expand(s, io::decode_canonical(jn), bound) : io::decode_name(jn);
  GroupSpec spec = io::decode_group(io::parse(read_file(group_path)));
  auto members = sample_group(s, spec, seed, samples, bound);
  std::size_t fixed = 0;
  for (std::size_t k = 0; k < members.size(); ++k) {
    const AutPair& pi = members[k];
    PName b = bar(x, pi.a1);
    auto moved = act(pi, b);
    bool is_fixed = moved && moved.value() == b;
    fixed += is_fixed;
    json rec{{"sample", k}, {"pi", io::encode(pi)}, {"fixed", is_fixed}};
    if (!is_fixed && moved) rec["image"] = io::encode(moved.value());
    std::cout << io::line(rec) << "\n";
  }
  std::cerr << fixed << " of " << members.size() << " sampled members fix the name";
  if (members.size() < samples) std::cerr << " (sampler found only " << members.size() << ")";
  std::cerr << "\n";
  return fixed == members.size() ? 0 : 1;
}

int cmd_replay(const std::string& path) {
  auto r = replay_text(read_file(path));
  if (!r) throw Failure(r.error());
  std::cout << report_line(r.value()) << "\n";
  std::cerr << r->property << " case " << r->serial << ": " << status_name(r->status) << "\n";
  return r->status == Status::Fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-model property checker for the two-factor forcing construction"};
  app.require_subcommand(1);

  std::string config;
  auto* validate = app.add_subcommand("validate", "Validate a skeleton configuration");
  validate->add_option("config", config, "Skeleton YAML file")->required();

  auto* list = app.add_subcommand("list-properties", "List the registered property ids");

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Run property checks");
  check->add_option("property", ca.property, "Property id or 'all'");
  check->add_option("--config", ca.config, "Skeleton YAML file")->required();
  check->add_option("--seed", ca.seed, "Run seed");
  check->add_option("--cases", ca.cases, "Sampled cases per property");
  check->add_option("--bound", ca.bound, "Position bound B");
  check->add_option("--width", ca.width, "Block width override");
  check->add_flag("--exhaustive", ca.exhaustive, "Enumerate the finite universe instead of sampling");
  check->add_option("--mutation", ca.mutation, "Seeded mutation to inject");
  check->add_option("--jobs", ca.jobs, "Worker threads");
  check->add_flag("--no-timing", ca.no_timing, "Write elapsed_ms as 0 so equal runs compare byte for byte");
  check->add_flag("--stop-on-fail", ca.stop_on_fail, "Stop at the first failing case");

  std::string cond_path, ctx_path;
  std::uint32_t beta = 1;
  int max_level = -1;
  auto* project = app.add_subcommand("project", "Apply rho0 and rho1 to a condition");
  project->add_option("--config", config, "Skeleton YAML file")->required();
  project->add_option("--cond", cond_path, "Cond0 or product condition (JSON)")->required();
  project->add_option("--beta", beta, "Index cut at the top level");
  project->add_option("--ctx", ctx_path, "Symmetry context (JSON); overrides --beta");
  project->add_option("--max-level", max_level, "Highest level kept by rho1 (default: below the top)");

  std::string name_path, group_path;
  std::size_t samples = 20;
  std::uint64_t seed = 0;
  std::uint32_t bound = 2;
  auto* orbit = app.add_subcommand("orbit", "Sample group members and test whether they fix a name");
  orbit->add_option("--config", config, "Skeleton YAML file")->required();
  orbit->add_option("--name", name_path, "Name or canonical name (JSON)")->required();
  orbit->add_option("--group", group_path, "Group specification (JSON)")->required();
  orbit->add_option("--samples", samples, "Members to sample");
  orbit->add_option("--seed", seed, "Sampler seed");
  orbit->add_option("--bound", bound, "Position bound B");

  std::string replay_path;
  auto* rp = app.add_subcommand("replay", "Re-run the case recorded in a failure report");
  rp->add_option("file", replay_path, "Report line or payload (JSON)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(config);
    if (*list) return cmd_list();
    if (*check) return cmd_check(ca);
    if (*project) return cmd_project(config, cond_path, beta, ctx_path, max_level);
    if (*orbit) return cmd_orbit(config, name_path, group_path, samples, seed, bound);
    if (*rp) return cmd_replay(replay_path);
  } catch (const Failure& f) {
    std::cerr << "error: " << describe(f.error()) << "\n";
    return 2;
  }
  return 0;
}
