#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "forcelab/harness/config.hpp"
#include "forcelab/harness/generators.hpp"
#include "forcelab/harness/registry.hpp"
#include "forcelab/harness/runner.hpp"
#include "forcelab/harness/serialize.hpp"
#include "forcelab/names.hpp"

using namespace forcelab;

namespace {

const std::vector<std::string> kIds{
    "P0-POSET",     "P0-SPLIT-DENSE", "P0-ANTICHAIN",     "P0-RESTRICT-DENSE", "P1-POSET",   "HOMOG0",
    "HOMOG1",       "A0-GROUP",       "A1-GROUP-EXT",     "DPI-CLOSURE",       "FIX1-COLUMN", "NORMALITY",
    "NAME-BAR-VAL", "NAME-EQUIVARIANCE", "SYM-CANONICAL", "CLOUD-DISJOINT",    "CLOUD-DIFF-DENSE",
    "QT-POSET",     "RHO0-PROJ",      "RHO1-PROJ",        "TQQ-ISO",           "TPI-COMMUTE", "MBETA-ENUM"};

RunConfig config(std::string id, Mode mode, std::uint64_t cases, std::uint32_t bound = 1) {
  RunConfig c;
  c.skeleton = skel_a();
  c.properties = {std::move(id)};
  c.mode = mode;
  c.cases = cases;
  c.bound = bound;
  c.seed = 11;
  return c;
}

std::vector<std::string> stream(const RunConfig& c) {
  std::vector<std::string> out;
  auto r = run(c, [&](const CaseReport& rep) { out.push_back(report_line(rep, false)); });
  EXPECT_TRUE(r.ok());
  return out;
}

}  // namespace

TEST(Registry, EveryPropertyRegisteredOnce) {
  std::set<std::string> seen;
  for (const auto& p : registry()) {
    EXPECT_TRUE(seen.insert(p.id).second) << p.id;
    EXPECT_FALSE(p.statement.empty()) << p.id;
    EXPECT_TRUE(p.make) << p.id;
  }
  EXPECT_EQ(seen, std::set<std::string>(kIds.begin(), kIds.end()));
  for (const auto& id : kIds) EXPECT_NE(find_property(id), nullptr) << id;
  EXPECT_EQ(find_property("NOPE"), nullptr);
}

TEST(Registry, InvariantTableCoversModulesAndResolves) {
  std::set<std::string> modules, covered;
  for (const auto& e : invariant_table()) {
    modules.insert(e.module);
    EXPECT_FALSE(e.properties.empty()) << e.invariant;
    for (const auto& id : e.properties) {
      EXPECT_NE(find_property(id), nullptr) << id;
      covered.insert(id);
    }
  }
  EXPECT_EQ(modules, (std::set<std::string>{"core", "conditions", "automorphisms", "names", "quotient"}));
  EXPECT_EQ(covered, std::set<std::string>(kIds.begin(), kIds.end()));
}

// Failing records carry inputs and replay payloads, so a mutated run makes
// the comparison meaningful.
TEST(Runner, SameSeedSameStream) {
  auto c = config("RHO1-PROJ", Mode::Sampled, 60, 2);
  c.mutation = Mutation::Rho1NoTruncate;
  auto a = stream(c);
  auto b = stream(c);
  ASSERT_EQ(a.size(), 60u);
  EXPECT_EQ(a, b);
  c.jobs = 3;
  EXPECT_EQ(stream(c), a);
  c.jobs = 1;
  c.seed = 12;
  EXPECT_NE(stream(c), a);
}

TEST(Runner, ExhaustiveCountsAndSummary) {
  auto c = config("A0-GROUP", Mode::Exhaustive, 0);
  std::uint64_t n = 0;
  auto r = run(c, [&](const CaseReport&) { ++n; });
  ASSERT_TRUE(r.ok());
  EXPECT_FALSE(r->any_fail());
  EXPECT_EQ(r->total(Status::Pass) + r->total(Status::Skip), n);
  EXPECT_GT(n, 0u);
}

TEST(Runner, ConfigErrors) {
  auto unknown = run(config("NOPE", Mode::Sampled, 1), [](const CaseReport&) {});
  ASSERT_FALSE(unknown.ok());
  EXPECT_EQ(unknown.error().code, Code::ConfigError);

  auto no_ex = run(config("TQQ-ISO", Mode::Exhaustive, 0), [](const CaseReport&) {});
  ASSERT_FALSE(no_ex.ok());
  EXPECT_EQ(no_ex.error().code, Code::ConfigError);

  auto c = config("P0-POSET", Mode::Sampled, 1);
  c.bound = 0;
  EXPECT_FALSE(validate_config(c).empty());
  c = config("P0-POSET", Mode::Sampled, 1);
  c.skeleton.levels[2].f = 1;
  EXPECT_FALSE(run(c, [](const CaseReport&) {}).ok());
}

TEST(Replay, FailureReproducesUnderItsMutation) {
  auto c = config("P0-POSET", Mode::Exhaustive, 0);
  c.mutation = Mutation::Leq0IgnoreLabels;
  c.stop_on_fail = true;
  io::json payload;
  std::string detail;
  auto r = run(c, [&](const CaseReport& rep) {
    if (rep.status == Status::Fail) {
      payload = rep.payload;
      detail = rep.detail;
    }
  });
  ASSERT_TRUE(r.ok());
  ASSERT_TRUE(r->any_fail());
  ASSERT_FALSE(payload.is_null());
  auto again = replay(payload);
  ASSERT_TRUE(again.ok());
  EXPECT_EQ(again->status, Status::Fail);
  EXPECT_EQ(again->detail, detail);
  EXPECT_EQ(active_mutation(), Mutation::None);

  // The full report line replays too.
  CaseReport rep;
  rep.property = "P0-POSET";
  rep.status = Status::Fail;
  rep.payload = payload;
  auto from_line = replay_text(report_line(rep));
  ASSERT_TRUE(from_line.ok());
  EXPECT_EQ(from_line->status, Status::Fail);
}

TEST(Replay, SampledFailureReproduces) {
  auto c = config("RHO1-PROJ", Mode::Sampled, 200, 2);
  c.mutation = Mutation::Rho1NoTruncate;
  c.stop_on_fail = true;
  io::json payload;
  auto r = run(c, [&](const CaseReport& rep) {
    if (rep.status == Status::Fail) payload = rep.payload;
  });
  ASSERT_TRUE(r.ok());
  ASSERT_FALSE(payload.is_null());
  auto again = replay(payload);
  ASSERT_TRUE(again.ok());
  EXPECT_EQ(again->status, Status::Fail);
}

TEST(Replay, MalformedInputIsParseError) {
  for (const char* text : {"{not json", "[]", "{\"property\":\"P0-POSET\"}", "{\"payload\":{\"property\":42}}"}) {
    auto r = replay_text(text);
    ASSERT_FALSE(r.ok()) << text;
    EXPECT_EQ(r.error().code, Code::ParseError) << text;
  }
}

TEST(Config, YamlRoundTrip) {
  for (const Skeleton& s : {skel_a(), skel_h()}) {
    auto back = parse_skeleton_yaml(skeleton_yaml(s));
    ASSERT_TRUE(back.ok()) << describe(back.error());
    EXPECT_EQ(skeleton_yaml(*back), skeleton_yaml(s));
    EXPECT_EQ(back->block_width, s.block_width);
    EXPECT_EQ(back->size(), s.size());
  }
  auto file = load_skeleton(std::string(FORCELAB_SOURCE_DIR) + "/configs/skel_a.yaml");
  ASSERT_TRUE(file.ok());
  EXPECT_EQ(skeleton_yaml(*file), skeleton_yaml(skel_a()));
}

TEST(Config, YamlErrors) {
  EXPECT_EQ(parse_skeleton_yaml("levels: [").error().code, Code::ParseError);
  EXPECT_EQ(parse_skeleton_yaml("levels: []").error().code, Code::ConfigError);
  EXPECT_EQ(parse_skeleton_yaml("levels:\n  - {name: a, kind: weird}\nblock_width: 2\n").error().code,
            Code::ConfigError);
  EXPECT_FALSE(load_skeleton("/nonexistent/skel.yaml").ok());
}

TEST(Serialize, RoundTrips) {
  const Skeleton s = skel_a();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Cond0 c0 = gen_cond0(s, seed, 3, 3);
    EXPECT_EQ(io::decode_cond0(io::parse(io::line(io::encode(c0)))), c0);
    Cond1 c1 = gen_cond1(s, seed, 3, 3);
    EXPECT_EQ(io::decode_cond1(io::encode(c1)), c1);
    ProductCond p{c0, c1};
    EXPECT_EQ(io::decode_product(io::encode(p)), p);
    Aut0 a0 = gen_aut0(s, seed, 3);
    EXPECT_EQ(canonical0(io::decode_aut0(io::encode(a0), s)), canonical0(a0));
    Aut1 a1 = gen_aut1(s, seed, 3, 3);
    EXPECT_EQ(io::encode(io::decode_aut1(io::encode(a1))), io::encode(a1));
  }
  PName x = g0_branch(s, 2, 1, 2);
  EXPECT_EQ(io::decode_name(io::encode(x)), x);
  EXPECT_EQ(io::decode_skeleton(io::encode(s)).levels.size(), s.levels.size());
  EXPECT_THROW(io::decode_cond0(io::json::array()), Failure);
}

TEST(Generators, ValidAcrossSeedsAndSizes) {
  for (const Skeleton& s : {skel_a(), skel_h()}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      unsigned size = static_cast<unsigned>(seed % 5);
      EXPECT_TRUE(validate_cond0(s, gen_cond0(s, seed, size, 3)).empty()) << seed;
      EXPECT_TRUE(validate_cond1(s, gen_cond1(s, seed, size, 3)).empty()) << seed;
      EXPECT_TRUE(valid_aut0(s, gen_aut0(s, seed, size))) << seed;
      EXPECT_TRUE(validate_aut1(s, gen_aut1(s, seed, size, 3)).empty()) << seed;
      EXPECT_TRUE(filter_valid(s, gen_filter(s, seed, size, 3))) << seed;
    }
  }
}

TEST(Generators, SizeZeroIsTop) {
  const Skeleton s = skel_a();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_TRUE(gen_cond0(s, seed, 0, 2).tree.size() <= 1u);
    EXPECT_TRUE(gen_cond1(s, seed, 0, 2).empty());
    EXPECT_EQ(canonical0(gen_aut0(s, seed, 0)), canonical0(identity0()));
  }
}

TEST(Generators, ShrinksAreSmallerAndValid) {
  const Skeleton s = skel_a();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Cond0 p = gen_cond0(s, seed, 4, 2);
    for (const auto& q : shrink_cond0(s, p)) {
      EXPECT_TRUE(validate_cond0(s, q).empty());
      EXPECT_TRUE(leq0(p, q) || q.tree.size() < p.tree.size());
    }
    Cond1 c = gen_cond1(s, seed, 4, 2);
    for (const auto& d : shrink_cond1(c)) EXPECT_TRUE(validate_cond1(s, d).empty());
  }
}

TEST(Generators, ExtensionsLieBelow) {
  const Skeleton s = skel_a();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    Cond0 p = gen_cond0(s, rng, 3, 2);
    Cond0 q = gen_extension0(s, rng, p, 3, 2);
    EXPECT_TRUE(validate_cond0(s, q).empty());
    EXPECT_TRUE(leq0(q, p));
    EXPECT_TRUE(leq0(p, gen_weakening0(rng, p)));
    Cond1 c = gen_cond1(s, rng, 3, 2);
    Cond1 d = gen_extension1(s, rng, c, 3, 2);
    EXPECT_TRUE(leq1(d, c));
  }
}
