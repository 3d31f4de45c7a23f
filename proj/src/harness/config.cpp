#include "forcelab/harness/config.hpp"

#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "forcelab/harness/registry.hpp"

namespace forcelab {

namespace {

Error config_error(std::string d) { return make_error(Code::ConfigError, std::move(d)); }

}  // namespace

Outcome<Skeleton> parse_skeleton_yaml(const std::string& text) {
  Skeleton s;
  try {
    YAML::Node root = YAML::Load(text);
    if (!root.IsMap()) return config_error("skeleton file must be a mapping");
    YAML::Node levels = root["levels"];
    if (!levels || !levels.IsSequence()) return config_error("'levels' must be a sequence");
    for (const auto& e : levels) {
      if (!e.IsMap() || !e["name"] || !e["kind"]) return config_error("each level needs name and kind");
      LevelSpec l;
      l.name = e["name"].as<std::string>();
      auto k = parse_kind(e["kind"].as<std::string>());
      if (!k) return config_error("unknown level kind '" + e["kind"].as<std::string>() + "'");
      l.kind = *k;
      if (l.kind == LevelKind::Base) {
        l.f = 1;
      } else {
        if (!e["f"]) return config_error("level '" + l.name + "' needs f");
        l.f = e["f"].as<std::uint32_t>();
      }
      s.levels.push_back(std::move(l));
    }
    if (!root["block_width"]) return config_error("'block_width' is required");
    s.block_width = root["block_width"].as<std::uint32_t>();
    if (YAML::Node caps = root["caps"]) {
      if (!caps.IsMap()) return config_error("'caps' must be a mapping");
      for (const auto& kv : caps) {
        const std::string key = kv.first.as<std::string>();
        auto l = s.find(key);
        if (!l) return config_error("cap on unknown level '" + key + "'");
        s.caps[*l] = kv.second.as<std::uint32_t>();
      }
    }
  } catch (const YAML::Exception& e) {
    return make_error(Code::ParseError, e.what());
  }
  auto errs = validate_skeleton(s);
  if (!errs.empty()) return errs.front();
  return s;
}

Outcome<Skeleton> load_skeleton(const std::string& path) {
  std::ifstream in(path);
  if (!in) return config_error("cannot open skeleton file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_skeleton_yaml(buf.str());
}

std::string skeleton_yaml(const Skeleton& s) {
  YAML::Emitter out;
  out << YAML::BeginMap << YAML::Key << "levels" << YAML::Value << YAML::BeginSeq;
  for (const auto& l : s.levels) {
    out << YAML::Flow << YAML::BeginMap << YAML::Key << "name" << YAML::Value << l.name << YAML::Key << "kind"
        << YAML::Value << std::string(kind_name(l.kind));
    if (l.kind != LevelKind::Base) out << YAML::Key << "f" << YAML::Value << l.f;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::Key << "block_width" << YAML::Value << s.block_width;
  if (!s.caps.empty()) {
    out << YAML::Key << "caps" << YAML::Value << YAML::Flow << YAML::BeginMap;
    for (auto [l, c] : s.caps) out << YAML::Key << s.name(l) << YAML::Value << c;
    out << YAML::EndMap;
  }
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

Skeleton RunConfig::effective_skeleton() const {
  Skeleton s = skeleton;
  if (width) s.block_width = *width;
  return s;
}

Errors validate_config(const RunConfig& cfg) {
  Errors errs;
  auto bad = [&](std::string d) { errs.push_back(config_error(std::move(d))); };
  for (auto& e : validate_skeleton(cfg.effective_skeleton())) bad("skeleton: " + describe(e));
  if (cfg.bound < 1) bad("bound B must be at least 1");
  if (cfg.width && *cfg.width == 0) bad("width override must be positive");
  if (cfg.jobs == 0) bad("jobs must be positive");
  if (cfg.properties.empty()) bad("no property selected");
  for (const auto& id : cfg.properties) {
    if (id == "all") continue;
    const PropertyInfo* info = find_property(id);
    if (!info) {
      bad("unknown property id '" + id + "'");
      continue;
    }
    if (cfg.mode == Mode::Exhaustive && !info->exhaustible) bad(id + " has no exhaustive mode");
  }
  return errs;
}

}  // namespace forcelab
