#include "forcelab/skeleton.hpp"

#include <algorithm>

namespace forcelab {

std::string_view kind_name(LevelKind k) {
  switch (k) {
    case LevelKind::Base: return "base";
    case LevelKind::Omega: return "omega";
    case LevelKind::Successor: return "successor";
    case LevelKind::Limit: return "limit";
  }
  return "?";
}

std::optional<LevelKind> parse_kind(std::string_view s) {
  if (s == "base") return LevelKind::Base;
  if (s == "omega") return LevelKind::Omega;
  if (s == "successor") return LevelKind::Successor;
  if (s == "limit") return LevelKind::Limit;
  return std::nullopt;
}

std::optional<Level> Skeleton::find(std::string_view name) const {
  for (Level l = 0; l < size(); ++l)
    if (levels[l].name == name) return l;
  return std::nullopt;
}

Errors validate_skeleton(const Skeleton& s) {
  Errors errs;
  if (s.levels.size() < 2) {
    errs.push_back(make_error(Code::BadLevelOrder, "need a base and an omega level"));
    return errs;
  }
  if (s.levels[0].kind != LevelKind::Base)
    errs.push_back(make_error(Code::BadLevelOrder, "first level must be base"));
  if (s.levels[1].kind != LevelKind::Omega)
    errs.push_back(make_error(Code::BadLevelOrder, "second level must be omega"));
  for (Level l = 2; l < s.size(); ++l) {
    auto k = s.levels[l].kind;
    if (k == LevelKind::Base || k == LevelKind::Omega)
      errs.push_back(make_error(Code::BadLevelOrder, "duplicate base/omega at " + s.levels[l].name));
    if (k == LevelKind::Limit && s.levels[l - 1].kind == LevelKind::Limit)
      errs.push_back(make_error(Code::BadLevelOrder, "adjacent limits at " + s.levels[l].name));
  }
  for (Level l = 1; l < s.size(); ++l) {
    if (s.levels[l].f < 2)
      errs.push_back(make_error(Code::FTooSmall, s.levels[l].name + " has f < 2"));
    if (l >= 2 && s.levels[l].f < s.levels[l - 1].f)
      errs.push_back(make_error(Code::NonMonotoneF, "f drops at " + s.levels[l].name));
  }
  if (s.block_width == 0) errs.push_back(make_error(Code::ConfigError, "block_width must be positive"));
  for (auto [lvl, cap] : s.caps) {
    if (lvl >= s.size() || s.levels[lvl].kind != LevelKind::Limit)
      errs.push_back(make_error(Code::ConfigError, "cap on a non-limit level"));
    else if (cap == 0)
      errs.push_back(make_error(Code::ConfigError, "cap must be positive"));
  }
  return errs;
}

std::optional<Level> limit_below(const Skeleton& s, Level l) {
  for (Level m = l; m-- > 0;)
    if (s.levels[m].kind == LevelKind::Limit) return m;
  return std::nullopt;
}

std::uint32_t f_lim(const Skeleton& s, Level l) {
  switch (s.levels[l].kind) {
    case LevelKind::Base: return 1;
    case LevelKind::Limit:
    case LevelKind::Omega: return s.levels[l].f;
    case LevelKind::Successor: {
      auto lim = limit_below(s, l);
      return lim ? s.levels[*lim].f : s.levels[1].f;
    }
  }
  return 1;
}

std::vector<Level> succ_prime(const Skeleton& s) {
  std::vector<Level> out;
  std::uint32_t best = 0;
  bool first = true;
  for (Level l = 0; l < s.size(); ++l) {
    if (s.levels[l].kind != LevelKind::Successor) continue;
    if (first || s.levels[l].f > best) out.push_back(l);
    best = first ? s.levels[l].f : std::max(best, s.levels[l].f);
    first = false;
  }
  return out;
}

bool in_succ_prime(const Skeleton& s, Level l) {
  auto sp = succ_prime(s);
  return std::find(sp.begin(), sp.end(), l) != sp.end();
}

Skeleton skel_a() {
  Skeleton s;
  s.levels = {{"0", LevelKind::Base, 1},
              {"aleph0", LevelKind::Omega, 2},
              {"aleph1", LevelKind::Successor, 2},
              {"alephw", LevelKind::Limit, 3},
              {"alephw1", LevelKind::Successor, 3}};
  s.block_width = 4;
  return s;
}

Skeleton skel_h() {
  Skeleton s = skel_a();
  for (Level l = 1; l < s.size(); ++l) s.levels[l].f = 8;
  s.block_width = 8;
  return s;
}

}  // namespace forcelab
