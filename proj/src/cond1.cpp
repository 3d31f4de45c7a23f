#include "forcelab/cond1.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace forcelab {

namespace {

std::optional<std::size_t> index_of(const std::vector<std::uint32_t>& v, std::uint32_t x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

bool sorted_unique(const std::vector<std::uint32_t>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

bool includes(const std::vector<std::uint32_t>& big, const std::vector<std::uint32_t>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<std::uint32_t> merged(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::optional<std::uint8_t> Block::at(std::uint32_t x, std::uint32_t y) const {
  auto xi = index_of(xs, x);
  auto yi = index_of(ys, y);
  if (!xi || !yi) return std::nullopt;
  return cell(*xi, *yi);
}

const Block* Cond1::find(Level l) const {
  for (const auto& b : blocks)
    if (b.level == l) return &b;
  return nullptr;
}

Block* Cond1::find_mut(Level l) {
  for (auto& b : blocks)
    if (b.level == l) return &b;
  return nullptr;
}

std::vector<Level> Cond1::support() const {
  std::vector<Level> out;
  for (const auto& b : blocks) out.push_back(b.level);
  return out;
}

void Cond1::put(Block b) {
  auto it = std::lower_bound(blocks.begin(), blocks.end(), b.level,
                             [](const Block& x, Level l) { return x.level < l; });
  bool present = it != blocks.end() && it->level == b.level;
  if (b.empty()) {
    if (present) blocks.erase(it);
    return;
  }
  if (present)
    *it = std::move(b);
  else
    blocks.insert(it, std::move(b));
}

Block make_block(Level l, std::vector<std::uint32_t> xs, std::vector<std::uint32_t> ys,
                 std::vector<std::uint8_t> bits) {
  Block b{l, std::move(xs), std::move(ys), std::move(bits)};
  if (b.bits.empty()) b.bits.assign(b.xs.size() * b.ys.size(), 0);
  return b;
}

Errors validate_cond1(const Skeleton& s, const Cond1& p) {
  Errors errs;
  auto sp = succ_prime(s);
  for (std::size_t k = 0; k < p.blocks.size(); ++k) {
    const Block& b = p.blocks[k];
    std::string at = "block at level " + std::to_string(b.level);
    if (k > 0 && p.blocks[k - 1].level >= b.level)
      errs.push_back(make_error(Code::NonRectangular, "blocks out of order at level " + std::to_string(b.level)));
    if (std::find(sp.begin(), sp.end(), b.level) == sp.end()) {
      errs.push_back(make_error(Code::IndexOutOfRange, at + " is not a Succ' level"));
      continue;
    }
    if (!sorted_unique(b.xs) || !sorted_unique(b.ys) || b.bits.size() != b.xs.size() * b.ys.size() ||
        b.empty())
      errs.push_back(make_error(Code::NonRectangular, at));
    for (auto y : b.ys)
      if (y >= s.f(b.level)) errs.push_back(make_error(Code::IndexOutOfRange, at + " column " + std::to_string(y)));
    for (auto v : b.bits)
      if (v > 1) errs.push_back(make_error(Code::NonRectangular, at + " non-binary entry"));
  }
  return errs;
}

bool leq1(const Cond1& q, const Cond1& p) {
  for (const auto& bp : p.blocks) {
    const Block* bq = q.find(bp.level);
    if (!bq || !includes(bq->xs, bp.xs) || !includes(bq->ys, bp.ys)) return false;
    for (std::size_t xi = 0; xi < bp.xs.size(); ++xi)
      for (std::size_t yi = 0; yi < bp.ys.size(); ++yi)
        if (*bq->at(bp.xs[xi], bp.ys[yi]) != bp.cell(xi, yi)) return false;
  }
  return true;
}

bool compat1(const Cond1& p, const Cond1& q) {
  for (const auto& bp : p.blocks) {
    const Block* bq = q.find(bp.level);
    if (!bq) continue;
    for (std::size_t xi = 0; xi < bp.xs.size(); ++xi)
      for (std::size_t yi = 0; yi < bp.ys.size(); ++yi) {
        auto v = bq->at(bp.xs[xi], bp.ys[yi]);
        if (v && *v != bp.cell(xi, yi)) return false;
      }
  }
  return true;
}

Outcome<Cond1> union1(const Cond1& p, const Cond1& q) {
  Cond1 out = p;
  for (const auto& bq : q.blocks) {
    const Block* bp = p.find(bq.level);
    if (!bp) {
      out.put(bq);
      continue;
    }
    Block u = make_block(bq.level, merged(bp->xs, bq.xs), merged(bp->ys, bq.ys), {});
    std::string free;
    for (std::size_t xi = 0; xi < u.xs.size(); ++xi)
      for (std::size_t yi = 0; yi < u.ys.size(); ++yi) {
        auto a = bp->at(u.xs[xi], u.ys[yi]);
        auto b = bq.at(u.xs[xi], u.ys[yi]);
        if (a && b && *a != *b)
          return make_error(Code::Incompatible, "level " + std::to_string(u.level) + " cell (" +
                                                    std::to_string(u.xs[xi]) + "," + std::to_string(u.ys[yi]) + ")");
        if (!a && !b) {
          free += " (" + std::to_string(u.level) + ":" + std::to_string(u.xs[xi]) + "," +
                  std::to_string(u.ys[yi]) + ")";
          continue;
        }
        u.cell(xi, yi) = a ? *a : *b;
      }
    if (!free.empty()) return make_error(Code::FreeCells, "unconstrained cells" + free);
    out.put(std::move(u));
  }
  return out;
}

Cond1 restrict1_band(const Cond1& p, Level lo, Level hi) {
  Cond1 out;
  for (const auto& b : p.blocks)
    if (b.level >= lo && b.level <= hi) out.blocks.push_back(b);
  return out;
}

Cond1 restrict1_cols(const Cond1& p, const std::vector<std::pair<Level, std::uint32_t>>& cols) {
  Cond1 out;
  for (const auto& b : p.blocks) {
    std::vector<std::uint32_t> keep;
    for (auto [l, y] : cols)
      if (l == b.level && index_of(b.ys, y)) keep.push_back(y);
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (keep.empty()) continue;
    Block nb = make_block(b.level, b.xs, keep, {});
    for (std::size_t xi = 0; xi < nb.xs.size(); ++xi)
      for (std::size_t yi = 0; yi < keep.size(); ++yi) nb.cell(xi, yi) = *b.at(nb.xs[xi], keep[yi]);
    out.blocks.push_back(std::move(nb));
  }
  return out;
}

Block block(const Cond1& p, Level l) {
  const Block* b = p.find(l);
  return b ? *b : Block{l, {}, {}, {}};
}

}  // namespace forcelab
