#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "forcelab/automorphisms.hpp"
#include "forcelab/product.hpp"

namespace forcelab {

// Deterministic source: mt19937_64 reduced by modulo, so streams are
// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  std::uint32_t below(std::uint64_t n) { return n == 0 ? 0 : static_cast<std::uint32_t>(eng_() % n); }
  bool coin() { return (eng_() & 1u) != 0; }
  bool chance(std::uint32_t num, std::uint32_t den) { return below(den) < num; }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

// Seed for case `serial` of a run seeded with `seed` (splitmix64 finalizer).
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t serial);

// Generators. `size` scales the shape (0 gives the maximal element); labels
// and P1 rows use positions below `bound`. Every result validates.
//
// gen_cond0: up to size+1 chains to random levels, each ancestor reusing an
//   existing vertex with probability 2/3; every labelable vertex gets a label
//   with probability 1/2, each position below bound set with probability 1/2.
// gen_cond1: each Succ' level independently with probability size/(size+1),
//   random nonempty rows below bound and columns below F, uniform bits.
// gen_aut0: `size` transpositions on uniform levels, half inside one block.
// gen_aut1: each Succ' level with probability 1/2; |supp| <= min(2, size),
//   one optional extra dom_y line, dom_x a random subset of [0, bound),
//   uniform flips off supp, colmaps identity or a uniform shuffle.
// gen_filter: a random condition and up to size+1 random weakenings of it
//   (pairwise compatible by construction).
Cond0 gen_cond0(const Skeleton& s, Rng& rng, unsigned size, std::uint32_t bound);
Cond0 gen_cond0(const Skeleton& s, std::uint64_t seed, unsigned size, std::uint32_t bound);
Cond1 gen_cond1(const Skeleton& s, Rng& rng, unsigned size, std::uint32_t bound);
Cond1 gen_cond1(const Skeleton& s, std::uint64_t seed, unsigned size, std::uint32_t bound);
Aut0 gen_aut0(const Skeleton& s, Rng& rng, unsigned size);
Aut0 gen_aut0(const Skeleton& s, std::uint64_t seed, unsigned size);
Aut1 gen_aut1(const Skeleton& s, Rng& rng, unsigned size, std::uint32_t bound);
Aut1 gen_aut1(const Skeleton& s, std::uint64_t seed, unsigned size, std::uint32_t bound);
FilterP gen_filter(const Skeleton& s, Rng& rng, unsigned size, std::uint32_t bound);
FilterP gen_filter(const Skeleton& s, std::uint64_t seed, unsigned size, std::uint32_t bound);

// Random q <= p: new branches, longer branches and extra bits.
Cond0 gen_extension0(const Skeleton& s, Rng& rng, const Cond0& p, unsigned size, std::uint32_t bound);
// Random q <= p: wider rectangles and new blocks.
Cond1 gen_extension1(const Skeleton& s, Rng& rng, const Cond1& p, unsigned size, std::uint32_t bound);
// Random p >= q: bits, leaves, rows and columns dropped.
Cond0 gen_weakening0(Rng& rng, const Cond0& q);
Cond1 gen_weakening1(Rng& rng, const Cond1& q);
// Random member of D_pi below p: blocks at levels of pi widened to its
// rectangles, new cells uniform.
Cond1 fill_into_domain(Rng& rng, const Cond1& p, const Aut1& pi);
// Random labels (positions below bound) on a fixed tree.
Cond0 relabel0(const Skeleton& s, Rng& rng, const FlimTree& t, std::uint32_t bound);

// One-step shrinks, each strictly smaller and still valid.
std::vector<Cond0> shrink_cond0(const Skeleton& s, const Cond0& p);
std::vector<Cond1> shrink_cond1(const Cond1& p);
std::vector<Aut0> shrink_aut0(const Aut0& a);
std::vector<Aut1> shrink_aut1(const Aut1& a);

// Greedy minimization: follow the first shrink that still fails.
template <class T>
T minimize(T value, const std::function<std::vector<T>(const T&)>& shrinks,
           const std::function<bool(const T&)>& still_fails, int max_steps = 200) {
  for (int step = 0; step < max_steps; ++step) {
    bool moved = false;
    for (auto& c : shrinks(value))
      if (still_fails(c)) {
        value = std::move(c);
        moved = true;
        break;
      }
    if (!moved) break;
  }
  return value;
}

}  // namespace forcelab
