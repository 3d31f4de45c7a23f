#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "forcelab/harness/config.hpp"
#include "forcelab/harness/serialize.hpp"

namespace forcelab {

enum class Status : std::uint8_t { Pass, Fail, Skip };
std::string_view status_name(Status s);

struct CaseResult {
  Status status = Status::Pass;
  std::string detail;
  io::json inputs;                               // the concrete case, for reports
  std::map<std::string, std::uint64_t> counters;  // e.g. pool_exhausted

  static CaseResult pass(io::json inputs = {}) { return {Status::Pass, {}, std::move(inputs), {}}; }
  static CaseResult skip(std::string why) { return {Status::Skip, std::move(why), {}, {}}; }
};

// Everything a checker may depend on. Cases are pure functions of
// (Env, mode, case index or serial).
struct Env {
  Skeleton skel;
  std::uint32_t bound = 1;
  std::uint64_t seed = 0;
};

class Checker {
 public:
  virtual ~Checker() = default;
  // Number of exhaustive cases; 0 when the property has no exhaustive mode.
  virtual std::uint64_t exhaustive_size() const { return 0; }
  virtual CaseResult exhaustive(std::uint64_t index) const;
  // One sampled case; `seed` is case_seed(env.seed, serial).
  virtual CaseResult sampled(std::uint64_t serial, std::uint64_t seed) const = 0;
};

struct PropertyInfo {
  std::string id;
  std::string module;
  std::string statement;
  bool exhaustible = false;
  std::function<std::unique_ptr<Checker>(const Env&, Mode)> make;
};

const std::vector<PropertyInfo>& registry();
const PropertyInfo* find_property(std::string_view id);

// Each module invariant with the property ids that check it.
struct InvariantEntry {
  std::string module;
  std::string invariant;
  std::vector<std::string> properties;
};
const std::vector<InvariantEntry>& invariant_table();

// Collects failed checks inside one case.
class Verdict {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok && fails_.size() < 8) fails_.push_back(what);
    if (!ok) ++count_;
  }
  // Lazy form: the message is built only on failure.
  template <std::invocable F>
  void check(bool ok, F&& why) {
    if (!ok) check(false, std::string(why()));
  }
  bool ok() const { return count_ == 0; }
  CaseResult result(io::json inputs) const;

 private:
  std::vector<std::string> fails_;
  std::size_t count_ = 0;
};

}  // namespace forcelab
