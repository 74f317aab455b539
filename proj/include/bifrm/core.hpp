#ifndef BIFRM_CORE_HPP
#define BIFRM_CORE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bifrm {

// Errors shared by all modules. Report-valued operations do not throw;
// constructive operations throw on contract violation.
struct SizeCapExceeded : std::runtime_error {
  explicit SizeCapExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct NotDistributive : std::runtime_error {
  explicit NotDistributive(const std::string& what) : std::runtime_error(what) {}
};
struct ElementNotInFrame : std::runtime_error {
  explicit ElementNotInFrame(const std::string& what) : std::runtime_error(what) {}
};
struct NotInjective : std::runtime_error {
  explicit NotInjective(const std::string& what) : std::runtime_error(what) {}
};
struct NotGenerating : std::runtime_error {
  explicit NotGenerating(const std::string& what) : std::runtime_error(what) {}
};
struct InjectionCollapsed : std::runtime_error {
  explicit InjectionCollapsed(const std::string& what) : std::runtime_error(what) {}
};
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Size caps. All values are overridable programmatically and, in the CLI,
// via --cap / environment variables.
struct Caps {
  int max_frame = 4096;          // elements of any materialized frame
  int max_join_irreducibles = 64;// Birkhoff encoding uses one 64-bit mask
  int max_congruence_carrier = 64;   // carrier size for full congruence lattices
  long long max_hom_candidates = 1'000'000; // |M|^|J(L)| guard for hom-set search
  int max_points = 16;           // points of any bispace
  int max_free_presentation = 4096;  // main component of the four-fold coproduct

  static Caps& global() {
    static Caps caps;
    return caps;
  }
};

inline int popcount64(std::uint64_t v) {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_popcountll(v);
#else
  int c = 0;
  while (v) { v &= v - 1; ++c; }
  return c;
#endif
}

// Validation result used by the report-valued checks.
struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;

  void fail(std::string msg) {
    valid = false;
    violations.push_back(std::move(msg));
  }
  void merge(const ValidationReport& other) {
    if (!other.valid) valid = false;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

}  // namespace bifrm

#endif  // BIFRM_CORE_HPP
