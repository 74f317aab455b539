// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "bifrm/verify.hpp"

using namespace bifrm;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(int criterion, const std::string& description, bool ok, double secs,
            const std::string& detail = "") {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << description
            << " (" << secs << " s)";
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

// run the named subset of the registry; nothing may fail
bool run_subset(const SuiteConfig& cfg, const std::set<std::string>& names, std::string& detail,
                int* checked = nullptr, int* skipped = nullptr) {
  std::vector<Theorem> selected;
  for (const Theorem& t : default_theorems())
    if (names.count(t.name)) selected.push_back(t);
  if (selected.size() != names.size()) {
    detail = "registry is missing a requested theorem";
    return false;
  }
  Report r = verify(cfg, selected);
  bool ok = true;
  for (const auto& res : r.results) {
    if (checked) *checked += res.checked;
    if (skipped) *skipped += res.skipped;
    if (res.status == "fail") {
      ok = false;
      detail = res.name + ": " + res.note;
      if (!res.counterexample.is_null()) detail += " " + res.counterexample.dump();
    }
  }
  return ok;
}

BispacePtr make_space(int n, std::vector<PointSet> tp, std::vector<PointSet> tm) {
  return std::make_shared<Bispace>(n, std::move(tp), std::move(tm));
}

}  // namespace

int main() {
  Caps& caps = Caps::global();
  caps.max_congruence_carrier = 512;  // exhaustive congruence families at 3 points

  // 1. adjunction suite on every bispace with at most 3 points
  {
    Timer t;
    SuiteConfig cfg;
    cfg.family.max_points = 3;
    cfg.caps = caps;
    std::string detail;
    bool ok = run_subset(cfg,
                         {"finitary-adjunction-triangles", "coreflection-triangles",
                          "dframe-adjunction-triangles", "open-set-functor-composites"},
                         detail);
    double secs = t.seconds();
    report(1, "unit-counit triangles of all three adjunctions, bispaces <= 3 points", ok, secs,
           detail);
    if (secs > 120) report(1, "runtime bound (< 2 minutes)", false, secs);
  }

  // 2. chain example, n = 2..5
  {
    Timer t;
    SuiteConfig cfg;
    cfg.caps = caps;
    std::string detail;
    bool ok = run_subset(cfg, {"chain-example"}, detail);
    double secs = t.seconds();
    report(2, "chain bispaces: bisober, not pairwise T1, spectrum bihomeomorphic", ok, secs,
           detail);
    if (secs > 1.0) report(2, "runtime bound (< 1 s)", false, secs);
  }

  // 3. skula/assembly: alpha bihomeomorphism and the anti-isomorphism
  {
    Timer t;
    SuiteConfig cfg;
    cfg.family.max_points = 3;
    cfg.caps = caps;
    std::string detail;
    bool ok = run_subset(
        cfg, {"skula-assembly-bihomeomorphism", "assembly-anti-isomorphism"}, detail);
    double secs = t.seconds();
    report(3, "skula bispectrum vs assembly bispectrum, bispaces <= 3 points", ok, secs, detail);
    if (secs > 300) report(3, "runtime bound (< 5 minutes)", false, secs);
  }

  // 4. spectra chain strictness and the inclusion chain
  {
    Timer t;
    std::string detail;
    bool ok = true;
    auto x = make_space(2, {0b01}, {0b01});
    std::size_t fin_points = bipoints(b_omega_fin(*x).biframe).pairs.size();
    std::size_t d_points = dpoints(d_omega(*x).dframe).pairs.size();
    if (fin_points != 2 || d_points != 4) {
      ok = false;
      detail = "strictness witness counts are " + std::to_string(fin_points) + " and " +
               std::to_string(d_points);
    }
    SuiteConfig cfg;
    cfg.family.max_points = 3;
    cfg.caps = caps;
    if (ok) ok = run_subset(cfg, {"spectra-inclusion-chain"}, detail);
    report(4, "spectra chain strictness witness and inclusion chain", ok, t.seconds(), detail);
  }

  // 5. bi-TD equivalences
  {
    Timer t;
    std::string detail;
    SuiteConfig cfg;
    cfg.family.max_points = 3;
    cfg.caps = caps;
    bool ok = run_subset(cfg, {"final-equivalence"}, detail);
    if (ok) {
      SuiteConfig cfg4;
      cfg4.family.max_points = 4;
      cfg4.caps = caps;
      ok = run_subset(cfg4, {"bitd-characterizations"}, detail);
    }
    if (ok) {
      // explicit negative: the double-indiscrete two-point bispace fails all four
      auto x = make_space(2, {}, {});
      if (separation(*x, SeparationAxiom::biTD) || patch(skula(*x)).size() == 4) {
        ok = false;
        detail = "double-indiscrete bispace unexpectedly bi-TD";
      }
    }
    report(5, "final equivalence on test biframes; bi-TD characterizations <= 4 points", ok,
           t.seconds(), detail);
  }

  // 6. oracle equivalences
  {
    Timer t;
    std::string detail;
    SuiteConfig cfg;
    cfg.family.max_points = 3;
    cfg.caps = caps;
    int checked = 0, skipped = 0;
    bool ok = run_subset(cfg,
                         {"bipoint-oracle-equality", "free-presentation-isomorphism",
                          "witnessed-quotient-composition"},
                         detail, &checked, &skipped);
    report(6, "two-route oracles: bipoints, assembly presentations, witnessed quotients", ok,
           t.seconds(),
           ok ? "" : detail + " (checked " + std::to_string(checked) + ", cap-skipped " +
                         std::to_string(skipped) + ")");
  }

  // 7. operator laws
  {
    Timer t;
    std::string detail;
    SuiteConfig cfg;
    cfg.family.max_points = 3;
    cfg.caps = caps;
    bool ok = run_subset(cfg,
                         {"finitary-interior-laws", "bisp-interior-laws", "bisob-closure-laws",
                          "bpt-coframe-isomorphism"},
                         detail);
    report(7, "interior/closure operator laws over all congruences and subsets", ok, t.seconds(),
           detail);
  }

  // 8. honest coverage: the documented non-checks are present in the report
  {
    Timer t;
    SuiteConfig cfg;
    cfg.family.max_points = 1;
    cfg.caps = caps;
    Report r = verify(cfg);
    int documented = 0;
    bool has_infinite = false, has_collapse = false;
    for (const auto& res : r.results)
      if (res.status == "documented") {
        ++documented;
        if (res.name == "infinite-counterexample") has_infinite = true;
        if (res.name == "finitary-collapse-note") has_collapse = true;
      }
    bool ok = documented == 2 && has_infinite && has_collapse;
    report(8, "report lists the infinite counterexample and the finite-scale collapse", ok,
           t.seconds());
  }

  std::cout << (failures == 0 ? "acceptance passed" : "ACCEPTANCE FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
