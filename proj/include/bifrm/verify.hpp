#ifndef BIFRM_VERIFY_HPP
#define BIFRM_VERIFY_HPP

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bifrm/assembly.hpp"
#include "bifrm/biframe.hpp"
#include "bifrm/bispace.hpp"
#include "bifrm/dframe.hpp"
#include "bifrm/duality.hpp"
#include "bifrm/enumerate.hpp"
#include "bifrm/frame.hpp"
#include "bifrm/io.hpp"

namespace bifrm {

// --- suite configuration ----------------------------------------------------

struct InstanceFamily {
  int max_points = 2;
  int sample_count = 200;
  std::uint64_t seed = 0;
};

struct SuiteConfig {
  InstanceFamily family;
  Caps caps = Caps::global();
  // functor hooks; swapping one in lets the mutation tests corrupt a functor
  std::function<DFramePtr(const BiframePtr&)> delta =
      [](const BiframePtr& b) { return delta_functor(b); };
};

// --- results ------------------------------------------------------------------

struct TheoremResult {
  std::string name;
  std::string statement;
  std::string status;  // pass | fail | skipped | documented
  int checked = 0;
  int skipped = 0;
  std::string note;
  json counterexample;  // null unless failed
  double wall_ms = 0;
};

struct Report {
  InstanceFamily family;
  std::vector<TheoremResult> results;

  bool all_ok() const {
    for (const auto& r : results)
      if (r.status == "fail") return false;
    return true;
  }

  json to_json(bool with_timing = true) const {
    json j;
    j["family"] = {{"max_points", family.max_points},
                   {"sample_count", family.sample_count},
                   {"seed", family.seed}};
    json arr = json::array();
    for (const auto& r : results) {
      json e = {{"name", r.name},       {"statement", r.statement},
                {"status", r.status},   {"checked", r.checked},
                {"skipped", r.skipped}, {"note", r.note}};
      if (!r.counterexample.is_null()) e["counterexample"] = r.counterexample;
      if (with_timing) e["wall_ms"] = r.wall_ms;
      arr.push_back(e);
    }
    j["theorems"] = arr;
    j["ok"] = all_ok();
    return j;
  }

  std::string to_text(bool with_timing = false) const {
    std::ostringstream os;
    for (const auto& r : results) {
      std::string tag = r.status == "pass"   ? "PASS"
                        : r.status == "fail" ? "FAIL"
                        : r.status == "skipped" ? "SKIP"
                                                : "NOTE";
      os << "[" << tag << "] " << r.name << " (" << r.checked << " checked";
      if (r.skipped) os << ", " << r.skipped << " cap-skipped";
      os << ")";
      if (with_timing) os << " [" << r.wall_ms << " ms]";
      if (!r.note.empty()) os << " -- " << r.note;
      os << "\n";
      if (!r.counterexample.is_null())
        os << "        counterexample: " << r.counterexample.dump() << "\n";
    }
    os << (all_ok() ? "verification passed" : "VERIFICATION FAILED") << "\n";
    return os.str();
  }
};

// --- per-instance derived objects, cached -------------------------------------

struct DerivedObjects {
  BispacePtr x;
  const SuiteConfig* cfg;

  DerivedObjects(BispacePtr space, const SuiteConfig* config)
      : x(std::move(space)), cfg(config) {}

  std::optional<BOmegaResult> bo_;
  std::optional<BOmegaFinResult> bofin_;
  std::optional<DOmegaResult> dom_;
  std::optional<BiframePtr> gamma_;

  const BOmegaResult& bo() {
    if (!bo_) bo_ = b_omega(*x);
    return *bo_;
  }
  const BOmegaFinResult& bofin() {
    if (!bofin_) bofin_ = b_omega_fin(*x, cfg->caps);
    return *bofin_;
  }
  const DOmegaResult& dom() {
    if (!dom_) dom_ = d_omega(*x);
    return *dom_;
  }
  const BiframePtr& gamma_dom() {
    if (!gamma_) gamma_ = gamma_functor(dom().dframe, cfg->caps);
    return *gamma_;
  }

  // the finitary biframes derived from the instance
  std::vector<BiframePtr> finitary_biframes() {
    return {bofin().biframe, gamma_dom()};
  }
};

// --- small helpers shared by checks -------------------------------------------

namespace verify_detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

inline std::vector<std::pair<int, int>> bipoints_four_conditions(const BiframePtr& b,
                                                                 const Caps& caps) {
  auto pp = points(b->lp(), caps);
  auto pm = points(b->lm(), caps);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < pp.size(); ++i)
    for (std::size_t j = 0; j < pm.size(); ++j) {
      bool ok = true;
      b->for_each_generating_inequality([&](int a, int bb, int c, int d) {
        if (pp[i].img[a] == 1 && pm[j].img[bb] == 1 && pp[i].img[c] == 0 && pm[j].img[d] == 0)
          ok = false;
      });
      if (ok) out.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  return out;
}

inline std::vector<std::pair<int, int>> bipoints_by_factoring(const BiframePtr& b,
                                                              const Caps& caps) {
  auto pp = points(b->lp(), caps);
  auto pm = points(b->lm(), caps);
  std::set<std::pair<int, int>> seen;
  for (const FrameMap& g : points(b->l(), caps)) {
    FrameMap gp = compose(g, b->ep());
    FrameMap gm = compose(g, b->em());
    int ip = -1, im = -1;
    for (std::size_t i = 0; i < pp.size(); ++i)
      if (pp[i].img == gp.img) ip = static_cast<int>(i);
    for (std::size_t j = 0; j < pm.size(); ++j)
      if (pm[j].img == gm.img) im = static_cast<int>(j);
    if (ip < 0 || im < 0) return {{-1, -1}};
    seen.insert({ip, im});
  }
  return std::vector<std::pair<int, int>>(seen.begin(), seen.end());
}

// set of bipoints whose witness respects the congruence on the main component
inline PointSet surviving_bipoints(const BiframePtr& b,
                                   const std::vector<FrameMap>& witnesses,
                                   const Congruence& c) {
  PointSet out = 0;
  for (std::size_t k = 0; k < witnesses.size(); ++k) {
    std::vector<int> value(c.classes(), -1);
    bool respects = true;
    for (int e = 0; e < b->l()->size() && respects; ++e) {
      int& v = value[c.class_of(e)];
      if (v < 0)
        v = witnesses[k].img[e];
      else if (v != witnesses[k].img[e])
        respects = false;
    }
    if (respects) out |= (1u << k);
  }
  return out;
}

inline std::vector<FrameMap> spectrum_witnesses(const BiframePtr& b, const Spectrum& s) {
  std::vector<FrameMap> out;
  for (std::size_t k = 0; k < s.pairs.size(); ++k)
    out.push_back(bipoint_witness(b, s, static_cast<int>(k)));
  return out;
}

// all bicontinuous maps between two small bispaces
inline std::vector<BispaceMap> all_bicontinuous_maps(const BispacePtr& x, const BispacePtr& y) {
  std::vector<BispaceMap> out;
  if (x->size() == 0) {
    out.push_back(BispaceMap{x, y, {}});
    return out;
  }
  std::vector<int> fn(x->size(), 0);
  while (true) {
    BispaceMap m{x, y, fn};
    if (m.bicontinuous()) out.push_back(m);
    int pos = 0;
    while (pos < x->size() && ++fn[pos] == y->size()) fn[pos++] = 0;
    if (pos == x->size()) break;
  }
  return out;
}

// functorial action of the assembly on a biframe map, in the subset encoding
inline FrameMap assembly_main_map(const AssemblyBiframe& src, const AssemblyBiframe& dst,
                                  const FrameMap& witness) {
  const FramePtr& L = src.base->l();
  const FramePtr& M = dst.base->l();
  const auto& J = L->join_irreducible_elements();
  FrameMap out{src.main.frame, dst.main.frame,
               std::vector<int>(src.main.frame->size(), -1)};
  for (int e = 0; e < src.main.frame->size(); ++e) {
    std::uint64_t s = src.main.subset_of[e];
    std::uint64_t acc = 0;  // join of nabla(w(j)) ∩ delta(w(j_*)) over collapsed bits
    for (std::size_t b = 0; b < J.size(); ++b) {
      if (!((s >> b) & 1)) continue;
      int lower = L->element_with_mask(L->mask(J[b]) & ~(1ull << b));
      std::uint64_t nab = assembly_detail::nabla_subset(M, witness.img[J[b]]);
      std::uint64_t del = assembly_detail::delta_subset(M, witness.img[lower]);
      acc |= (nab & del);
    }
    out.img[e] = dst.main.index_of_subset(acc);
    if (out.img[e] < 0) return FrameMap{nullptr, nullptr, {}};
  }
  return out;
}

}  // namespace verify_detail

// --- the theorem registry -----------------------------------------------------

struct Theorem {
  std::string name;
  std::string statement;
  // per-bispace check: return false on failure and fill `detail`
  std::function<bool(const BispacePtr&, const SuiteConfig&, std::string&)> check;
  // instance source; empty means "use the enumerated family"
  std::function<std::vector<BispacePtr>(const SuiteConfig&)> instances;
  // one-shot check independent of bispaces
  std::function<bool(const SuiteConfig&, std::string&)> once;
  std::string documentation;  // non-empty marks a documented non-check
};

std::vector<Theorem> default_theorems();

// --- runner --------------------------------------------------------------------

inline BispacePtr shrink_counterexample(
    BispacePtr x, const SuiteConfig& cfg,
    const std::function<bool(const BispacePtr&, const SuiteConfig&, std::string&)>& check) {
  std::string detail;
  bool improved = true;
  while (improved) {
    improved = false;
    for (int p = 0; p < x->size() && !improved; ++p) {
      PointSet keep = full_set(x->size()) & ~(1u << p);
      BispacePtr candidate = subspace(x, keep).space;
      bool fails = false;
      try {
        fails = !check(candidate, cfg, detail);
      } catch (const SizeCapExceeded&) {
        fails = false;
      }
      if (fails) {
        x = candidate;
        improved = true;
      }
    }
    // drop removable opens while the failure persists
    for (int side = 0; side < 2 && !improved; ++side) {
      const auto& fam = side == 0 ? x->tauP() : x->tauM();
      for (PointSet u : fam) {
        if (u == 0 || u == full_set(x->size())) continue;
        std::vector<PointSet> reduced;
        for (PointSet v : fam)
          if (v != u) reduced.push_back(v);
        if (!family_is_topology(x->size(), reduced)) continue;
        auto candidate = std::make_shared<Bispace>(
            x->size(), side == 0 ? reduced : x->tauP(), side == 0 ? x->tauM() : reduced,
            x->labels());
        bool fails = false;
        try {
          fails = !check(candidate, cfg, detail);
        } catch (const SizeCapExceeded&) {
          fails = false;
        }
        if (fails) {
          x = candidate;
          improved = true;
          break;
        }
      }
    }
  }
  return x;
}

inline Report verify(const SuiteConfig& cfg, const std::vector<Theorem>& theorems) {
  Report report;
  report.family = cfg.family;
  std::vector<BispacePtr> family_instances = enumerate_bispaces(cfg.family.max_points);
  for (const Theorem& thm : theorems) {
    TheoremResult r;
    r.name = thm.name;
    r.statement = thm.statement;
    auto t0 = std::chrono::steady_clock::now();
    if (!thm.documentation.empty()) {
      r.status = "documented";
      r.note = thm.documentation;
    } else if (thm.once) {
      std::string detail;
      try {
        bool ok = thm.once(cfg, detail);
        r.checked = 1;
        r.status = ok ? "pass" : "fail";
        r.note = detail;  // a passing check may still report a census
        if (!ok) r.counterexample = json{{"detail", detail}};
      } catch (const SizeCapExceeded& e) {
        r.status = "skipped";
        r.skipped = 1;
        r.note = e.what();
      }
    } else {
      std::vector<BispacePtr> instances =
          thm.instances ? thm.instances(cfg) : family_instances;
      r.status = "pass";
      for (const BispacePtr& x : instances) {
        std::string detail;
        bool ok = true;
        try {
          ok = thm.check(x, cfg, detail);
        } catch (const SizeCapExceeded&) {
          ++r.skipped;
          continue;
        }
        ++r.checked;
        if (!ok) {
          r.status = "fail";
          BispacePtr minimal = shrink_counterexample(x, cfg, thm.check);
          std::string min_detail;
          try {
            thm.check(minimal, cfg, min_detail);
          } catch (const SizeCapExceeded&) {
          }
          r.counterexample = json{{"bispace", bispace_to_json(*minimal)},
                                  {"detail", min_detail.empty() ? detail : min_detail}};
          r.note = min_detail.empty() ? detail : min_detail;
          break;
        }
      }
      if (r.status == "pass" && r.checked == 0) {
        r.status = "skipped";
        r.note = r.skipped ? "every instance exceeded a size cap" : "empty instance family";
      }
    }
    auto t1 = std::chrono::steady_clock::now();
    r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    report.results.push_back(std::move(r));
  }
  return report;
}

inline Report verify(const SuiteConfig& cfg) { return verify(cfg, default_theorems()); }

}  // namespace bifrm

#include "bifrm/verify_theorems.hpp"

#endif  // BIFRM_VERIFY_HPP
