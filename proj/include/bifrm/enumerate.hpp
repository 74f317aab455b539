#ifndef BIFRM_ENUMERATE_HPP
#define BIFRM_ENUMERATE_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "bifrm/bispace.hpp"
#include "bifrm/core.hpp"

namespace bifrm {

// All topologies on n labeled points, in deterministic order. Families are
// encoded as sorted vectors of point sets; candidates are bitmasks over the
// 2^n subsets with ∅ and X forced.
inline std::vector<std::vector<PointSet>> enumerate_topologies(int n) {
  if (n < 0 || n > 4) throw SizeCapExceeded("topology enumeration beyond 4 points");
  const int nsubsets = 1 << n;
  std::vector<std::vector<PointSet>> out;
  if (n == 0) {
    out.push_back({0});
    return out;
  }
  const unsigned long forced = 1ul | (1ul << (nsubsets - 1));  // ∅ and X
  for (unsigned long bits = 0; bits < (1ul << nsubsets); ++bits) {
    if ((bits & forced) != forced) continue;
    std::vector<PointSet> fam;
    for (int u = 0; u < nsubsets; ++u)
      if ((bits >> u) & 1) fam.push_back(static_cast<PointSet>(u));
    if (family_is_topology(n, fam)) out.push_back(std::move(fam));
  }
  return out;
}

// All bispaces with exactly n points, up to bihomeomorphism, sorted by their
// canonical signature (so the order is independent of enumeration internals).
inline std::vector<BispacePtr> enumerate_bispaces_exactly(int n) {
  auto tops = enumerate_topologies(n);
  std::map<std::vector<PointSet>, BispacePtr> canon;
  for (const auto& tp : tops)
    for (const auto& tm : tops) {
      auto x = std::make_shared<Bispace>(n, tp, tm);
      canon.emplace(x->canonical_signature(), x);
    }
  std::vector<BispacePtr> out;
  for (auto& kv : canon) out.push_back(kv.second);
  return out;
}

// Every bispace with 1..max_points points up to bihomeomorphism.
inline std::vector<BispacePtr> enumerate_bispaces(int max_points) {
  std::vector<BispacePtr> out;
  for (int n = 1; n <= max_points; ++n) {
    auto batch = enumerate_bispaces_exactly(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

}  // namespace bifrm

#endif  // BIFRM_ENUMERATE_HPP
