#pragma once

// Brute-force oracles used by the test suites. Everything here is computed
// from first principles (coefficient arithmetic and exhaustive scans), never
// through the code paths under test.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "rootposet/root_system.hpp"

namespace oracles {

using rootposet::Coeffs;
using rootposet::Root;
using rootposet::RootId;
using rootposet::RootSystem;

inline Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs c = a;
  for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

inline bool leq(const Coeffs& a, const Coeffs& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Is the member set closed under adding arbitrary positive roots?
inline bool additively_closed(const RootSystem& rs, const std::set<RootId>& members) {
  for (RootId a : members)
    for (RootId b = 0; b < rs.num_positive(); ++b) {
      RootId s = rs.sum(a, b);
      if (s >= 0 && !members.count(s)) return false;
    }
  return true;
}

inline bool is_up_set(const RootSystem& rs, const std::set<RootId>& members) {
  for (RootId a : members)
    for (RootId b = 0; b < rs.num_positive(); ++b)
      if (leq(rs.root(a).coeffs(), rs.root(b).coeffs()) && !members.count(b)) return false;
  return true;
}

// All additively closed subsets, by branching over the roots in ascending
// height: once every lower root is decided, membership of the current root
// is either forced by a sum or free.
inline std::vector<std::set<RootId>> enumerate_additive_ideals(const RootSystem& rs) {
  int n = rs.num_positive();  // roots are sorted by height already
  std::vector<std::set<RootId>> out;
  std::set<RootId> current;
  std::function<void(RootId)> walk = [&](RootId at) {
    if (at == n) {
      out.push_back(current);
      return;
    }
    bool forced = false;
    for (RootId a : current)
      for (RootId b = 0; b < n && !forced; ++b)
        if (rs.sum(a, b) == at) forced = true;
    if (forced) {
      current.insert(at);
      walk(at + 1);
      current.erase(at);
      return;
    }
    walk(at + 1);
    current.insert(at);
    walk(at + 1);
    current.erase(at);
  };
  walk(0);
  return out;
}

// Classical number of positive roots.
inline int classical_count(const rootposet::RootSystemSpec& spec) {
  int n = spec.rank;
  switch (spec.family) {
    case rootposet::Family::A: return n * (n + 1) / 2;
    case rootposet::Family::B:
    case rootposet::Family::C: return n * n;
    case rootposet::Family::D: return n * (n - 1);
    case rootposet::Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case rootposet::Family::F: return 24;
    case rootposet::Family::G: return 6;
  }
  return -1;
}

inline int classical_dual_coxeter(const rootposet::RootSystemSpec& spec) {
  int n = spec.rank;
  switch (spec.family) {
    case rootposet::Family::A: return n + 1;
    case rootposet::Family::B: return 2 * n - 1;
    case rootposet::Family::C: return n + 1;
    case rootposet::Family::D: return 2 * n - 2;
    case rootposet::Family::E: return n == 6 ? 12 : (n == 7 ? 18 : 30);
    case rootposet::Family::F: return 9;
    case rootposet::Family::G: return 4;
  }
  return -1;
}

inline Root root_of(const std::vector<int>& coeffs) { return Root(Coeffs(coeffs)); }

}  // namespace oracles
