#include "rootposet/ideals.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <set>

namespace rootposet {

namespace {

// Fixed-width id set for the enumeration inner loops. 256 bits covers every
// system in the configured rank budget (E8 has 120 positive roots).
struct IdSet {
  std::array<std::uint64_t, 4> w{};

  void set(int i) { w[static_cast<size_t>(i) >> 6] |= 1ull << (i & 63); }
  bool test(int i) const { return (w[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  friend bool operator==(const IdSet&, const IdSet&) = default;
  friend bool operator<(const IdSet& a, const IdSet& b) { return a.w < b.w; }
};

constexpr int kIdSetCapacity = 256;

std::vector<RootId> to_sorted_ids(const IdSet& s, int n) {
  std::vector<RootId> out;
  for (int i = 0; i < n; ++i)
    if (s.test(i)) out.push_back(i);
  return out;
}

bool closed_under_simple_steps(const RootSystem& rs, const std::vector<RootId>& members) {
  for (RootId a : members)
    for (int i = 1; i <= rs.rank(); ++i) {
      RootId up = rs.add_simple(a, i);
      if (up >= 0 && !std::binary_search(members.begin(), members.end(), up)) return false;
    }
  return true;
}

bool any_pair_sums_to_root(const RootSystem& rs, const std::vector<RootId>& members) {
  for (size_t a = 0; a < members.size(); ++a)
    for (size_t b = a; b < members.size(); ++b)
      if (rs.sum(members[a], members[b]) >= 0) return true;
  return false;
}

std::vector<RootId> minimal_ids(const RootSystem& rs, const std::vector<RootId>& members) {
  std::vector<RootId> out;
  for (RootId a : members) {
    bool minimal = true;
    for (RootId below : rs.lower_cover_ids(a))
      if (std::binary_search(members.begin(), members.end(), below)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

}  // namespace

RootIdeal make_ideal_unchecked(const RootSystem& rs, std::vector<RootId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  RootIdeal ideal;
  ideal.members_ = std::move(members);
  assert(closed_under_simple_steps(rs, ideal.members_));
  ideal.min_ = minimal_ids(rs, ideal.members_);
  ideal.abelian_ = !any_pair_sums_to_root(rs, ideal.members_);
  return ideal;
}

RootIdeal RootIdeal::from_members(const RootSystem& rs, std::vector<RootId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (RootId a : members)
    if (a < 0 || a >= rs.num_positive())
      throw RootNotInSystem("ideal member id out of range");
  if (!closed_under_simple_steps(rs, members))
    throw NotAnIdeal("member set is not up-closed");
  return make_ideal_unchecked(rs, std::move(members));
}

bool RootIdeal::contains(RootId id) const {
  return std::binary_search(members_.begin(), members_.end(), id);
}

bool RootIdeal::contains_all(const RootIdeal& other) const {
  return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                       other.members_.end());
}

bool enumeration_less(const RootIdeal& a, const RootIdeal& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

RootIdeal up_closure_ids(const RootSystem& rs, std::vector<RootId> generators) {
  for (RootId g : generators)
    if (g < 0 || g >= rs.num_positive()) throw RootNotInSystem("generator id out of range");
  std::vector<bool> in(static_cast<size_t>(rs.num_positive()), false);
  std::vector<RootId> stack = generators;
  for (RootId g : stack) in[static_cast<size_t>(g)] = true;
  while (!stack.empty()) {
    RootId a = stack.back();
    stack.pop_back();
    for (int i = 1; i <= rs.rank(); ++i) {
      RootId up = rs.add_simple(a, i);
      if (up >= 0 && !in[static_cast<size_t>(up)]) {
        in[static_cast<size_t>(up)] = true;
        stack.push_back(up);
      }
    }
  }
  std::vector<RootId> members;
  for (RootId a = 0; a < rs.num_positive(); ++a)
    if (in[static_cast<size_t>(a)]) members.push_back(a);
  return make_ideal_unchecked(rs, std::move(members));
}

RootIdeal up_closure(const RootSystem& rs, const std::vector<Root>& generators) {
  std::vector<RootId> ids;
  ids.reserve(generators.size());
  for (const Root& g : generators) ids.push_back(rs.id_of(g));
  return up_closure_ids(rs, std::move(ids));
}

bool is_abelian(const RootSystem& rs, const RootIdeal& ideal) {
  bool flag = !any_pair_sums_to_root(rs, ideal.members());
  // A non-abelian ideal always contains a pair summing to theta.
  assert(flag == summable_pairs(rs, ideal).empty());
  return flag;
}

std::vector<std::pair<RootId, RootId>> summable_pairs(const RootSystem& rs,
                                                      const RootIdeal& ideal) {
  std::vector<std::pair<RootId, RootId>> out;
  const auto& m = ideal.members();
  for (size_t a = 0; a < m.size(); ++a)
    for (size_t b = a; b < m.size(); ++b)
      if (rs.sum(m[a], m[b]) == rs.theta_id()) out.emplace_back(m[a], m[b]);
  return out;
}

std::vector<Root> min_elements(const RootSystem& rs, const RootIdeal& ideal) {
  std::vector<Root> out;
  for (RootId a : ideal.min_elements()) out.push_back(rs.root(a));
  return out;
}

std::vector<RootId> max_complement_ids(const RootSystem& rs, const RootIdeal& ideal) {
  std::vector<RootId> out;
  for (RootId a = 0; a < rs.num_positive(); ++a) {
    if (ideal.contains(a)) continue;
    bool maximal = true;
    for (int i = 1; i <= rs.rank(); ++i) {
      RootId up = rs.add_simple(a, i);
      if (up >= 0 && !ideal.contains(up)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(a);
  }
  return out;
}

std::vector<Root> max_complement(const RootSystem& rs, const RootIdeal& ideal) {
  std::vector<Root> out;
  for (RootId a : max_complement_ids(rs, ideal)) out.push_back(rs.root(a));
  return out;
}

std::vector<RootIdeal> enumerate_abelian_ideals(const RootSystem& rs) {
  int n = rs.num_positive();
  if (n > kIdSetCapacity) throw BudgetExceeded("too many positive roots for enumeration");

  std::set<IdSet> seen;
  std::vector<IdSet> frontier{IdSet{}};
  seen.insert(IdSet{});
  std::vector<IdSet> all{IdSet{}};

  while (!frontier.empty()) {
    std::vector<IdSet> next;
    for (const IdSet& cur : frontier) {
      std::vector<RootId> members = to_sorted_ids(cur, n);
      RootIdeal ideal = make_ideal_unchecked(rs, members);
      for (RootId cand : max_complement_ids(rs, ideal)) {
        bool ok = true;
        for (RootId a : members)
          if (rs.sum(a, cand) >= 0) {
            ok = false;
            break;
          }
        if (!ok) continue;
        IdSet grown = cur;
        grown.set(cand);
        if (seen.insert(grown).second) {
          next.push_back(grown);
          all.push_back(grown);
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<RootIdeal> out;
  out.reserve(all.size());
  for (const IdSet& s : all) out.push_back(make_ideal_unchecked(rs, to_sorted_ids(s, n)));
  std::sort(out.begin(), out.end(), enumeration_less);
  return out;
}

namespace {

struct AntichainWalker {
  const RootSystem& rs;
  long long budget;
  long long nodes = 0;
  std::vector<RootId> chain;
  std::vector<RootIdeal>& out;

  bool comparable(RootId a, RootId b) const {
    return is_leq(rs, rs.root(a), rs.root(b)) || is_leq(rs, rs.root(b), rs.root(a));
  }

  void walk(RootId next_min) {
    if (++nodes > budget) throw BudgetExceeded("ideal enumeration exceeded node budget");
    out.push_back(up_closure_ids(rs, chain));
    for (RootId cand = next_min; cand < rs.num_positive(); ++cand) {
      bool ok = true;
      for (RootId a : chain)
        if (comparable(a, cand)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chain.push_back(cand);
      walk(cand + 1);
      chain.pop_back();
    }
  }
};

}  // namespace

std::vector<RootIdeal> enumerate_ideals(const RootSystem& rs, EnumerationBudget budget) {
  if (rs.rank() > budget.max_rank)
    throw BudgetExceeded("rank " + std::to_string(rs.rank()) + " beyond enumeration budget");
  if (rs.num_positive() > kIdSetCapacity)
    throw BudgetExceeded("too many positive roots for enumeration");
  std::vector<RootIdeal> out;
  AntichainWalker walker{rs, budget.max_nodes, 0, {}, out};
  walker.walk(0);
  std::sort(out.begin(), out.end(), enumeration_less);
  return out;
}

RootIdeal commutative_roots(const RootSystem& rs) {
  std::vector<RootId> com;
  for (RootId a = 0; a < rs.num_positive(); ++a)
    if (up_closure_ids(rs, {a}).abelian()) com.push_back(a);
  // The commutative roots form an ideal; a violation would be a bug.
  if (!closed_under_simple_steps(rs, com))
    throw NotAnIdeal("commutative roots failed to be up-closed");
  return make_ideal_unchecked(rs, std::move(com));
}

std::vector<Root> noncommutative_roots(const RootSystem& rs) {
  RootIdeal com = commutative_roots(rs);
  std::vector<Root> out;
  std::vector<RootId> ids;
  for (RootId a = 0; a < rs.num_positive(); ++a)
    if (!com.contains(a)) {
      ids.push_back(a);
      out.push_back(rs.root(a));
    }
  if (rs.spec().family != Family::A) {
    // Unique maximum theta_breve.
    std::vector<RootId> maxima;
    for (RootId a : ids) {
      bool maximal = true;
      for (RootId b : ids)
        if (b != a && is_leq(rs, rs.root(a), rs.root(b))) {
          maximal = false;
          break;
        }
      if (maximal) maxima.push_back(a);
    }
    if (maxima.size() != 1 || !(rs.root(maxima.front()) == *theta_breve(rs)))
      throw Error("non-commutative roots lack theta_breve as unique maximum");
  }
  return out;
}

RootIdeal heisenberg(const RootSystem& rs) {
  std::vector<RootId> members;
  for (RootId a = 0; a < rs.num_positive(); ++a)
    if (rs.theta_pairing(a) > 0) members.push_back(a);
  RootIdeal ideal = make_ideal_unchecked(rs, std::move(members));
  if (!ideal.contains(rs.theta_id()) || ideal.size() != 2 * dual_coxeter(rs) - 3)
    throw Error("Heisenberg ideal has the wrong shape");
  return ideal;
}

}  // namespace rootposet
