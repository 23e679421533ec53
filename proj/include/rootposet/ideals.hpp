#pragma once

#include <utility>
#include <vector>

#include "rootposet/root_system.hpp"

namespace rootposet {

// An up-closed subset of the positive roots, carrying its minimal elements
// and abelian flag as derived caches. Equality is member-set equality; the
// caches are recomputed on construction and never trusted across systems.
class RootIdeal {
 public:
  RootIdeal() = default;

  // Validates up-closedness; throws NotAnIdeal otherwise.
  static RootIdeal from_members(const RootSystem& rs, std::vector<RootId> members);

  const std::vector<RootId>& members() const { return members_; }
  const std::vector<RootId>& min_elements() const { return min_; }
  bool abelian() const { return abelian_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(RootId id) const;
  bool contains_all(const RootIdeal& other) const;  // superset test

  friend bool operator==(const RootIdeal& a, const RootIdeal& b) {
    return a.members_ == b.members_;
  }

 private:
  std::vector<RootId> members_;  // ascending ids (canonical root order)
  std::vector<RootId> min_;
  bool abelian_ = true;

  friend RootIdeal make_ideal_unchecked(const RootSystem&, std::vector<RootId>);
};

// Deterministic enumeration order: cardinality, then member ids lexicographic.
bool enumeration_less(const RootIdeal& a, const RootIdeal& b);

// Smallest ideal containing the generators.
RootIdeal up_closure(const RootSystem& rs, const std::vector<Root>& generators);
RootIdeal up_closure_ids(const RootSystem& rs, std::vector<RootId> generators);

// No two members (with repetition) sum to a root. Asserts the equivalence
// with the existence of a pair summing to theta.
bool is_abelian(const RootSystem& rs, const RootIdeal& ideal);

// Unordered pairs {a, b} of members with a + b = theta, a <= b in canonical
// order, sorted.
std::vector<std::pair<RootId, RootId>> summable_pairs(const RootSystem& rs,
                                                      const RootIdeal& ideal);

std::vector<Root> min_elements(const RootSystem& rs, const RootIdeal& ideal);
std::vector<Root> max_complement(const RootSystem& rs, const RootIdeal& ideal);
std::vector<RootId> max_complement_ids(const RootSystem& rs, const RootIdeal& ideal);

// Every abelian ideal exactly once, ordered by enumeration_less. Grows
// ideals one root at a time through the maximal elements of the complement,
// deduplicating by member set.
std::vector<RootIdeal> enumerate_abelian_ideals(const RootSystem& rs);

struct EnumerationBudget {
  int max_rank = 8;
  long long max_nodes = 4'000'000;
};

// All ideals (up-sets), via depth-first antichain enumeration in canonical
// root order. Throws BudgetExceeded past the configured budget.
std::vector<RootIdeal> enumerate_ideals(const RootSystem& rs, EnumerationBudget budget = {});

// gamma is commutative when the ideal it generates is abelian. The set of
// commutative roots is itself an ideal.
RootIdeal commutative_roots(const RootSystem& rs);
// Complement of the above, ascending. Outside type A its unique maximal
// element is theta_breve.
std::vector<Root> noncommutative_roots(const RootSystem& rs);

// Roots not orthogonal to theta; an ideal of size 2 h^* - 3.
RootIdeal heisenberg(const RootSystem& rs);

}  // namespace rootposet
