#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "rootposet/affine.hpp"
#include "rootposet/ideals.hpp"
#include "rootposet/root_system.hpp"
#include "rootposet/rootlets.hpp"

namespace rootposet {

// Two incomparable positive roots summing to theta, oriented by the edge of
// the long-root subdiagram they correspond to: eta is a minimal element of
// i_min(alpha) and kl(eta) = alpha_prime, symmetrically for eta_prime.
struct GloriousPair {
  Root eta, eta_prime;
  int alpha = 0, alpha_prime = 0;        // adjacent long simple indices
  int class_eta = 0, class_eta_prime = 0;  // kl values (alpha_prime, alpha)
};

// All glorious pairs, found by scanning the unordered pairs summing to
// theta and keeping the incomparable ones; #pairs = #Pi_l - 1. Each pair is
// oriented so that alpha < alpha_prime; the list is sorted by the canonical
// order of eta.
std::vector<GloriousPair> glorious_pairs(const RootSystem& rs);

// The pair attached to an edge of the long subdiagram:
// eta = w_a^{-1}(a + ap), eta_prime = w_ap^{-1}(a + ap), with eta attached
// to the first argument. Also validated against the one-element difference
// i_min(a) \ i_min(a+ap).
GloriousPair pair_from_edge(const RootSystem& rs, int a, int ap);  // NotLong/NotAdjacent

// Inverse direction: the edge is read off the classes of the two roots.
std::pair<int, int> edge_from_pair(const RootSystem& rs, const Root& eta,
                                   const Root& eta_prime);  // NotGlorious

// For consecutive long simple roots i - j - k, the simple root
// gamma = w_ijk^{-1}(alpha_j); it is long, orthogonal to theta, and shifts
// the pair of edge (i,j) onto the pair of edge (j,k).
Root transition_root(const RootSystem& rs, int i, int j, int k);  // NotAPath/NotLong

// Transition roots of every consecutive triple along a path of long simple
// roots (m >= 3 nodes, giving m - 2 roots).
std::vector<Root> transition_chain(const RootSystem& rs, const std::vector<int>& chain);

// The pair (theta_tilde, theta_breve) attached to the unique mixed-length
// edge of a non-simply-laced diagram.
struct SemiGloriousPair {
  Root eta, eta_prime;       // commutative short eta, non-commutative eta_prime
  int alpha = 0;             // long end of the mixed edge
  int alpha_prime = 0;       // short end (the branch root of Eq-style scan)
  Root simple_diff;          // eta - eta_prime, a simple root
  int diff_index = 0;
  bool diff_is_long = false;
  int class_eta = 0;         // kl(eta) = alpha_prime
};

SemiGloriousPair semi_glorious(const RootSystem& rs);  // SimplyLaced

// In types D/E: the branching node, the three tails of the diagram, and the
// matching of tails with the odd roots (the simple roots with odd
// theta-coefficient) through w_{|Pi|}.
struct TailDecomposition {
  int branch = 0;                          // the unique node with |Pi_l| + node a root
  std::array<std::vector<int>, 3> tails;   // T1, T2, T3, each listed from the branch outward
  std::array<int, 3> nu{};                 // the tail root adjacent to the branch
  std::array<int, 3> odd{};                // beta_i = w_{|Pi|}^{-1}(|T_i| + branch)
};

// nullopt in type A (no branch root exists); NotDEType for B/C/F/G.
std::optional<TailDecomposition> tail_decomposition(const RootSystem& rs);

// The interval [theta_breve, theta_tilde] with its labels: an 8-element
// boolean cube in D/E carrying the three central glorious pairs, a
// two-element chain otherwise. nullopt in type A.
struct IntervalStructure {
  Root bottom, top;            // theta_breve, theta_tilde
  std::vector<Root> members;   // canonical order
  bool cube = false;

  struct CentralPair {
    int edge_a = 0, edge_b = 0;  // {branch, nu_i}
    Root lower, upper;           // theta_breve + beta_i, theta_tilde - beta_i
    int class_lower = 0;         // kl(lower) = branch
    int class_upper = 0;         // kl(upper) = nu_i
  };
  std::vector<CentralPair> central;  // three entries in D/E, tail order
  int class_top = 0;                 // kl(theta_tilde)
};

std::optional<IntervalStructure> interval(const RootSystem& rs);

// Distance data of a glorious edge: the number of edge steps to the closest
// central edge (D/E) or to the mixed-length edge (B/F), the transition
// roots along that path, and the meet/join of the pair computed both
// coefficientwise and as theta_breve - sum / theta_tilde + sum.
struct MeetData {
  int distance = 0;
  Root meet_root, join_root;
  std::vector<Root> transitions;
};

MeetData meet_distance(const RootSystem& rs, int a, int ap);  // NotGloriousEdge/TypeAUnsupported

// The minimal non-abelian ideals: up-closures of the glorious pairs, plus
// the ideal generated by theta_breve in the non-simply-laced case. Each has
// cardinality h^*, lies in the Heisenberg ideal and contains exactly one
// summable pair.
std::vector<RootIdeal> minimal_nonabelian(const RootSystem& rs);

// The canonical element of a minimal non-abelian ideal in closed form,
// s_{a'} s_a w_a s_0; its inversion set is {delta - gamma} plus
// 2 delta - theta and its length is h^* + 1.
AffineWord canonical_min_nonabelian(const RootSystem& rs, const RootIdeal& ideal);

}  // namespace rootposet
