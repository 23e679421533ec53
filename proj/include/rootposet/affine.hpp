#pragma once

#include <optional>
#include <vector>

#include "rootposet/ideals.hpp"
#include "rootposet/root_system.hpp"

namespace rootposet {

// A real affine root gamma + k*delta: the finite part in simple-root
// coordinates (gamma is +/- a root of Delta) plus the level k. Real roots
// carry no lambda component, so none is stored; the extended inner product
// restricted to them never consults it.
struct AffineRoot {
  Coeffs finite;
  int level = 0;

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

// Total order (level, then coefficients lexicographic), for set comparisons.
bool affine_less(const AffineRoot& a, const AffineRoot& b);

// A word in the affine simple reflections s_0..s_n. letters()[k] is an index
// into the affine simple system, 0 standing for s_0; the rightmost letter is
// applied first. Words are not reduced to a normal form; group-element
// equality is decided by comparing actions (same_action).
class AffineWord {
 public:
  AffineWord() = default;
  explicit AffineWord(std::vector<int> letters) : letters_(std::move(letters)) {}

  const std::vector<int>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  AffineWord inverse() const;             // reversed letters
  AffineWord prepend(int letter) const;   // s_letter * w
  AffineWord append(int letter) const;    // w * s_letter
  AffineWord concat(const AffineWord& right) const;  // this * right

  friend bool operator==(const AffineWord&, const AffineWord&) = default;

 private:
  std::vector<int> letters_;
};

AffineRoot finite_affine(const Root& r);                      // level 0
AffineRoot affine_simple(const RootSystem& rs, int i);        // i = 0 gives delta - theta
AffineRoot delta_minus(const RootSystem& rs, const Root& r);  // delta - r
AffineRoot two_delta_minus_theta(const RootSystem& rs);

bool affine_is_root(const RootSystem& rs, const AffineRoot& x);
bool affine_positive(const RootSystem& rs, const AffineRoot& x);
// Index in {0..n} when x lies in the affine simple system, else nullopt.
std::optional<int> affine_simple_index(const RootSystem& rs, const AffineRoot& x);

// s_i for i >= 1 reflects the finite part; s_0 sends gamma + k delta to
// s_theta(gamma) + (k + <gamma, theta^vee>) delta.
AffineRoot affine_reflect(const RootSystem& rs, int i, const AffineRoot& x);
AffineRoot apply_word(const RootSystem& rs, const AffineWord& w, const AffineRoot& x);
Rational affine_inner(const RootSystem& rs, const AffineRoot& x, const AffineRoot& y);

// Positive affine roots of level <= level_bound sent to negatives, sorted by
// affine_less.
std::vector<AffineRoot> inversion_set(const RootSystem& rs, const AffineWord& w,
                                      int level_bound);
int inversion_count(const RootSystem& rs, const AffineWord& w, int level_bound);

// Group-element equality through the action on the affine simple roots and
// on 2 delta - theta.
bool same_action(const RootSystem& rs, const AffineWord& u, const AffineWord& v);

// The minuscule element of an abelian ideal: the word w with inversion set
// {delta - gamma : gamma in I} and length #I. Built by the single-root
// growth recursion along the canonical order of I (largest root first).
AffineWord minuscule_of(const RootSystem& rs, const RootIdeal& ideal);

// Same recursion along a caller-supplied build order (each prefix, read from
// the back, must be an ideal). Used to confirm that the resulting group
// element does not depend on the chosen extension order.
AffineWord minuscule_with_build_order(const RootSystem& rs, const RootIdeal& ideal,
                                      const std::vector<RootId>& order);

// I^k = I^{k-1} + I (sums that are roots); I^1 = I.
std::vector<RootId> ideal_power(const RootSystem& rs, const RootIdeal& ideal, int k);

// Smallest m with I^m empty.
int ideal_power_vanishing(const RootSystem& rs, const RootIdeal& ideal);

// The canonical element of an arbitrary ideal: the word whose inversion set
// is the union over k of (k delta - I^k). For abelian ideals this coincides
// with minuscule_of as a group element. Returns a specific reduced word.
AffineWord canonical_of(const RootSystem& rs, const RootIdeal& ideal);

}  // namespace rootposet
