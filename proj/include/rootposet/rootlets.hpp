#pragma once

#include <map>
#include <vector>

#include "rootposet/affine.hpp"
#include "rootposet/ideals.hpp"
#include "rootposet/root_system.hpp"

namespace rootposet {

// rt(I) = w_I(2 delta - theta) for a nonempty abelian ideal I: always a
// long positive root.
Root rootlet(const RootSystem& rs, const RootIdeal& ideal);  // EmptyIdeal

// The unique shortest element of the finite Weyl group taking theta to mu,
// as a word in the finite letters 1..n. Found by walking from theta inside
// the long positive roots, each reflection step lowering (rho, .^vee) by
// exactly one; the length is (rho, theta^vee - mu^vee).
AffineWord shortest_taking_theta_to(const RootSystem& rs, const Root& mu);  // NotLongRoot

// Extremes of the rootlet fiber over mu. i_min is read off the inversion
// set of w_mu s_0; i_max is the inclusion-maximum found by scanning the
// fiber inside the abelian-ideal enumeration.
RootIdeal i_min(const RootSystem& rs, const Root& mu);  // NotLongRoot
RootIdeal i_max(const RootSystem& rs, const Root& mu);  // NotLongRoot

// The class kl(gamma) of a commutative root: the affine simple root
// -w_I(delta - gamma) for any abelian I with gamma minimal; independent of
// the witness. Returns the affine index (0 stands for alpha_0).
int class_of(const RootSystem& rs, const Root& gamma);  // NotCommutative

struct RootletFiber {
  RootId mu = -1;
  std::vector<int> ideal_ids;  // indices into RootletIndex::abelian_ideals()
  RootIdeal min_ideal;
  RootIdeal max_ideal;
  AffineWord w_mu;
};

// Per-system index of the rootlet map: the abelian ideals with their
// minuscule words and the fiber data over every long positive root.
// Immutable once built; safe for concurrent reads.
class RootletIndex {
 public:
  static RootletIndex build(const RootSystem& rs);

  const std::vector<RootIdeal>& abelian_ideals() const { return ideals_; }
  const std::vector<AffineWord>& minuscule_words() const { return words_; }
  // -1 for the empty ideal.
  RootId rootlet_of(int ideal_id) const { return rootlet_[static_cast<size_t>(ideal_id)]; }
  const std::vector<RootId>& long_roots() const { return long_roots_; }
  const RootletFiber& fiber(RootId mu) const;

 private:
  std::vector<RootIdeal> ideals_;
  std::vector<AffineWord> words_;
  std::vector<RootId> rootlet_;
  std::vector<RootId> long_roots_;
  std::map<RootId, RootletFiber> fibers_;
};

}  // namespace rootposet
