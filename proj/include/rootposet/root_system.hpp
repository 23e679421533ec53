#pragma once

#include <optional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rootposet/errors.hpp"
#include "rootposet/rational.hpp"

namespace rootposet {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Construction request for a finite simple root system, e.g. {Family::E, 6}.
//
// Rank bounds: A n>=1, B n>=2, C n>=2, D n>=4, E n in {6,7,8}, F n=4, G n=2.
// B2 and C2 are isomorphic but carry distinct labels and simple-root
// numbering, so they are constructed as separate systems.
struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;
  bool simply_laced() const;
  void validate() const;  // throws InvalidSpec

  // Parses "E6", "d5", ... Throws InvalidSpec on anything else.
  static RootSystemSpec parse(const std::string& text);

  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
  friend bool operator<(const RootSystemSpec& a, const RootSystemSpec& b) {
    return a.family != b.family ? a.family < b.family : a.rank < b.rank;
  }
};

using Coeffs = std::vector<int>;

// A root written in the simple-root basis. coeff(i) is the coefficient of
// alpha_i, with i running 1..rank as in the Dynkin diagram numbering.
// This is the only representation used anywhere in the library; the
// epsilon-coordinate descriptions of the classical series are confined to
// conversion tables in the golden data.
class Root {
 public:
  Root() = default;
  explicit Root(Coeffs c) : coeffs_(std::move(c)) {}

  int rank() const { return static_cast<int>(coeffs_.size()); }
  int coeff(int i) const { return coeffs_.at(static_cast<size_t>(i) - 1); }
  const Coeffs& coeffs() const { return coeffs_; }
  int height() const;
  std::vector<int> support() const;  // 1-based indices of nonzero coefficients

  friend bool operator==(const Root&, const Root&) = default;

 private:
  Coeffs coeffs_;
};

// Canonical total order: height ascending, then lexicographic on coefficients.
bool canonical_less(const Root& a, const Root& b);

// Index of a positive root inside RootSystem::positive_roots().
using RootId = int;

// Immutable root datum: Cartan matrix, the set of positive roots closed
// under root addition, the highest root, length classes and the pairing
// tables used throughout. Construction validates the defining invariants;
// afterwards every accessor is a pure read, safe for concurrent use.
class RootSystem {
 public:
  explicit RootSystem(RootSystemSpec spec);

  const RootSystemSpec& spec() const { return spec_; }
  int rank() const { return spec_.rank; }

  // <alpha_i, alpha_j^vee>, 1-based.
  int cartan(int i, int j) const { return cartan_[idx(i)][idx(j)]; }
  bool adjacent(int i, int j) const;
  // Dynkin diagram edges (i, j) with i < j, sorted.
  const std::vector<std::pair<int, int>>& dynkin_edges() const { return edges_; }
  Rational simple_norm2(int i) const { return simple_norm2_[idx(i)]; }
  bool simple_is_long(int i) const { return long_mask_[idx(i)]; }
  std::vector<int> long_simples() const;  // Pi_l, ascending
  Root simple_root(int i) const;

  int num_positive() const { return static_cast<int>(roots_.size()); }
  const std::vector<Root>& positive_roots() const { return roots_; }
  const Root& root(RootId id) const { return roots_[static_cast<size_t>(id)]; }
  RootId theta_id() const { return theta_id_; }
  const Root& theta() const { return roots_[static_cast<size_t>(theta_id_)]; }

  std::optional<RootId> find(const Coeffs& c) const;
  RootId id_of(const Root& r) const;  // throws RootNotInSystem
  bool is_positive_root(const Coeffs& c) const { return find(c).has_value(); }

  bool is_long(RootId id) const { return root_long_[static_cast<size_t>(id)]; }
  Rational norm2(RootId id) const { return root_norm2_[static_cast<size_t>(id)]; }
  int height(RootId id) const { return heights_[static_cast<size_t>(id)]; }
  // (rho, mu^vee)
  int rho_pairing(RootId id) const { return rho_pairing_[static_cast<size_t>(id)]; }
  // (mu, theta^vee)
  int theta_pairing(RootId id) const { return theta_pairing_[static_cast<size_t>(id)]; }

  // <x, alpha_i^vee> for an arbitrary integer vector x.
  int coroot_pairing_simple(const Coeffs& x, int i) const;
  // <x, theta^vee>
  int theta_covector_pairing(const Coeffs& x) const;

  // id of a+b, or -1 when the sum is not a root.
  RootId sum(RootId a, RootId b) const {
    return sum_[static_cast<size_t>(a) * roots_.size() + static_cast<size_t>(b)];
  }
  // id of a+alpha_i, or -1.
  RootId add_simple(RootId a, int i) const {
    return up_step_[static_cast<size_t>(a) * static_cast<size_t>(rank()) + idx(i)];
  }
  // Lower covers in the root poset: ids of a - alpha_i that are roots.
  const std::vector<RootId>& lower_cover_ids(RootId a) const {
    return lower_covers_[static_cast<size_t>(a)];
  }

 private:
  static size_t idx(int i) { return static_cast<size_t>(i) - 1; }

  RootSystemSpec spec_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rational> simple_norm2_;
  std::vector<bool> long_mask_;
  std::vector<std::pair<int, int>> edges_;

  std::vector<Root> roots_;  // canonical order
  std::map<Coeffs, RootId> index_;
  RootId theta_id_ = -1;
  std::vector<int> heights_;
  std::vector<Rational> root_norm2_;
  std::vector<bool> root_long_;
  std::vector<int> rho_pairing_;
  std::vector<int> theta_pairing_;
  std::vector<int> theta_covector_;  // <alpha_j, theta^vee> per simple
  std::vector<RootId> sum_;
  std::vector<RootId> up_step_;
  std::vector<std::vector<RootId>> lower_covers_;

  void build_family_data();
  void close_roots();
  void build_tables();
};

RootSystem build_root_system(const RootSystemSpec& spec);

// W-invariant inner product, normalized so that long roots have squared
// length 2. Arguments may be arbitrary integer combinations of simple roots.
Rational inner_product(const RootSystem& rs, const Coeffs& x, const Coeffs& y);
Rational inner_product(const RootSystem& rs, const Root& x, const Root& y);

// mu^vee = 2 mu/(mu,mu) expanded over the simple coroots.
std::vector<Rational> coroot(const RootSystem& rs, const Root& mu);

// The partial order on positive roots: mu <= nu iff nu - mu has nonnegative
// coefficients.
bool is_leq(const RootSystem& rs, const Root& mu, const Root& nu);

// Lower covers of nu in (Delta^+, <=): the roots nu - alpha_i.
std::vector<Root> covers(const RootSystem& rs, const Root& nu);

// Coefficientwise min; exists iff the supports intersect. The result is
// checked to be a root.
std::optional<Root> meet(const RootSystem& rs, const Root& mu, const Root& nu);
// Least upper bound in the root poset; equals the coefficientwise max
// exactly when the supports intersect.
Root join(const RootSystem& rs, const Root& mu, const Root& nu);

// Coefficientwise floor of theta/2 -- the maximal non-commutative root.
// Absent exactly in type A, where it degenerates to 0.
std::optional<Root> theta_breve(const RootSystem& rs);
// theta - theta_breve.
std::optional<Root> theta_tilde(const RootSystem& rs);

// h^* = (rho, theta^vee) + 1.
int dual_coxeter(const RootSystem& rs);

}  // namespace rootposet
