#include "rootposet/affine.hpp"

#include <algorithm>
#include <cassert>

namespace rootposet {

bool affine_less(const AffineRoot& a, const AffineRoot& b) {
  if (a.level != b.level) return a.level < b.level;
  return a.finite < b.finite;
}

AffineWord AffineWord::inverse() const {
  std::vector<int> rev(letters_.rbegin(), letters_.rend());
  return AffineWord(std::move(rev));
}

AffineWord AffineWord::prepend(int letter) const {
  std::vector<int> out;
  out.reserve(letters_.size() + 1);
  out.push_back(letter);
  out.insert(out.end(), letters_.begin(), letters_.end());
  return AffineWord(std::move(out));
}

AffineWord AffineWord::append(int letter) const {
  std::vector<int> out = letters_;
  out.push_back(letter);
  return AffineWord(std::move(out));
}

AffineWord AffineWord::concat(const AffineWord& right) const {
  std::vector<int> out = letters_;
  out.insert(out.end(), right.letters_.begin(), right.letters_.end());
  return AffineWord(std::move(out));
}

AffineRoot finite_affine(const Root& r) { return AffineRoot{r.coeffs(), 0}; }

AffineRoot affine_simple(const RootSystem& rs, int i) {
  if (i == 0) {
    Coeffs c = rs.theta().coeffs();
    for (int& v : c) v = -v;
    return AffineRoot{std::move(c), 1};
  }
  return finite_affine(rs.simple_root(i));
}

AffineRoot delta_minus(const RootSystem&, const Root& r) {
  Coeffs c = r.coeffs();
  for (int& v : c) v = -v;
  return AffineRoot{std::move(c), 1};
}

AffineRoot two_delta_minus_theta(const RootSystem& rs) {
  Coeffs c = rs.theta().coeffs();
  for (int& v : c) v = -v;
  return AffineRoot{std::move(c), 2};
}

namespace {

bool finite_part_positive(const Coeffs& c) {
  for (int v : c)
    if (v != 0) return v > 0;
  return false;  // zero vector; not a root
}

Coeffs negate(Coeffs c) {
  for (int& v : c) v = -v;
  return c;
}

}  // namespace

bool affine_is_root(const RootSystem& rs, const AffineRoot& x) {
  if (rs.is_positive_root(x.finite)) return true;
  return rs.is_positive_root(negate(x.finite));
}

bool affine_positive([[maybe_unused]] const RootSystem& rs, const AffineRoot& x) {
  assert(affine_is_root(rs, x));
  if (x.level != 0) return x.level > 0;
  return finite_part_positive(x.finite);
}

std::optional<int> affine_simple_index(const RootSystem& rs, const AffineRoot& x) {
  if (x.level == 0) {
    auto id = rs.find(x.finite);
    if (!id) return std::nullopt;
    const Root& r = rs.root(*id);
    if (r.height() == 1)
      for (int i = 1; i <= rs.rank(); ++i)
        if (r.coeff(i) == 1) return i;
    return std::nullopt;
  }
  if (x.level == 1 && x.finite == negate(rs.theta().coeffs())) return 0;
  return std::nullopt;
}

AffineRoot affine_reflect(const RootSystem& rs, int i, const AffineRoot& x) {
  if (i == 0) {
    int pairing = rs.theta_covector_pairing(x.finite);
    Coeffs c = x.finite;
    for (int j = 1; j <= rs.rank(); ++j)
      c[static_cast<size_t>(j) - 1] -= pairing * rs.theta().coeff(j);
    return AffineRoot{std::move(c), x.level + pairing};
  }
  int pairing = rs.coroot_pairing_simple(x.finite, i);
  Coeffs c = x.finite;
  c[static_cast<size_t>(i) - 1] -= pairing;
  return AffineRoot{std::move(c), x.level};
}

AffineRoot apply_word(const RootSystem& rs, const AffineWord& w, const AffineRoot& x) {
  AffineRoot cur = x;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) cur = affine_reflect(rs, *it, cur);
  return cur;
}

Rational affine_inner(const RootSystem& rs, const AffineRoot& x, const AffineRoot& y) {
  // (delta, delta) = (delta, V) = 0, so only the finite parts contribute.
  return inner_product(rs, x.finite, y.finite);
}

std::vector<AffineRoot> inversion_set(const RootSystem& rs, const AffineWord& w,
                                      int level_bound) {
  std::vector<AffineRoot> out;
  auto consider = [&](AffineRoot x) {
    if (!affine_positive(rs, apply_word(rs, w, x))) out.push_back(std::move(x));
  };
  for (const Root& r : rs.positive_roots()) consider(finite_affine(r));
  for (int k = 1; k <= level_bound; ++k)
    for (const Root& r : rs.positive_roots()) {
      consider(AffineRoot{r.coeffs(), k});
      consider(AffineRoot{negate(r.coeffs()), k});
    }
  std::sort(out.begin(), out.end(), affine_less);
  return out;
}

int inversion_count(const RootSystem& rs, const AffineWord& w, int level_bound) {
  return static_cast<int>(inversion_set(rs, w, level_bound).size());
}

bool same_action(const RootSystem& rs, const AffineWord& u, const AffineWord& v) {
  for (int i = 0; i <= rs.rank(); ++i) {
    AffineRoot probe = affine_simple(rs, i);
    if (!(apply_word(rs, u, probe) == apply_word(rs, v, probe))) return false;
  }
  AffineRoot probe = two_delta_minus_theta(rs);
  return apply_word(rs, u, probe) == apply_word(rs, v, probe);
}

AffineWord minuscule_with_build_order(const RootSystem& rs, const RootIdeal& ideal,
                                      const std::vector<RootId>& order) {
  if (!ideal.abelian()) throw NotAbelian("minuscule element requested for a non-abelian ideal");
  assert(static_cast<int>(order.size()) == ideal.size());
  AffineWord w;
  for (RootId gamma : order) {
    AffineRoot image = apply_word(rs, w, delta_minus(rs, rs.root(gamma)));
    auto beta = affine_simple_index(rs, image);
    // Guaranteed for a valid build order of an abelian ideal; anything else
    // is an implementation bug.
    if (!beta) throw Error("minuscule growth step left the affine simple system");
    w = w.prepend(*beta);
  }
  return w;
}

AffineWord minuscule_of(const RootSystem& rs, const RootIdeal& ideal) {
  // Canonical build order: add roots from the top of the ideal downwards,
  // so that every prefix is itself an ideal.
  std::vector<RootId> order(ideal.members().rbegin(), ideal.members().rend());
  return minuscule_with_build_order(rs, ideal, order);
}

std::vector<RootId> ideal_power(const RootSystem& rs, const RootIdeal& ideal, int k) {
  assert(k >= 1);
  std::vector<RootId> cur = ideal.members();
  for (int step = 2; step <= k; ++step) {
    std::vector<bool> mark(static_cast<size_t>(rs.num_positive()), false);
    for (RootId a : cur)
      for (RootId b : ideal.members()) {
        RootId s = rs.sum(a, b);
        if (s >= 0) mark[static_cast<size_t>(s)] = true;
      }
    cur.clear();
    for (RootId a = 0; a < rs.num_positive(); ++a)
      if (mark[static_cast<size_t>(a)]) cur.push_back(a);
    if (cur.empty()) break;
  }
  return cur;
}

int ideal_power_vanishing(const RootSystem& rs, const RootIdeal& ideal) {
  int m = 1;
  while (!ideal_power(rs, ideal, m).empty()) ++m;
  return m;
}

AffineWord canonical_of(const RootSystem& rs, const RootIdeal& ideal) {
  // Assemble the prescribed inversion set, then peel one simple reflection
  // at a time from the right: if beta is an affine simple root inside N(w),
  // then w = w' s_beta with N(w') = s_beta(N(w) \ {beta}).
  std::vector<AffineRoot> inv;
  int m = ideal_power_vanishing(rs, ideal);
  for (int k = 1; k < m; ++k)
    for (RootId a : ideal_power(rs, ideal, k))
      inv.push_back(AffineRoot{negate(rs.root(a).coeffs()), k});

  std::vector<int> discovered;  // rightmost letter first
  while (!inv.empty()) {
    int found = -1;
    size_t at = 0;
    for (int i = 0; i <= rs.rank() && found < 0; ++i) {
      AffineRoot simple = affine_simple(rs, i);
      for (size_t pos = 0; pos < inv.size(); ++pos)
        if (inv[pos] == simple) {
          found = i;
          at = pos;
          break;
        }
    }
    if (found < 0) throw Error("canonical element: inversion set has no simple member");
    inv.erase(inv.begin() + static_cast<std::ptrdiff_t>(at));
    for (AffineRoot& x : inv) x = affine_reflect(rs, found, x);
    discovered.push_back(found);
  }
  std::vector<int> letters(discovered.rbegin(), discovered.rend());
  return AffineWord(std::move(letters));
}

}  // namespace rootposet
