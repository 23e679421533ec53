#include "rootposet/rootlets.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace rootposet {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw Error(message);
}

}  // namespace

Root rootlet(const RootSystem& rs, const RootIdeal& ideal) {
  if (ideal.empty()) throw EmptyIdeal("rootlet of the empty ideal");
  AffineWord w = minuscule_of(rs, ideal);
  AffineRoot image = apply_word(rs, w, two_delta_minus_theta(rs));
  require(image.level == 0, "rootlet image has a delta component");
  RootId id = rs.id_of(Root(image.finite));
  require(rs.is_long(id), "rootlet is not long");
  return rs.root(id);
}

AffineWord shortest_taking_theta_to(const RootSystem& rs, const Root& mu) {
  RootId target = rs.id_of(mu);
  if (!rs.is_long(target)) throw NotLongRoot("shortest element defined for long roots only");

  // BFS from theta over the long positive roots; an edge applies s_i and
  // must satisfy (alpha_i, nu) = 1, which lowers (rho, nu^vee) by one.
  std::vector<int> parent(static_cast<size_t>(rs.num_positive()), -2);
  std::vector<int> letter(static_cast<size_t>(rs.num_positive()), -1);
  std::deque<RootId> queue;
  parent[static_cast<size_t>(rs.theta_id())] = -1;
  queue.push_back(rs.theta_id());
  while (!queue.empty()) {
    RootId cur = queue.front();
    queue.pop_front();
    if (cur == target) break;
    const Root& nu = rs.root(cur);
    for (int i = 1; i <= rs.rank(); ++i) {
      if (inner_product(rs, rs.simple_root(i), nu) != Rational(1)) continue;
      Coeffs c = nu.coeffs();
      int drop = rs.coroot_pairing_simple(c, i);
      c[static_cast<size_t>(i) - 1] -= drop;
      RootId next = rs.id_of(Root(c));
      assert(rs.is_long(next));
      if (parent[static_cast<size_t>(next)] != -2) continue;
      parent[static_cast<size_t>(next)] = cur;
      letter[static_cast<size_t>(next)] = i;
      queue.push_back(next);
    }
  }
  if (parent[static_cast<size_t>(target)] == -2)
    throw Error("no reflection route from theta to " + rs.spec().name() + " root");

  std::vector<int> letters;  // leftmost letter is the last step taken
  for (RootId at = target; parent[static_cast<size_t>(at)] != -1;
       at = parent[static_cast<size_t>(at)])
    letters.push_back(letter[static_cast<size_t>(at)]);
  AffineWord w{std::move(letters)};
  require(w.size() == rs.rho_pairing(rs.theta_id()) - rs.rho_pairing(target),
          "shortest-element length differs from (rho, theta^vee - mu^vee)");
  return w;
}

RootIdeal i_min(const RootSystem& rs, const Root& mu) {
  AffineWord w = shortest_taking_theta_to(rs, mu).append(0);  // w_mu s_0
  std::vector<RootId> members;
  for (RootId a = 0; a < rs.num_positive(); ++a)
    if (!affine_positive(rs, apply_word(rs, w, delta_minus(rs, rs.root(a)))))
      members.push_back(a);
  RootIdeal ideal = RootIdeal::from_members(rs, std::move(members));
  require(ideal.abelian(), "fiber minimum is not abelian");
  require(ideal.size() == rs.rho_pairing(rs.theta_id()) - rs.rho_pairing(rs.id_of(mu)) + 1,
          "fiber minimum has the wrong cardinality");
  return ideal;
}

RootIdeal i_max(const RootSystem& rs, const Root& mu) {
  RootletIndex index = RootletIndex::build(rs);
  return index.fiber(rs.id_of(mu)).max_ideal;
}

int class_of(const RootSystem& rs, const Root& gamma) {
  RootIdeal generated = up_closure(rs, {gamma});
  if (!generated.abelian()) throw NotCommutative("class of a non-commutative root");
  AffineWord w = minuscule_of(rs, generated);
  AffineRoot image = apply_word(rs, w, delta_minus(rs, gamma));
  // gamma is minimal in its own up-closure, so the image is minus an
  // affine simple root.
  Coeffs neg = image.finite;
  for (int& v : neg) v = -v;
  auto beta = affine_simple_index(rs, AffineRoot{std::move(neg), -image.level});
  if (!beta) throw Error("class map left the affine simple system");
  return *beta;
}

RootletIndex RootletIndex::build(const RootSystem& rs) {
  RootletIndex index;
  index.ideals_ = enumerate_abelian_ideals(rs);
  index.words_.reserve(index.ideals_.size());
  index.rootlet_.reserve(index.ideals_.size());
  for (const RootIdeal& ideal : index.ideals_) {
    index.words_.push_back(minuscule_of(rs, ideal));
    if (ideal.empty()) {
      index.rootlet_.push_back(-1);
      continue;
    }
    AffineRoot image =
        apply_word(rs, index.words_.back(), two_delta_minus_theta(rs));
    require(image.level == 0, "rootlet image has a delta component");
    RootId mu = rs.id_of(Root(image.finite));
    require(rs.is_long(mu), "rootlet is not long");
    index.rootlet_.push_back(mu);
  }

  for (RootId a = 0; a < rs.num_positive(); ++a)
    if (rs.is_long(a)) index.long_roots_.push_back(a);

  for (RootId mu : index.long_roots_) {
    RootletFiber fiber;
    fiber.mu = mu;
    for (int k = 0; k < static_cast<int>(index.ideals_.size()); ++k)
      if (index.rootlet_[static_cast<size_t>(k)] == mu) fiber.ideal_ids.push_back(k);
    // tau is onto the long positive roots.
    require(!fiber.ideal_ids.empty(), "empty rootlet fiber");

    // Unique inclusion-minimum and -maximum inside the fiber.
    int min_at = -1, max_at = -1;
    for (int k : fiber.ideal_ids) {
      const RootIdeal& cand = index.ideals_[static_cast<size_t>(k)];
      bool is_min = true, is_max = true;
      for (int other : fiber.ideal_ids) {
        const RootIdeal& o = index.ideals_[static_cast<size_t>(other)];
        if (!o.contains_all(cand)) is_min = false;
        if (!cand.contains_all(o)) is_max = false;
      }
      if (is_min) min_at = k;
      if (is_max) max_at = k;
    }
    if (min_at < 0 || max_at < 0)
      throw Error("rootlet fiber lacks a unique extreme ideal");
    fiber.min_ideal = index.ideals_[static_cast<size_t>(min_at)];
    fiber.max_ideal = index.ideals_[static_cast<size_t>(max_at)];
    fiber.w_mu = shortest_taking_theta_to(rs, rs.root(mu));
    require(fiber.min_ideal == i_min(rs, rs.root(mu)),
            "fiber scan and inversion route disagree on i_min");
    index.fibers_.emplace(mu, std::move(fiber));
  }
  return index;
}

const RootletFiber& RootletIndex::fiber(RootId mu) const {
  auto it = fibers_.find(mu);
  if (it == fibers_.end()) throw NotLongRoot("no rootlet fiber over this root");
  return it->second;
}

}  // namespace rootposet
