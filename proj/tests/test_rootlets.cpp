#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <set>

#include "rootposet/rootlets.hpp"
#include "rootposet/verify.hpp"
#include "test_oracles.hpp"

using namespace rootposet;
using oracles::root_of;

TEST_CASE("rootlets of small ideals") {
  RootSystem a2({Family::A, 2});
  CHECK(rootlet(a2, up_closure(a2, {a2.theta()})) == a2.theta());
  CHECK(rootlet(a2, up_closure(a2, {a2.simple_root(1)})) == a2.simple_root(1));
  CHECK_THROWS_AS(rootlet(a2, up_closure(a2, {})), EmptyIdeal);
}

TEST_CASE("shortest elements taking theta to a long root") {
  RootSystem a2({Family::A, 2});
  CHECK(shortest_taking_theta_to(a2, a2.theta()).empty());
  CHECK(shortest_taking_theta_to(a2, a2.simple_root(1)).letters() == std::vector<int>{2});

  RootSystem e6({Family::E, 6});
  Root a1a2 = root_of({1, 1, 0, 0, 0, 0});
  CHECK(shortest_taking_theta_to(e6, a1a2).size() == 9);  // h* - 3

  RootSystem b3({Family::B, 3});
  CHECK_THROWS_AS(shortest_taking_theta_to(b3, root_of({1, 1, 1})), NotLongRoot);

  // The word actually moves theta to mu, with the announced length.
  for (const RootSystemSpec& spec :
       std::vector<RootSystemSpec>{{Family::B, 4}, {Family::D, 5}, {Family::F, 4}}) {
    RootSystem rs(spec);
    CAPTURE(spec.name());
    for (RootId id = 0; id < rs.num_positive(); ++id) {
      if (!rs.is_long(id)) continue;
      AffineWord w = shortest_taking_theta_to(rs, rs.root(id));
      CHECK(apply_word(rs, w, finite_affine(rs.theta())) == finite_affine(rs.root(id)));
      CHECK(w.size() == rs.rho_pairing(rs.theta_id()) - rs.rho_pairing(id));
      // Finite inversion set: the positive roots pairing to -1 with mu-vee.
      std::vector<AffineRoot> inv = inversion_set(rs, w.inverse(), 0);
      std::set<Coeffs> got;
      for (const AffineRoot& x : inv) got.insert(x.finite);
      std::set<Coeffs> expected;
      Rational n2 = rs.norm2(id);
      for (RootId g = 0; g < rs.num_positive(); ++g) {
        Rational pairing = Rational(2) * inner_product(rs, rs.root(g), rs.root(id)) / n2;
        if (pairing == Rational(-1)) expected.insert(rs.root(g).coeffs());
      }
      CHECK(got == expected);
    }
  }
}

TEST_CASE("uniqueness of the shortest element via exhaustive word search") {
  // Every reduced word of the minimal length that takes theta to mu acts
  // like the one the walk finds (whole rank <= 4 sweep).
  for (const RootSystemSpec& spec : sweep_specs(4)) {
    RootSystem rs(spec);
    CAPTURE(spec.name());
    for (RootId id = 0; id < rs.num_positive(); ++id) {
      if (!rs.is_long(id)) continue;
      AffineWord reference = shortest_taking_theta_to(rs, rs.root(id));
      int len = reference.size();
      if (len > 7) continue;
      int hits = 0;
      std::vector<int> letters(static_cast<size_t>(len), 1);
      std::function<void(int)> scan = [&](int pos) {
        if (pos == len) {
          AffineWord w{letters};
          if (!(apply_word(rs, w, finite_affine(rs.theta())) == finite_affine(rs.root(id))))
            return;
          if (inversion_count(rs, w, 0) != len) return;  // not reduced
          ++hits;
          CHECK(same_action(rs, w, reference));
          return;
        }
        for (int i = 1; i <= rs.rank(); ++i) {
          letters[static_cast<size_t>(pos)] = i;
          scan(pos + 1);
        }
      };
      scan(0);
      CHECK(hits >= 1);  // the reference itself qualifies
    }
  }
}

TEST_CASE("fiber minima") {
  RootSystem a2({Family::A, 2});
  CHECK(i_min(a2, a2.theta()).members() == std::vector<RootId>{a2.theta_id()});

  RootSystem d4({Family::D, 4});
  for (int i = 1; i <= 4; ++i) CHECK(i_min(d4, d4.simple_root(i)).size() == 5);  // h* - 1

  RootSystem e6({Family::E, 6});
  RootIdeal imin3 = i_min(e6, e6.simple_root(3));
  std::set<Coeffs> mins;
  for (RootId id : imin3.min_elements()) mins.insert(e6.root(id).coeffs());
  std::set<Coeffs> expected{{0, 1, 2, 1, 1, 1}, {1, 1, 1, 1, 1, 1}, {1, 1, 2, 1, 0, 1}};
  CHECK(mins == expected);

  RootIdeal imin6 = i_min(e6, e6.simple_root(6));
  REQUIRE(imin6.min_elements().size() == 1);
  CHECK(e6.root(imin6.min_elements()[0]) == root_of({0, 1, 2, 1, 0, 1}));

  CHECK_THROWS_AS(i_min(RootSystem({Family::B, 3}), root_of({1, 1, 1})), NotLongRoot);
}

TEST_CASE("fiber maxima") {
  RootSystem e6({Family::E, 6});
  RootIdeal imax6 = i_max(e6, e6.simple_root(6));
  std::vector<Root> maxc = max_complement(e6, imax6);
  REQUIRE(maxc.size() == 1);
  CHECK(maxc[0] == root_of({1, 1, 1, 1, 1, 1}));
  CHECK(imax6.contains_all(i_min(e6, e6.simple_root(6))));
}

TEST_CASE("the class map") {
  RootSystem a2({Family::A, 2});
  CHECK(class_of(a2, a2.theta()) == 0);
  CHECK(class_of(a2, a2.simple_root(1)) == 2);

  RootSystem e6({Family::E, 6});
  CHECK(class_of(e6, *theta_tilde(e6)) == 3);

  RootSystem d4({Family::D, 4});
  CHECK_THROWS_AS(class_of(d4, root_of({0, 1, 0, 0})), NotCommutative);

  // Well-definedness across witness ideals, and the finiteness of classes
  // inside the Heisenberg ideal below theta.
  for (const RootSystemSpec& spec :
       std::vector<RootSystemSpec>{{Family::A, 4}, {Family::B, 3}, {Family::D, 4},
                                   {Family::G, 2}}) {
    RootSystem rs(spec);
    CAPTURE(spec.name());
    RootletIndex index = RootletIndex::build(rs);
    for (RootId gamma = 0; gamma < rs.num_positive(); ++gamma) {
      if (!up_closure_ids(rs, {gamma}).abelian()) continue;
      int expected = class_of(rs, rs.root(gamma));
      if (rs.theta_pairing(gamma) > 0 && gamma != rs.theta_id()) CHECK(expected != 0);
      for (size_t k = 0; k < index.abelian_ideals().size(); ++k) {
        const RootIdeal& ideal = index.abelian_ideals()[k];
        if (!std::binary_search(ideal.min_elements().begin(), ideal.min_elements().end(),
                                gamma))
          continue;
        AffineRoot image =
            apply_word(rs, index.minuscule_words()[k], delta_minus(rs, rs.root(gamma)));
        Coeffs neg = image.finite;
        for (int& v : neg) v = -v;
        CHECK(affine_simple_index(rs, AffineRoot{std::move(neg), -image.level}) == expected);
      }
    }
  }
}

TEST_CASE("the rootlet index") {
  for (const RootSystemSpec& spec :
       std::vector<RootSystemSpec>{{Family::A, 3}, {Family::B, 3}, {Family::D, 4},
                                   {Family::F, 4}, {Family::G, 2}}) {
    RootSystem rs(spec);
    CAPTURE(spec.name());
    RootletIndex index = RootletIndex::build(rs);

    // Fibers partition the nonempty abelian ideals, onto the long roots.
    size_t covered = 0;
    for (RootId mu : index.long_roots()) {
      const RootletFiber& fiber = index.fiber(mu);
      CHECK(!fiber.ideal_ids.empty());
      covered += fiber.ideal_ids.size();
      CHECK(fiber.min_ideal == i_min(rs, rs.root(mu)));
      for (int k : fiber.ideal_ids) {
        const RootIdeal& ideal = index.abelian_ideals()[static_cast<size_t>(k)];
        CHECK(ideal.contains_all(fiber.min_ideal));
        CHECK(fiber.max_ideal.contains_all(ideal));
        CHECK(rootlet(rs, ideal) == rs.root(mu));
      }
    }
    CHECK(covered + 1 == index.abelian_ideals().size());

    // Fiber membership through the Heisenberg intersection.
    RootIdeal heis = heisenberg(rs);
    for (size_t k = 0; k < index.abelian_ideals().size(); ++k) {
      const RootIdeal& ideal = index.abelian_ideals()[k];
      if (ideal.empty()) continue;
      RootId mu = index.rootlet_of(static_cast<int>(k));
      std::vector<RootId> inter;
      for (RootId id : ideal.members())
        if (heis.contains(id)) inter.push_back(id);
      CHECK(inter == index.fiber(mu).min_ideal.members());
    }
  }
}
