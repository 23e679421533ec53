#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "rootposet/exporters.hpp"
#include "rootposet/glorious.hpp"
#include "rootposet/golden.hpp"
#include "rootposet/verify.hpp"
#include "test_oracles.hpp"

using namespace rootposet;
using oracles::root_of;

namespace {

std::set<std::set<Coeffs>> unordered_pairs(const std::vector<GloriousPair>& pairs) {
  std::set<std::set<Coeffs>> out;
  for (const GloriousPair& p : pairs) out.insert({p.eta.coeffs(), p.eta_prime.coeffs()});
  return out;
}

}  // namespace

TEST_CASE("glorious pair counts and small tables") {
  CHECK(glorious_pairs(RootSystem({Family::C, 3})).empty());
  CHECK(glorious_pairs(RootSystem({Family::G, 2})).empty());
  CHECK(glorious_pairs(RootSystem({Family::B, 2})).empty());

  RootSystem d4({Family::D, 4});
  std::set<std::set<Coeffs>> expected_d4{
      {{1, 1, 0, 0}, {0, 1, 1, 1}},  // eps1-eps3, eps2+eps3
      {{1, 1, 0, 1}, {0, 1, 1, 0}},  // eps1+eps4, eps2-eps4
      {{1, 1, 1, 0}, {0, 1, 0, 1}},  // eps1-eps4, eps2+eps4
  };
  CHECK(unordered_pairs(glorious_pairs(d4)) == expected_d4);

  RootSystem e6({Family::E, 6});
  std::vector<GloriousPair> pe6 = glorious_pairs(e6);
  CHECK(pe6.size() == 5);
  std::set<Coeffs> roots_seen;
  for (const GloriousPair& p : pe6) {
    roots_seen.insert(p.eta.coeffs());
    roots_seen.insert(p.eta_prime.coeffs());
  }
  CHECK(roots_seen.size() == 10);
  CHECK(roots_seen.count({1, 1, 1, 0, 0, 1}) == 1);
  CHECK(roots_seen.count({0, 1, 2, 2, 1, 1}) == 1);
}

TEST_CASE("pairs from edges") {
  RootSystem a2({Family::A, 2});
  GloriousPair p = pair_from_edge(a2, 1, 2);
  CHECK(p.eta == a2.simple_root(1));
  CHECK(p.eta_prime == a2.simple_root(2));

  RootSystem b4({Family::B, 4});
  GloriousPair q = pair_from_edge(b4, 2, 3);
  CHECK(q.eta == root_of({1, 1, 1, 0}));        // eps1 - eps4
  CHECK(q.eta_prime == root_of({0, 1, 1, 2}));  // eps2 + eps4

  RootSystem e7({Family::E, 7});
  GloriousPair r = pair_from_edge(e7, 4, 7);
  CHECK(r.eta == root_of({1, 1, 1, 2, 2, 1, 1}));
  CHECK(r.eta_prime == root_of({0, 1, 2, 2, 1, 1, 1}));

  CHECK_THROWS_AS(pair_from_edge(RootSystem({Family::E, 6}), 1, 3), NotAdjacent);
  CHECK_THROWS_AS(pair_from_edge(RootSystem({Family::B, 3}), 2, 3), NotLong);
}

TEST_CASE("edges from pairs") {
  RootSystem a2({Family::A, 2});
  CHECK((edge_from_pair(a2, a2.simple_root(1), a2.simple_root(2)) == std::pair<int, int>{1, 2}));

  RootSystem e6({Family::E, 6});
  CHECK((edge_from_pair(e6, root_of({1, 1, 1, 0, 0, 1}), root_of({0, 1, 2, 2, 1, 1})) ==
         std::pair<int, int>{1, 2}));

  RootSystem d5({Family::D, 5});
  CHECK((edge_from_pair(d5, root_of({1, 1, 1, 0, 1}), root_of({0, 1, 1, 1, 0})) ==
         std::pair<int, int>{3, 4}));

  // A comparable pair summing to theta is not glorious.
  RootSystem b3({Family::B, 3});
  CHECK_THROWS_AS(edge_from_pair(b3, root_of({1, 1, 1}), root_of({0, 1, 1})), NotGlorious);

  // Round trips both ways, all types.
  for (const RootSystemSpec& spec : std::vector<RootSystemSpec>{
           {Family::A, 4}, {Family::B, 4}, {Family::D, 5}, {Family::E, 6}, {Family::F, 4}}) {
    RootSystem rs(spec);
    CAPTURE(spec.name());
    for (const GloriousPair& pair : glorious_pairs(rs)) {
      auto [a, ap] = edge_from_pair(rs, pair.eta, pair.eta_prime);
      CHECK(a == pair.alpha);
      CHECK(ap == pair.alpha_prime);
      GloriousPair again = pair_from_edge(rs, a, ap);
      CHECK(again.eta == pair.eta);
      CHECK(again.eta_prime == pair.eta_prime);
      CHECK(pair.class_eta == pair.alpha_prime);
      CHECK(pair.class_eta_prime == pair.alpha);
    }
  }
}

TEST_CASE("transition roots") {
  RootSystem e6({Family::E, 6});
  CHECK(transition_root(e6, 1, 2, 3) == e6.simple_root(4));

  RootSystem e8({Family::E, 8});
  CHECK(transition_root(e8, 4, 5, 6) == e8.simple_root(4));

  // eta_23 - eta_12 is the transition root, on the frozen D4 rows.
  RootSystem d4({Family::D, 4});
  Root gamma = transition_root(d4, 1, 2, 3);
  GloriousPair p12 = pair_from_edge(d4, 1, 2);
  GloriousPair p23 = pair_from_edge(d4, 2, 3);
  CHECK(p12.eta == root_of({1, 1, 0, 0}));
  CHECK(p23.eta == root_of({1, 1, 0, 1}));
  Coeffs shifted = p12.eta.coeffs();
  for (int i = 1; i <= 4; ++i) shifted[static_cast<size_t>(i) - 1] += gamma.coeff(i);
  CHECK(p23.eta == Root(shifted));
  CHECK(gamma == d4.simple_root(4));

  CHECK_THROWS_AS(transition_root(e6, 1, 2, 4), NotAPath);
  CHECK_THROWS_AS(transition_root(RootSystem({Family::B, 4}), 2, 3, 4), NotLong);
}

TEST_CASE("transition chains") {
  RootSystem e6({Family::E, 6});
  std::vector<Root> chain = transition_chain(e6, {1, 2, 3, 4, 5});
  REQUIRE(chain.size() == 3);
  CHECK(chain[0] == e6.simple_root(4));
  CHECK(chain[1] == e6.simple_root(3));
  CHECK(chain[2] == e6.simple_root(2));

  // Four-chain identity in E7: eta_kl - eta_ij = gamma_j + gamma_k.
  RootSystem e7({Family::E, 7});
  std::vector<Root> two = transition_chain(e7, {1, 2, 3, 4});
  Coeffs sum = two[0].coeffs();
  for (int i = 1; i <= 7; ++i) sum[static_cast<size_t>(i) - 1] += two[1].coeff(i);
  Coeffs diff = pair_from_edge(e7, 3, 4).eta.coeffs();
  for (int i = 1; i <= 7; ++i)
    diff[static_cast<size_t>(i) - 1] -= pair_from_edge(e7, 1, 2).eta.coeff(i);
  CHECK(sum == diff);
  CHECK(e7.is_positive_root(sum));
}

TEST_CASE("semi-glorious pairs") {
  RootSystem b3({Family::B, 3});
  SemiGloriousPair sb = semi_glorious(b3);
  CHECK(sb.alpha == 2);
  CHECK(sb.alpha_prime == 3);
  CHECK(sb.eta == root_of({1, 1, 1}));
  CHECK(sb.eta_prime == root_of({0, 1, 1}));
  CHECK(sb.diff_index == 1);
  CHECK(sb.diff_is_long);
  CHECK(sb.class_eta == 3);

  RootSystem c3({Family::C, 3});
  SemiGloriousPair sc = semi_glorious(c3);
  CHECK(sc.alpha == 3);
  CHECK(sc.alpha_prime == 2);
  CHECK(sc.eta == root_of({1, 1, 1}));
  CHECK(sc.eta_prime == root_of({1, 1, 0}));
  CHECK(sc.diff_index == 3);
  CHECK(sc.diff_is_long);

  RootSystem f4({Family::F, 4});
  SemiGloriousPair sf = semi_glorious(f4);
  CHECK(sf.alpha == 3);
  CHECK(sf.alpha_prime == 2);
  CHECK(sf.eta == root_of({1, 2, 2, 1}));
  CHECK(sf.eta_prime == root_of({1, 2, 1, 1}));
  CHECK(sf.diff_index == 3);
  CHECK(sf.diff_is_long);

  RootSystem g2({Family::G, 2});
  SemiGloriousPair sg = semi_glorious(g2);
  CHECK(sg.alpha == 2);
  CHECK(sg.alpha_prime == 1);
  CHECK(sg.eta == root_of({2, 1}));
  CHECK(sg.eta_prime == root_of({1, 1}));
  CHECK(sg.diff_index == 1);
  CHECK(!sg.diff_is_long);

  CHECK_THROWS_AS(semi_glorious(RootSystem({Family::D, 4})), SimplyLaced);
  CHECK_THROWS_AS(semi_glorious(RootSystem({Family::A, 3})), SimplyLaced);
}

TEST_CASE("only one odd coefficient outside the simply laced types") {
  for (const RootSystemSpec& spec : sweep_specs(8)) {
    if (spec.simply_laced()) continue;
    RootSystem rs(spec);
    CAPTURE(spec.name());
    int odd = 0;
    for (int i = 1; i <= rs.rank(); ++i)
      if (rs.theta().coeff(i) % 2 == 1) ++odd;
    CHECK(odd == 1);
  }
}

TEST_CASE("tail decompositions") {
  CHECK(!tail_decomposition(RootSystem({Family::A, 5})).has_value());
  CHECK_THROWS_AS(tail_decomposition(RootSystem({Family::B, 3})), NotDEType);

  RootSystem d4({Family::D, 4});
  auto td4 = tail_decomposition(d4);
  REQUIRE(td4.has_value());
  CHECK(td4->branch == 2);
  CHECK(td4->tails[0] == std::vector<int>{1});
  CHECK(td4->tails[1] == std::vector<int>{3});
  CHECK(td4->tails[2] == std::vector<int>{4});
  CHECK((td4->odd == std::array<int, 3>{1, 3, 4}));

  auto te6 = tail_decomposition(RootSystem({Family::E, 6}));
  REQUIRE(te6.has_value());
  CHECK(te6->branch == 3);
  CHECK((te6->odd == std::array<int, 3>{1, 5, 3}));

  auto te7 = tail_decomposition(RootSystem({Family::E, 7}));
  CHECK(te7->branch == 4);
  CHECK((te7->odd == std::array<int, 3>{1, 5, 3}));

  auto te8 = tail_decomposition(RootSystem({Family::E, 8}));
  CHECK(te8->branch == 5);
  CHECK((te8->odd == std::array<int, 3>{2, 8, 4}));

  auto td7 = tail_decomposition(RootSystem({Family::D, 7}));
  CHECK(td7->branch == 5);
  CHECK((td7->odd == std::array<int, 3>{1, 6, 7}));
}

TEST_CASE("the interval") {
  CHECK(!interval(RootSystem({Family::A, 4})).has_value());

  RootSystem d4({Family::D, 4});
  auto iv4 = interval(d4);
  REQUIRE(iv4.has_value());
  CHECK(iv4->cube);
  CHECK(iv4->members.size() == 8);
  CHECK(iv4->bottom == root_of({0, 1, 0, 0}));
  CHECK(iv4->top == root_of({1, 1, 1, 1}));

  RootSystem e6({Family::E, 6});
  auto iv6 = interval(e6);
  REQUIRE(iv6.has_value());
  CHECK(iv6->bottom == root_of({0, 1, 1, 1, 0, 1}));
  CHECK(iv6->top == root_of({1, 1, 2, 1, 1, 1}));
  CHECK(iv6->class_top == 3);
  bool found_36 = false;
  for (const auto& central : iv6->central) {
    if (central.edge_b == 6) {
      found_36 = true;
      CHECK(central.edge_a == 3);
      CHECK(central.upper == root_of({1, 1, 1, 1, 1, 1}));
      CHECK(central.lower == root_of({0, 1, 2, 1, 0, 1}));
      CHECK(central.class_lower == 3);
      CHECK(central.class_upper == 6);
    }
  }
  CHECK(found_36);

  RootSystem b3({Family::B, 3});
  auto ivb = interval(b3);
  REQUIRE(ivb.has_value());
  CHECK(!ivb->cube);
  REQUIRE(ivb->members.size() == 2);
  CHECK(ivb->members[0] == root_of({0, 1, 1}));
  CHECK(ivb->members[1] == root_of({1, 1, 1}));
}

TEST_CASE("meet distances") {
  RootSystem e6({Family::E, 6});
  MeetData central = meet_distance(e6, 2, 3);
  CHECK(central.distance == 0);
  CHECK(central.meet_root == root_of({0, 1, 1, 1, 0, 1}));
  CHECK(central.join_root == root_of({1, 1, 2, 1, 1, 1}));

  MeetData off = meet_distance(e6, 1, 2);
  CHECK(off.distance == 1);
  CHECK(off.meet_root == root_of({0, 1, 1, 0, 0, 1}));
  CHECK(off.meet_root.height() == 3);
  REQUIRE(off.transitions.size() == 1);
  CHECK(off.transitions[0] == e6.simple_root(4));

  RootSystem b4({Family::B, 4});
  MeetData far = meet_distance(b4, 1, 2);
  CHECK(far.distance == 2);
  REQUIRE(far.transitions.size() == 2);
  CHECK(far.transitions[0] == b4.simple_root(3));
  CHECK(far.transitions[1] == b4.simple_root(4));
  CHECK(far.meet_root == root_of({0, 1, 0, 0}));
  CHECK(far.join_root == root_of({1, 1, 2, 2}));

  CHECK_THROWS_AS(meet_distance(RootSystem({Family::A, 3}), 1, 2), TypeAUnsupported);
  CHECK_THROWS_AS(meet_distance(b4, 3, 4), NotGloriousEdge);

  // Meets stay under theta_breve, strictly unless central.
  for (const RootSystemSpec& spec :
       std::vector<RootSystemSpec>{{Family::D, 6}, {Family::E, 7}, {Family::B, 5}}) {
    RootSystem rs(spec);
    CAPTURE(spec.name());
    Root breve = *theta_breve(rs);
    for (auto [i, j] : rs.dynkin_edges()) {
      if (!rs.simple_is_long(i) || !rs.simple_is_long(j)) continue;
      MeetData data = meet_distance(rs, i, j);
      CHECK(is_leq(rs, data.meet_root, breve));
      CHECK((data.distance == 0) == (data.meet_root == breve));
    }
  }
}

TEST_CASE("minimal non-abelian ideals") {
  RootSystem a2({Family::A, 2});
  std::vector<RootIdeal> ma2 = minimal_nonabelian(a2);
  REQUIRE(ma2.size() == 1);
  CHECK(ma2[0].size() == 3);

  RootSystem g2({Family::G, 2});
  std::vector<RootIdeal> mg2 = minimal_nonabelian(g2);
  REQUIRE(mg2.size() == 1);
  CHECK(mg2[0].size() == 4);
  std::set<Coeffs> members;
  for (RootId id : mg2[0].members()) members.insert(g2.root(id).coeffs());
  CHECK(members == std::set<Coeffs>{{1, 1}, {2, 1}, {3, 1}, {3, 2}});

  CHECK(minimal_nonabelian(RootSystem({Family::F, 4})).size() == 2);
  CHECK(minimal_nonabelian(RootSystem({Family::D, 4})).size() == 3);
  CHECK(minimal_nonabelian(RootSystem({Family::A, 1})).empty());

  // Canonical words.
  AffineWord wa2 = canonical_min_nonabelian(a2, ma2[0]);
  CHECK(wa2.size() == 4);
  CHECK(same_action(a2, wa2, canonical_of(a2, ma2[0])));

  AffineWord wg2 = canonical_min_nonabelian(g2, mg2[0]);
  CHECK(wg2.size() == 5);  // h* + 1
  CHECK(same_action(g2, wg2, canonical_of(g2, mg2[0])));
}

TEST_CASE("golden epsilon dictionaries agree with the built systems") {
  RootSystem d6({Family::D, 6});
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      CHECK(d6.is_positive_root(golden::d_eps_minus(6, i, j)));
      CHECK(d6.is_positive_root(golden::d_eps_plus(6, i, j)));
    }
  RootSystem b5({Family::B, 5});
  for (int i = 1; i <= 5; ++i) {
    CHECK(b5.is_positive_root(golden::b_eps_minus(5, i, 6)));  // eps_i itself
    for (int j = i + 1; j <= 5; ++j) {
      CHECK(b5.is_positive_root(golden::b_eps_minus(5, i, j)));
      CHECK(b5.is_positive_root(golden::b_eps_plus(5, i, j)));
    }
  }
  RootSystem c5({Family::C, 5});
  for (int i = 1; i <= 4; ++i) {
    CHECK(c5.is_positive_root(golden::c_eps_minus(5, i, 5)));
    CHECK(c5.is_positive_root(golden::c_eps_plus(5, i, 5)));
  }
}
