#include "rootposet/glorious.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>

namespace rootposet {

namespace {

// Postconditions in this module are stated facts about root systems; they
// stay on in every build.
void require(bool condition, const char* message) {
  if (!condition) throw Error(message);
}

Root subtract(const Root& a, const Root& b) {
  Coeffs c = a.coeffs();
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs()[i];
  return Root(std::move(c));
}

Root add(const Root& a, const Root& b) {
  Coeffs c = a.coeffs();
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
  return Root(std::move(c));
}

bool incomparable(const RootSystem& rs, const Root& a, const Root& b) {
  return !is_leq(rs, a, b) && !is_leq(rs, b, a);
}

// w^{-1}(x) for a finite word and a level-0 vector.
Coeffs apply_inverse(const RootSystem& rs, const AffineWord& w, const Coeffs& x) {
  return apply_word(rs, w.inverse(), AffineRoot{x, 0}).finite;
}

Root sum_of_simples(const RootSystem& rs, const std::vector<int>& subset) {
  Coeffs c(static_cast<size_t>(rs.rank()), 0);
  for (int i : subset) c[static_cast<size_t>(i) - 1] += 1;
  return Root(std::move(c));
}

}  // namespace

GloriousPair pair_from_edge(const RootSystem& rs, int a, int ap) {
  if (a < 1 || a > rs.rank() || ap < 1 || ap > rs.rank() || a == ap)
    throw NotAdjacent("invalid simple root indices");
  if (!rs.simple_is_long(a) || !rs.simple_is_long(ap))
    throw NotLong("glorious pairs attach to edges of the long subdiagram");
  if (!rs.adjacent(a, ap)) throw NotAdjacent("simple roots are not adjacent");

  Root edge_sum = add(rs.simple_root(a), rs.simple_root(ap));
  AffineWord wa = shortest_taking_theta_to(rs, rs.simple_root(a));
  AffineWord wap = shortest_taking_theta_to(rs, rs.simple_root(ap));
  Root eta = Root(apply_inverse(rs, wa, edge_sum.coeffs()));
  Root eta_prime = Root(apply_inverse(rs, wap, edge_sum.coeffs()));

  GloriousPair pair{eta, eta_prime, a, ap, class_of(rs, eta), class_of(rs, eta_prime)};
  require(add(eta, eta_prime) == rs.theta(), "edge pair does not sum to theta");
  require(pair.class_eta == ap && pair.class_eta_prime == a,
          "edge pair classes mismatch");

  // Alternative route: i_min(a) minus i_min(a+ap) is the single root eta.
  RootIdeal ia = i_min(rs, rs.simple_root(a));
  RootIdeal iaap = i_min(rs, Root(edge_sum.coeffs()));
  std::vector<RootId> diff;
  for (RootId id : ia.members())
    if (!iaap.contains(id)) diff.push_back(id);
  require(diff.size() == 1 && rs.root(diff.front()) == eta,
          "i_min difference route disagrees");

  return pair;
}

std::pair<int, int> edge_from_pair(const RootSystem& rs, const Root& eta,
                                   const Root& eta_prime) {
  RootId e = rs.id_of(eta), ep = rs.id_of(eta_prime);
  if (rs.sum(e, ep) != rs.theta_id() || !incomparable(rs, eta, eta_prime))
    throw NotGlorious("pair must be incomparable and sum to theta");
  int ap = class_of(rs, eta);
  int a = class_of(rs, eta_prime);
  require(a >= 1 && ap >= 1 && rs.simple_is_long(a) && rs.simple_is_long(ap) &&
              rs.adjacent(a, ap),
          "classes of a glorious pair are not an edge of the long subdiagram");
  RootIdeal ia = i_min(rs, rs.simple_root(a));
  require(std::binary_search(ia.min_elements().begin(), ia.min_elements().end(), e),
          "eta is not minimal in its fiber minimum");
  return {a, ap};
}

std::vector<GloriousPair> glorious_pairs(const RootSystem& rs) {
  std::vector<GloriousPair> out;
  for (RootId x = 0; x < rs.num_positive(); ++x)
    for (RootId y = x; y < rs.num_positive(); ++y) {
      if (rs.sum(x, y) != rs.theta_id()) continue;
      if (!incomparable(rs, rs.root(x), rs.root(y))) continue;
      auto [a_for_x, ap_for_x] = edge_from_pair(rs, rs.root(x), rs.root(y));
      GloriousPair pair;
      if (a_for_x < ap_for_x) {
        pair = GloriousPair{rs.root(x), rs.root(y), a_for_x, ap_for_x, ap_for_x, a_for_x};
      } else {
        pair = GloriousPair{rs.root(y), rs.root(x), ap_for_x, a_for_x, a_for_x, ap_for_x};
      }
      out.push_back(std::move(pair));
    }
  std::sort(out.begin(), out.end(), [](const GloriousPair& p, const GloriousPair& q) {
    return canonical_less(p.eta, q.eta);
  });
  require(static_cast<int>(out.size()) ==
              static_cast<int>(rs.long_simples().size()) - 1,
          "glorious pair count differs from #Pi_l - 1");
  return out;
}

Root transition_root(const RootSystem& rs, int i, int j, int k) {
  for (int v : {i, j, k})
    if (v < 1 || v > rs.rank()) throw NotAPath("simple root index out of range");
  if (i == k || !rs.adjacent(i, j) || !rs.adjacent(j, k))
    throw NotAPath("indices do not form a path in the Dynkin diagram");
  if (!rs.simple_is_long(i) || !rs.simple_is_long(j) || !rs.simple_is_long(k))
    throw NotLong("transition roots attach to long triples");

  Root triple = sum_of_simples(rs, {i, j, k});
  AffineWord w = shortest_taking_theta_to(rs, triple);
  Root gamma = Root(apply_inverse(rs, w, rs.simple_root(j).coeffs()));
  RootId gid = rs.id_of(gamma);
  require(rs.height(gid) == 1 && rs.is_long(gid),
          "transition root is not a long simple root");
  require(rs.theta_pairing(gid) == 0, "transition root is not orthogonal to theta");

  // Shift identity between the pairs of the two incident edges:
  // eta_jk - eta_ij = gamma = eta_ji - eta_kj.
  GloriousPair pij = pair_from_edge(rs, i, j);
  GloriousPair pjk = pair_from_edge(rs, j, k);
  require(pjk.eta == add(pij.eta, gamma) && pjk.eta_prime == subtract(pij.eta_prime, gamma),
          "shift identity fails");
  return gamma;
}

std::vector<Root> transition_chain(const RootSystem& rs, const std::vector<int>& chain) {
  if (chain.size() < 3) throw NotAPath("a chain needs at least three nodes");
  std::vector<Root> out;
  for (size_t t = 0; t + 2 < chain.size(); ++t)
    out.push_back(transition_root(rs, chain[t], chain[t + 1], chain[t + 2]));
  return out;
}

SemiGloriousPair semi_glorious(const RootSystem& rs) {
  if (rs.spec().simply_laced())
    throw SimplyLaced("semi-glorious pair needs a mixed-length edge");

  int a = 0, ap = 0;
  for (auto [i, j] : rs.dynkin_edges()) {
    if (rs.simple_is_long(i) != rs.simple_is_long(j)) {
      a = rs.simple_is_long(i) ? i : j;
      ap = rs.simple_is_long(i) ? j : i;
    }
  }
  require(a != 0, "no mixed-length edge found");

  Root edge_sum = add(rs.simple_root(a), rs.simple_root(ap));
  AffineWord wa = shortest_taking_theta_to(rs, rs.simple_root(a));
  Root eta = Root(apply_inverse(rs, wa, edge_sum.coeffs()));
  Root eta_prime = subtract(rs.theta(), eta);

  SemiGloriousPair semi;
  semi.eta = eta;
  semi.eta_prime = eta_prime;
  semi.alpha = a;
  semi.alpha_prime = ap;
  semi.class_eta = class_of(rs, eta);

  require(eta == *theta_tilde(rs) && eta_prime == *theta_breve(rs),
          "semi-glorious pair is not (theta_tilde, theta_breve)");
  require(semi.class_eta == ap, "class of the semi-glorious eta mismatches");

  // The ideal generated by eta_prime is i_min(a) plus eta_prime itself.
  RootIdeal gen = up_closure(rs, {eta_prime});
  RootIdeal imin_a = i_min(rs, rs.simple_root(a));
  require(gen.size() == imin_a.size() + 1, "ideal of eta_prime has the wrong size");
  for (RootId id : imin_a.members())
    require(gen.contains(id), "ideal of eta_prime does not contain i_min(alpha)");
  require(gen.contains(rs.id_of(eta_prime)) && !imin_a.contains(rs.id_of(eta_prime)),
          "eta_prime sits wrongly relative to i_min(alpha)");

  Root diff = subtract(eta, eta_prime);
  RootId did = rs.id_of(diff);
  require(rs.height(did) == 1, "eta - eta_prime is not simple");
  semi.simple_diff = diff;
  for (int i = 1; i <= rs.rank(); ++i)
    if (diff.coeff(i) == 1) semi.diff_index = i;
  semi.diff_is_long = rs.is_long(did);
  return semi;
}

std::optional<TailDecomposition> tail_decomposition(const RootSystem& rs) {
  Family fam = rs.spec().family;
  if (fam == Family::A) return std::nullopt;
  if (fam != Family::D && fam != Family::E)
    throw NotDEType("tails exist in types D and E only");

  int n = rs.rank();
  Root pi_sum = sum_of_simples(rs, [&] {
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) all[static_cast<size_t>(i) - 1] = i;
    return all;
  }());

  // The unique branch node: |Pi| + branch is a root.
  int branch = 0;
  for (int i = 1; i <= n; ++i)
    if (rs.is_positive_root(add(pi_sum, rs.simple_root(i)).coeffs())) {
      require(branch == 0, "branch root is not unique");
      branch = i;
    }
  require(branch != 0, "no branch root found");

  AffineWord w_pi = shortest_taking_theta_to(rs, pi_sum);
  Root breve = *theta_breve(rs);
  {
    Coeffs img = apply_inverse(rs, w_pi, rs.simple_root(branch).coeffs());
    Coeffs neg = breve.coeffs();
    for (int& v : neg) v = -v;
    require(img == neg, "w_{|Pi|} does not send the branch root to -theta_breve");
  }

  // Components of the diagram minus the branch node.
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  seen[static_cast<size_t>(branch)] = true;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    std::vector<int> comp{start};
    seen[static_cast<size_t>(start)] = true;
    for (size_t at = 0; at < comp.size(); ++at)
      for (int j = 1; j <= n; ++j)
        if (!seen[static_cast<size_t>(j)] && rs.adjacent(comp[at], j)) {
          seen[static_cast<size_t>(j)] = true;
          comp.push_back(j);
        }
    comps.push_back(std::move(comp));
  }
  require(comps.size() == 3, "the diagram minus the branch has not three components");

  TailDecomposition tails;
  tails.branch = branch;
  // Tail numbering: T1 contains alpha_1, T2 contains alpha_{n-1}, T3
  // contains alpha_n.
  auto contains = [](const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  for (auto& comp : comps) {
    int slot = contains(comp, 1) ? 0 : (contains(comp, n - 1) ? 1 : 2);
    if (slot == 2) require(contains(comp, n), "tail numbering convention violated");
    // Order the tail from the branch outward.
    std::vector<int> ordered;
    int prev = branch;
    int cur = 0;
    for (int x : comp)
      if (rs.adjacent(x, branch)) cur = x;
    require(cur != 0, "tail does not touch the branch");
    while (cur != 0) {
      ordered.push_back(cur);
      int next = 0;
      for (int x : comp)
        if (x != prev && x != cur && rs.adjacent(x, cur)) next = x;
      prev = cur;
      cur = next;
    }
    require(ordered.size() == comp.size(), "tail is not a chain");
    tails.nu[static_cast<size_t>(slot)] = ordered.front();
    tails.tails[static_cast<size_t>(slot)] = std::move(ordered);
  }

  // Match tails with odd roots through w_{|Pi|}.
  std::vector<int> odd_set;
  for (int i = 1; i <= n; ++i)
    if (rs.theta().coeff(i) % 2 == 1) odd_set.push_back(i);
  require(odd_set.size() == 3, "not exactly three odd roots");

  for (int t = 0; t < 3; ++t) {
    std::vector<int> hat = tails.tails[static_cast<size_t>(t)];
    hat.push_back(branch);
    Root hat_sum = sum_of_simples(rs, hat);
    rs.id_of(hat_sum);
    Root beta = Root(apply_inverse(rs, w_pi, hat_sum.coeffs()));
    RootId bid = rs.id_of(beta);
    require(rs.height(bid) == 1, "matched odd root is not simple");
    int beta_index = 0;
    for (int i = 1; i <= n; ++i)
      if (beta.coeff(i) == 1) beta_index = i;
    require(std::find(odd_set.begin(), odd_set.end(), beta_index) != odd_set.end(),
            "matched root has an even theta-coefficient");
    tails.odd[static_cast<size_t>(t)] = beta_index;

    // w_{|Pi|}^{-1}(|T_i|) = theta_breve + beta_i.
    Root tail_sum = sum_of_simples(rs, tails.tails[static_cast<size_t>(t)]);
    require(Root(apply_inverse(rs, w_pi, tail_sum.coeffs())) == add(breve, beta),
            "tail sum does not map to theta_breve + beta");

    // w_branch^{-1}(nu_i) = -(theta_breve + beta_i).
    AffineWord w_branch = shortest_taking_theta_to(rs, rs.simple_root(branch));
    Coeffs img = apply_inverse(
        rs, w_branch, rs.simple_root(tails.nu[static_cast<size_t>(t)]).coeffs());
    Coeffs neg = add(breve, beta).coeffs();
    for (int& v : neg) v = -v;
    require(img == neg, "w_branch does not send nu to -(theta_breve + beta)");
  }
  {
    std::array<int, 3> sorted_odd = tails.odd;
    std::sort(sorted_odd.begin(), sorted_odd.end());
    require(std::equal(sorted_odd.begin(), sorted_odd.end(), odd_set.begin()),
            "tails do not match the odd roots bijectively");
  }
  return tails;
}

std::optional<IntervalStructure> interval(const RootSystem& rs) {
  auto breve = theta_breve(rs);
  if (!breve) return std::nullopt;
  Root tilde = *theta_tilde(rs);

  IntervalStructure out;
  out.bottom = *breve;
  out.top = tilde;
  for (const Root& r : rs.positive_roots())
    if (is_leq(rs, *breve, r) && is_leq(rs, r, tilde)) out.members.push_back(r);

  Family fam = rs.spec().family;
  if (fam == Family::D || fam == Family::E) {
    out.cube = true;
    TailDecomposition tails = *tail_decomposition(rs);
    // The interval is the boolean cube on the three odd roots.
    require(out.members.size() == 8, "interval is not an 8-element cube");
    for (int mask = 0; mask < 8; ++mask) {
      Root v = *breve;
      for (int t = 0; t < 3; ++t)
        if (mask >> t & 1) v = add(v, rs.simple_root(tails.odd[static_cast<size_t>(t)]));
      require(std::find(out.members.begin(), out.members.end(), v) != out.members.end(),
              "cube vertex escapes the interval");
      for (int sub = 0; sub < 8; ++sub) {
        Root w = *breve;
        for (int t = 0; t < 3; ++t)
          if (sub >> t & 1) w = add(w, rs.simple_root(tails.odd[static_cast<size_t>(t)]));
        bool subset = (sub & mask) == sub;
        require(is_leq(rs, w, v) == subset, "interval is not order-isomorphic to the cube");
      }
    }

    for (int t = 0; t < 3; ++t) {
      IntervalStructure::CentralPair central;
      central.edge_a = tails.branch;
      central.edge_b = tails.nu[static_cast<size_t>(t)];
      central.lower = add(*breve, rs.simple_root(tails.odd[static_cast<size_t>(t)]));
      central.upper = subtract(tilde, rs.simple_root(tails.odd[static_cast<size_t>(t)]));
      central.class_lower = class_of(rs, central.lower);
      central.class_upper = class_of(rs, central.upper);
      require(central.class_lower == tails.branch &&
                  central.class_upper == tails.nu[static_cast<size_t>(t)],
              "central pair classes mismatch");
      // These are exactly the pair of the edge {branch, nu_i}: upper is
      // attached to the branch.
      GloriousPair pair = pair_from_edge(rs, tails.branch, central.edge_b);
      require(pair.eta == central.upper && pair.eta_prime == central.lower,
              "central pair differs from the pair of its edge");
      require(*meet(rs, central.lower, central.upper) == *breve &&
                  join(rs, central.lower, central.upper) == tilde,
              "central pair meet/join are not the interval ends");
      out.central.push_back(std::move(central));
    }
  } else {
    require(out.members.size() == 2, "interval is not a two-element chain");
  }
  out.class_top = class_of(rs, tilde);
  return out;
}

namespace {

// Path between two edges of the (tree-shaped) diagram, as a sequence of
// edges; edges are incident when they share a node.
std::vector<std::pair<int, int>> edge_path(const RootSystem& rs, std::pair<int, int> from,
                                           const std::vector<std::pair<int, int>>& targets) {
  auto incident = [](std::pair<int, int> e, std::pair<int, int> f) {
    return e != f && (e.first == f.first || e.first == f.second || e.second == f.first ||
                      e.second == f.second);
  };
  std::vector<std::pair<int, int>> edges = rs.dynkin_edges();
  std::map<std::pair<int, int>, std::pair<int, int>> parent;
  std::deque<std::pair<int, int>> queue{from};
  parent[from] = from;
  std::pair<int, int> hit{0, 0};
  bool done = false;
  while (!queue.empty() && !done) {
    auto cur = queue.front();
    queue.pop_front();
    if (std::find(targets.begin(), targets.end(), cur) != targets.end()) {
      hit = cur;
      done = true;
      break;
    }
    for (auto& next : edges)
      if (incident(cur, next) && !parent.count(next)) {
        parent[next] = cur;
        queue.push_back(next);
      }
  }
  if (!done) throw Error("no path to a central edge");
  std::vector<std::pair<int, int>> path;
  for (auto at = hit;; at = parent[at]) {
    path.push_back(at);
    if (at == parent[at]) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

int shared_node(std::pair<int, int> e, std::pair<int, int> f) {
  if (e.first == f.first || e.first == f.second) return e.first;
  assert(e.second == f.first || e.second == f.second);
  return e.second;
}

int other_node(std::pair<int, int> e, int node) {
  return e.first == node ? e.second : e.first;
}

}  // namespace

MeetData meet_distance(const RootSystem& rs, int a, int ap) {
  Family fam = rs.spec().family;
  if (fam == Family::A)
    throw TypeAUnsupported("meet distance is anchored at theta_breve, absent in type A");
  if (a < 1 || a > rs.rank() || ap < 1 || ap > rs.rank() || !rs.adjacent(a, ap) ||
      !rs.simple_is_long(a) || !rs.simple_is_long(ap))
    throw NotGloriousEdge("edge does not carry a glorious pair");

  // Anchor edges: through the branch node in D/E, the mixed-length edge in
  // B/C/F/G.
  std::vector<std::pair<int, int>> anchors;
  if (fam == Family::D || fam == Family::E) {
    int branch = tail_decomposition(rs)->branch;
    for (auto e : rs.dynkin_edges())
      if (e.first == branch || e.second == branch) anchors.push_back(e);
  } else {
    for (auto e : rs.dynkin_edges())
      if (rs.simple_is_long(e.first) != rs.simple_is_long(e.second)) anchors.push_back(e);
  }

  std::pair<int, int> start{std::min(a, ap), std::max(a, ap)};
  auto path = edge_path(rs, start, anchors);

  GloriousPair pair = pair_from_edge(rs, a, ap);
  MeetData data;
  data.distance = static_cast<int>(path.size()) - 1;

  // Transition roots along the path. Consecutive edges (x,j),(j,y) give the
  // long-triple transition root, except for a final step onto the mixed
  // edge, covered by the semi-glorious shift.
  for (size_t t = 0; t + 1 < path.size(); ++t) {
    int j = shared_node(path[t], path[t + 1]);
    int x = other_node(path[t], j);
    int y = other_node(path[t + 1], j);
    if (rs.simple_is_long(y)) {
      data.transitions.push_back(transition_root(rs, x, j, y));
    } else {
      SemiGloriousPair semi = semi_glorious(rs);
      require(semi.alpha == j && semi.alpha_prime == y, "path ends off the mixed edge");
      Root gamma = subtract(semi.eta, pair_from_edge(rs, x, j).eta);
      RootId gid = rs.id_of(gamma);
      require(rs.height(gid) == 1 && !rs.is_long(gid),
              "mixed transition root is not a short simple root");
      require(rs.theta_pairing(gid) == 0,
              "mixed transition root is not orthogonal to theta");
      data.transitions.push_back(gamma);
    }
  }

  Root breve = *theta_breve(rs);
  Root tilde = *theta_tilde(rs);
  Root meet_by_sum = breve;
  Root join_by_sum = tilde;
  for (const Root& g : data.transitions) {
    meet_by_sum = subtract(meet_by_sum, g);
    join_by_sum = add(join_by_sum, g);
  }
  auto meet_cw = meet(rs, pair.eta, pair.eta_prime);
  require(meet_cw.has_value(), "glorious pair without a meet");
  Root join_cw = join(rs, pair.eta, pair.eta_prime);
  require(*meet_cw == meet_by_sum && join_cw == join_by_sum,
          "transition-sum and coefficientwise meet/join disagree");
  require(meet_by_sum.height() == breve.height() - data.distance,
          "height drop differs from the distance");
  require(join_by_sum.height() == tilde.height() + data.distance,
          "height gain differs from the distance");
  data.meet_root = meet_by_sum;
  data.join_root = join_by_sum;
  return data;
}

std::vector<RootIdeal> minimal_nonabelian(const RootSystem& rs) {
  std::vector<RootIdeal> out;
  for (const GloriousPair& pair : glorious_pairs(rs))
    out.push_back(up_closure(rs, {pair.eta, pair.eta_prime}));
  if (!rs.spec().simply_laced()) out.push_back(up_closure(rs, {*theta_breve(rs)}));
  std::sort(out.begin(), out.end(), enumeration_less);

  int h = dual_coxeter(rs);
  RootIdeal heis = heisenberg(rs);
  int long_incident = 0;
  for (auto [i, j] : rs.dynkin_edges())
    if (rs.simple_is_long(i) || rs.simple_is_long(j)) ++long_incident;
  require(static_cast<int>(out.size()) == long_incident,
          "count differs from the edges incident to long simple roots");
  for (const RootIdeal& ideal : out) {
    require(ideal.size() == h, "minimal non-abelian ideal of the wrong size");
    require(heis.contains_all(ideal), "minimal non-abelian ideal escapes the Heisenberg ideal");
    require(summable_pairs(rs, ideal).size() == 1, "summable pair is not unique");
  }
  return out;
}

AffineWord canonical_min_nonabelian(const RootSystem& rs, const RootIdeal& ideal) {
  auto pairs = summable_pairs(rs, ideal);
  require(pairs.size() == 1, "ideal does not carry a unique summable pair");
  Root x = rs.root(pairs.front().first);
  Root y = rs.root(pairs.front().second);

  int a = 0, ap = 0;
  if (incomparable(rs, x, y)) {
    std::tie(a, ap) = edge_from_pair(rs, x, y);
  } else {
    SemiGloriousPair semi = semi_glorious(rs);
    a = semi.alpha;
    ap = semi.alpha_prime;
    require((is_leq(rs, x, y) ? x : y) == semi.eta_prime,
            "comparable summable pair is not the semi-glorious one");
  }

  AffineWord w = shortest_taking_theta_to(rs, rs.simple_root(a));
  std::vector<int> letters{ap, a};
  letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  letters.push_back(0);
  AffineWord word{std::move(letters)};

  int h = dual_coxeter(rs);
  require(word.size() == h + 1, "canonical word length is not h* + 1");
  std::vector<AffineRoot> expected;
  for (RootId id : ideal.members()) expected.push_back(delta_minus(rs, rs.root(id)));
  expected.push_back(two_delta_minus_theta(rs));
  std::sort(expected.begin(), expected.end(), affine_less);
  std::vector<AffineRoot> actual = inversion_set(rs, word, 2);
  if (actual != expected)
    throw Error("canonical word for a minimal non-abelian ideal has a wrong inversion set");
  return word;
}

}  // namespace rootposet
