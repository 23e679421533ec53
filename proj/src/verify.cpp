#include "rootposet/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "rootposet/affine.hpp"
#include "rootposet/exporters.hpp"
#include "rootposet/glorious.hpp"
#include "rootposet/golden.hpp"
#include "rootposet/ideals.hpp"
#include "rootposet/rootlets.hpp"

namespace rootposet {

namespace {

std::string roots_str(const RootSystem& rs, const std::vector<RootId>& ids) {
  std::ostringstream os;
  for (size_t k = 0; k < ids.size(); ++k) {
    if (k) os << " ";
    os << root_str(rs, rs.root(ids[k]));
  }
  return os.str();
}

Root add(const Root& a, const Root& b) {
  Coeffs c = a.coeffs();
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
  return Root(std::move(c));
}

Root subtract(const Root& a, const Root& b) {
  Coeffs c = a.coeffs();
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs()[i];
  return Root(std::move(c));
}

std::string golden_diff(const std::string& expected, const std::string& actual) {
  if (expected == actual) return "";
  std::ostringstream os;
  os << "expected <<<" << expected << ">>> got <<<" << actual << ">>>";
  return os.str();
}

// A valid random build order of an abelian ideal: repeatedly pick an element
// with nothing of the ideal strictly above it still unplaced.
std::vector<RootId> random_build_order(const RootSystem& rs, const RootIdeal& ideal,
                                       std::mt19937& rng) {
  std::vector<RootId> remaining = ideal.members();
  std::vector<RootId> order;
  while (!remaining.empty()) {
    std::vector<size_t> avail;
    for (size_t k = 0; k < remaining.size(); ++k) {
      bool top = true;
      for (RootId other : remaining)
        if (other != remaining[k] && is_leq(rs, rs.root(remaining[k]), rs.root(other))) {
          top = false;
          break;
        }
      if (top) avail.push_back(k);
    }
    size_t pick = avail[std::uniform_int_distribution<size_t>(0, avail.size() - 1)(rng)];
    order.push_back(remaining[pick]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return order;
}

struct Harness {
  const RootSystem& rs;
  const VerifyOptions& options;
  std::vector<CheckResult>& out;
  std::optional<RootletIndex> index;

  const RootletIndex& idx() {
    if (!index) index = RootletIndex::build(rs);
    return *index;
  }

  void run(const std::string& id, const std::function<std::string()>& body) {
    CheckResult result;
    result.id = rs.spec().name() + "." + id;
    try {
      result.witness = body();
      result.pass = result.witness.empty();
    } catch (const std::exception& e) {
      result.pass = false;
      result.witness = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(result));
  }

  void add_note(const std::string& id, const std::string& text) {
    out.push_back(CheckResult{rs.spec().name() + "." + id, true, true, text});
  }

  std::vector<std::pair<int, int>> long_edges() const {
    std::vector<std::pair<int, int>> edges;
    for (auto [i, j] : rs.dynkin_edges())
      if (rs.simple_is_long(i) && rs.simple_is_long(j)) edges.emplace_back(i, j);
    return edges;
  }

  bool in_heisenberg(const RootIdeal& ideal) const {
    for (RootId id : ideal.members())
      if (rs.theta_pairing(id) <= 0) return false;
    return true;
  }

  // ---- criterion 1: cardinalities -------------------------------------

  void cardinalities() {
    run("cardinality.heisenberg", [&] {
      RootIdeal heis = heisenberg(rs);
      int expected = 2 * dual_coxeter(rs) - 3;
      if (heis.size() != expected)
        return "got " + std::to_string(heis.size()) + " want " + std::to_string(expected);
      if (!heis.contains(rs.theta_id())) return std::string("theta missing");
      return std::string();
    });
    run("cardinality.abelian-count", [&] {
      size_t got = idx().abelian_ideals().size();
      size_t expected = size_t{1} << rs.rank();
      if (got != expected)
        return "got " + std::to_string(got) + " want " + std::to_string(expected);
      return std::string();
    });
    run("cardinality.glorious-count", [&] {
      size_t got = glorious_pairs(rs).size();
      size_t expected = rs.long_simples().size() - 1;
      if (got != expected)
        return "got " + std::to_string(got) + " want " + std::to_string(expected);
      return std::string();
    });
  }

  // ---- criterion 2: size bounds for ideals ----------------------------

  void size_bounds() {
    run("size-bounds.ideals", [&] {
      int h = dual_coxeter(rs);
      for (const RootIdeal& ideal : enumerate_ideals(rs)) {
        if (!ideal.abelian() && ideal.size() < h)
          return "small non-abelian ideal: " + roots_str(rs, ideal.members());
        if (in_heisenberg(ideal) && ideal.size() >= h && ideal.abelian())
          return "large abelian ideal inside Heisenberg: " + roots_str(rs, ideal.members());
      }
      return std::string();
    });
  }

  // ---- criterion 3: golden tables -------------------------------------

  void golden_tables() {
    if (auto expected = golden::glorious_expected(rs.spec()))
      run("golden.glorious", [&] { return golden_diff(*expected, render_glorious_table(rs)); });
    if (auto expected = golden::minmax_expected(rs.spec()))
      run("golden.minmax", [&] { return golden_diff(*expected, render_minmax_table(rs)); });
    if (auto expected = golden::semi_glorious_expected(rs.spec()))
      run("golden.semiglorious",
          [&] { return golden_diff(*expected, render_semi_glorious_row(rs)); });
    if (auto expected = golden::tails_expected(rs.spec()))
      run("golden.tails", [&] { return golden_diff(*expected, render_tails_row(rs)); });
    if (auto expected = golden::transitions_expected(rs.spec()))
      run("golden.transitions",
          [&] { return golden_diff(*expected, render_transitions_table(rs)); });
  }

  // ---- criterion 4: the edge bijection ---------------------------------

  void bijection() {
    run("bijection.roundtrip", [&] {
      std::vector<GloriousPair> pairs = glorious_pairs(rs);
      std::vector<std::pair<int, int>> edges = long_edges();
      if (pairs.size() != edges.size())
        return "pair count " + std::to_string(pairs.size()) + " vs edge count " +
               std::to_string(edges.size());
      std::set<std::pair<int, int>> seen;
      for (const GloriousPair& pair : pairs) {
        if (!rs.simple_is_long(pair.alpha) || !rs.simple_is_long(pair.alpha_prime) ||
            !rs.adjacent(pair.alpha, pair.alpha_prime))
          return "pair attached to a non-edge " + root_str(rs, pair.eta);
        seen.insert({pair.alpha, pair.alpha_prime});

        if (class_of(rs, pair.eta) != pair.alpha_prime ||
            class_of(rs, pair.eta_prime) != pair.alpha)
          return "class mismatch at " + root_str(rs, pair.eta);
        RootIdeal imin_a = i_min(rs, rs.simple_root(pair.alpha));
        RootIdeal imin_ap = i_min(rs, rs.simple_root(pair.alpha_prime));
        auto is_min_of = [&](const Root& r, const RootIdeal& ideal) {
          RootId id = rs.id_of(r);
          const auto& mins = ideal.min_elements();
          return std::binary_search(mins.begin(), mins.end(), id);
        };
        if (!is_min_of(pair.eta, imin_a) || !is_min_of(pair.eta_prime, imin_ap))
          return "pair not minimal in its fiber minimum: " + root_str(rs, pair.eta);

        auto [a, ap] = edge_from_pair(rs, pair.eta, pair.eta_prime);
        if (a != pair.alpha || ap != pair.alpha_prime)
          return "edge_from_pair does not invert at " + root_str(rs, pair.eta);
        GloriousPair again = pair_from_edge(rs, pair.alpha, pair.alpha_prime);
        if (!(again.eta == pair.eta) || !(again.eta_prime == pair.eta_prime))
          return "pair_from_edge does not invert at edge " + std::to_string(pair.alpha);
      }
      if (seen.size() != edges.size()) return std::string("edges hit more than once");
      for (auto e : edges)
        if (!seen.count(e))
          return "edge without a pair: " + std::to_string(e.first) + "," +
                 std::to_string(e.second);
      return std::string();
    });

    run("bijection.ordered-unique", [&] {
      const RootletIndex& index = idx();
      for (const GloriousPair& pair : glorious_pairs(rs)) {
        for (auto [eta, eta_prime] :
             {std::pair<Root, Root>{pair.eta, pair.eta_prime},
              std::pair<Root, Root>{pair.eta_prime, pair.eta}}) {
          int hits = 0;
          for (int a : rs.long_simples()) {
            const RootletFiber& fiber = index.fiber(rs.id_of(rs.simple_root(a)));
            const auto& mins = fiber.min_ideal.min_elements();
            if (!std::binary_search(mins.begin(), mins.end(), rs.id_of(eta))) continue;
            std::vector<RootId> maxc = max_complement_ids(rs, fiber.max_ideal);
            if (std::binary_search(maxc.begin(), maxc.end(), rs.id_of(eta_prime))) ++hits;
          }
          if (hits != 1)
            return root_str(rs, eta) + " arises " + std::to_string(hits) + " times";
        }
      }
      return std::string();
    });
  }

  // ---- criterion 5: transition roots -----------------------------------

  std::vector<std::array<int, 3>> long_triples() const {
    std::vector<std::array<int, 3>> out;
    for (int j = 1; j <= rs.rank(); ++j) {
      if (!rs.simple_is_long(j)) continue;
      for (int i = 1; i <= rs.rank(); ++i)
        for (int k = i + 1; k <= rs.rank(); ++k)
          if (i != j && k != j && rs.simple_is_long(i) && rs.simple_is_long(k) &&
              rs.adjacent(i, j) && rs.adjacent(j, k))
            out.push_back({i, j, k});
    }
    return out;
  }

  void transitions() {
    run("transitions.triples", [&] {
      for (auto [i, j, k] : long_triples()) {
        Root gamma = transition_root(rs, i, j, k);
        RootId gid = rs.id_of(gamma);
        if (rs.height(gid) != 1 || !rs.is_long(gid))
          return "transition of (" + std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(k) + ") is not a long simple root";
        if (rs.theta_pairing(gid) != 0)
          return "transition root not orthogonal to theta: " + root_str(rs, gamma);
        GloriousPair pij = pair_from_edge(rs, i, j);
        GloriousPair pjk = pair_from_edge(rs, j, k);
        if (!(pjk.eta == add(pij.eta, gamma)) ||
            !(pjk.eta_prime == subtract(pij.eta_prime, gamma)))
          return "shift identity fails at triple (" + std::to_string(i) + "," +
                 std::to_string(j) + "," + std::to_string(k) + ")";
      }
      return std::string();
    });

    run("transitions.four-chains", [&] {
      for (auto [j, k] : long_edges()) {
        for (int i = 1; i <= rs.rank(); ++i) {
          if (i == k || !rs.adjacent(i, j) || !rs.simple_is_long(i)) continue;
          for (int l = 1; l <= rs.rank(); ++l) {
            if (l == j || l == i || !rs.adjacent(k, l) || !rs.simple_is_long(l)) continue;
            Root gamma_j = transition_root(rs, i, j, k);
            Root gamma_k = transition_root(rs, j, k, l);
            int gj = 0, gk = 0;
            for (int t = 1; t <= rs.rank(); ++t) {
              if (gamma_j.coeff(t) == 1) gj = t;
              if (gamma_k.coeff(t) == 1) gk = t;
            }
            if (!rs.adjacent(gj, gk))
              return "four-chain transitions not adjacent at (" + std::to_string(i) + ".." +
                     std::to_string(l) + ")";
            Root lhs = subtract(pair_from_edge(rs, k, l).eta, pair_from_edge(rs, i, j).eta);
            Root rhs = add(gamma_j, gamma_k);
            Root other = subtract(pair_from_edge(rs, i, j).eta_prime,
                                  pair_from_edge(rs, l, k).eta);
            if (!(lhs == rhs) || !(other == rhs) || !rs.is_positive_root(rhs.coeffs()))
              return "four-chain identity fails at (" + std::to_string(i) + "," +
                     std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) +
                     ")";
          }
        }
      }
      return std::string();
    });

    if (rs.spec().simply_laced()) {
      run("transitions.ade-bijection", [&] {
        std::vector<int> gammas;
        for (const TransitionEntry& entry : transition_entries(rs))
          for (int t = 1; t <= rs.rank(); ++t)
            if (entry.gamma.coeff(t) == 1) gammas.push_back(t);
        std::vector<int> orthogonal;
        for (int t = 1; t <= rs.rank(); ++t)
          if (rs.theta_pairing(rs.id_of(rs.simple_root(t))) == 0) orthogonal.push_back(t);
        std::vector<int> sorted = gammas;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
          return std::string("transition roots repeat");
        if (sorted != orthogonal)
          return std::string("transition roots do not exhaust the simples orthogonal to theta");
        return std::string();
      });
    } else if (rs.spec().family == Family::B || rs.spec().family == Family::F) {
      // Which parts of the simply-laced picture survive here is recorded,
      // not asserted.
      std::vector<int> gammas;
      for (const TransitionEntry& entry : transition_entries(rs))
        for (int t = 1; t <= rs.rank(); ++t)
          if (entry.gamma.coeff(t) == 1) gammas.push_back(t);
      std::vector<int> orthogonal;
      for (int t = 1; t <= rs.rank(); ++t)
        if (rs.theta_pairing(rs.id_of(rs.simple_root(t))) == 0) orthogonal.push_back(t);
      std::vector<int> sorted = gammas;
      std::sort(sorted.begin(), sorted.end());
      bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      bool onto = sorted == orthogonal;
      std::ostringstream os;
      os << "long-edge transition roots [";
      for (size_t t = 0; t < gammas.size(); ++t) os << (t ? " " : "") << "a" << gammas[t];
      os << "] vs " << orthogonal.size() << " simples orthogonal to theta; distinct="
         << (distinct ? "yes" : "no") << " bijective=" << (onto ? "yes" : "no");
      add_note("transitions.nonsimplylaced-note", os.str());
    }
  }

  // ---- criterion 6: the interval --------------------------------------

  void interval_structure() {
    run("interval.structure", [&] {
      auto iv = interval(rs);
      if (rs.spec().family == Family::A)
        return iv ? std::string("interval should vanish in type A") : std::string();
      if (!iv) return std::string("interval missing");

      // Independent bottom/top: floor of theta/2 coefficientwise.
      Coeffs floor_half(static_cast<size_t>(rs.rank()));
      for (int t = 1; t <= rs.rank(); ++t)
        floor_half[static_cast<size_t>(t) - 1] = rs.theta().coeff(t) / 2;
      if (!(iv->bottom == Root(floor_half))) return std::string("bottom is not floor(theta/2)");
      if (!(add(iv->bottom, iv->top) == rs.theta()))
        return std::string("bottom + top != theta");

      std::vector<Root> members;
      for (const Root& r : rs.positive_roots())
        if (is_leq(rs, iv->bottom, r) && is_leq(rs, r, iv->top)) members.push_back(r);
      if (!(members == iv->members)) return std::string("member set mismatch");

      Family fam = rs.spec().family;
      if (fam == Family::D || fam == Family::E) {
        if (!iv->cube || members.size() != 8)
          return "interval has " + std::to_string(members.size()) + " members, want a cube";
        auto tails = tail_decomposition(rs);
        for (int mask = 0; mask < 8; ++mask) {
          Root v = iv->bottom;
          for (int t = 0; t < 3; ++t)
            if (mask >> t & 1)
              v = add(v, rs.simple_root(tails->odd[static_cast<size_t>(t)]));
          if (!rs.is_positive_root(v.coeffs()))
            return std::string("cube vertex is not a root");
          for (int sub = 0; sub < 8; ++sub) {
            Root w = iv->bottom;
            for (int t = 0; t < 3; ++t)
              if (sub >> t & 1)
                w = add(w, rs.simple_root(tails->odd[static_cast<size_t>(t)]));
            if (is_leq(rs, w, v) != ((sub & mask) == sub))
              return std::string("interval is not order-isomorphic to the cube");
          }
        }
        if (iv->central.size() != 3) return std::string("central pairs missing");
        for (const auto& central : iv->central) {
          GloriousPair pair = pair_from_edge(rs, central.edge_a, central.edge_b);
          if (!(pair.eta == central.upper) || !(pair.eta_prime == central.lower))
            return std::string("central pair does not match its edge");
          auto m = meet(rs, central.lower, central.upper);
          if (!m || !(*m == iv->bottom) ||
              !(join(rs, central.lower, central.upper) == iv->top))
            return std::string("central pair meet/join mismatch");
          if (central.class_lower != tails->branch || central.class_upper != central.edge_b)
            return std::string("central pair classes mismatch");
        }
        if (iv->class_top != tails->branch)
          return std::string("kl(theta_tilde) is not the branch node");
      } else {
        if (iv->cube || members.size() != 2)
          return "interval has " + std::to_string(members.size()) + " members, want a chain";
        SemiGloriousPair semi = semi_glorious(rs);
        if (!(semi.eta == iv->top) || !(semi.eta_prime == iv->bottom))
          return std::string("semi-glorious pair is not (theta_tilde, theta_breve)");
        if (!rs.is_positive_root(semi.simple_diff.coeffs()) ||
            semi.simple_diff.height() != 1)
          return std::string("eta - eta' is not simple");
        if (iv->class_top != semi.alpha_prime)
          return std::string("kl(theta_tilde) is not the short end of the mixed edge");
      }
      return std::string();
    });
  }

  // ---- criterion 7: meet distance --------------------------------------

  void meet_distances() {
    if (rs.spec().family == Family::A) return;
    run("interval.meet-distance", [&] {
      Root breve = *theta_breve(rs);
      Root tilde = *theta_tilde(rs);
      for (auto [a, ap] : long_edges()) {
        MeetData data = meet_distance(rs, a, ap);
        GloriousPair pair = pair_from_edge(rs, a, ap);

        Coeffs mn(static_cast<size_t>(rs.rank())), mx(static_cast<size_t>(rs.rank()));
        for (int t = 1; t <= rs.rank(); ++t) {
          mn[static_cast<size_t>(t) - 1] = std::min(pair.eta.coeff(t), pair.eta_prime.coeff(t));
          mx[static_cast<size_t>(t) - 1] = std::max(pair.eta.coeff(t), pair.eta_prime.coeff(t));
        }
        if (!(data.meet_root == Root(mn)) || !(data.join_root == Root(mx)))
          return "coefficientwise meet/join mismatch at edge (" + std::to_string(a) + "," +
                 std::to_string(ap) + ")";

        Root by_sum = breve;
        for (const Root& g : data.transitions) by_sum = subtract(by_sum, g);
        if (!(by_sum == data.meet_root))
          return "transition-sum meet mismatch at edge (" + std::to_string(a) + "," +
                 std::to_string(ap) + ")";
        if (static_cast<int>(data.transitions.size()) != data.distance)
          return std::string("transition chain length differs from the distance");
        if (data.meet_root.height() != breve.height() - data.distance)
          return std::string("height drop differs from the distance");
        if (!is_leq(rs, data.meet_root, breve) || !is_leq(rs, tilde, data.join_root))
          return std::string("meet/join escape the interval bounds");
        if ((data.distance == 0) != (data.meet_root == breve))
          return std::string("strictness of meet < theta_breve mismatches centrality");
      }
      return std::string();
    });
  }

  // ---- criterion 8: minimal non-abelian ideals --------------------------

  void minimal_nonabelian_checks() {
    if (rs.rank() <= 6) {
      run("minimal-nonabelian.exhaustive", [&] {
        std::vector<RootIdeal> nonab;
        for (const RootIdeal& ideal : enumerate_ideals(rs))
          if (!ideal.abelian()) nonab.push_back(ideal);
        std::vector<RootIdeal> minimal;
        for (const RootIdeal& ideal : nonab) {
          bool is_minimal = true;
          for (const RootIdeal& other : nonab)
            if (!(other == ideal) && ideal.contains_all(other)) {
              is_minimal = false;
              break;
            }
          if (is_minimal) minimal.push_back(ideal);
        }
        std::sort(minimal.begin(), minimal.end(), enumeration_less);
        std::vector<RootIdeal> constructed = minimal_nonabelian(rs);
        if (!(minimal == constructed))
          return "exhaustive search found " + std::to_string(minimal.size()) +
                 " minimal non-abelian ideals, construction " +
                 std::to_string(constructed.size());
        return std::string();
      });
    }

    run("minimal-nonabelian.construction", [&] {
      std::vector<RootIdeal> family = minimal_nonabelian(rs);
      int h = dual_coxeter(rs);
      int long_incident = 0;
      for (auto [i, j] : rs.dynkin_edges())
        if (rs.simple_is_long(i) || rs.simple_is_long(j)) ++long_incident;
      if (static_cast<int>(family.size()) != long_incident)
        return "family size " + std::to_string(family.size()) + " vs " +
               std::to_string(long_incident) + " edges incident to long simples";
      for (const RootIdeal& ideal : family) {
        if (ideal.size() != h)
          return "ideal of size " + std::to_string(ideal.size()) + ": " +
                 roots_str(rs, ideal.members());
        if (!in_heisenberg(ideal))
          return "ideal leaves the Heisenberg ideal: " + roots_str(rs, ideal.members());
        auto pairs = summable_pairs(rs, ideal);
        if (pairs.size() != 1)
          return "ideal with " + std::to_string(pairs.size()) + " summable pairs";
        AffineWord word = canonical_min_nonabelian(rs, ideal);
        if (word.size() != h + 1)
          return "canonical word of length " + std::to_string(word.size());
        if (inversion_count(rs, word, 2) != h + 1)
          return std::string("canonical word is not reduced");
        std::vector<AffineRoot> expected;
        for (RootId id : ideal.members()) expected.push_back(delta_minus(rs, rs.root(id)));
        expected.push_back(two_delta_minus_theta(rs));
        std::sort(expected.begin(), expected.end(), affine_less);
        if (!(inversion_set(rs, word, 2) == expected))
          return std::string("canonical word inversion set mismatch");
        AffineWord generic = canonical_of(rs, ideal);
        if (generic.size() != h + 1)
          return std::string("generic canonical element has the wrong length");
        if (!same_action(rs, word, generic))
          return std::string("closed form disagrees with the generic canonical element");
      }
      return std::string();
    });
  }

  // ---- criterion 9: well-definedness -----------------------------------

  void well_definedness() {
    if (rs.rank() <= 6) {
      run("welldef.class-map", [&] {
        const RootletIndex& index = idx();
        for (RootId gamma = 0; gamma < rs.num_positive(); ++gamma) {
          if (!up_closure_ids(rs, {gamma}).abelian()) continue;
          int expected = class_of(rs, rs.root(gamma));
          for (size_t k = 0; k < index.abelian_ideals().size(); ++k) {
            const RootIdeal& ideal = index.abelian_ideals()[k];
            const auto& mins = ideal.min_elements();
            if (!std::binary_search(mins.begin(), mins.end(), gamma)) continue;
            AffineRoot image = apply_word(rs, index.minuscule_words()[k],
                                          delta_minus(rs, rs.root(gamma)));
            Coeffs neg = image.finite;
            for (int& v : neg) v = -v;
            auto beta = affine_simple_index(rs, AffineRoot{std::move(neg), -image.level});
            if (!beta || *beta != expected)
              return "class of " + root_str(rs, rs.root(gamma)) +
                     " depends on the witness ideal";
          }
          // Inside the Heisenberg ideal and below theta the class is finite.
          if (rs.theta_pairing(gamma) > 0 && gamma != rs.theta_id() && expected == 0)
            return "class of " + root_str(rs, rs.root(gamma)) + " is affine";
          if (gamma == rs.theta_id() && expected != 0)
            return std::string("class of theta is not the affine node");
        }
        return std::string();
      });
    }

    run("welldef.minuscule-order", [&] {
      std::mt19937 rng(options.seed);
      for (const RootIdeal& ideal : idx().abelian_ideals()) {
        AffineWord w = minuscule_of(rs, ideal);
        if (w.size() != ideal.size()) return std::string("minuscule length differs from size");
        std::vector<AffineRoot> expected;
        for (RootId id : ideal.members()) expected.push_back(delta_minus(rs, rs.root(id)));
        std::sort(expected.begin(), expected.end(), affine_less);
        if (!(inversion_set(rs, w, 1) == expected))
          return "minuscule inversion set mismatch at " + roots_str(rs, ideal.members());
        // Minimal elements are detected by the word.
        for (RootId id : ideal.members()) {
          AffineRoot image = apply_word(rs, w, delta_minus(rs, rs.root(id)));
          Coeffs neg = image.finite;
          for (int& v : neg) v = -v;
          bool is_neg_simple =
              affine_simple_index(rs, AffineRoot{std::move(neg), -image.level}).has_value();
          const auto& mins = ideal.min_elements();
          if (is_neg_simple != std::binary_search(mins.begin(), mins.end(), id))
            return "minimality detection fails in " + roots_str(rs, ideal.members());
        }
        if (ideal.empty()) continue;
        for (int trial = 0; trial < 3; ++trial) {
          std::vector<RootId> order = random_build_order(rs, ideal, rng);
          AffineWord other = minuscule_with_build_order(rs, ideal, order);
          if (!same_action(rs, w, other))
            return "extension order changes the minuscule element of " +
                   roots_str(rs, ideal.members());
        }
      }
      return std::string();
    });

    run("welldef.fibers", [&] {
      const RootletIndex& index = idx();
      size_t covered = 0;
      RootIdeal heis = heisenberg(rs);
      for (RootId mu : index.long_roots()) {
        const RootletFiber& fiber = index.fiber(mu);
        if (fiber.ideal_ids.empty()) return "empty fiber over " + root_str(rs, rs.root(mu));
        covered += fiber.ideal_ids.size();
        if (!in_heisenberg(fiber.min_ideal))
          return "fiber minimum leaves the Heisenberg ideal at " + root_str(rs, rs.root(mu));
        int expected_size =
            rs.rho_pairing(rs.theta_id()) - rs.rho_pairing(mu) + 1;
        if (fiber.min_ideal.size() != expected_size)
          return "fiber minimum size mismatch at " + root_str(rs, rs.root(mu));
        // The fiber-scan minimum agrees with the inversion-set route.
        if (!(fiber.min_ideal == i_min(rs, rs.root(mu))))
          return "the two i_min routes disagree at " + root_str(rs, rs.root(mu));
        for (int k : fiber.ideal_ids) {
          const RootIdeal& ideal = index.abelian_ideals()[static_cast<size_t>(k)];
          if (!ideal.contains_all(fiber.min_ideal) || !fiber.max_ideal.contains_all(ideal))
            return "fiber extremes fail at " + root_str(rs, rs.root(mu));
        }
      }
      if (covered + 1 != index.abelian_ideals().size())
        return std::string("fibers do not partition the nonempty abelian ideals");

      // Membership in the fiber over mu means agreeing with its i_min on
      // the Heisenberg part.
      for (size_t k = 0; k < index.abelian_ideals().size(); ++k) {
        const RootIdeal& ideal = index.abelian_ideals()[k];
        if (ideal.empty()) continue;
        RootId mu = index.rootlet_of(static_cast<int>(k));
        std::vector<RootId> intersection;
        for (RootId id : ideal.members())
          if (heis.contains(id)) intersection.push_back(id);
        for (RootId other : index.long_roots()) {
          bool same = intersection == index.fiber(other).min_ideal.members();
          if (same != (other == mu))
            return "Heisenberg-part criterion fails at " + roots_str(rs, ideal.members());
        }
      }
      return std::string();
    });
  }
};

}  // namespace

std::vector<CheckResult> verify_type(const RootSystemSpec& spec, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  RootSystem rs(spec);
  Harness harness{rs, options, out, std::nullopt};
  harness.cardinalities();
  if (rs.rank() <= 6) harness.size_bounds();
  harness.golden_tables();
  harness.bijection();
  harness.transitions();
  if (spec.family != Family::A) harness.interval_structure();
  harness.meet_distances();
  harness.minimal_nonabelian_checks();
  harness.well_definedness();
  return out;
}

std::vector<RootSystemSpec> sweep_specs(int max_rank) {
  std::vector<RootSystemSpec> specs;
  for (int n = 1; n <= max_rank; ++n) specs.push_back({Family::A, n});
  for (int n = 2; n <= max_rank; ++n) specs.push_back({Family::B, n});
  for (int n = 2; n <= max_rank; ++n) specs.push_back({Family::C, n});
  for (int n = 4; n <= max_rank; ++n) specs.push_back({Family::D, n});
  for (int n = 6; n <= std::min(max_rank, 8); ++n) specs.push_back({Family::E, n});
  if (max_rank >= 4) specs.push_back({Family::F, 4});
  if (max_rank >= 2) specs.push_back({Family::G, 2});
  return specs;
}

std::vector<CheckResult> verify_all(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  for (const RootSystemSpec& spec : sweep_specs(options.max_rank)) {
    std::vector<CheckResult> results = verify_type(spec, options);
    out.insert(out.end(), results.begin(), results.end());
  }

  // An abelian ideal of size >= h^* exists somewhere (necessarily outside
  // the Heisenberg ideal); locate the first one in the sweep.
  CheckResult search;
  search.id = "sweep.abelian-ideal-of-size-h-star";
  search.pass = false;
  for (const RootSystemSpec& spec : sweep_specs(options.max_rank)) {
    RootSystem rs(spec);
    int h = dual_coxeter(rs);
    for (const RootIdeal& ideal : enumerate_abelian_ideals(rs)) {
      if (ideal.size() >= h) {
        search.pass = true;
        search.note = true;
        std::ostringstream os;
        os << "found in " << spec.name() << ": size " << ideal.size() << " >= h*=" << h
           << ", members " << roots_str(rs, ideal.members());
        search.witness = os.str();
        break;
      }
    }
    if (search.pass) break;
  }
  if (!search.pass) search.witness = "no abelian ideal of size >= h* in the sweep";
  out.push_back(std::move(search));
  return out;
}

std::string render_report(std::vector<CheckResult> results) {
  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  std::ostringstream os;
  int passed = 0, failed = 0;
  for (const CheckResult& r : results) {
    if (r.note) {
      os << "NOTE " << r.id << " :: " << r.witness << "\n";
      continue;
    }
    if (r.pass) {
      ++passed;
      os << "PASS " << r.id << "\n";
    } else {
      ++failed;
      os << "FAIL " << r.id << " :: " << r.witness << "\n";
    }
  }
  os << "checks: " << passed << " passed, " << failed << " failed\n";
  return os.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.note && !r.pass) return false;
  return true;
}

}  // namespace rootposet
