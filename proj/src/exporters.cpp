#include "rootposet/exporters.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace rootposet {

std::string root_str(const RootSystem& rs, const Root& r) {
  std::ostringstream os;
  if (rs.spec().family == Family::F || rs.spec().family == Family::G) {
    for (int i = 1; i <= r.rank(); ++i) os << r.coeff(i);
    return os.str();
  }
  os << "(";
  for (int i = 1; i <= r.rank(); ++i) {
    if (i > 1) os << ",";
    os << r.coeff(i);
  }
  os << ")";
  return os.str();
}

std::string simple_str(int i) { return "a" + std::to_string(i); }

Json root_json(const Root& r) { return Json(r.coeffs()); }

Json ideal_json(const RootSystem& rs, const RootIdeal& ideal) {
  Json members = Json::array();
  for (RootId id : ideal.members()) members.push_back(root_json(rs.root(id)));
  Json mins = Json::array();
  for (RootId id : ideal.min_elements()) mins.push_back(root_json(rs.root(id)));
  Json j;
  j["members"] = std::move(members);
  j["min"] = std::move(mins);
  j["abelian"] = ideal.abelian();
  return j;
}

Json word_json(const AffineWord& w) { return Json(w.letters()); }

namespace {

Json header(const RootSystem& rs) {
  Json j;
  j["schema"] = 1;
  j["type"] = rs.spec().name();
  return j;
}

}  // namespace

Json roots_json(const RootSystem& rs) {
  Json j = header(rs);
  j["rank"] = rs.rank();
  j["num_positive"] = rs.num_positive();
  j["theta"] = root_json(rs.theta());
  j["dual_coxeter"] = dual_coxeter(rs);
  Json roots = Json::array();
  for (const Root& r : rs.positive_roots()) {
    Json entry;
    entry["coeffs"] = root_json(r);
    entry["height"] = r.height();
    entry["long"] = rs.is_long(rs.id_of(r));
    roots.push_back(std::move(entry));
  }
  j["positive_roots"] = std::move(roots);
  return j;
}

Json ideals_json(const RootSystem& rs, const std::vector<RootIdeal>& ideals) {
  Json j = header(rs);
  j["count"] = ideals.size();
  Json list = Json::array();
  for (const RootIdeal& ideal : ideals) list.push_back(ideal_json(rs, ideal));
  j["ideals"] = std::move(list);
  return j;
}

Json abelian_json(const RootSystem& rs) {
  RootletIndex index = RootletIndex::build(rs);
  Json j = header(rs);
  j["count"] = index.abelian_ideals().size();
  Json list = Json::array();
  for (size_t k = 0; k < index.abelian_ideals().size(); ++k) {
    Json entry = ideal_json(rs, index.abelian_ideals()[k]);
    entry["word"] = word_json(index.minuscule_words()[k]);
    list.push_back(std::move(entry));
  }
  j["ideals"] = std::move(list);
  return j;
}

Json rootlets_json(const RootSystem& rs) {
  RootletIndex index = RootletIndex::build(rs);
  Json j = header(rs);
  Json fibers = Json::array();
  for (RootId mu : index.long_roots()) {
    const RootletFiber& fiber = index.fiber(mu);
    Json entry;
    entry["mu"] = root_json(rs.root(mu));
    entry["w_mu"] = word_json(fiber.w_mu);
    Json imin = Json::array();
    for (RootId id : fiber.min_ideal.members()) imin.push_back(root_json(rs.root(id)));
    Json imax = Json::array();
    for (RootId id : fiber.max_ideal.members()) imax.push_back(root_json(rs.root(id)));
    entry["i_min"] = std::move(imin);
    entry["i_max"] = std::move(imax);
    entry["fiber_size"] = fiber.ideal_ids.size();
    fibers.push_back(std::move(entry));
  }
  j["fibers"] = std::move(fibers);
  return j;
}

Json glorious_json(const RootSystem& rs) {
  Json j = header(rs);
  Json pairs = Json::array();
  for (const GloriousPair& pair : glorious_pairs(rs)) {
    Json entry;
    entry["alpha"] = pair.alpha;
    entry["alpha_prime"] = pair.alpha_prime;
    entry["eta"] = root_json(pair.eta);
    entry["eta_prime"] = root_json(pair.eta_prime);
    entry["class_eta"] = pair.class_eta;
    entry["class_eta_prime"] = pair.class_eta_prime;
    pairs.push_back(std::move(entry));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

Json semi_glorious_json(const RootSystem& rs) {
  SemiGloriousPair semi = semi_glorious(rs);
  Json j = header(rs);
  j["alpha"] = semi.alpha;
  j["alpha_prime"] = semi.alpha_prime;
  j["eta"] = root_json(semi.eta);
  j["eta_prime"] = root_json(semi.eta_prime);
  j["diff"] = root_json(semi.simple_diff);
  j["diff_index"] = semi.diff_index;
  j["diff_long"] = semi.diff_is_long;
  j["class_eta"] = semi.class_eta;
  return j;
}

Json interval_json(const RootSystem& rs) {
  Json j = header(rs);
  auto iv = interval(rs);
  if (!iv) {
    j["interval"] = nullptr;
    return j;
  }
  j["bottom"] = root_json(iv->bottom);
  j["top"] = root_json(iv->top);
  Json members = Json::array();
  for (const Root& r : iv->members) members.push_back(root_json(r));
  j["members"] = std::move(members);
  j["cube"] = iv->cube;
  Json central = Json::array();
  for (const auto& pair : iv->central) {
    Json entry;
    entry["edge"] = Json::array({pair.edge_a, pair.edge_b});
    entry["lower"] = root_json(pair.lower);
    entry["upper"] = root_json(pair.upper);
    entry["class_lower"] = pair.class_lower;
    entry["class_upper"] = pair.class_upper;
    central.push_back(std::move(entry));
  }
  j["central"] = std::move(central);
  j["class_top"] = iv->class_top;
  return j;
}

Json tails_json(const RootSystem& rs) {
  Json j = header(rs);
  auto tails = tail_decomposition(rs);
  if (!tails) {
    j["tails"] = nullptr;
    return j;
  }
  j["branch"] = tails->branch;
  Json t = Json::array();
  for (const auto& tail : tails->tails) t.push_back(Json(tail));
  j["tails"] = std::move(t);
  j["nu"] = Json(std::vector<int>(tails->nu.begin(), tails->nu.end()));
  j["odd"] = Json(std::vector<int>(tails->odd.begin(), tails->odd.end()));
  return j;
}

std::vector<TransitionEntry> transition_entries(const RootSystem& rs) {
  std::vector<std::pair<int, int>> long_edges;
  for (auto [i, j] : rs.dynkin_edges())
    if (rs.simple_is_long(i) && rs.simple_is_long(j)) long_edges.emplace_back(i, j);
  std::vector<TransitionEntry> out;
  for (size_t a = 0; a < long_edges.size(); ++a)
    for (size_t b = a + 1; b < long_edges.size(); ++b) {
      auto e = long_edges[a], f = long_edges[b];
      int shared = 0;
      for (int x : {e.first, e.second})
        for (int y : {f.first, f.second})
          if (x == y) shared = x;
      if (shared == 0) continue;
      int i = e.first == shared ? e.second : e.first;
      int k = f.first == shared ? f.second : f.first;
      TransitionEntry entry{e, f, shared, transition_root(rs, i, shared, k)};
      out.push_back(std::move(entry));
    }
  std::sort(out.begin(), out.end(), [](const TransitionEntry& x, const TransitionEntry& y) {
    return std::tie(x.edge1, x.edge2) < std::tie(y.edge1, y.edge2);
  });
  return out;
}

Json transitions_json(const RootSystem& rs) {
  Json j = header(rs);
  Json entries = Json::array();
  for (const TransitionEntry& entry : transition_entries(rs)) {
    Json e;
    e["edge1"] = Json::array({entry.edge1.first, entry.edge1.second});
    e["edge2"] = Json::array({entry.edge2.first, entry.edge2.second});
    e["gamma"] = root_json(entry.gamma);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json minimal_nonabelian_json(const RootSystem& rs) {
  Json j = header(rs);
  Json list = Json::array();
  for (const RootIdeal& ideal : minimal_nonabelian(rs)) {
    Json entry = ideal_json(rs, ideal);
    entry["word"] = word_json(canonical_min_nonabelian(rs, ideal));
    list.push_back(std::move(entry));
  }
  j["ideals"] = std::move(list);
  return j;
}

std::string hasse_dot(const RootSystem& rs, const std::vector<RootId>& highlight) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (RootId id = 0; id < rs.num_positive(); ++id) {
    os << "  n" << id << " [label=\"" << root_str(rs, rs.root(id)) << "\"";
    if (std::find(highlight.begin(), highlight.end(), id) != highlight.end())
      os << ", style=filled, fillcolor=lightblue";
    os << "];\n";
  }
  for (RootId id = 0; id < rs.num_positive(); ++id)
    for (RootId below : rs.lower_cover_ids(id))
      os << "  n" << below << " -> n" << id << ";\n";
  os << "}\n";
  return os.str();
}

std::string render_roots_table(const RootSystem& rs) {
  std::ostringstream os;
  for (RootId id = 0; id < rs.num_positive(); ++id) {
    const Root& r = rs.root(id);
    os << root_str(rs, r) << "  ht=" << r.height() << "  "
       << (rs.is_long(id) ? "long" : "short") << "\n";
  }
  return os.str();
}

std::string render_glorious_table(const RootSystem& rs) {
  std::vector<GloriousPair> pairs = glorious_pairs(rs);
  std::sort(pairs.begin(), pairs.end(), [](const GloriousPair& p, const GloriousPair& q) {
    return std::tie(p.alpha, p.alpha_prime) < std::tie(q.alpha, q.alpha_prime);
  });
  std::ostringstream os;
  for (const GloriousPair& pair : pairs)
    os << simple_str(pair.alpha) << " " << simple_str(pair.alpha_prime) << " | "
       << root_str(rs, pair.eta) << " " << root_str(rs, pair.eta_prime) << "\n";
  return os.str();
}

std::string render_minmax_table(const RootSystem& rs) {
  RootletIndex index = RootletIndex::build(rs);
  std::ostringstream os;
  for (int i : rs.long_simples()) {
    const RootletFiber& fiber = index.fiber(rs.id_of(rs.simple_root(i)));
    std::vector<Root> mins = min_elements(rs, fiber.min_ideal);
    std::vector<Root> maxc = max_complement(rs, fiber.max_ideal);
    // The complement maxima pair up with the fiber minima: print them in
    // the order theta - min[k] when the sets agree.
    std::vector<Root> paired;
    for (const Root& m : mins) {
      Coeffs c = rs.theta().coeffs();
      for (int t = 1; t <= rs.rank(); ++t) c[static_cast<size_t>(t) - 1] -= m.coeff(t);
      paired.push_back(Root(std::move(c)));
    }
    auto sorted = [](std::vector<Root> v) {
      std::sort(v.begin(), v.end(), canonical_less);
      return v;
    };
    std::vector<Root> printed = sorted(maxc) == sorted(paired) ? paired : maxc;
    os << simple_str(i) << " |";
    for (const Root& m : mins) os << " " << root_str(rs, m);
    os << " |";
    for (const Root& m : printed) os << " " << root_str(rs, m);
    os << "\n";
  }
  return os.str();
}

std::string render_semi_glorious_row(const RootSystem& rs) {
  SemiGloriousPair semi = semi_glorious(rs);
  std::ostringstream os;
  os << rs.spec().name() << " | " << simple_str(semi.alpha) << " "
     << simple_str(semi.alpha_prime) << " | " << root_str(rs, semi.eta) << " "
     << root_str(rs, semi.eta_prime) << " | " << simple_str(semi.diff_index) << " "
     << (semi.diff_is_long ? "long" : "short") << "\n";
  return os.str();
}

std::string render_tails_row(const RootSystem& rs) {
  auto tails = tail_decomposition(rs);
  if (!tails) return "";
  std::ostringstream os;
  os << rs.spec().name() << " |";
  for (int t = 0; t < 3; ++t)
    os << " b" << (t + 1) << "=" << simple_str(tails->odd[static_cast<size_t>(t)]);
  os << " | branch=" << simple_str(tails->branch) << "\n";
  return os.str();
}

std::string render_transitions_table(const RootSystem& rs) {
  std::ostringstream os;
  for (const TransitionEntry& entry : transition_entries(rs))
    os << "(" << simple_str(entry.edge1.first) << "," << simple_str(entry.edge1.second)
       << ")+(" << simple_str(entry.edge2.first) << "," << simple_str(entry.edge2.second)
       << ") -> " << simple_str([&] {
            for (int i = 1; i <= rs.rank(); ++i)
              if (entry.gamma.coeff(i) == 1) return i;
            return 0;
          }())
       << "\n";
  return os.str();
}

std::string render_interval(const RootSystem& rs) {
  auto iv = interval(rs);
  std::ostringstream os;
  if (!iv) {
    os << rs.spec().name() << " | empty\n";
    return os.str();
  }
  os << rs.spec().name() << " | " << (iv->cube ? "cube" : "chain") << " |";
  for (const Root& r : iv->members) os << " " << root_str(rs, r);
  os << "\n";
  for (const auto& pair : iv->central)
    os << "  edge (" << simple_str(pair.edge_a) << "," << simple_str(pair.edge_b) << ") | "
       << root_str(rs, pair.lower) << " " << root_str(rs, pair.upper) << " | kl "
       << simple_str(pair.class_lower) << " " << simple_str(pair.class_upper) << "\n";
  return os.str();
}

std::string render_minimal_nonabelian(const RootSystem& rs) {
  std::ostringstream os;
  for (const RootIdeal& ideal : minimal_nonabelian(rs)) {
    os << "size=" << ideal.size() << " min:";
    for (RootId id : ideal.min_elements()) os << " " << root_str(rs, rs.root(id));
    os << " | word:";
    AffineWord word = canonical_min_nonabelian(rs, ideal);
    for (int letter : word.letters()) os << " " << letter;
    os << "\n";
  }
  return os.str();
}

}  // namespace rootposet
