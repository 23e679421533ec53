#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "rootposet/glorious.hpp"
#include "rootposet/ideals.hpp"
#include "rootposet/root_system.hpp"
#include "rootposet/rootlets.hpp"

namespace rootposet {

using Json = nlohmann::ordered_json;

// Positional digits for F4/G2 ("1221"), coefficient tuple "(1,2,3,2,1,2)"
// otherwise.
std::string root_str(const RootSystem& rs, const Root& r);
std::string simple_str(int i);  // "a3"; 0 is the affine node "a0"

Json root_json(const Root& r);
Json ideal_json(const RootSystem& rs, const RootIdeal& ideal);
Json word_json(const AffineWord& w);

Json roots_json(const RootSystem& rs);
Json ideals_json(const RootSystem& rs, const std::vector<RootIdeal>& ideals);
Json abelian_json(const RootSystem& rs);
Json rootlets_json(const RootSystem& rs);
Json glorious_json(const RootSystem& rs);
Json semi_glorious_json(const RootSystem& rs);
Json interval_json(const RootSystem& rs);
Json tails_json(const RootSystem& rs);
Json transitions_json(const RootSystem& rs);
Json minimal_nonabelian_json(const RootSystem& rs);

// DOT digraph of the Hasse diagram, edges pointing from lower covers
// upwards; nodes in the highlight set get a filled style.
std::string hasse_dot(const RootSystem& rs, const std::vector<RootId>& highlight = {});

// Canonical text tables (the same renderings the golden data freezes).
std::string render_roots_table(const RootSystem& rs);
std::string render_glorious_table(const RootSystem& rs);
std::string render_minmax_table(const RootSystem& rs);
std::string render_semi_glorious_row(const RootSystem& rs);
std::string render_tails_row(const RootSystem& rs);
std::string render_transitions_table(const RootSystem& rs);
std::string render_interval(const RootSystem& rs);
std::string render_minimal_nonabelian(const RootSystem& rs);

// All incident pairs of long-long edges with their transition roots,
// sorted by (first edge, second edge).
struct TransitionEntry {
  std::pair<int, int> edge1, edge2;
  int shared = 0;
  Root gamma;
};
std::vector<TransitionEntry> transition_entries(const RootSystem& rs);

}  // namespace rootposet
