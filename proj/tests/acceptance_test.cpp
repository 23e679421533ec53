// Acceptance suite: runs the full verification sweep (every family up to
// rank 8 plus the exceptional types) and reports one line per criterion.
// All checks are exact; there are no tolerances anywhere.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "rootposet/verify.hpp"

using namespace rootposet;

namespace {

struct Criterion {
  int number;
  std::string description;
  std::vector<std::string> check_families;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table{
      {1,
       "cardinalities: Heisenberg 2h*-3, 2^rank abelian ideals, #Pi_l - 1 glorious pairs",
       {"cardinality.heisenberg", "cardinality.abelian-count", "cardinality.glorious-count"}},
      {2,
       "size bounds: non-abelian ideals have >= h* roots; Heisenberg ideals that big are "
       "non-abelian",
       {"size-bounds.ideals"}},
      {3,
       "golden tables: glorious pairs, E6 min/max, semi-glorious rows, tails, transition "
       "labels",
       {"golden.glorious", "golden.minmax", "golden.semiglorious", "golden.tails",
        "golden.transitions"}},
      {4,
       "edge bijection round-trip with class conditions",
       {"bijection.roundtrip", "bijection.ordered-unique"}},
      {5,
       "transition roots: shift identities, four-chain identities, ADE bijection",
       {"transitions.triples", "transitions.four-chains", "transitions.ade-bijection"}},
      {6, "interval structure: cube in D/E, chain otherwise, with class labels",
       {"interval.structure"}},
      {7, "meet/join via transition chains and the distance formula",
       {"interval.meet-distance"}},
      {8,
       "minimal non-abelian ideals: exhaustive search equals the construction; canonical "
       "words",
       {"minimal-nonabelian.exhaustive", "minimal-nonabelian.construction"}},
      {9,
       "well-definedness: class map, extension order, rootlet fibers",
       {"welldef.class-map", "welldef.minuscule-order", "welldef.fibers"}},
  };
  return table;
}

std::string family_of(const std::string& id) {
  size_t dot = id.find('.');
  return dot == std::string::npos ? id : id.substr(dot + 1);
}

}  // namespace

TEST_CASE("acceptance sweep") {
  VerifyOptions options;
  options.max_rank = 8;
  std::vector<CheckResult> results = verify_all(options);

  std::map<std::string, std::vector<const CheckResult*>> by_family;
  for (const CheckResult& r : results) by_family[family_of(r.id)].push_back(&r);

  for (const Criterion& criterion : criteria()) {
    int ran = 0;
    std::vector<std::string> failures;
    for (const std::string& fam : criterion.check_families)
      for (const CheckResult* r : by_family[fam]) {
        if (r->note) continue;
        ++ran;
        if (!r->pass) failures.push_back(r->id + " :: " + r->witness);
      }
    std::string status = failures.empty() ? "PASS" : "FAIL";
    std::printf("criterion %d: %s (%d checks) -- %s\n", criterion.number, status.c_str(), ran,
                criterion.description.c_str());
    for (const std::string& f : failures) std::printf("    %s\n", f.c_str());
    CAPTURE(criterion.number);
    CHECK(ran > 0);
    CHECK(failures.empty());
  }

  // Informational notes from the sweep.
  for (const CheckResult& r : results)
    if (r.note) std::printf("note: %s :: %s\n", r.id.c_str(), r.witness.c_str());

  CHECK(all_passed(results));
}

TEST_CASE("the report is deterministic") {
  VerifyOptions options;
  options.max_rank = 4;
  std::string once = render_report(verify_all(options));
  std::string twice = render_report(verify_all(options));
  CHECK(once == twice);
  CHECK(once.find("FAIL") == std::string::npos);
}
