// Unit tests for Young diagram combinatorics, necklaces, and the branching
// tower.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tanabe/bratteli.hpp"

using namespace tanabe;

namespace {

// Brute-force standard tableau count for one diagram: fillings by recursive
// corner removal.
Integer tableauxByRemoval(const YoungDiagram& d) {
  if (diagramBoxes(d) == 0) return 1;
  Integer total = 0;
  for (int row : removableRows(d)) total += tableauxByRemoval(withBoxRemoved(d, row));
  return total;
}

// Brute-force count for a tuple: remove the last entry from any component.
Integer tupleTableauxByRemoval(const DiagramTuple& t) {
  if (tupleBoxes(t) == 0) return 1;
  Integer total = 0;
  for (size_t c = 0; c < t.size(); ++c)
    for (int row : removableRows(t[c])) {
      DiagramTuple next = t;
      next[c] = withBoxRemoved(t[c], row);
      total += tupleTableauxByRemoval(next);
    }
  return total;
}

}  // namespace

TEST_CASE("hook length counts match recursive enumeration") {
  std::vector<YoungDiagram> shapes = {{}, {1}, {3}, {2, 1}, {2, 2},
                                      {3, 1}, {3, 2, 1}, {4, 2, 1}};
  for (const YoungDiagram& d : shapes) CHECK(hookCount(d) == tableauxByRemoval(d));
  CHECK(hookCount({2, 1}) == 2);
  CHECK(hookCount({3, 2, 1}) == 16);
}

TEST_CASE("tuple tableau counts match recursive enumeration") {
  std::vector<DiagramTuple> tuples = {{{2}, {1}},
                                      {{2, 1}, {}, {1}},
                                      {{1}, {1}, {1}},
                                      {{3}, {2, 2}}};
  for (const DiagramTuple& t : tuples)
    CHECK(tabCount(t) == tupleTableauxByRemoval(t));
  CHECK(tabCount({{2}, {2}}) == 6);
}

TEST_CASE("corner bookkeeping") {
  YoungDiagram d = {3, 1};
  CHECK(removableRows(d) == std::vector<int>{0, 1});
  CHECK(addableRows(d) == std::vector<int>{0, 1, 2});
  CHECK(withBoxRemoved(d, 1) == YoungDiagram{3});
  CHECK(withBoxAdded(d, 2) == YoungDiagram{3, 1, 1});
  CHECK(removedBoxContent(d, 0) == 2);
  CHECK(addedBoxContent(d, 1) == 0);
  CHECK(addedBoxContent(d, 2) == -2);
}

TEST_CASE("shift orbits and canonical necklaces") {
  DiagramTuple t = {{2}, {1}, {2}, {1}};  // period two under single shifts
  CHECK(shiftOnce(t) == DiagramTuple{{1}, {2}, {1}, {2}});
  // r=4, p=4, m=1: shifting by m twice returns the tuple, so b=2, u=2.
  ShiftOrbit orbit = shiftOrbit(t, 1, 4);
  CHECK(orbit.b == 2);
  CHECK(orbit.u == 2);
  // r=4, p=2, m=2: shifting by two fixes it immediately.
  ShiftOrbit orbit2 = shiftOrbit(t, 2, 2);
  CHECK(orbit2.b == 1);
  CHECK(orbit2.u == 2);
  CHECK(canonicalNecklace(t, 1, 4) == canonicalNecklace(shiftOnce(t), 1, 4));
  ColoredNecklace c1 = canonicalColored(t, 1, 1, 4);
  ColoredNecklace c2 = canonicalColored(shiftOnce(t), 2, 1, 4);
  CHECK(c1 == c2);
}

TEST_CASE("tower for the plain symmetric group case") {
  // r = p = 1: single diagrams; level-k path counts give Bell numbers on the
  // diagonal sums and the classical branching.
  BratteliTower tower = buildTower(AlgebraParams{1, 1, 4}, 2);
  CHECK(tower.levels[0].nodes.size() == 1);
  // Level 1: diagrams of 4 boxes reachable: (4) and (3,1).
  CHECK(tower.levels[2].nodes.size() == 2);
  DimsTable table = dims(tower, Level::integer(2));
  CHECK(table.sumDimTimesPaths == 16);
  // Surviving basis of the partition algebra at level 2 for n = 4: all 15.
  CHECK(table.sumPathsSquared == 15);
}

TEST_CASE("tower guard") {
  if (!guardOverrideActive())
    CHECK_THROWS_AS(buildTower(AlgebraParams{2, 1, 2}, 3), GuardError);
}

TEST_CASE("json and dot outputs are well formed") {
  BratteliTower tower = buildTower(AlgebraParams{2, 2, 4}, 1);
  std::string dot = towerToDot(tower);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
  std::string json = towerToJson(tower);
  CHECK(json.find("\"levels\"") != std::string::npos);
  CHECK(json.find("\"pathCount\"") != std::string::npos);
}

TEST_CASE("predicted spectra aggregate path dimensions") {
  BratteliTower tower = buildTower(AlgebraParams{2, 1, 4}, 1);
  auto spectrum = predictJMSpectrum(tower, 1);
  Integer total = 0;
  for (const auto& [tuple, dim] : spectrum) {
    CHECK(tuple.size() == 2);
    CHECK(tuple[0] == Rational(1));
    total += dim;
  }
  CHECK(total == 4);  // n^1
}
