#pragma once
// The branching tower of necklaces with twists: integer-level nodes are
// necklaces of diagrams with n boxes plus a twist index delta in 0..u-1;
// half-level nodes are colored necklaces with n-1 boxes. Edges alternate a
// box deletion at the colored component (down) and a box addition at the
// successor component (up).
#include <map>
#include <string>

#include "tanabe/necklace.hpp"
#include "tanabe/tanabe_algebra.hpp"

namespace tanabe {

struct TowerNode {
  DiagramTuple tuple;   // canonical necklace representative
  long color = 0;       // half levels: colored component (1-based); else 0
  long delta = 0;       // integer levels: twist index 0..u-1; else 0
  long u = 1;           // integer levels: number of twists of this necklace
  std::string label() const;
  bool operator<(const TowerNode& o) const {
    if (tuple != o.tuple) return tuple < o.tuple;
    if (color != o.color) return color < o.color;
    return delta < o.delta;
  }
  bool operator==(const TowerNode& o) const {
    return tuple == o.tuple && color == o.color && delta == o.delta;
  }
};

struct TowerEdge {
  size_t from;   // index into the previous level's node list
  size_t to;     // index into this level's node list
  long content;  // content of the box deleted (down) or added (up)
};

struct TowerLevel {
  Level level = Level::integer(0);
  std::vector<TowerNode> nodes;
  std::vector<TowerEdge> edgesFromPrevious;  // empty at the root level
  std::vector<Integer> pathCounts;           // root-to-node path counts
};

struct BratteliTower {
  AlgebraParams params;
  std::vector<TowerLevel> levels;  // indices 0..2*kmax (twice the level)
};

// Builds levels 0, 1/2, ..., kmax of the tower (kmax limited to n/2 unless
// the guard override is set).
BratteliTower buildTower(const AlgebraParams& params, int kmax);

struct DimsRow {
  std::string label;
  Integer irrepDim;    // endpoint group-side irreducible dimension
  Integer pathCount;   // algebra-side module dimension
};

struct DimsTable {
  std::vector<DimsRow> rows;
  Integer sumDimTimesPaths;  // should equal n^k (n^k at half level k+1/2 too)
  Integer sumPathsSquared;   // should count the surviving basis for large n
};

DimsTable dims(const BratteliTower& tower, const Level& level);

// Predicted joint spectrum of the Jucys-Murphy family at integer level k:
// for each root-to-node path the eigenvalue tuple
// (1, content added at 1, -content removed at 3/2, content added at 2, ...)
// and the aggregated group-side dimension over paths sharing a tuple.
std::map<std::vector<Rational>, Integer> predictJMSpectrum(
    const BratteliTower& tower, int k);

std::string towerToDot(const BratteliTower& tower);
std::string towerToJson(const BratteliTower& tower);

}  // namespace tanabe
