#pragma once
// Young diagrams, r-tuples of them, standard tableau counts, and the shift
// orbits that define (m,p)-necklaces of diagrams.
#include <string>
#include <vector>

#include "tanabe/rational.hpp"

namespace tanabe {

// A partition written as weakly decreasing positive row lengths.
using YoungDiagram = std::vector<int>;

long diagramBoxes(const YoungDiagram& d);
// Rows from which a box may be removed (inner corners), 0-based row indices.
std::vector<int> removableRows(const YoungDiagram& d);
// Rows at which a box may be added (outer corners), 0-based; index == size
// means a new row of length 1.
std::vector<int> addableRows(const YoungDiagram& d);
YoungDiagram withBoxRemoved(const YoungDiagram& d, int row);
YoungDiagram withBoxAdded(const YoungDiagram& d, int row);
// Content (column minus row, 0-based) of the box at the given corner.
long removedBoxContent(const YoungDiagram& d, int row);
long addedBoxContent(const YoungDiagram& d, int row);

// Number of standard tableaux of one diagram (hook length formula).
Integer hookCount(const YoungDiagram& d);

// An r-tuple of Young diagrams.
using DiagramTuple = std::vector<YoungDiagram>;

long tupleBoxes(const DiagramTuple& t);
// Standard tableaux of the tuple: multinomial over component sizes times the
// product of component hook counts.
Integer tabCount(const DiagramTuple& t);

// One step of the cyclic shift (last component moves to the front).
DiagramTuple shiftOnce(const DiagramTuple& t);
DiagramTuple shiftBy(const DiagramTuple& t, long steps);

std::string tupleStr(const DiagramTuple& t);

struct ShiftOrbit {
  long b;  // orbit size under shifting by m, within the p available rotations
  long u;  // p / b: number of one-dimensional twists attached to the tuple
};

// Orbit data of the tuple under shifts by m = r/p (r = tuple length).
ShiftOrbit shiftOrbit(const DiagramTuple& t, long m, long p);

// Canonical representative of the necklace class of t: the least tuple among
// shifts by multiples of m.
DiagramTuple canonicalNecklace(const DiagramTuple& t, long m, long p);

// A necklace with one distinguished (colored) component, up to simultaneous
// shifting; color is the 1-based component index in the underlying tuple.
struct ColoredNecklace {
  DiagramTuple tuple;
  long color = 1;
  bool operator<(const ColoredNecklace& o) const {
    if (tuple != o.tuple) return tuple < o.tuple;
    return color < o.color;
  }
  bool operator==(const ColoredNecklace& o) const {
    return tuple == o.tuple && color == o.color;
  }
};

ColoredNecklace canonicalColored(const DiagramTuple& t, long color, long m,
                                 long p);

}  // namespace tanabe
