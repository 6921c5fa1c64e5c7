#pragma once
// The subalgebra of the partition algebra spanned by orbit basis elements
// whose diagrams satisfy congruence conditions tied to the parameters
// (r, p, n), together with its Jucys-Murphy elements.
#include <optional>
#include <set>
#include <vector>

#include "tanabe/diagram_vector.hpp"

namespace tanabe {

struct AlgebraParams {
  long r = 1;  // order of the cyclic group of colors
  long p = 1;  // index divisor, p | r
  long n = 1;  // number of tensor factors / points permuted
  long m() const { return r / p; }
  void validate() const;
};

enum class DiagramClass { Pi, Lambda, Theta, Outside };

// Per-block congruences of top and bottom vertex counts decide the class:
//  - Pi: every block has top count congruent to bottom count mod r;
//  - Lambda: exactly n blocks, congruent mod m, all incongruent mod r, and
//    all top-minus-bottom differences congruent to each other mod r;
//  - Theta: more than n blocks, congruent mod m, some block incongruent mod r;
//  - Outside otherwise.
DiagramClass classify(const Diagram& d, const AlgebraParams& params);
std::string className(DiagramClass c);

struct TanabeBasis {
  std::vector<Diagram> full;  // diagrams spanning the algebra (Pi, Lambda, Theta)
  std::vector<Diagram> pi;    // Pi diagrams with at most n blocks, plus Lambda;
                              // these survive the tensor space action
};

TanabeBasis tanabeBasis(const Level& level, const AlgebraParams& params);

struct ClosureReport {
  bool closed = true;
  std::optional<std::pair<Diagram, Diagram>> offendingPair;
  std::optional<Diagram> strayDiagram;
};

// Multiplies every ordered pair of spanning orbit basis elements and checks
// the product support stays inside the span.
ClosureReport closureCheck(const Level& level, const AlgebraParams& params);

// Diagram with one block S on top joined to its mirror on the bottom and
// identity strands elsewhere (S given as top labels in 1..K; may be empty,
// giving the identity).
Diagram blockWithStrands(int K, const std::set<int>& S);
// Diagram splitting S and its mirror into the pair of blocks I and its
// complement (I given in vertex encoding: top t as t, bottom t' as K + t),
// identity strands off S.
Diagram splitBlockWithStrands(int K, const std::set<int>& S,
                              const std::set<int>& I);

// The level-indexed central elements whose successive differences are the
// Jucys-Murphy elements; returned in the diagram basis at the level's
// ambient size.
DiagramVector buildZ(const Level& level, long r, long n);
// Jucys-Murphy element at the given level: Z at the level minus Z one half
// step below, embedded into a common ambient algebra; level 1/2 gives the
// identity.
DiagramVector buildM(const Level& level, long r, long n);
// The special Jucys-Murphy element for parameters (2,2,n) at integer level k:
// the orbit basis element of the all-singletons diagram (orbit basis).
DiagramVector buildM22(int k);

// True when the x-basis commutator of a and b lies in the kernel of the
// tensor-space realization, i.e. every term on at most n blocks cancels.
bool commutesModKernel(const DiagramVector& a, const DiagramVector& b, long n);

// True when v (diagram basis, ambient matching the level) commutes, as an
// operator, with every surviving orbit basis element of the algebra.
bool isCentral(const DiagramVector& v, const Level& level,
               const AlgebraParams& params);

}  // namespace tanabe
