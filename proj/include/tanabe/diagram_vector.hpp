#pragma once
// Formal rational linear combinations of diagrams, in either the diagram
// basis or the orbit basis x_d, with the change of basis and both products.
#include <map>
#include <string>

#include "tanabe/diagram.hpp"
#include "tanabe/rational.hpp"

namespace tanabe {

enum class BasisKind { Diagram, X };

class DiagramVector {
 public:
  DiagramVector(int K, BasisKind basis) : K_(K), basis_(basis) {}
  static DiagramVector unit(const Diagram& d, BasisKind basis) {
    DiagramVector v(d.size(), basis);
    v.add(d, 1);
    return v;
  }

  int size() const { return K_; }
  BasisKind basis() const { return basis_; }
  const std::map<Diagram, Rational>& terms() const { return terms_; }

  void add(const Diagram& d, const Rational& c);
  DiagramVector operator+(const DiagramVector& o) const;
  DiagramVector operator-(const DiagramVector& o) const;
  DiagramVector scaled(const Rational& s) const;
  bool operator==(const DiagramVector& o) const;
  bool isZeroVector() const { return terms_.empty(); }

  std::string str() const;
  // Parses "coeff * {blocks} + ..." (coefficient and '*' optional, exact
  // fractions allowed, unary '-' allowed). All terms must share one K.
  static DiagramVector parse(const std::string& text, BasisKind basis);

 private:
  int K_;
  BasisKind basis_;
  std::map<Diagram, Rational> terms_;  // nonzero coefficients only
};

// Converts between the diagram basis (d = sum of x_{d'} over coarser-or-equal
// d') and the orbit basis, by the unitriangular relation solved recursively.
DiagramVector changeBasis(const DiagramVector& v, BasisKind target);

// Product in the diagram basis: d1 d2 = n^l (d1 composed with d2).
DiagramVector multiplyDiagram(const DiagramVector& v1, const DiagramVector& v2,
                              long n);

// Product in the orbit basis: zero unless the interface partitions match;
// otherwise a sum over coarsenings of the composite obtained by joining
// top-row-only blocks of d1 with bottom-row-only blocks of d2, with falling
// factorial coefficients (n - |d|)(n - |d| - 1)...(one factor per removed
// middle block).
DiagramVector multiplyX(const DiagramVector& v1, const DiagramVector& v2,
                        long n);

// Image of a diagram-basis vector of A_k inside A_{k+1}: each diagram gains
// the strand {k+1, (k+1)'}, landing in the half-level subalgebra.
DiagramVector embedIntoNext(const DiagramVector& v);

}  // namespace tanabe
