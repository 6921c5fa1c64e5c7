#pragma once
// Action of diagrams on k-fold tensor space over n-dimensional space.
// Action matrices are in the right-action convention: rows index the input
// basis tuple, columns the output tuple; tuples are flattened base n with the
// first tensor factor most significant.
#include <vector>

#include "tanabe/cyclotomic.hpp"
#include "tanabe/diagram_vector.hpp"
#include "tanabe/matrix.hpp"
#include "tanabe/reflection_group.hpp"

namespace tanabe {

// Entry (in, out) is 1 when the combined index assignment (in on the top row,
// out on the bottom row) is constant on every block of d.
Matrix<Rational> phiDiagram(const Diagram& d, long n);
// Entry (in, out) is 1 when the equality pattern of the combined assignment
// is exactly the partition d.
Matrix<Rational> phiX(const Diagram& d, long n);
// Linear extension in either basis.
Matrix<Rational> phiVector(const DiagramVector& v, long n);
// Action at half levels: the ambient matrix restricted to tuples whose last
// coordinate is the distinguished index n; checks the subspace is preserved.
Matrix<Rational> phiHalfVector(const DiagramVector& v, long n);

// Sum over all color exponents and point pairs of the colored transposition
// action on k-fold tensor space, divided by r; returned over the rationals
// (the cyclotomic entries collapse).
Matrix<Rational> kappaMatrix(long r, long n, int k);
// Same sum over pairs of the first n-1 points only, acting on k factors (the
// half-level tensor space with the pinned last vector identified with the
// plain k-fold space).
Matrix<Rational> kappaHalfMatrix(long r, long n, int k);

// For n = 2k and r = p = 2: the difference of the two conjugacy class sums of
// sign-decorated fixed-point-free involutions (odd minus even number of
// negative pairs reversed: even-class sum minus odd-class sum), acting on
// k-fold tensor space.
Matrix<Rational> zMatrix(int k);

// Multiplicity of each candidate eigenvalue as the nullity of A - c.
std::vector<std::pair<Rational, long>> eigMultiplicities(
    const Matrix<Rational>& A, const std::vector<Rational>& candidates);

}  // namespace tanabe
