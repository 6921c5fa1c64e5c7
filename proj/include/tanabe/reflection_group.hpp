#pragma once
// The complex reflection groups G(r,p,n) of monomial matrices (r-th roots of
// unity with exponent sum divisible by p, times a permutation), their tensor
// space representations, and the centralizer computation.
#include <vector>

#include "tanabe/cyclotomic.hpp"
#include "tanabe/diagram.hpp"
#include "tanabe/matrix.hpp"
#include "tanabe/tanabe_algebra.hpp"

namespace tanabe {

// (exps, perm): the matrix sending basis vector v_i to zeta^{exps[i]} v_{perm[i]}
// (0-based indices, exponents mod r).
struct GroupElement {
  std::vector<long> exps;
  std::vector<int> perm;
  bool operator<(const GroupElement& o) const {
    if (exps != o.exps) return exps < o.exps;
    return perm < o.perm;
  }
  bool operator==(const GroupElement& o) const {
    return exps == o.exps && perm == o.perm;
  }
};

GroupElement groupIdentity(int n);
GroupElement groupMultiply(const GroupElement& a, const GroupElement& b, long r);

// Generators of G(r,p,n); with fixLast, generators of the subgroup fixing the
// last coordinate line (diagonal part times permutations of the first n-1
// points) used at half levels.
std::vector<GroupElement> reflectionGenerators(const AlgebraParams& params,
                                               bool fixLast = false);

// Full element list by closure under multiplication (guarded by size).
std::vector<GroupElement> groupClosure(const std::vector<GroupElement>& gens,
                                       long r, long maxSize = 200000);

// Monomial matrix of g over Q(zeta_r), entry zeta^{exps[i]} at (perm[i], i).
Matrix<Cyclotomic> rho(const GroupElement& g, long r);
// k-fold Kronecker power (diagonal action on the k-fold tensor space).
Matrix<Cyclotomic> tensorRho(const GroupElement& g, int k, long r);
// Action on the k-fold tensor space tensored with the fixed last basis
// vector: requires perm to fix the last point; the extra factor contributes
// the scalar zeta^{exps[n-1]}.
Matrix<Cyclotomic> tensorRhoHalf(const GroupElement& g, int k, long r);

// Dimension of the algebra of matrices commuting with the group action on
// tensor space at the given level (integer level k: k factors; half level:
// k factors with the last vector pinned, group restricted accordingly).
long centralizerDim(const Level& level, const AlgebraParams& params);

struct SchurWeylReport {
  bool actionsCommute = false;       // group action commutes with every phi(x_d)
  bool imagesIndependent = false;    // surviving phi(x_d) linearly independent
  bool dimensionMatch = false;       // centralizer dim == surviving basis size
  bool kernelExact = false;          // phi(x_d) == 0 exactly when |d| > n
  long centralizer = 0;
  long survivingBasis = 0;
  bool ok() const {
    return actionsCommute && imagesIndependent && dimensionMatch && kernelExact;
  }
};

SchurWeylReport verifySchurWeyl(const Level& level, const AlgebraParams& params);

}  // namespace tanabe
