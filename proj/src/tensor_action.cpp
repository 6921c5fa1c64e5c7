#include "tanabe/tensor_action.hpp"

#include <algorithm>

namespace tanabe {

namespace {

long powli(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Decodes a flat index into the k-tuple of values in 1..n (first factor most
// significant).
std::vector<int> decodeTuple(long flat, long n, int k) {
  std::vector<int> t(static_cast<size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    t[static_cast<size_t>(i)] = static_cast<int>(flat % n) + 1;
    flat /= n;
  }
  return t;
}

void guardTensorSize(long n, int k) {
  if (powli(n, 2 * k) > 4200000L && !guardOverrideActive())
    throw GuardError("tensor action size guard exceeded (n^2k too large); set "
                     "TANABE_GUARD_OVERRIDE to lift");
}

// Value assigned to vertex v (1..2K) by the pair (top tuple, bottom tuple).
int vertexValue(int v, int K, const std::vector<int>& top,
                const std::vector<int>& bottom) {
  return v <= K ? top[static_cast<size_t>(v - 1)]
                : bottom[static_cast<size_t>(v - K - 1)];
}

Matrix<Rational> phiPattern(const Diagram& d, long n, bool exact) {
  const int K = d.size();
  guardTensorSize(n, K);
  const long N = powli(n, K);
  Matrix<Rational> out(N, N, Rational(0));
  for (long in = 0; in < N; ++in) {
    std::vector<int> top = decodeTuple(in, n, K);
    for (long outIdx = 0; outIdx < N; ++outIdx) {
      std::vector<int> bottom = decodeTuple(outIdx, n, K);
      bool match = true;
      for (const auto& b : d.blocks()) {
        int v0 = vertexValue(b[0], K, top, bottom);
        for (size_t j = 1; j < b.size() && match; ++j)
          if (vertexValue(b[j], K, top, bottom) != v0) match = false;
        if (!match) break;
      }
      if (match && exact) {
        // Distinct blocks must carry distinct values.
        std::vector<int> vals;
        for (const auto& b : d.blocks())
          vals.push_back(vertexValue(b[0], K, top, bottom));
        std::sort(vals.begin(), vals.end());
        if (std::adjacent_find(vals.begin(), vals.end()) != vals.end())
          match = false;
      }
      if (match) out.at(in, outIdx) = 1;
    }
  }
  return out;
}

}  // namespace

Matrix<Rational> phiDiagram(const Diagram& d, long n) {
  return phiPattern(d, n, /*exact=*/false);
}

Matrix<Rational> phiX(const Diagram& d, long n) {
  return phiPattern(d, n, /*exact=*/true);
}

Matrix<Rational> phiVector(const DiagramVector& v, long n) {
  const long N = powli(n, v.size());
  Matrix<Rational> out(N, N, Rational(0));
  for (const auto& [d, c] : v.terms()) {
    Matrix<Rational> m =
        v.basis() == BasisKind::X ? phiX(d, n) : phiDiagram(d, n);
    out = out + m.scaled(c);
  }
  return out;
}

Matrix<Rational> phiHalfVector(const DiagramVector& v, long n) {
  const int K = v.size();
  for (const auto& [d, c] : v.terms())
    if (!d.lastStrandJoined())
      throw DimensionError("half-level action needs the last strand joined");
  Matrix<Rational> full = phiVector(v, n);
  const long N = powli(n, K);
  const long M = powli(n, K - 1);
  // Tuples with last coordinate n sit at flat indices q*n + (n-1).
  Matrix<Rational> out(M, M, Rational(0));
  for (long i = 0; i < N; ++i) {
    bool rowPinned = (i % n == n - 1);
    for (long j = 0; j < N; ++j) {
      bool colPinned = (j % n == n - 1);
      if (rowPinned && colPinned) {
        out.at(i / n, j / n) = full.at(i, j);
      } else if (rowPinned && !colPinned && !isZero(full.at(i, j))) {
        throw DimensionError("half-level action leaks off the pinned subspace");
      }
    }
  }
  return out;
}

namespace {

Matrix<Rational> collapseToRational(const Matrix<Cyclotomic>& m) {
  Matrix<Rational> out(m.rows(), m.cols(), Rational(0));
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).rationalPart();
  return out;
}

// Sum over color exponents and the given point pairs of the tensor action of
// the colored transposition, over Q(zeta_r).
Matrix<Cyclotomic> kappaSum(long r, long n, int k, long points) {
  const long N = powli(n, k);
  Matrix<Cyclotomic> sum(N, N, Cyclotomic(static_cast<int>(r)));
  for (long l = 0; l < r; ++l)
    for (int i = 0; i < points; ++i)
      for (int j = i + 1; j < points; ++j) {
        GroupElement g = groupIdentity(static_cast<int>(n));
        g.exps[static_cast<size_t>(i)] = l;
        g.exps[static_cast<size_t>(j)] = (r - l) % r;
        std::swap(g.perm[static_cast<size_t>(i)], g.perm[static_cast<size_t>(j)]);
        sum = sum + tensorRho(g, k, r);
      }
  return sum;
}

}  // namespace

Matrix<Rational> kappaMatrix(long r, long n, int k) {
  guardTensorSize(n, k);
  Matrix<Cyclotomic> sum = kappaSum(r, n, k, n);
  // Action convention: right-action matrices are transposes of the operator
  // matrices (this sum is over an inverse-closed set, hence symmetric, but
  // the transpose keeps the convention explicit).
  return collapseToRational(sum.transpose()).scaled(Rational(1, r));
}

Matrix<Rational> kappaHalfMatrix(long r, long n, int k) {
  guardTensorSize(n, k);
  Matrix<Cyclotomic> sum = kappaSum(r, n, k, n - 1);
  return collapseToRational(sum.transpose()).scaled(Rational(1, r));
}

namespace {

// Perfect matchings of {0..2k-1} as lists of pairs.
void perfectMatchings(std::vector<int>& pool,
                      std::vector<std::pair<int, int>>& current,
                      std::vector<std::vector<std::pair<int, int>>>& out) {
  if (pool.empty()) {
    out.push_back(current);
    return;
  }
  int a = pool.front();
  for (size_t idx = 1; idx < pool.size(); ++idx) {
    int b = pool[idx];
    std::vector<int> rest;
    for (size_t t = 1; t < pool.size(); ++t)
      if (t != idx) rest.push_back(pool[t]);
    current.emplace_back(a, b);
    perfectMatchings(rest, current, out);
    current.pop_back();
  }
}

}  // namespace

Matrix<Rational> zMatrix(int k) {
  const long n = 2 * k;
  guardTensorSize(n, k);
  const long N = powli(n, k);
  // Elements: a fixed-point-free involution (product of k disjoint
  // transpositions) with signs +-1 per point, equal on the two points of each
  // pair. Class split: even vs odd count of negative pairs.
  std::vector<int> pool(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
  std::vector<std::pair<int, int>> current;
  std::vector<std::vector<std::pair<int, int>>> matchings;
  perfectMatchings(pool, current, matchings);
  Matrix<Cyclotomic> sum(N, N, Cyclotomic(2));
  for (const auto& matching : matchings) {
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
      GroupElement g = groupIdentity(static_cast<int>(n));
      int negPairs = 0;
      for (size_t t = 0; t < matching.size(); ++t) {
        auto [a, b] = matching[t];
        std::swap(g.perm[static_cast<size_t>(a)], g.perm[static_cast<size_t>(b)]);
        if (mask >> t & 1) {
          g.exps[static_cast<size_t>(a)] = 1;
          g.exps[static_cast<size_t>(b)] = 1;
          ++negPairs;
        }
      }
      Matrix<Cyclotomic> term = tensorRho(g, k, 2);
      sum = (negPairs % 2 == 0) ? sum + term : sum - term;
    }
  }
  return collapseToRational(sum.transpose());
}

std::vector<std::pair<Rational, long>> eigMultiplicities(
    const Matrix<Rational>& A, const std::vector<Rational>& candidates) {
  if (A.rows() != A.cols()) throw DimensionError("eigenvalues of a non-square matrix");
  std::vector<std::pair<Rational, long>> out;
  for (const Rational& c : candidates) {
    Matrix<Rational> shifted =
        A - Matrix<Rational>::identity(A.rows(), Rational(1)).scaled(c);
    out.emplace_back(c, shifted.nullity());
  }
  return out;
}

}  // namespace tanabe
