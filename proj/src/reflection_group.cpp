#include "tanabe/reflection_group.hpp"

#include <numeric>
#include <set>

#include "tanabe/tensor_action.hpp"

namespace tanabe {

namespace {

long powli(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

GroupElement groupIdentity(int n) {
  GroupElement g;
  g.exps.assign(static_cast<size_t>(n), 0);
  g.perm.resize(static_cast<size_t>(n));
  std::iota(g.perm.begin(), g.perm.end(), 0);
  return g;
}

GroupElement groupMultiply(const GroupElement& a, const GroupElement& b,
                           long r) {
  // Composition as matrices: (ab) v_i = a (zeta^{b.exps[i]} v_{b.perm[i]})
  //                                   = zeta^{b.exps[i] + a.exps[b.perm[i]]}
  //                                     v_{a.perm[b.perm[i]]}.
  const size_t n = a.exps.size();
  if (b.exps.size() != n) throw DimensionError("group element size mismatch");
  GroupElement out;
  out.exps.resize(n);
  out.perm.resize(n);
  for (size_t i = 0; i < n; ++i) {
    size_t mid = static_cast<size_t>(b.perm[i]);
    out.exps[i] = (b.exps[i] + a.exps[mid]) % r;
    out.perm[i] = a.perm[mid];
  }
  return out;
}

std::vector<GroupElement> reflectionGenerators(const AlgebraParams& params,
                                               bool fixLast) {
  params.validate();
  const int n = static_cast<int>(params.n);
  const long r = params.r, p = params.p;
  std::vector<GroupElement> gens;
  const int movable = fixLast ? n - 1 : n;  // points the permutations may move
  for (int i = 0; i + 1 < movable; ++i) {
    GroupElement s = groupIdentity(n);
    std::swap(s.perm[static_cast<size_t>(i)], s.perm[static_cast<size_t>(i + 1)]);
    gens.push_back(std::move(s));
  }
  if (r >= 2) {
    if (p < r) {
      GroupElement t = groupIdentity(n);
      t.exps[0] = p % r;
      gens.push_back(std::move(t));
    }
    if (n >= 2) {
      GroupElement h = groupIdentity(n);
      h.exps[0] = 1;
      h.exps[1] = r - 1;
      gens.push_back(std::move(h));
      if (fixLast && n >= 3) {
        // Diagonal generator reaching the pinned last coordinate.
        GroupElement hLast = groupIdentity(n);
        hLast.exps[0] = 1;
        hLast.exps[static_cast<size_t>(n - 1)] = r - 1;
        gens.push_back(std::move(hLast));
      }
    }
  }
  if (gens.empty()) gens.push_back(groupIdentity(n));
  return gens;
}

std::vector<GroupElement> groupClosure(const std::vector<GroupElement>& gens,
                                       long r, long maxSize) {
  std::set<GroupElement> seen;
  std::vector<GroupElement> frontier;
  if (gens.empty()) throw DimensionError("closure of an empty generator set");
  GroupElement id = groupIdentity(static_cast<int>(gens.front().exps.size()));
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const GroupElement& g : frontier)
      for (const GroupElement& s : gens) {
        GroupElement h = groupMultiply(s, g, r);
        if (seen.insert(h).second) {
          if (static_cast<long>(seen.size()) > maxSize)
            throw GuardError("group closure guard exceeded");
          next.push_back(std::move(h));
        }
      }
    frontier = std::move(next);
  }
  return std::vector<GroupElement>(seen.begin(), seen.end());
}

Matrix<Cyclotomic> rho(const GroupElement& g, long r) {
  const long n = static_cast<long>(g.exps.size());
  Matrix<Cyclotomic> m(n, n, Cyclotomic(static_cast<int>(r)));
  for (long i = 0; i < n; ++i)
    m.at(g.perm[static_cast<size_t>(i)], i) =
        Cyclotomic::zeta(static_cast<int>(r), g.exps[static_cast<size_t>(i)]);
  return m;
}

namespace {

Matrix<Cyclotomic> kron(const Matrix<Cyclotomic>& a,
                        const Matrix<Cyclotomic>& b, long r) {
  Matrix<Cyclotomic> m(a.rows() * b.rows(), a.cols() * b.cols(),
                       Cyclotomic(static_cast<int>(r)));
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) {
      if (isZero(a.at(i, j))) continue;
      for (long k = 0; k < b.rows(); ++k)
        for (long l = 0; l < b.cols(); ++l)
          m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return m;
}

}  // namespace

Matrix<Cyclotomic> tensorRho(const GroupElement& g, int k, long r) {
  Matrix<Cyclotomic> base = rho(g, r);
  Matrix<Cyclotomic> m =
      Matrix<Cyclotomic>::identity(1, Cyclotomic::fromRational(static_cast<int>(r), 1));
  for (int i = 0; i < k; ++i) m = kron(m, base, r);
  return m;
}

Matrix<Cyclotomic> tensorRhoHalf(const GroupElement& g, int k, long r) {
  const size_t n = g.exps.size();
  if (g.perm[n - 1] != static_cast<int>(n - 1))
    throw DimensionError("half-level action needs the last point fixed");
  return tensorRho(g, k, r)
      .scaled(Cyclotomic::zeta(static_cast<int>(r), g.exps[n - 1]));
}

namespace {

// Monomial structure of a matrix: for each column, the unique nonzero row and
// its scalar.
struct MonomialForm {
  std::vector<long> row;
  std::vector<Cyclotomic> scalar;
};

MonomialForm monomialForm(const Matrix<Cyclotomic>& m) {
  MonomialForm f;
  f.row.assign(static_cast<size_t>(m.cols()), -1);
  for (long j = 0; j < m.cols(); ++j) {
    for (long i = 0; i < m.rows(); ++i)
      if (!isZero(m.at(i, j))) {
        if (f.row[static_cast<size_t>(j)] >= 0)
          throw DimensionError("matrix is not monomial");
        f.row[static_cast<size_t>(j)] = i;
        f.scalar.push_back(m.at(i, j));
      }
    if (f.row[static_cast<size_t>(j)] < 0)
      throw DimensionError("matrix is not monomial");
  }
  return f;
}

}  // namespace

long centralizerDim(const Level& level, const AlgebraParams& params) {
  params.validate();
  const int k = level.twice() / 2;  // tensor factors acted on
  const long N = powli(params.n, k);
  if (N * N > 2000 && !guardOverrideActive())
    throw GuardError("centralizer solve guard exceeded (n^2k > 2000); set "
                     "TANABE_GUARD_OVERRIDE to lift");
  std::vector<GroupElement> gens =
      reflectionGenerators(params, /*fixLast=*/level.isHalf());
  // Unknown operator F (N x N); for each generator with monomial action R the
  // commutation R F = F R gives, per (a, b), a two-term linear equation.
  std::vector<SparseRow<Cyclotomic>> rows;
  for (const GroupElement& g : gens) {
    Matrix<Cyclotomic> R = level.isHalf()
                               ? tensorRhoHalf(g, k, params.r)
                               : tensorRho(g, k, params.r);
    MonomialForm f = monomialForm(R);
    std::vector<long> colOfRow(static_cast<size_t>(N));  // inverse of f.row
    for (long c = 0; c < N; ++c) colOfRow[static_cast<size_t>(f.row[static_cast<size_t>(c)])] = c;
    for (long a = 0; a < N; ++a) {
      long c = colOfRow[static_cast<size_t>(a)];  // R[a][c] nonzero
      for (long b = 0; b < N; ++b) {
        // (RF)[a][b] = R[a][c] F[c][b]; (FR)[a][b] = F[a][row(b)] R[row(b)][b].
        long rb = f.row[static_cast<size_t>(b)];
        SparseRow<Cyclotomic> eq;
        long u1 = c * N + b, u2 = a * N + rb;
        Cyclotomic s1 = f.scalar[static_cast<size_t>(c)];
        Cyclotomic s2 = -f.scalar[static_cast<size_t>(b)];
        if (u1 == u2) {
          Cyclotomic s = s1 + s2;
          if (!isZero(s)) eq.emplace_back(u1, s);
        } else if (u1 < u2) {
          eq.emplace_back(u1, s1);
          eq.emplace_back(u2, s2);
        } else {
          eq.emplace_back(u2, s2);
          eq.emplace_back(u1, s1);
        }
        if (!eq.empty()) rows.push_back(std::move(eq));
      }
    }
  }
  return N * N - sparseRank(std::move(rows));
}

SchurWeylReport verifySchurWeyl(const Level& level,
                                const AlgebraParams& params) {
  params.validate();
  SchurWeylReport report;
  const int k = level.twice() / 2;
  const long n = params.n;
  TanabeBasis basis = tanabeBasis(level, params);
  // Images of the surviving orbit basis elements.
  std::vector<Matrix<Rational>> images;
  for (const Diagram& d : basis.pi) {
    DiagramVector xd = DiagramVector::unit(d, BasisKind::X);
    images.push_back(level.isHalf() ? phiHalfVector(xd, n) : phiVector(xd, n));
  }
  report.survivingBasis = static_cast<long>(basis.pi.size());
  // (i) the group action commutes with every image.
  std::vector<GroupElement> gens =
      reflectionGenerators(params, /*fixLast=*/level.isHalf());
  report.actionsCommute = true;
  for (const GroupElement& g : gens) {
    Matrix<Cyclotomic> R = level.isHalf() ? tensorRhoHalf(g, k, params.r)
                                          : tensorRho(g, k, params.r);
    Matrix<Cyclotomic> Rt = R.transpose();
    for (const Matrix<Rational>& img : images) {
      Matrix<Cyclotomic> phi(img.rows(), img.cols(),
                             Cyclotomic(static_cast<int>(params.r)));
      for (long i = 0; i < img.rows(); ++i)
        for (long j = 0; j < img.cols(); ++j)
          phi.at(i, j) =
              Cyclotomic::fromRational(static_cast<int>(params.r), img.at(i, j));
      // Right-action matrices commute with the group exactly when they
      // commute with the transposed representation matrices.
      if (!(Rt * phi == phi * Rt)) {
        report.actionsCommute = false;
        break;
      }
    }
    if (!report.actionsCommute) break;
  }
  // (ii) linear independence of the images.
  std::vector<SparseRow<Rational>> flat;
  for (const Matrix<Rational>& img : images) {
    SparseRow<Rational> row;
    for (long i = 0; i < img.rows(); ++i)
      for (long j = 0; j < img.cols(); ++j)
        if (!isZero(img.at(i, j))) row.emplace_back(i * img.cols() + j, img.at(i, j));
    flat.push_back(std::move(row));
  }
  report.imagesIndependent =
      sparseRank(std::move(flat)) == report.survivingBasis;
  // (iii) the centralizer dimension equals the surviving basis size.
  report.centralizer = centralizerDim(level, params);
  report.dimensionMatch = report.centralizer == report.survivingBasis;
  // (iv) kernel exactness: the image vanishes exactly for diagrams with more
  // than n blocks.
  report.kernelExact = true;
  for (const Diagram& d : basis.full) {
    DiagramVector xd = DiagramVector::unit(d, BasisKind::X);
    Matrix<Rational> img =
        level.isHalf() ? phiHalfVector(xd, n) : phiVector(xd, n);
    if (img.isZeroMatrix() != (d.blockCount() > n)) {
      report.kernelExact = false;
      break;
    }
  }
  return report;
}

}  // namespace tanabe
