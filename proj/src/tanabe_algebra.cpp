#include "tanabe/tanabe_algebra.hpp"

#include <algorithm>

namespace tanabe {

namespace {

long mod(long a, long m) {
  long v = a % m;
  return v < 0 ? v + m : v;
}

}  // namespace

void AlgebraParams::validate() const {
  if (r < 1 || p < 1 || n < 1)
    throw DimensionError("algebra parameters must be positive");
  if (r % p != 0) throw DimensionError("p must divide r");
}

DiagramClass classify(const Diagram& d, const AlgebraParams& params) {
  params.validate();
  const long r = params.r, m = params.m(), n = params.n;
  bool allModR = true, allModM = true;
  bool anyNotModR = false, allNotModR = true;
  bool diffsAgreeModR = true;
  std::optional<long> commonDiff;
  for (const auto& b : d.blocks()) {
    long diff = d.topCount(b) - d.bottomCount(b);
    if (mod(diff, r) != 0) {
      allModR = false;
      anyNotModR = true;
    } else {
      allNotModR = false;
    }
    if (mod(diff, m) != 0) allModM = false;
    if (!commonDiff)
      commonDiff = mod(diff, r);
    else if (mod(diff, r) != *commonDiff)
      diffsAgreeModR = false;
  }
  if (allModR) return DiagramClass::Pi;
  if (d.blockCount() == n && allModM && allNotModR && diffsAgreeModR)
    return DiagramClass::Lambda;
  if (d.blockCount() > n && allModM && anyNotModR) return DiagramClass::Theta;
  return DiagramClass::Outside;
}

std::string className(DiagramClass c) {
  switch (c) {
    case DiagramClass::Pi: return "Pi";
    case DiagramClass::Lambda: return "Lambda";
    case DiagramClass::Theta: return "Theta";
    case DiagramClass::Outside: return "Outside";
  }
  return "?";
}

TanabeBasis tanabeBasis(const Level& level, const AlgebraParams& params) {
  params.validate();
  TanabeBasis out;
  for (const Diagram& d : enumerateDiagrams(level)) {
    DiagramClass c = classify(d, params);
    if (c == DiagramClass::Outside) continue;
    out.full.push_back(d);
    if ((c == DiagramClass::Pi && d.blockCount() <= params.n) ||
        c == DiagramClass::Lambda)
      out.pi.push_back(d);
  }
  return out;
}

ClosureReport closureCheck(const Level& level, const AlgebraParams& params) {
  TanabeBasis basis = tanabeBasis(level, params);
  std::set<Diagram> span(basis.full.begin(), basis.full.end());
  ClosureReport report;
  for (const Diagram& d1 : basis.full)
    for (const Diagram& d2 : basis.full) {
      DiagramVector prod =
          multiplyX(DiagramVector::unit(d1, BasisKind::X),
                    DiagramVector::unit(d2, BasisKind::X), params.n);
      for (const auto& [d, c] : prod.terms()) {
        if (span.count(d)) continue;
        report.closed = false;
        report.offendingPair = {d1, d2};
        report.strayDiagram = d;
        return report;
      }
    }
  return report;
}

Diagram blockWithStrands(int K, const std::set<int>& S) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> big;
  for (int t : S) {
    if (t < 1 || t > K) throw DimensionError("block label out of range");
    big.push_back(t);
    big.push_back(K + t);
  }
  if (!big.empty()) blocks.push_back(std::move(big));
  for (int t = 1; t <= K; ++t)
    if (!S.count(t)) blocks.push_back({t, K + t});
  return Diagram(K, std::move(blocks));
}

Diagram splitBlockWithStrands(int K, const std::set<int>& S,
                              const std::set<int>& I) {
  std::vector<int> inner, outer;
  for (int t : S) {
    (I.count(t) ? inner : outer).push_back(t);
    (I.count(K + t) ? inner : outer).push_back(K + t);
  }
  for (int v : I)
    if (!S.count(v <= K ? v : v - K))
      throw DimensionError("split set must live on the joined block");
  std::vector<std::vector<int>> blocks;
  if (!inner.empty()) blocks.push_back(std::move(inner));
  if (!outer.empty()) blocks.push_back(std::move(outer));
  for (int t = 1; t <= K; ++t)
    if (!S.count(t)) blocks.push_back({t, K + t});
  return Diagram(K, std::move(blocks));
}

namespace {

// Adds to `out` the contribution of one outer subset S: the sign-weighted
// block term plus the inner alternating sum over splits I of S and its
// mirror. `requireLastJoined` restricts splits to those keeping the last
// strand's two vertices together (the half-level constraint when the last
// point belongs to S).
void addOuterTerm(DiagramVector& out, int K, const std::set<int>& S, long r,
                  long n, bool requireLastJoined) {
  const Diagram bS = blockWithStrands(K, S);
  const long sign = (S.size() % 2 == 0) ? 1 : -1;
  out.add(bS, Rational(sign) * Rational(n - 1));
  // Enumerate subsets I of S and its mirror by bitmask over 2|S| positions.
  std::vector<int> verts;
  for (int t : S) {
    verts.push_back(t);
    verts.push_back(K + t);
  }
  const size_t nb = verts.size();
  // A split I and its complement within S∪S' produce the same diagram with
  // the same sign, so the pair contributes once: fix the first vertex on the
  // complement side to pick one representative per pair.
  for (unsigned long mask = 0; mask < (1UL << nb); mask += 2) {
    std::set<int> I;
    long top = 0, bottom = 0;
    for (size_t i = 0; i < nb; ++i)
      if (mask >> i & 1) {
        I.insert(verts[i]);
        (verts[i] <= K ? top : bottom) += 1;
      }
    if (mod(top - bottom, r) != 0) continue;
    // At half levels the last point's two vertices must fall on the same side
    // of the split, so its strand stays joined.
    if (requireLastJoined && I.count(K) != I.count(2 * K)) continue;
    Diagram dI = splitBlockWithStrands(K, S, I);
    if (dI == bS) continue;
    long innerSign = (mod(top - bottom, 2) == 0) ? 1 : -1;
    Rational c = Rational(sign) * Rational(innerSign);
    out.add(dI, c);
    out.add(bS, -c);
  }
}

}  // namespace

DiagramVector buildZ(const Level& level, long r, long n) {
  if (r < 1 || n < 1) throw DimensionError("buildZ needs positive r, n");
  const int K = level.ambientSize();
  const int k = level.twice() / 2;  // level floor: subsets range over 1..k
  DiagramVector out(K, BasisKind::Diagram);
  if (K > 0) out.add(Diagram::identity(K), Rational(binomial(n, 2)));
  else {
    out.add(Diagram(0, {}), Rational(binomial(n, 2)));
    return out;
  }
  // Subsets S of {1..k} (nonempty); at half levels additionally the subsets
  // containing the last point K = k+1, whose splits must keep its strand
  // joined.
  for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
    std::set<int> S;
    for (int t = 0; t < k; ++t)
      if (mask >> t & 1) S.insert(t + 1);
    addOuterTerm(out, K, S, r, n, /*requireLastJoined=*/false);
  }
  if (level.isHalf()) {
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
      std::set<int> S;
      for (int t = 0; t < k; ++t)
        if (mask >> t & 1) S.insert(t + 1);
      S.insert(K);
      addOuterTerm(out, K, S, r, n, /*requireLastJoined=*/true);
    }
  }
  return out;
}

DiagramVector buildM(const Level& level, long r, long n) {
  const int twoL = level.twice();
  if (twoL < 1) throw DimensionError("Jucys-Murphy levels start at 1/2");
  if (twoL == 1) {
    DiagramVector v(1, BasisKind::Diagram);
    v.add(Diagram::identity(1), 1);
    return v;
  }
  DiagramVector zHere = buildZ(level, r, n);
  Level below = Level::fromTwice(twoL - 1);
  DiagramVector zBelow = buildZ(below, r, n);
  if (below.ambientSize() < level.ambientSize())
    zBelow = embedIntoNext(zBelow);
  return zHere - zBelow;
}

DiagramVector buildM22(int k) {
  std::vector<std::vector<int>> blocks;
  for (int v = 1; v <= 2 * k; ++v) blocks.push_back({v});
  DiagramVector v(k, BasisKind::X);
  v.add(Diagram(k, std::move(blocks)), 1);
  return v;
}

bool commutesModKernel(const DiagramVector& a, const DiagramVector& b,
                       long n) {
  DiagramVector diff = multiplyX(a, b, n) - multiplyX(b, a, n);
  // x-elements on more than n blocks act as zero on tensor space, so they
  // span the kernel of the operator realization; only surviving terms count.
  for (const auto& [d, c] : diff.terms())
    if (d.blockCount() <= n && !isZero(c)) return false;
  return true;
}

bool isCentral(const DiagramVector& v, const Level& level,
               const AlgebraParams& params) {
  DiagramVector vx = changeBasis(v, BasisKind::X);
  for (const Diagram& d : tanabeBasis(level, params).pi) {
    DiagramVector xd = DiagramVector::unit(d, BasisKind::X);
    if (!commutesModKernel(vx, xd, params.n)) return false;
  }
  return true;
}

}  // namespace tanabe
