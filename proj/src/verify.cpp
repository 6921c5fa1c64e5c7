#include "tanabe/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tanabe/bratteli.hpp"
#include "tanabe/reflection_group.hpp"
#include "tanabe/tensor_action.hpp"

namespace tanabe {

namespace {

VerifyRecord rec(std::string tag, std::string grid, bool pass,
                 std::string detail = "") {
  return VerifyRecord{std::move(tag), std::move(grid), pass, std::move(detail)};
}

std::string gridStr(long r, long p, long n) {
  std::ostringstream os;
  os << "r=" << r << ",p=" << p << ",n=" << n;
  return os.str();
}

// The fifteen diagrams on two points, in the fixed reference order.
std::vector<Diagram> twoPointDiagrams() {
  static const char* texts[] = {
      "{1};{2};{1'};{2'}", "{1,2};{1'};{2'}", "{1,1'};{2};{2'}",
      "{1,2'};{2};{1'}",   "{2,1'};{1};{2'}", "{2,2'};{1};{1'}",
      "{1',2'};{1};{2}",   "{1,2};{1',2'}",   "{1,2'};{2,1'}",
      "{1,1'};{2,2'}",     "{1,1',2'};{2}",   "{1,2,1'};{2'}",
      "{1,2,2'};{1'}",     "{2,1',2'};{1}",   "{1,2,1',2'}"};
  std::vector<Diagram> out;
  for (const char* t : texts) out.push_back(Diagram::parse(t));
  return out;
}

std::set<Diagram> pick(const std::vector<Diagram>& all,
                       std::initializer_list<int> indices) {
  std::set<Diagram> out;
  for (int i : indices) out.insert(all[static_cast<size_t>(i - 1)]);
  return out;
}

std::set<Diagram> ofClass(const std::vector<Diagram>& all, DiagramClass cls,
                          const AlgebraParams& params) {
  std::set<Diagram> out;
  for (const Diagram& d : all)
    if (classify(d, params) == cls) out.insert(d);
  return out;
}

const std::vector<std::pair<long, long>>& rpGrid() {
  static const std::vector<std::pair<long, long>> g = {
      {1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 3}, {4, 2}, {4, 4}};
  return g;
}

const std::vector<Level>& levelGrid() {
  static const std::vector<Level> g = {Level::integer(1), Level::half(1),
                                       Level::integer(2)};
  return g;
}

// Jucys-Murphy element at twice-level j, embedded into the algebra on k points.
DiagramVector jmAtAmbient(int twiceLevel, int k, long r, long n) {
  DiagramVector v = buildM(Level::fromTwice(twiceLevel), r, n);
  while (v.size() < k) v = embedIntoNext(v);
  return v;
}

long contentSum(const DiagramTuple& t) {
  long s = 0;
  for (const YoungDiagram& d : t)
    for (size_t i = 0; i < d.size(); ++i)
      for (int j = 0; j < d[i]; ++j) s += j - static_cast<long>(i);
  return s;
}

// Eigenvalue tuples of every root-to-endpoint path, grouped by endpoint node.
std::map<size_t, std::vector<std::vector<Rational>>> pathTuplesByNode(
    const BratteliTower& tower, int k) {
  std::map<size_t, std::vector<std::vector<Rational>>> byNode;
  std::vector<Rational> tuple;
  std::function<void(int, size_t)> walk = [&](int twice, size_t node) {
    if (twice == 2 * k) {
      byNode[node].push_back(tuple);
      return;
    }
    const TowerLevel& next = tower.levels[static_cast<size_t>(twice) + 1];
    for (const TowerEdge& e : next.edgesFromPrevious) {
      if (e.from != node) continue;
      Rational entry = next.level.isHalf()
                           ? (twice == 0 ? Rational(1) : Rational(-e.content))
                           : Rational(e.content);
      tuple.push_back(entry);
      walk(twice + 1, e.to);
      tuple.pop_back();
    }
  };
  walk(0, 0);
  return byNode;
}

// Joint nullity of {A_i - c_i I} via the stacked system.
long jointEigenspaceDim(const std::vector<Matrix<Rational>>& ops,
                        const std::vector<Rational>& values) {
  const long N = ops.front().rows();
  Matrix<Rational> stacked(N * static_cast<long>(ops.size()), N, Rational(0));
  for (size_t t = 0; t < ops.size(); ++t)
    for (long i = 0; i < N; ++i)
      for (long j = 0; j < N; ++j) {
        Rational v = ops[t].at(i, j);
        if (i == j) v -= values[t];
        stacked.at(static_cast<long>(t) * N + i, j) = v;
      }
  return stacked.nullity();
}

}  // namespace

std::vector<VerifyRecord> verifyDiagramExample() {
  std::vector<VerifyRecord> out;
  Diagram d1 = Diagram::parse("{1,2,1'};{3,5,3'};{4};{6,5'};{2',4'};{6'}");
  Diagram d2 = Diagram::parse("{1,5,2',3'};{2,4};{3};{6,6'};{1',4'};{5'}");
  CompositionResult comp = compose(d1, d2);
  Diagram expected =
      Diagram::parse("{1,2,6,2',3'};{3,5};{4};{1',4'};{5'};{6'}");
  out.push_back(rec("diagram-product", "six-point worked example",
                    comp.result == expected && comp.internalBlocks == 1,
                    "composite " + comp.result.str() + " with " +
                        std::to_string(comp.internalBlocks) +
                        " internal blocks"));
  // Text grammar round-trip on the same diagrams.
  bool roundTrip = Diagram::parse(d1.str()) == d1 &&
                   Diagram::parse(d2.str()) == d2 &&
                   Diagram::parse(expected.str()) == expected;
  out.push_back(rec("diagram-product", "text grammar round-trip", roundTrip));
  // Basis change round-trip and unitriangularity on all two-point diagrams.
  bool basisOk = true;
  for (const Diagram& d : enumerateDiagrams(Level::integer(2))) {
    DiagramVector unitD = DiagramVector::unit(d, BasisKind::Diagram);
    DiagramVector x = changeBasis(unitD, BasisKind::X);
    if (!(changeBasis(x, BasisKind::Diagram) == unitD)) basisOk = false;
    // d expands with coefficient one over exactly its coarsenings.
    std::vector<Diagram> cs = coarsenings(d);
    std::set<Diagram> expectedSupport(cs.begin(), cs.end());
    std::set<Diagram> support;
    for (const auto& [dd, c] : x.terms()) {
      support.insert(dd);
      if (c != 1) basisOk = false;
    }
    if (support != expectedSupport) basisOk = false;
  }
  out.push_back(rec("diagram-product", "basis change round-trip on two points",
                    basisOk));
  return out;
}

std::vector<VerifyRecord> verifyClassificationTables() {
  std::vector<VerifyRecord> out;
  std::vector<Diagram> all = twoPointDiagrams();
  auto check = [&](const std::string& what, long r, long p, long n,
                   DiagramClass cls, std::set<Diagram> expected) {
    std::set<Diagram> got = ofClass(all, cls, AlgebraParams{r, p, n});
    out.push_back(rec("classification", what + " at " + gridStr(r, p, n),
                      got == expected,
                      "expected " + std::to_string(expected.size()) +
                          " diagrams, got " + std::to_string(got.size())));
  };
  std::set<Diagram> allSet(all.begin(), all.end());
  check("congruent class, r=1", 1, 1, 2, DiagramClass::Pi, allSet);
  check("congruent class, r=2", 2, 1, 2, DiagramClass::Pi,
        pick(all, {8, 9, 10, 15}));
  for (long r : {3L, 4L, 5L})
    check("congruent class, r=" + std::to_string(r), r, 1, 2, DiagramClass::Pi,
          pick(all, {9, 10, 15}));
  check("balanced class", 2, 2, 2, DiagramClass::Lambda,
        pick(all, {11, 12, 13, 14}));
  check("excess class", 2, 2, 2, DiagramClass::Theta,
        pick(all, {1, 2, 3, 4, 5, 6, 7}));
  check("balanced class", 2, 2, 3, DiagramClass::Lambda, {});
  check("excess class", 2, 2, 3, DiagramClass::Theta, pick(all, {1}));
  check("balanced class", 2, 2, 4, DiagramClass::Lambda, pick(all, {1}));
  check("balanced class", 3, 3, 3, DiagramClass::Lambda, pick(all, {2, 7}));
  check("balanced class", 4, 2, 2, DiagramClass::Lambda, pick(all, {8}));
  check("balanced class", 4, 4, 2, DiagramClass::Lambda, pick(all, {8}));
  bool emptyHighOrder = true;
  for (long r = 5; r <= 8; ++r)
    for (long p = 1; p <= r; ++p) {
      if (r % p != 0) continue;
      for (long n = 1; n <= 6; ++n)
        if (!ofClass(all, DiagramClass::Lambda, AlgebraParams{r, p, n}).empty())
          emptyHighOrder = false;
    }
  out.push_back(rec("classification",
                    "balanced class empty for orders above four on two points",
                    emptyHighOrder));
  return out;
}

std::vector<VerifyRecord> verifyProductOracle(
    const ProductPerturbation& perturb) {
  std::vector<VerifyRecord> out;
  const std::vector<long> ns = {2, 3, 4, 7};
  auto checkPair = [&](const Diagram& d1, const Diagram& d2, long n,
                       bool applyPerturb) {
    DiagramVector x1 = DiagramVector::unit(d1, BasisKind::X);
    DiagramVector x2 = DiagramVector::unit(d2, BasisKind::X);
    DiagramVector prod = multiplyX(x1, x2, n);
    if (applyPerturb && perturb) perturb(prod);
    DiagramVector oracle = changeBasis(
        multiplyDiagram(changeBasis(x1, BasisKind::Diagram),
                        changeBasis(x2, BasisKind::Diagram), n),
        BasisKind::X);
    return prod == oracle;
  };
  std::vector<Diagram> a2 = enumerateDiagrams(Level::integer(2));
  bool first = true;
  for (long n : ns) {
    bool ok = true;
    std::string bad;
    for (const Diagram& d1 : a2)
      for (const Diagram& d2 : a2) {
        if (!checkPair(d1, d2, n, first)) {
          ok = false;
          if (bad.empty()) bad = d1.str() + " times " + d2.str();
        }
        first = false;
      }
    out.push_back(rec("product-oracle",
                      "all two-point pairs, n=" + std::to_string(n), ok,
                      ok ? "" : "first mismatch at " + bad));
  }
  std::vector<Diagram> a3 = enumerateDiagrams(Level::integer(3));
  std::mt19937 rng(20260826);
  std::uniform_int_distribution<size_t> dist(0, a3.size() - 1);
  std::vector<std::pair<size_t, size_t>> pairs;
  for (int i = 0; i < 500; ++i) pairs.emplace_back(dist(rng), dist(rng));
  for (long n : ns) {
    bool ok = true;
    std::string bad;
    for (auto [i, j] : pairs)
      if (!checkPair(a3[i], a3[j], n, false)) {
        ok = false;
        if (bad.empty()) bad = a3[i].str() + " times " + a3[j].str();
      }
    out.push_back(rec("product-oracle",
                      "500 random three-point pairs, n=" + std::to_string(n),
                      ok, ok ? "" : "first mismatch at " + bad));
  }
  return out;
}

std::vector<VerifyRecord> verifyClosureGrid() {
  std::vector<VerifyRecord> out;
  for (auto [r, p] : rpGrid())
    for (long n : {2L, 3L, 4L})
      for (const Level& level : levelGrid()) {
        ClosureReport report = closureCheck(level, AlgebraParams{r, p, n});
        std::string detail;
        if (!report.closed)
          detail = "product of " + report.offendingPair->first.str() +
                   " and " + report.offendingPair->second.str() +
                   " leaves the span at " + report.strayDiagram->str();
        out.push_back(rec("closure",
                          gridStr(r, p, n) + ",level=" + level.str(),
                          report.closed, detail));
      }
  return out;
}

std::vector<VerifyRecord> verifySchurWeylGrid() {
  std::vector<VerifyRecord> out;
  for (auto [r, p] : rpGrid())
    for (long n : {2L, 3L, 4L})
      for (const Level& level : levelGrid()) {
        SchurWeylReport report = verifySchurWeyl(level, AlgebraParams{r, p, n});
        std::ostringstream os;
        os << "commute=" << report.actionsCommute
           << " independent=" << report.imagesIndependent
           << " centralizer=" << report.centralizer
           << " surviving=" << report.survivingBasis
           << " kernel=" << report.kernelExact;
        out.push_back(rec("schur-weyl",
                          gridStr(r, p, n) + ",level=" + level.str(),
                          report.ok(), os.str()));
      }
  return out;
}

std::vector<VerifyRecord> verifyTowerFigures() {
  std::vector<VerifyRecord> out;
  {
    AlgebraParams params{2, 2, 4};
    BratteliTower tower = buildTower(params, 2);
    const long m = params.m(), p = params.p;
    bool sizesOk = tower.levels.size() == 5 &&
                   tower.levels[0].nodes.size() == 1 &&
                   tower.levels[1].nodes.size() == 1 &&
                   tower.levels[2].nodes.size() == 1 &&
                   tower.levels[3].nodes.size() == 2 &&
                   tower.levels[4].nodes.size() == 5;
    out.push_back(rec("tower", "two-color tower on four boxes: level sizes",
                      sizesOk));
    // Expected level-two node set.
    auto intNode = [&](DiagramTuple t, long delta) {
      DiagramTuple canon = canonicalNecklace(t, m, p);
      ShiftOrbit orbit = shiftOrbit(canon, m, p);
      return TowerNode{canon, 0, delta, orbit.u};
    };
    std::set<TowerNode> expected = {
        intNode({{2}, {2}}, 0), intNode({{2}, {2}}, 1),
        intNode({{2}, {1, 1}}, 0), intNode({{4}, {}}, 0),
        intNode({{3, 1}, {}}, 0)};
    std::set<TowerNode> got(tower.levels[4].nodes.begin(),
                            tower.levels[4].nodes.end());
    bool pathsOk = true;
    for (const Integer& c : tower.levels[4].pathCounts)
      if (c != 1) pathsOk = false;
    out.push_back(rec("tower", "two-color tower on four boxes: level-two nodes",
                      expected == got && pathsOk));
    DimsTable table = dims(tower, Level::integer(2));
    out.push_back(rec("tower",
                      "two-color tower on four boxes: checksums",
                      table.sumDimTimesPaths == 16 && table.sumPathsSquared == 5,
                      "sum dim*paths = " + table.sumDimTimesPaths.get_str() +
                          ", sum paths^2 = " + table.sumPathsSquared.get_str()));
  }
  {
    AlgebraParams params{6, 2, 6};
    BratteliTower tower = buildTower(params, 3);
    // The half-level node carrying tuple ((4),(1),-,-,-,-) colored at the
    // second component should collect exactly two paths at level 5/2.
    DiagramTuple t(6);
    t[0] = {4};
    t[1] = {1};
    ColoredNecklace cn = canonicalColored(t, 2, params.m(), params.p);
    const TowerLevel& lvl = tower.levels[5];
    Integer paths = -1;
    for (size_t i = 0; i < lvl.nodes.size(); ++i)
      if (lvl.nodes[i].tuple == cn.tuple && lvl.nodes[i].color == cn.color)
        paths = lvl.pathCounts[i];
    out.push_back(rec("tower", "six-color tower: marked half-level node",
                      paths == 2, "paths = " + paths.get_str()));
  }
  return out;
}

std::vector<VerifyRecord> verifyDimensionIdentities() {
  std::vector<VerifyRecord> out;
  for (auto [r, p] : rpGrid())
    for (long n : {2L, 3L, 4L}) {
      AlgebraParams params{r, p, n};
      int kmax = static_cast<int>(n / 2);
      BratteliTower tower = buildTower(params, kmax);
      for (int twice = 1; twice <= 2 * kmax; ++twice) {
        Level level = Level::fromTwice(twice);
        DimsTable table = dims(tower, level);
        Integer expectedDim = 1;
        for (int i = 0; i < twice / 2; ++i) expectedDim *= n;
        bool dimOk = table.sumDimTimesPaths == expectedDim;
        bool squareOk = true;
        std::string extra;
        if (n >= 2 * level.ambientSize()) {
          long basisSize = static_cast<long>(
              tanabeBasis(level, params).pi.size());
          squareOk = table.sumPathsSquared == basisSize;
          extra = ", sum paths^2 = " + table.sumPathsSquared.get_str() +
                  " vs surviving basis " + std::to_string(basisSize);
        }
        out.push_back(rec("dimensions",
                          gridStr(r, p, n) + ",level=" + level.str(),
                          dimOk && squareOk,
                          "sum dim*paths = " + table.sumDimTimesPaths.get_str() +
                              " vs " + expectedDim.get_str() + extra));
      }
    }
  return out;
}

std::vector<VerifyRecord> verifyCentralElements() {
  std::vector<VerifyRecord> out;
  for (long r : {1L, 2L, 3L})
    for (long n : {2L, 3L, 4L}) {
      for (int twice = 1; twice <= 4; ++twice) {
        Level level = Level::fromTwice(twice);
        DiagramVector z = buildZ(level, r, n);
        int k = twice / 2;
        bool opOk;
        if (level.isHalf())
          opOk = phiHalfVector(z, n) == kappaHalfMatrix(r, n, k);
        else
          opOk = phiVector(z, n) == kappaMatrix(r, n, k);
        out.push_back(rec("central-elements",
                          "r=" + std::to_string(r) + ",n=" + std::to_string(n) +
                              ",level=" + level.str() + ": pair-sum action",
                          opOk));
        for (long p : std::set<long>{1, r}) {
          bool central = isCentral(z, level, AlgebraParams{r, p, n});
          out.push_back(rec("central-elements",
                            gridStr(r, p, n) + ",level=" + level.str() +
                                ": centrality",
                            central));
        }
      }
      // The family of level differences commutes pairwise as operators.
      {
        std::vector<DiagramVector> family;
        for (int twice = 1; twice <= 4; ++twice)
          family.push_back(
              changeBasis(jmAtAmbient(twice, 2, r, n), BasisKind::X));
        bool commuteOk = true;
        for (size_t i = 0; i < family.size() && commuteOk; ++i)
          for (size_t j = i + 1; j < family.size() && commuteOk; ++j)
            commuteOk = commutesModKernel(family[i], family[j], n);
        out.push_back(rec("central-elements",
                          "r=" + std::to_string(r) + ",n=" + std::to_string(n) +
                              ": level differences pairwise commute",
                          commuteOk));
      }
      // Spectrum containment at integer levels reachable by the tower.
      for (int k = 1; 2 * k <= n && k <= 2; ++k) {
        BratteliTower tower = buildTower(AlgebraParams{r, 1, n}, k);
        std::set<Rational> candidates;
        for (const TowerNode& node :
             tower.levels[static_cast<size_t>(2 * k)].nodes)
          candidates.insert(Rational(contentSum(node.tuple)));
        Matrix<Rational> zOp = phiVector(buildZ(Level::integer(k), r, n), n);
        long total = 0;
        for (const auto& [c, mult] : eigMultiplicities(
                 zOp, std::vector<Rational>(candidates.begin(), candidates.end())))
          total += mult;
        Integer expected = 1;
        for (int i = 0; i < k; ++i) expected *= n;
        out.push_back(rec("central-elements",
                          "r=" + std::to_string(r) + ",n=" + std::to_string(n) +
                              ",k=" + std::to_string(k) +
                              ": spectrum from content sums",
                          Integer(total) == expected,
                          "covered " + std::to_string(total) + " of " +
                              expected.get_str()));
      }
    }
  return out;
}

std::vector<VerifyRecord> verifySpecialParameters() {
  std::vector<VerifyRecord> out;
  for (int k : {1, 2}) {
    const long n = 2 * k;
    const std::string label = "k=" + std::to_string(k);
    DiagramVector m22 = buildM22(k);
    Matrix<Rational> m22Op = phiVector(m22, n);
    // The extra element commutes with the whole level-difference family.
    bool commuteOk = true;
    for (int twice = 1; twice <= 2 * k && commuteOk; ++twice)
      commuteOk = commutesModKernel(
          m22, changeBasis(jmAtAmbient(twice, k, 2, n), BasisKind::X), n);
    out.push_back(rec("special-parameters",
                      label + ": commutes with the level differences",
                      commuteOk));
    // Class-sum difference matches up to the power-of-two normalization.
    Rational scale(1);
    for (int i = 0; i < k; ++i) scale /= 2;
    bool zOk = zMatrix(k).scaled(scale) == m22Op;
    out.push_back(rec("special-parameters",
                      label + ": class-sum difference action", zOk));
    // Spectrum {0, +k!, -k!} with the signed parts of equal positive size.
    Rational kf(factorial(k));
    auto mults = eigMultiplicities(m22Op, {Rational(0), kf, -kf});
    long total = mults[0].second + mults[1].second + mults[2].second;
    Integer full = 1;
    for (int i = 0; i < k; ++i) full *= n;
    bool spectrumOk = Integer(total) == full &&
                      mults[1].second == mults[2].second && mults[1].second > 0;
    out.push_back(rec("special-parameters", label + ": signed spectrum",
                      spectrumOk));
    // The appended eigenvalue separates the two twists of the doubled node.
    AlgebraParams params{2, 2, n};
    BratteliTower tower = buildTower(params, k);
    std::map<std::vector<Rational>, Integer> predicted =
        predictJMSpectrum(tower, k);
    std::vector<Matrix<Rational>> ops;
    std::vector<Rational> values;
    for (int twice = 1; twice <= 2 * k; ++twice)
      ops.push_back(phiVector(jmAtAmbient(twice, k, 2, n), n));
    ops.push_back(m22Op);
    // Locate the twisted pair: the two nodes share the same plain tuple, and
    // the appended eigenvalue of the extra operator tells them apart, each
    // half carrying the full group-side dimension of its node.
    const TowerLevel& top = tower.levels[static_cast<size_t>(2 * k)];
    DimsTable table = dims(tower, Level::integer(k));
    std::map<size_t, std::vector<std::vector<Rational>>> byNode =
        pathTuplesByNode(tower, k);
    bool splitOk = false;
    for (size_t i0 = 0; i0 < top.nodes.size(); ++i0) {
      if (top.nodes[i0].u != 2 || top.nodes[i0].delta != 0) continue;
      size_t i1 = top.nodes.size();
      for (size_t j = 0; j < top.nodes.size(); ++j)
        if (j != i0 && top.nodes[j].tuple == top.nodes[i0].tuple &&
            top.nodes[j].delta == 1)
          i1 = j;
      if (i1 == top.nodes.size()) break;
      const auto& t0 = byNode[i0];
      const auto& t1 = byNode[i1];
      if (t0.size() != 1 || t1.size() != 1 || t0[0] != t1[0]) break;
      std::vector<Rational> plus = t0[0], minus = t0[0], zero = t0[0];
      plus.push_back(kf);
      minus.push_back(-kf);
      zero.push_back(Rational(0));
      long dPlus = jointEigenspaceDim(ops, plus);
      long dMinus = jointEigenspaceDim(ops, minus);
      long dZero = jointEigenspaceDim(ops, zero);
      splitOk = Integer(dPlus) == table.rows[i0].irrepDim &&
                Integer(dMinus) == table.rows[i1].irrepDim && dPlus > 0 &&
                Integer(dPlus + dMinus + dZero) == predicted.at(t0[0]);
      break;
    }
    out.push_back(rec("special-parameters", label + ": twist separation",
                      splitOk));
  }
  return out;
}

std::vector<VerifyRecord> verifyJointSpectra() {
  std::vector<VerifyRecord> out;
  static const std::vector<std::pair<long, long>> grid = {
      {1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 3}};
  for (auto [r, p] : grid)
    for (long n : {2L, 3L, 4L})
      for (int k = 1; k <= 2 && 2 * k <= n; ++k) {
        AlgebraParams params{r, p, n};
        BratteliTower tower = buildTower(params, k);
        std::map<std::vector<Rational>, Integer> predicted =
            predictJMSpectrum(tower, k);
        std::vector<Matrix<Rational>> ops;
        for (int twice = 1; twice <= 2 * k; ++twice)
          ops.push_back(phiVector(jmAtAmbient(twice, k, r, n), n));
        bool ok = true;
        Integer covered = 0;
        for (const auto& [tuple, dim] : predicted) {
          long got = jointEigenspaceDim(ops, tuple);
          if (Integer(got) != dim) ok = false;
          covered += got;
        }
        Integer full = 1;
        for (int i = 0; i < k; ++i) full *= n;
        if (covered != full) ok = false;
        out.push_back(rec("joint-spectrum",
                          gridStr(r, p, n) + ",k=" + std::to_string(k), ok,
                          "covered " + covered.get_str() + " of " +
                              full.get_str() + " across " +
                              std::to_string(predicted.size()) + " tuples"));
      }
  return out;
}

std::vector<VerifyRecord> verifyAll(const std::string& only) {
  std::vector<VerifyRecord> all;
  auto append = [&](std::vector<VerifyRecord> v) {
    for (VerifyRecord& r : v) all.push_back(std::move(r));
  };
  append(verifyDiagramExample());
  append(verifyClassificationTables());
  append(verifyProductOracle());
  append(verifyClosureGrid());
  append(verifySchurWeylGrid());
  append(verifyTowerFigures());
  append(verifyDimensionIdentities());
  append(verifyCentralElements());
  append(verifySpecialParameters());
  append(verifyJointSpectra());
  if (only.empty()) return all;
  std::vector<VerifyRecord> filtered;
  for (VerifyRecord& r : all)
    if (r.tag.find(only) != std::string::npos) filtered.push_back(std::move(r));
  return filtered;
}

std::string recordsToJson(const std::vector<VerifyRecord>& records) {
  nlohmann::json j = nlohmann::json::array();
  for (const VerifyRecord& r : records)
    j.push_back({{"tag", r.tag},
                 {"grid", r.grid},
                 {"pass", r.pass},
                 {"detail", r.detail}});
  return j.dump(2);
}

}  // namespace tanabe
