// Command line front end: inspect bases, classify diagrams, multiply algebra
// elements, print branching towers and dimension tables, solve centralizer
// dimensions, predict and check Jucys-Murphy spectra, and run the full
// verification suite.
#include <iostream>

#include <CLI11.hpp>

#include "tanabe/bratteli.hpp"
#include "tanabe/reflection_group.hpp"
#include "tanabe/tensor_action.hpp"
#include "tanabe/verify.hpp"

namespace {

using namespace tanabe;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitGuardError = 3;

Level parseLevel(const std::string& text) {
  // Accepts "k", "k/2" (odd k), or "k+1/2".
  try {
    size_t plus = text.find("+1/2");
    if (plus != std::string::npos)
      return Level::half(std::stoi(text.substr(0, plus)));
    size_t slash = text.find('/');
    if (slash != std::string::npos) {
      if (text.substr(slash + 1) != "2")
        throw ParseError("level denominator must be 2");
      return Level::fromTwice(std::stoi(text.substr(0, slash)));
    }
    return Level::integer(std::stoi(text));
  } catch (const std::invalid_argument&) {
    throw ParseError("cannot parse level '" + text + "'");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Exact computations in diagram subalgebras attached to the "
               "complex reflection groups G(r,p,n)"};
  app.require_subcommand(1);
  long r = 1, p = 1, n = 2;
  std::string levelText = "1";
  int k = 1;
  auto addParams = [&](CLI::App* cmd, bool withLevel, bool withK = false) {
    cmd->add_option("--r", r, "color order r");
    cmd->add_option("--p", p, "index divisor p (must divide r)");
    cmd->add_option("--n", n, "number of points n");
    if (withLevel)
      cmd->add_option("--level", levelText, "level: k, k+1/2, or odd/2");
    if (withK) cmd->add_option("--k", k, "integer level k");
  };

  auto* basisCmd = app.add_subcommand("basis", "list the spanning diagrams");
  bool piOnly = false;
  addParams(basisCmd, true);
  basisCmd->add_flag("--surviving", piOnly,
                     "only the diagrams surviving the tensor action");

  auto* classifyCmd =
      app.add_subcommand("classify", "classify one diagram");
  std::string diagramText;
  addParams(classifyCmd, false);
  classifyCmd->add_option("diagram", diagramText, "diagram text")->required();

  auto* multiplyCmd =
      app.add_subcommand("multiply", "multiply two algebra elements");
  std::string lhsText, rhsText, basisName = "diagram";
  multiplyCmd->add_option("--n", n, "number of points n");
  multiplyCmd->add_option("--basis", basisName, "basis: diagram or x");
  multiplyCmd->add_option("lhs", lhsText, "left element")->required();
  multiplyCmd->add_option("rhs", rhsText, "right element")->required();

  auto* brattelCmd = app.add_subcommand("bratteli", "print the branching tower");
  bool asDot = false, asJson = false;
  addParams(brattelCmd, false, true);
  brattelCmd->add_flag("--dot", asDot, "Graphviz output");
  brattelCmd->add_flag("--json", asJson, "JSON output");

  auto* dimsCmd = app.add_subcommand("dims", "dimension table at a level");
  addParams(dimsCmd, true);

  auto* centCmd = app.add_subcommand(
      "centralizer-dim", "dimension of the tensor-space centralizer");
  addParams(centCmd, true);

  auto* jmCmd = app.add_subcommand(
      "jm-spectrum", "predicted and exact joint Jucys-Murphy spectra");
  addParams(jmCmd, false, true);

  auto* verifyCmd = app.add_subcommand("verify", "run the verification suite");
  std::string only;
  verifyCmd->add_option("--only", only, "filter records by tag substring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the error message
    return code == 0 ? 0 : kExitParseError;
  }

  if (basisCmd->parsed()) {
    AlgebraParams params{r, p, n};
    Level level = parseLevel(levelText);
    TanabeBasis basis = tanabeBasis(level, params);
    for (const Diagram& d : (piOnly ? basis.pi : basis.full))
      std::cout << d.str() << "  [" << className(classify(d, params)) << "]\n";
    return 0;
  }
  if (classifyCmd->parsed()) {
    AlgebraParams params{r, p, n};
    std::cout << className(classify(Diagram::parse(diagramText), params))
              << "\n";
    return 0;
  }
  if (multiplyCmd->parsed()) {
    BasisKind kind;
    if (basisName == "diagram")
      kind = BasisKind::Diagram;
    else if (basisName == "x")
      kind = BasisKind::X;
    else
      throw ParseError("unknown basis '" + basisName + "'");
    DiagramVector lhs = DiagramVector::parse(lhsText, kind);
    DiagramVector rhs = DiagramVector::parse(rhsText, kind);
    if (lhs.size() != rhs.size())
      throw ParseError("operands have different diagram sizes");
    DiagramVector prod = kind == BasisKind::Diagram
                             ? multiplyDiagram(lhs, rhs, n)
                             : multiplyX(lhs, rhs, n);
    std::cout << prod.str() << "\n";
    return 0;
  }
  if (brattelCmd->parsed()) {
    BratteliTower tower = buildTower(AlgebraParams{r, p, n}, k);
    if (asDot)
      std::cout << towerToDot(tower);
    else if (asJson)
      std::cout << towerToJson(tower) << "\n";
    else
      for (const TowerLevel& tl : tower.levels) {
        std::cout << "level " << tl.level.str() << ":\n";
        for (size_t i = 0; i < tl.nodes.size(); ++i)
          std::cout << "  " << tl.nodes[i].label()
                    << "  paths=" << tl.pathCounts[i].get_str() << "\n";
      }
    return 0;
  }
  if (dimsCmd->parsed()) {
    Level level = parseLevel(levelText);
    BratteliTower tower =
        buildTower(AlgebraParams{r, p, n}, level.ambientSize());
    DimsTable table = dims(tower, level);
    for (const DimsRow& row : table.rows)
      std::cout << row.label << "  irrepDim=" << row.irrepDim.get_str()
                << "  paths=" << row.pathCount.get_str() << "\n";
    std::cout << "sum dim*paths = " << table.sumDimTimesPaths.get_str()
              << "\nsum paths^2 = " << table.sumPathsSquared.get_str() << "\n";
    return 0;
  }
  if (centCmd->parsed()) {
    std::cout << centralizerDim(parseLevel(levelText), AlgebraParams{r, p, n})
              << "\n";
    return 0;
  }
  if (jmCmd->parsed()) {
    AlgebraParams params{r, p, n};
    BratteliTower tower = buildTower(params, k);
    auto predicted = predictJMSpectrum(tower, k);
    std::vector<Matrix<Rational>> ops;
    for (int twice = 1; twice <= 2 * k; ++twice) {
      DiagramVector v = buildM(Level::fromTwice(twice), r, n);
      while (v.size() < k) v = embedIntoNext(v);
      ops.push_back(phiVector(v, n));
    }
    bool allOk = true;
    for (const auto& [tuple, dim] : predicted) {
      const long N = ops.front().rows();
      Matrix<Rational> stacked(N * static_cast<long>(ops.size()), N,
                               Rational(0));
      for (size_t t = 0; t < ops.size(); ++t)
        for (long i = 0; i < N; ++i)
          for (long j = 0; j < N; ++j) {
            Rational v = ops[t].at(i, j);
            if (i == j) v -= tuple[t];
            stacked.at(static_cast<long>(t) * N + i, j) = v;
          }
      long got = stacked.nullity();
      std::cout << "(";
      for (size_t t = 0; t < tuple.size(); ++t)
        std::cout << (t ? "," : "") << tuple[t].get_str();
      std::cout << ")  predicted=" << dim.get_str() << "  exact=" << got
                << "\n";
      if (Integer(got) != dim) allOk = false;
    }
    if (!allOk) {
      std::cerr << "joint spectrum mismatch\n";
      return kExitVerifyFailure;
    }
    return 0;
  }
  if (verifyCmd->parsed()) {
    std::vector<VerifyRecord> records = verifyAll(only);
    std::cout << recordsToJson(records) << "\n";
    for (const VerifyRecord& rcd : records)
      if (!rcd.pass) return kExitVerifyFailure;
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const tanabe::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const tanabe::GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitGuardError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  }
}
