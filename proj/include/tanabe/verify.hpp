#pragma once
// End-to-end verification records tying the combinatorics, the algebra, the
// tensor action, the reflection groups, and the branching tower together.
#include <functional>
#include <string>
#include <vector>

#include "tanabe/diagram_vector.hpp"

namespace tanabe {

struct VerifyRecord {
  std::string tag;     // which family of checks this record belongs to
  std::string grid;    // grid point or case description
  bool pass = false;
  std::string detail;  // human-readable explanation on failure
};

// Test hook: mutates a computed product before comparison (fault injection).
using ProductPerturbation = std::function<void(DiagramVector&)>;

std::vector<VerifyRecord> verifyDiagramExample();
std::vector<VerifyRecord> verifyClassificationTables();
std::vector<VerifyRecord> verifyProductOracle(
    const ProductPerturbation& perturb = nullptr);
std::vector<VerifyRecord> verifyClosureGrid();
std::vector<VerifyRecord> verifySchurWeylGrid();
std::vector<VerifyRecord> verifyTowerFigures();
std::vector<VerifyRecord> verifyDimensionIdentities();
std::vector<VerifyRecord> verifyCentralElements();
std::vector<VerifyRecord> verifySpecialParameters();
std::vector<VerifyRecord> verifyJointSpectra();

// All records, optionally filtered to tags containing `only`.
std::vector<VerifyRecord> verifyAll(const std::string& only = "");

std::string recordsToJson(const std::vector<VerifyRecord>& records);

}  // namespace tanabe
