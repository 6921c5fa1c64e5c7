// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion aggregates the corresponding verification
// records.
#include <iostream>
#include <vector>

#include "tanabe/verify.hpp"

namespace {

int failures = 0;

void criterion(int number, const std::string& name,
               const std::vector<tanabe::VerifyRecord>& records) {
  bool pass = !records.empty();
  const tanabe::VerifyRecord* firstBad = nullptr;
  for (const tanabe::VerifyRecord& r : records)
    if (!r.pass) {
      pass = false;
      if (!firstBad) firstBad = &r;
    }
  std::cout << "criterion " << number << " [" << name << "]: "
            << (pass ? "PASS" : "FAIL") << " (" << records.size()
            << " checks)";
  if (firstBad)
    std::cout << "  first failure: " << firstBad->grid << " " << firstBad->detail;
  std::cout << "\n" << std::flush;
  if (!pass) ++failures;
}

}  // namespace

int main() {
  using namespace tanabe;
  criterion(1, "diagram composition, grammar, and basis change",
            verifyDiagramExample());
  criterion(2, "two-point classification tables", verifyClassificationTables());
  criterion(3, "orbit product against the diagram-basis oracle",
            verifyProductOracle());
  criterion(4, "span closure under multiplication", verifyClosureGrid());
  criterion(5, "double centralizer on tensor space", verifySchurWeylGrid());
  criterion(6, "branching tower reference figures", verifyTowerFigures());
  criterion(7, "dimension identities along the tower",
            verifyDimensionIdentities());
  criterion(8, "central element operator identities and spectra",
            verifyCentralElements());
  criterion(9, "special parameters with the doubled node",
            verifySpecialParameters());
  criterion(10, "joint spectra of the commuting family", verifyJointSpectra());
  if (failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria failed\n";
  return 1;
}
