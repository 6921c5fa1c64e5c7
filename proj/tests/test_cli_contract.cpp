// Exercises the command line tool's output and exit code contract.
// Usage: test_cli_contract <path-to-cli-binary>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

int failures = 0;

struct RunResult {
  int exitCode;
  std::string output;
};

RunResult run(const std::string& cmd) {
  std::string full = cmd + " 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << cmd << "\n";
    exit(99);
  }
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int status = pclose(pipe);
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli_contract <cli-binary>\n";
    return 99;
  }
  std::string cli = argv[1];

  RunResult r = run(cli + " classify --r 2 --p 2 --n 2 \"{1,1',2'};{2}\"");
  expect(r.exitCode == 0 && r.output.find("Lambda") != std::string::npos,
         "classify prints the class: " + r.output);

  r = run(cli + " classify --r 2 --p 2 --n 2 \"{1,1'\"");
  expect(r.exitCode == 2, "malformed diagram exits 2, got " +
                              std::to_string(r.exitCode));

  r = run(cli + " basis --r 2 --p 1 --n 2 --level 2");
  expect(r.exitCode == 0 && r.output.find("{1,2,1',2'}") != std::string::npos,
         "basis lists spanning diagrams: " + r.output);

  r = run(cli + " multiply --n 3 --basis x \"{1};{1'}\" \"{1};{1'}\"");
  expect(r.exitCode == 0 &&
             r.output.find("1 * {1};{1'}") != std::string::npos &&
             r.output.find("2 * {1,1'}") != std::string::npos,
         "orbit product at one point: " + r.output);

  r = run(cli + " multiply --n 3 --basis q \"{1};{1'}\" \"{1};{1'}\"");
  expect(r.exitCode == 2, "unknown basis exits 2");

  r = run(cli + " basis --r 2 --p 1 --n 2 --level 6");
  expect(r.exitCode == 3, "enumeration guard exits 3, got " +
                              std::to_string(r.exitCode));

  r = run("env TANABE_GUARD_OVERRIDE=1 " + cli +
          " bratteli --r 2 --p 1 --n 2 --k 2");
  expect(r.exitCode == 0, "guard override lifts the tower depth guard");

  r = run(cli + " bratteli --r 2 --p 2 --n 4 --k 2 --dot");
  expect(r.exitCode == 0 && r.output.find("digraph") != std::string::npos,
         "dot output");

  r = run(cli + " bratteli --r 2 --p 2 --n 4 --k 2 --json");
  expect(r.exitCode == 0 && r.output.find("\"levels\"") != std::string::npos,
         "json output");

  r = run(cli + " dims --r 2 --p 2 --n 4 --level 2");
  expect(r.exitCode == 0 &&
             r.output.find("sum dim*paths = 16") != std::string::npos &&
             r.output.find("sum paths^2 = 5") != std::string::npos,
         "dims checksums: " + r.output);

  // For the plain symmetric group the defining space splits in two pieces.
  r = run(cli + " centralizer-dim --r 1 --p 1 --n 3 --level 1");
  expect(r.exitCode == 0 && r.output.find("2") == 0,
         "centralizer dimension at level one: " + r.output);

  r = run(cli + " centralizer-dim --r 2 --p 1 --n 3 --level 3/2");
  expect(r.exitCode == 0, "half level accepted: " + r.output);

  r = run(cli + " jm-spectrum --r 2 --p 1 --n 4 --k 1");
  expect(r.exitCode == 0 && r.output.find("predicted=4") != std::string::npos,
         "spectrum prediction verified: " + r.output);

  r = run(cli + " verify --only classification");
  expect(r.exitCode == 0 && r.output.find("\"pass\": true") != std::string::npos,
         "verify subset passes: " + std::to_string(r.exitCode));

  r = run(cli + " nonsense");
  expect(r.exitCode == 2, "unknown subcommand exits 2");

  if (failures == 0) std::cout << "cli contract: all checks passed\n";
  return failures == 0 ? 0 : 1;
}
