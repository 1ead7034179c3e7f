// End-to-end checks of the command line: golden report, determinism, exit
// codes. Invoked by ctest with the binary and fixture paths as arguments.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "ok: " << what << "\n";
  } else {
    std::cout << "FAILED: " << what << "\n";
    ++failures;
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& cmd) {
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cli_driver <funeq-binary> <fixture-dir>\n";
    return 2;
  }
  const std::string bin = argv[1];
  const std::string fixtures = argv[2];
  const std::string tmp1 = "cli_driver_run1.out";
  const std::string tmp2 = "cli_driver_run2.out";

  int rc = run(bin + " solve --input " + fixtures + "/example1.fe --format machine > " + tmp1);
  expect(rc == 0, "solve example1 exits 0");
  expect(slurp(tmp1) == slurp(fixtures + "/example1.golden"), "machine report matches the golden file");

  rc = run(bin + " solve --input " + fixtures + "/example1.fe --format machine > " + tmp2);
  expect(rc == 0, "second run exits 0");
  expect(slurp(tmp1) == slurp(tmp2), "repeated runs are byte-identical");

  rc = run(bin + " solve --input " + fixtures + "/example1.fe --bounds 1 --quiet");
  expect(rc == 2, "bounds too small: exit 2");

  rc = run(bin + " solve --input " + fixtures + "/example1.fe --sweep-J 3 > " + tmp1);
  expect(rc == 0, "sweep finds the particular");
  expect(slurp(tmp1).find("sweep J=2: particular found") != std::string::npos,
         "sweep reports the first successful bound");

  rc = run(bin + " solve --input " + fixtures + "/does_not_exist.fe 2> /dev/null");
  expect(rc == 1, "missing input: exit 1");

  {
    std::ofstream bad("cli_driver_bad.fe");
    bad << "vars: t\na: 1\nalpha: x + 1\n";
  }
  rc = run(bin + " solve --input cli_driver_bad.fe 2> " + tmp1);
  expect(rc == 1, "unknown variable: exit 1");
  expect(slurp(tmp1).find("error:") != std::string::npos, "input errors go to stderr");

  rc = run(bin + " verify --input " + fixtures + "/example1.fe --candidate " + fixtures +
           "/example1_particular.cand --quiet");
  expect(rc == 0, "verify accepts the true particular");

  rc = run(bin + " verify --input " + fixtures + "/example1.fe --candidate " + fixtures +
           "/example1_corrupted.cand > " + tmp1);
  expect(rc == 2, "verify rejects the corrupted particular");
  expect(slurp(tmp1).find("lambda[0] = 4/3") != std::string::npos,
         "verification failure shows the residual diagnostics");

  rc = run(bin + " oracle-check --input " + fixtures + "/example1.fe --candidate " + fixtures +
           "/example1_particular.cand --quiet");
  expect(rc == 0, "oracle-check confirms the particular");

  rc = run(bin + " automorphisms --input " + fixtures + "/example1.fe > " + tmp1);
  expect(rc == 0, "automorphisms finds the two actions");
  {
    std::string out = slurp(tmp1);
    expect(out.find("t -> t") != std::string::npos && out.find("t -> -t") != std::string::npos,
           "both actions are reported");
  }

  rc = run(bin + " solve --input " + fixtures + "/example3_p2.fe --quiet");
  expect(rc == 0, "p = 2 fixture is feasible at factor bounds (1,1)");

  rc = run(bin + " solve --input " + fixtures + "/example1.fe --mode full 2> /dev/null");
  expect(rc == 1, "mode override demanding the missing beta family: exit 1");

  std::remove(tmp1.c_str());
  std::remove(tmp2.c_str());
  std::remove("cli_driver_bad.fe");
  return failures == 0 ? 0 : 1;
}
