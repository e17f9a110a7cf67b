#include <doctest.h>

#include <sstream>

#include "cp2genus/commands.hpp"
#include "cp2genus/oracle.hpp"

using namespace cp2;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <typename F>
Run run(F&& f) {
  std::ostringstream out, err;
  int code = f(out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("invariants command") {
  CommandOptions opts;
  Run r = run([&](auto& o, auto& e) { return cmd_invariants("T(2,3)", opts, o, e); });
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("sigma: -2") != std::string::npos);
  CHECK(r.out.find("arf: 1") != std::string::npos);
  CHECK(r.out.find("tau: 1") != std::string::npos);
  CHECK(r.out.find("conventions:") != std::string::npos);

  r = run([&](auto& o, auto& e) { return cmd_invariants("Wh-(-T(3,2))", opts, o, e); });
  CHECK(r.out.find("alexander: 1") != std::string::npos);
  CHECK(r.out.find("tau: -1 (Override: Hedden, Theorem 1.5)") != std::string::npos);

  r = run([&](auto& o, auto& e) { return cmd_invariants("T(4,6)", opts, o, e); });
  CHECK(r.code == kExitUsage);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());

  opts.primes = {4};
  r = run([&](auto& o, auto& e) { return cmd_invariants("U", opts, o, e); });
  CHECK(r.code == kExitUsage);
}

TEST_CASE("cp2 command") {
  CommandOptions opts;
  std::string five = "Wh-(-T(3,2))";
  for (int i = 0; i < 4; ++i) five += " # Wh-(-T(3,2))";
  Run r = run([&](auto& o, auto& e) { return cmd_cp2(five, opts, o, e); });
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("smooth genus: [2, 5]") != std::string::npos);
  CHECK(r.out.find("topological genus: [0, 0]") != std::string::npos);

  r = run([&](auto& o, auto& e) { return cmd_cp2("-T(4,3)", opts, o, e); });
  CHECK(r.out.find("smooth genus: [0, 0]") != std::string::npos);
  CHECK(r.out.find("SliceDiskDegreeN degree 4 genus 0") != std::string::npos);
}

TEST_CASE("tables command") {
  CommandOptions opts;
  Run r = run([&](auto& o, auto& e) { return cmd_tables("thom", 5, opts, o, e); });
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("5  6") != std::string::npos);

  r = run([&](auto& o, auto& e) { return cmd_tables("nope", 5, opts, o, e); });
  CHECK(r.code == kExitUsage);
  r = run([&](auto& o, auto& e) { return cmd_tables("thom", 0, opts, o, e); });
  CHECK(r.code == kExitUsage);
}

TEST_CASE("paper-check command") {
  CommandOptions opts;
  Run r = run([&](auto& o, auto& e) { return cmd_paper_check(opts, o, e); });
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("all checks passed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  // the shipped golden data file is equivalent to the built-in table
  opts.golden_path = GOLDEN_TABLE_PATH;
  r = run([&](auto& o, auto& e) { return cmd_paper_check(opts, o, e); });
  CHECK(r.code == kExitOk);

  opts.golden_path = "no_such_file.txt";
  r = run([&](auto& o, auto& e) { return cmd_paper_check(opts, o, e); });
  CHECK(r.code == kExitUsage);
}

TEST_CASE("json output is deterministic and schema-stable") {
  CommandOptions opts;
  opts.format = OutputFormat::Json;
  auto once = [&](const std::string& expr) {
    return run([&](auto& o, auto& e) { return cmd_cp2(expr, opts, o, e); });
  };
  Run a = once("T(4,3)");
  Run b = once("T(4,3)");
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);  // byte-identical
  for (const char* key : {"\"knot\"", "\"conventions\"", "\"invariants\"",
                          "\"degree_rows\"", "\"upper_bounds\"", "\"smooth\"",
                          "\"topological\"", "\"notes\"", "\"combined\"",
                          "\"rules\""})
    CHECK(a.out.find(key) != std::string::npos);

  Run i1 = run([&](auto& o, auto& e) { return cmd_invariants("T(2,5)", opts, o, e); });
  Run i2 = run([&](auto& o, auto& e) { return cmd_invariants("T(2,5)", opts, o, e); });
  CHECK(i1.out == i2.out);
}

TEST_CASE("every format renders every report") {
  CommandOptions opts;
  for (OutputFormat fmt : {OutputFormat::Text, OutputFormat::Json,
                           OutputFormat::Csv, OutputFormat::Markdown}) {
    opts.format = fmt;
    for (auto runner : {+[](const CommandOptions& o, std::ostream& out,
                            std::ostream& err) {
                          return cmd_invariants("T(3,4)", o, out, err);
                        },
                        +[](const CommandOptions& o, std::ostream& out,
                            std::ostream& err) {
                          return cmd_cp2("T(2,5)", o, out, err);
                        },
                        +[](const CommandOptions& o, std::ostream& out,
                            std::ostream& err) {
                          return cmd_tables("twocp2", 6, o, out, err);
                        },
                        +[](const CommandOptions& o, std::ostream& out,
                            std::ostream& err) {
                          return cmd_tables("corollary", 8, o, out, err);
                        }}) {
      Run r = run([&](auto& o, auto& e) { return runner(opts, o, e); });
      CHECK(r.code == kExitOk);
      CHECK_FALSE(r.out.empty());
    }
  }
}
