#include "cp2genus/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cp2genus/cyclo.hpp"
#include "cp2genus/errors.hpp"

namespace cp2 {

int exact_signature(const SeifertMatrix& v, UnitRoot w) {
  if (v.size() > 8)
    throw SizeTooLarge("exact signature oracle handles sizes <= 8 only");
  if (v.size() == 0) return 0;
  w = UnitRoot::of(w.num, w.den);
  if (alexander_vanishes_at(alexander_from_seifert(v), w))
    throw SingularAtOmega("Alexander polynomial vanishes at the requested root");
  return exact_lt_signature_impl(v, w);
}

long brute_force_lower_bound(const InvariantRecord& record, long radius) {
  if (radius < 1) throw InternalError("brute force radius must be >= 1");
  long best = degree_row(record, 0).combined;
  for (long d = -radius; d <= radius; ++d)
    best = std::min(best, degree_row(record, d).combined);
  return best;
}

std::vector<GoldenEntry> builtin_golden_table() {
  return {
      {"T(2,3)", "arf", "1", "Arf of the trefoil"},
      {"Wh-(-T(3,2))", "tau", "-1", "Hedden, Theorem 1.5"},
      {"T(2,3)", "g4", "1", "torus-knot genus formula"},
      {"T(3,2)", "g4", "1", "torus-knot genus formula"},
      {"T(4,3)", "g4", "3", "torus-knot genus formula"},
      {"T(5,4)", "g4", "6", "torus-knot genus formula"},
      {"T(2,3)", "sigma", "-2", "exact backend"},
      {"T(2,5)", "sigma", "-4", "exact backend"},
      {"T(2,7)", "sigma", "-6", "exact backend"},
      {"T(2,9)", "sigma", "-8", "exact backend"},
      {"Wh-(U)", "alexander", "1", "clasp form has zero diagonal block"},
      {"Wh+(U)", "alexander", "1", "clasp form has zero diagonal block"},
      {"Wh-(-T(3,2))", "alexander", "1", "clasp form has zero diagonal block"},
      {"T(2,3)", "alexander", "t^-1 - 1 + t", "2x2 determinant"},
  };
}

std::vector<GoldenEntry> load_golden_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SemanticError("cannot open golden table: " + path);
  std::vector<GoldenEntry> entries;
  std::string line;
  auto strip = [](std::string s) {
    auto a = s.find_first_not_of(" \t");
    auto b = s.find_last_not_of(" \t");
    return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
  };
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(t);
    std::string field;
    while (std::getline(ss, field, ';')) fields.push_back(strip(field));
    if (fields.size() != 4)
      throw SemanticError("golden table line " + std::to_string(lineno) +
                          ": expected `expr ; invariant ; value ; provenance`");
    entries.push_back({fields[0], fields[1], fields[2], fields[3]});
  }
  return entries;
}

namespace {

std::string evaluate(const GoldenEntry& e, const SignatureOptions& opts,
                     const TauOverrides& overrides) {
  KnotPtr k = parse_knot(e.expr);
  if (e.invariant == "arf") return std::to_string(arf(k));
  if (e.invariant == "sigma")
    return std::to_string(ordinary_signature(seifert_matrix(k), opts));
  if (e.invariant == "alexander") return alexander(k).str();
  if (e.invariant == "tau") {
    TauValue t = tau(k, overrides);
    return t.known() ? std::to_string(*t.value) : "unknown";
  }
  if (e.invariant == "g4") {
    G4Interval g = g4_interval(k, opts, overrides);
    return g.lower == g.upper ? std::to_string(g.lower)
                              : std::to_string(g.lower) + ".." +
                                    std::to_string(g.upper);
  }
  throw SemanticError("unknown golden invariant: " + e.invariant);
}

}  // namespace

std::vector<GoldenResult> run_golden_suite(
    const std::vector<GoldenEntry>& entries, SignatureOptions opts,
    const TauOverrides& overrides) {
  std::vector<GoldenResult> results;
  for (const GoldenEntry& e : entries) {
    GoldenResult r{e, false, {}};
    try {
      r.actual = evaluate(e, opts, overrides);
      r.pass = r.actual == e.value;
    } catch (const std::exception& ex) {
      r.actual = std::string("error: ") + ex.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace cp2
