// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
// Every numeric target here was fixed in advance from closed formulas or
// from the independent oracles (lattice-point signature count, brute-force
// degree enumeration) rather than from the engine under test.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "cp2genus/closed_genus.hpp"
#include "cp2genus/commands.hpp"
#include "cp2genus/oracle.hpp"
#include "torus_reference.hpp"

using namespace cp2;
using namespace cp2::testref;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what,
            const std::string& detail = {}) {
  std::printf("criterion %d: %s - %s%s%s\n", criterion, ok ? "PASS" : "FAIL",
              what.c_str(), detail.empty() ? "" : ": ", detail.c_str());
  if (!ok) ++failures;
}

// 1. closed-surface genus of d times the line, |d| <= 10
void criterion_thom_table() {
  bool ok = true;
  std::string detail;
  for (long d = -10; d <= 10; ++d) {
    long want = d == 0 ? 0 : (std::labs(d) - 1) * (std::labs(d) - 2) / 2;
    if (thom_genus(d) != want) {
      ok = false;
      detail = "d = " + std::to_string(d);
      break;
    }
  }
  std::ostringstream out, err;
  CommandOptions opts;
  if (cmd_tables("thom", 10, opts, out, err) != kExitOk) {
    ok = false;
    detail = "table command failed";
  }
  report(1, ok, "closed-surface genus table for multiples of the line",
         detail);
}

// 2. g4(T(n,n-1)) - trick_genus(n,0) follows the parity formula, n <= 100
void criterion_corollary() {
  bool ok = true;
  std::string detail;
  for (long n = 2; n <= 100 && ok; ++n) {
    long g4 = (n - 1) * (n - 2) / 2;  // torus-knot slice genus
    long want = n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2;
    if (g4 - trick_genus(n, 0) != want || corollary_difference(n) != want) {
      ok = false;
      detail = "n = " + std::to_string(n);
    }
  }
  // the slice genus feeding the formula is itself cross-checked against the
  // full invariant engine where the matrices stay small
  for (long n = 2; n <= 8 && ok; ++n) {
    G4Interval g = g4_interval(
        KnotExpr::torus(static_cast<int>(n), static_cast<int>(n - 1)));
    if (g.lower != g.upper || g.upper != (n - 1) * (n - 2) / 2) {
      ok = false;
      detail = "slice genus mismatch at n = " + std::to_string(n);
    }
  }
  report(2, ok, "null-homologous genus drop for T(n,n-1), n up to 100",
         detail);
}

// 3. gtilde(n) + gtilde(d) - trick_genus(n,d) equals the stated difference
//    in both parity cases, 0 <= d < n <= 50
void criterion_difference_identity() {
  bool ok = true;
  std::string detail;
  for (long n = 1; n <= 50 && ok; ++n)
    for (long d = 0; d < n; ++d) {
      long want = (n - d) % 2 == 0 ? (n - 3 * d) / 2 : (n - 3 * d + 1) / 2;
      if (gtilde(n) + gtilde(d) - trick_genus(n, d) != want) {
        ok = false;
        detail = "(n,d) = (" + std::to_string(n) + "," + std::to_string(d) + ")";
        break;
      }
    }
  report(3, ok, "capped-construction genus achieves the difference bound",
         detail);
}

// 4. synthetic records built from the arbitrarily-large-gap hypotheses reach
//    the requested lower bound, and the concrete double family is strictly
//    increasing along the oracle-fixed values
void criterion_lower_bound_growth() {
  bool ok = true;
  std::string detail;
  for (long g0 = 0; g0 <= 6 && ok; ++g0) {
    // smallest half-integer c0 = k/2 with c0 > (3/2) sqrt(2 g0 + 2)
    long k = 1;
    while (k * k <= 9 * (2 * g0 + 2)) ++k;
    long tau_value = -(g0 + (k * (k - 2) + 7) / 8);  // g0 - c0(1-c0)/2, up
    InvariantRecord r = InvariantRecord::synthetic(tau_value, 0);
    if (cp2_lower_bound(r).bound < g0) {
      ok = false;
      detail = "g0 = " + std::to_string(g0);
    }
  }
  // negative-clasped doubles of the left-handed trefoil, summed l times;
  // targets fixed in advance by brute-force enumeration over |d| <= 60
  const std::vector<std::pair<long, long>> family = {
      {5, 2}, {11, 5}, {19, 8}, {29, 11}};
  long previous = -1;
  for (auto [l, want] : family) {
    std::vector<KnotPtr> copies(l, parse_knot("Wh-(-T(3,2))"));
    InvariantRecord r = InvariantRecord::of(KnotExpr::sum(copies));
    long got = cp2_lower_bound(r).bound;
    if (got != want || got <= previous) {
      ok = false;
      detail = "l = " + std::to_string(l) + " gave " + std::to_string(got);
      break;
    }
    previous = got;
  }
  report(4, ok, "degree-search lower bounds grow with the double family",
         detail);
}

// 5. no construction undercuts the degree-matched lower bound for T(n,n-1)
void criterion_consistency() {
  bool ok = true;
  std::string detail;
  long checked = 0;
  for (long n = 2; n <= 8 && ok; ++n) {
    KnotPtr k = KnotExpr::torus(static_cast<int>(n), static_cast<int>(n - 1));
    InvariantRecord record = InvariantRecord::of(k);
    for (const SurfaceConstruction& c : cp2_upper_bounds(k)) {
      ++checked;
      if (c.genus < degree_row(record, c.degree).combined) {
        ok = false;
        detail = "n = " + std::to_string(n) + ", degree " +
                 std::to_string(c.degree) + ", genus " +
                 std::to_string(c.genus);
        break;
      }
    }
  }
  report(5, ok, "constructions never undercut the degree-matched bounds",
         detail.empty() ? std::to_string(checked) + " constructions" : detail);
}

// 6. the d = 0 signature rule recovers (q-3)/2 for T(2,q)
void criterion_null_homologous() {
  bool ok = true;
  std::string detail;
  for (long q = 5; q <= 17 && ok; q += 2) {
    InvariantRecord r =
        InvariantRecord::of(KnotExpr::torus(2, static_cast<int>(q)));
    long combined = degree_row(r, 0).combined;
    if (combined < (q - 3) / 2 || (q == 17 && combined != 7)) {
      ok = false;
      detail = "q = " + std::to_string(q) + " gave " + std::to_string(combined);
    }
  }
  report(6, ok, "degree-0 signature bound recovers (q-3)/2 for T(2,q)",
         detail);
}

// 7. Arf classifier on the two flagship examples
void criterion_arf_classifier() {
  TopologicalInterval dbl = topological_genus_interval(parse_knot("Wh-(-T(3,2))"));
  TopologicalInterval tre = topological_genus_interval(parse_knot("T(2,3)"));
  bool ok = dbl.lower == 0 && dbl.upper == 0 && !dbl.note &&
            tre.lower == 0 && tre.upper == 1 && tre.note.has_value();
  report(7, ok, "Arf classifier separates the double from the trefoil");
}

// 8. exact-vs-float signature agreement and windowed-vs-brute-force search
//    agreement on the full corpora
void criterion_oracles() {
  bool ok = true;
  std::string detail;
  long pairs = 0;
  for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}}) {
    SeifertMatrix v = seifert_from_braid(torus_braid(p, q));
    for (long pr : {3L, 5L, 7L, 11L}) {
      UnitRoot w = omega_sigma_p(pr);
      ++pairs;
      if (exact_signature(v, w) != lt_signature(v, w)) {
        ok = false;
        detail = "T(" + std::to_string(p) + "," + std::to_string(q) +
                 ") at p = " + std::to_string(pr);
      }
    }
  }
  unsigned long state = 0xfeedface1234ULL;
  auto next = [&state](long bound) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((state >> 33) % bound);
  };
  for (int i = 0; i < 200 && ok; ++i) {
    std::map<long, long> sp;
    for (long p : {3L, 5L, 7L, 11L, 13L}) sp[p] = 2 * (next(7) - 3);
    InvariantRecord r =
        InvariantRecord::synthetic(-next(21), 2 * (next(7) - 3), sp, 0);
    LowerBoundResult win = cp2_lower_bound(r);
    if (win.bound != brute_force_lower_bound(r, 3 * win.window)) {
      ok = false;
      detail = "synthetic record " + std::to_string(i);
    }
  }
  report(8, ok, "independent oracles agree with the production paths",
         detail.empty() ? std::to_string(pairs) + " signature pairs, 200 records"
                        : detail);
}

// 9. byte-identical output across consecutive runs
void criterion_determinism() {
  CommandOptions opts;
  auto check_run = [&](auto&& f) {
    std::ostringstream o1, e1, o2, e2;
    int c1 = f(o1, e1);
    int c2 = f(o2, e2);
    return c1 == c2 && o1.str() == o2.str();
  };
  bool ok = check_run([&](std::ostream& o, std::ostream& e) {
    return cmd_paper_check(opts, o, e);
  });
  CommandOptions json = opts;
  json.format = OutputFormat::Json;
  ok = ok && check_run([&](std::ostream& o, std::ostream& e) {
         return cmd_cp2("T(4,3) # -T(2,5)", json, o, e);
       });
  ok = ok && check_run([&](std::ostream& o, std::ostream& e) {
         return cmd_invariants("Wh-(-T(3,2))", json, o, e);
       });
  ok = ok && check_run([&](std::ostream& o, std::ostream& e) {
         return cmd_tables("twocp2", 8, json, o, e);
       });
  report(9, ok, "consecutive runs produce byte-identical output");
}

}  // namespace

int main() {
  criterion_thom_table();
  criterion_corollary();
  criterion_difference_identity();
  criterion_lower_bound_growth();
  criterion_consistency();
  criterion_null_homologous();
  criterion_arf_classifier();
  criterion_oracles();
  criterion_determinism();
  if (failures == 0) {
    std::printf("all 9 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", failures);
  return 1;
}
