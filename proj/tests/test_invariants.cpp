#include <doctest.h>

#include <thread>

#include "cp2genus/errors.hpp"
#include "cp2genus/invariants.hpp"

using namespace cp2;

TEST_CASE("tau rules") {
  TauValue t = tau(parse_knot("T(3,2)"));
  CHECK(t.value == 1);
  CHECK(t.provenance == TauProvenance::TorusFormula);

  t = tau(parse_knot("-T(3,2)"));
  CHECK(t.value == -1);
  CHECK(t.provenance == TauProvenance::MirrorRule);

  t = tau(parse_knot("T(4,3) # -T(3,2)"));
  CHECK(t.value == 2);
  CHECK(t.provenance == TauProvenance::Additivity);

  CHECK(tau(parse_knot("U")).value == 0);
  CHECK_FALSE(tau(parse_knot("braid(3; 1 -2 1 -2)")).known());
  CHECK_FALSE(tau(parse_knot("Wh+(T(2,3))")).known());
  // an unknown summand poisons the whole sum
  CHECK_FALSE(tau(parse_knot("T(3,2) # Wh+(T(2,3))")).known());
}

TEST_CASE("tau override registry") {
  TauValue t = tau(parse_knot("Wh-(-T(3,2))"));
  REQUIRE(t.known());
  CHECK(*t.value == -1);
  CHECK(t.provenance == TauProvenance::Override);
  CHECK(t.citation == "Hedden, Theorem 1.5");

  // the mirror of an overridden knot negates the override
  t = tau(parse_knot("-Wh-(-T(3,2))"));
  CHECK(t.value == 1);
  CHECK(t.provenance == TauProvenance::MirrorRule);

  // sums of overridden copies add up
  std::string five = "Wh-(-T(3,2))";
  for (int i = 0; i < 4; ++i) five += " # Wh-(-T(3,2))";
  t = tau(parse_knot(five));
  CHECK(t.value == -5);
  CHECK(t.provenance == TauProvenance::Additivity);

  // without the registry the double is unknown
  CHECK_FALSE(tau(parse_knot("Wh-(-T(3,2))"), TauOverrides::empty()).known());

  // a custom entry is honored
  TauOverrides custom;
  custom.add("braid(3; 1 -2 1 -2)", 0, "amphichiral example");
  CHECK(tau(parse_knot("braid(3; 1 -2 1 -2)"), custom).value == 0);
}

TEST_CASE("g4 interval") {
  auto check = [](const char* expr, long lo, long hi) {
    G4Interval g = g4_interval(parse_knot(expr));
    CHECK(g.lower == lo);
    CHECK(g.upper == hi);
  };
  check("U", 0, 0);
  check("T(4,3)", 3, 3);
  check("T(2,3)", 1, 1);
  check("Wh-(-T(3,2))", 1, 1);  // lower from |tau| = 1, upper from the double
  check("T(5,4)", 6, 6);
  // tau unknown: only |sigma|/2 = 0 from below, Seifert genus from above
  check("braid(3; 1 -2 1 -2)", 0, 1);
}

TEST_CASE("invariant record aggregates the pieces") {
  InvariantRecord r = InvariantRecord::of(parse_knot("T(2,3)"));
  CHECK(r.alexander().str() == "t^-1 - 1 + t");
  CHECK(r.signature() == -2);
  CHECK(r.arf() == 1);
  CHECK(r.tau().value == 1);
  CHECK(r.g4().lower == 1);
  CHECK(r.g4().upper == 1);
  CHECK(r.sigma_p(3) == -2);
  CHECK(r.sigma_p(5) == -2);
  CHECK(r.sigma_sup_bound() == 2);

  InvariantRecord u = InvariantRecord::of(parse_knot("U"));
  CHECK(u.alexander().str() == "1");
  CHECK(u.signature() == 0);
  CHECK(u.arf() == 0);
  CHECK(u.tau().value == 0);
  CHECK(u.sigma_p(3) == 0);

  InvariantRecord s = InvariantRecord::of(parse_knot("T(2,3) # -T(2,3)"));
  CHECK(s.signature() == 0);
  CHECK(s.arf() == 0);
  CHECK(s.tau().value == 0);
  CHECK(s.sigma_p(5) == 0);
}

TEST_CASE("sigma_p is defined at every odd prime") {
  // Phi_p(1) = p can never divide Delta(1) = 1, so the prime evaluation
  // points are always nonsingular; this is what makes the degree search's
  // termination floor unconditional.
  for (const char* expr : {"T(3,5)", "T(2,5)", "T(6,5)", "Wh-(U)"}) {
    InvariantRecord r = InvariantRecord::of(parse_knot(expr));
    for (long p : {3L, 5L, 7L, 11L, 13L}) CHECK_NOTHROW(r.sigma_p(p));
  }
}

TEST_CASE("sigma_p cache fills at most once and is shared by copies") {
  InvariantRecord r = InvariantRecord::of(parse_knot("T(3,4)"));
  InvariantRecord copy = r;
  std::vector<std::thread> workers;
  for (int i = 0; i < 4; ++i)
    workers.emplace_back([&copy] {
      for (long p : {3L, 5L, 7L, 11L}) (void)copy.sigma_p(p);
    });
  for (auto& w : workers) w.join();
  CHECK(r.sigma_p_snapshot().size() == 4);
  CHECK(r.sigma_p(3) == copy.sigma_p(3));
}

TEST_CASE("presentation independence for the trefoil") {
  KnotPtr forms[] = {parse_knot("T(3,2)"), parse_knot("T(2,3)"),
                     parse_knot("braid(2; 1 1 1)"),
                     parse_knot("braid(3; 1 2 1 2)")};
  InvariantRecord base = InvariantRecord::of(forms[0]);
  for (const KnotPtr& k : forms) {
    InvariantRecord r = InvariantRecord::of(k);
    CHECK(r.alexander() == base.alexander());
    CHECK(r.signature() == base.signature());
    CHECK(r.arf() == base.arf());
    for (long p : {3L, 5L, 7L, 11L, 13L}) CHECK(r.sigma_p(p) == base.sigma_p(p));
  }
}

TEST_CASE("additivity and parity properties over a corpus") {
  const char* pool[] = {"T(2,3)", "T(3,4)", "-T(2,5)", "Wh-(U)",
                        "braid(3; 1 -2 1 -2)"};
  unsigned long state = 12345;
  auto pick = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return pool[(state >> 33) % 5];
  };
  for (int trial = 0; trial < 16; ++trial) {
    KnotPtr a = parse_knot(pick());
    KnotPtr b = parse_knot(pick());
    KnotPtr s = KnotExpr::sum({a, b});
    InvariantRecord ra = InvariantRecord::of(a);
    InvariantRecord rb = InvariantRecord::of(b);
    InvariantRecord rs = InvariantRecord::of(s);
    CHECK(rs.alexander() == ra.alexander() * rb.alexander());
    CHECK(rs.signature() == ra.signature() + rb.signature());
    CHECK(rs.signature() % 2 == 0);
    CHECK(rs.arf() == (ra.arf() ^ rb.arf()));
    InvariantRecord rm = InvariantRecord::of(KnotExpr::mirror(a));
    CHECK(rm.signature() == -ra.signature());
    CHECK(rm.arf() == ra.arf());
  }
}

TEST_CASE("synthetic records") {
  InvariantRecord r = InvariantRecord::synthetic(-5, -2, {{3, -4}}, 0);
  CHECK(r.tau().value == -5);
  CHECK(r.signature() == -2);
  CHECK(r.sigma_p(3) == -4);
  CHECK(r.sigma_p(7) == 0);
  CHECK(r.sigma_sup_bound() == 4);
  InvariantRecord unknown = InvariantRecord::synthetic(std::nullopt, 0);
  CHECK_FALSE(unknown.tau().known());
}
