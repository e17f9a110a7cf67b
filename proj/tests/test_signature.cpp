#include <doctest.h>

#include "cp2genus/errors.hpp"
#include "cp2genus/knot.hpp"
#include "cp2genus/signature.hpp"
#include "torus_reference.hpp"

using namespace cp2;
using namespace cp2::testref;

TEST_CASE("unit root normalization") {
  UnitRoot w = UnitRoot::of(5, 10);
  CHECK(w.num == 1);
  CHECK(w.den == 2);
  CHECK(w.order() == 2);
  CHECK(UnitRoot::of(-1, 3) == UnitRoot::of(2, 3));
  CHECK(w.conjugate() == UnitRoot{1, 2});
  CHECK_THROWS_AS(UnitRoot::of(0, 5), InternalError);
  // sigma_p evaluation point e^{pi i (p-1)/p} has order p
  CHECK(omega_sigma_p(3) == UnitRoot::of(1, 3));
  CHECK(omega_sigma_p(5) == UnitRoot::of(2, 5));
  CHECK(omega_sigma_p(7) == UnitRoot::of(3, 7));
}

TEST_CASE("singularity gate is exact") {
  LaurentPoly trefoil = alexander_torus(2, 3);  // roots of order 6
  CHECK(alexander_vanishes_at(trefoil, UnitRoot::of(1, 6)));
  CHECK_FALSE(alexander_vanishes_at(trefoil, UnitRoot::of(1, 2)));
  CHECK_FALSE(alexander_vanishes_at(trefoil, UnitRoot::of(1, 3)));
  SeifertMatrix v = seifert_from_braid(torus_braid(2, 3));
  CHECK_THROWS_AS(lt_signature(v, UnitRoot::of(1, 6)), SingularAtOmega);
}

TEST_CASE("torus-knot signatures match the lattice-point count") {
  for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {4, 3},
                      {5, 4}, {6, 5}}) {
    SeifertMatrix v = seifert_from_braid(torus_braid(p, q));
    LaurentPoly delta = alexander_torus(p, q);
    for (auto [a, b] : {std::pair<long, long>{1, 2}, {1, 3}, {2, 5}, {3, 7},
                        {5, 11}, {1, 8}}) {
      UnitRoot w = UnitRoot::of(a, b);
      if (alexander_vanishes_at(delta, w)) continue;
      CHECK(lt_signature(v, w) == sigma_torus(p, q, a, b));
    }
  }
}

TEST_CASE("signature convention and ordinary signature") {
  CHECK(ordinary_signature(seifert_matrix(parse_knot("T(2,3)"))) == -2);
  CHECK(ordinary_signature(seifert_matrix(parse_knot("T(2,5)"))) == -4);
  CHECK(ordinary_signature(seifert_matrix(parse_knot("-T(2,5)"))) == 4);
  CHECK(ordinary_signature(seifert_matrix(parse_knot("U"))) == 0);
}

TEST_CASE("conjugate evaluation points agree") {
  SeifertMatrix v = seifert_from_braid(torus_braid(3, 4));
  for (auto [a, b] : {std::pair<long, long>{1, 3}, {2, 5}, {3, 7}}) {
    UnitRoot w = UnitRoot::of(a, b);
    CHECK(lt_signature(v, w) == lt_signature(v, w.conjugate()));
  }
}

TEST_CASE("mirror negates and block sum adds") {
  // deterministic corpus of small expressions
  const char* pool[] = {"T(2,3)", "T(3,4)", "T(2,5)", "braid(3; 1 -2 1 -2)",
                        "Wh+(U)", "Wh-(T(2,3))"};
  unsigned long state = 97;
  auto pick = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return pool[(state >> 33) % 6];
  };
  for (int trial = 0; trial < 24; ++trial) {
    KnotPtr a = parse_knot(pick());
    KnotPtr b = parse_knot(pick());
    SeifertMatrix va = seifert_matrix(a), vb = seifert_matrix(b);
    SeifertMatrix vs = SeifertMatrix::block_diag(va, vb);
    for (long p : {3L, 5L, 7L}) {
      UnitRoot w = omega_sigma_p(p);
      if (alexander_vanishes_at(alexander_from_seifert(va), w)) continue;
      if (alexander_vanishes_at(alexander_from_seifert(vb), w)) continue;
      int sa = lt_signature(va, w);
      CHECK(lt_signature(va.mirrored(), w) == -sa);
      CHECK(lt_signature(vs, w) == sa + lt_signature(vb, w));
      CHECK(sa % 2 == 0);
    }
  }
}

TEST_CASE("precision escalation path certifies a known value") {
  SeifertMatrix v = seifert_from_braid(torus_braid(3, 4));
  int sig = 0;
  REQUIRE(detail::mpfr_inertia(v, omega_minus_one(), 256, &sig));
  CHECK(sig == -6);
}

TEST_CASE("exact backend agrees with the float backend") {
  SignatureOptions exact{SignatureBackend::Exact, 1e-8};
  for (const char* expr :
       {"T(2,3)", "T(2,5)", "T(3,4)", "braid(3; 1 -2 1 -2)", "Wh-(U)"}) {
    SeifertMatrix v = seifert_matrix(parse_knot(expr));
    LaurentPoly delta = alexander_from_seifert(v);
    for (long p : {3L, 5L, 7L, 11L}) {
      UnitRoot w = omega_sigma_p(p);
      if (alexander_vanishes_at(delta, w)) continue;
      CHECK(lt_signature(v, w, exact) == lt_signature(v, w));
    }
  }
}

TEST_CASE("arf congruence") {
  CHECK(arf_from_alexander(alexander_torus(2, 3)) == 1);  // Delta(-1) = -3
  CHECK(arf_from_alexander(alexander_torus(2, 7)) == 0);  // Delta(-1) = -7
  CHECK(arf_from_alexander(LaurentPoly(1)) == 0);
}
