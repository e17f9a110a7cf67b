#include "cp2genus/cp2_bounds.hpp"

#include <algorithm>
#include <cstdlib>

#include "cp2genus/closed_genus.hpp"
#include "cp2genus/errors.hpp"

namespace cp2 {

namespace {

// ceil(a / b) for b > 0
long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -(-a / b); }

// genus bound from an inequality 2g+1 >= A with A >= 0
long genus_from_two_g_plus_one(long a) { return std::max(0L, ceil_div(a - 1, 2)); }

std::vector<long> odd_prime_factors(long d) {
  std::vector<long> out;
  long a = std::abs(d);
  while (a % 2 == 0 && a != 0) a /= 2;
  for (long p = 3; p * p <= a; p += 2)
    if (a % p == 0) {
      out.push_back(p);
      while (a % p == 0) a /= p;
    }
  if (a > 1) out.push_back(a);
  return out;
}

// Rule (3) applies to the trivial class with any odd prime; this fixed set
// keeps the d = 0 row finite and deterministic.
const std::vector<long> kZeroDegreePrimes = {3, 5, 7, 11, 13};

}  // namespace

long lemma_tau_bound(long tau_value, long d) {
  long a = std::abs(d);
  return std::max(0L, -tau_value + a * (1 - a) / 2);
}

long lemma_even_bound(long sigma, long d) {
  if (d % 2 != 0) throw InternalError("lemma_even_bound needs even d");
  return genus_from_two_g_plus_one(std::abs(d * d / 2 - 1 - sigma));
}

long lemma_odd_prime_bound(long sigma_p_value, long d, long p) {
  if (p < 3 || p % 2 == 0 || d % p != 0)
    throw InternalError("lemma_odd_prime_bound needs an odd prime dividing d");
  // 2g+1 >= |(p^2-1)d^2/(2p^2) - 1 - sigma_p| = N / (2p^2), exactly
  long two_p2 = 2 * p * p;
  long n = std::abs((p * p - 1) * d * d - two_p2 * (1 + sigma_p_value));
  // g >= (N/(2p^2) - 1) / 2 = (N - 2p^2) / (4p^2)
  return std::max(0L, ceil_div(n - two_p2, 2 * two_p2));
}

DegreeBoundRow degree_row(const InvariantRecord& record, long d) {
  DegreeBoundRow row;
  row.d = d;
  const long a = std::abs(d);
  if (record.tau().known())
    row.tau_bound = lemma_tau_bound(*record.tau().value, a);
  if (a % 2 == 0) row.even_bound = lemma_even_bound(record.signature(), a);
  const std::vector<long> primes =
      a == 0 ? kZeroDegreePrimes : odd_prime_factors(a);
  for (long p : primes) {
    try {
      row.prime_bounds[p] = lemma_odd_prime_bound(record.sigma_p(p), a == 0 ? 0 : a, p);
    } catch (const SingularAtOmega&) {
      row.notes.push_back("sigma_" + std::to_string(p) +
                          " unavailable (Alexander polynomial vanishes); "
                          "rule skipped at d = " + std::to_string(d));
    }
  }
  row.combined = 0;
  if (row.tau_bound) row.combined = std::max(row.combined, *row.tau_bound);
  if (row.even_bound) row.combined = std::max(row.combined, *row.even_bound);
  for (const auto& [p, b] : row.prime_bounds)
    row.combined = std::max(row.combined, b);
  return row;
}

LowerBoundResult cp2_lower_bound(const InvariantRecord& record) {
  const long s = record.sigma_sup_bound();
  long best = degree_row(record, 0).combined;
  long window = 1;
  for (long d = 1; best > 0; ++d) {
    best = std::min(best, degree_row(record, d).combined);
    window = d;
    // Every |d'| >= d has a rule with constant >= 4/9 (the p = 3 worst
    // case; the even rule's 1/2 also qualifies), so
    // combined(d') >= ((4/9)d'^2 - 2 - sup|sigma|) / 2 > best from here on.
    // The rule backing the floor is always available: sigma at -1 exists
    // because Delta(-1) is odd, and sigma_p exists because Phi_p(1) = p
    // cannot divide Delta(1) = 1.
    if (d >= 2 && 4 * d * d >= 9 * (2 * best + 2 + s)) break;
  }
  return LowerBoundResult{best, window};
}

std::string to_string(ConstructionTag t) {
  switch (t) {
    case ConstructionTag::PushInB4: return "PushInB4";
    case ConstructionTag::TrickEven: return "TrickEven";
    case ConstructionTag::TrickOdd: return "TrickOdd";
    case ConstructionTag::SliceDiskDegreeN: return "SliceDiskDegreeN";
    case ConstructionTag::BoundarySum: return "BoundarySum";
  }
  throw InternalError("unhandled ConstructionTag");
}

namespace {

// T(n,n-1) detector; returns n >= 2 or 0.
long consecutive_torus(const KnotPtr& k) {
  if (k->kind != KnotKind::Torus) return 0;
  long n = std::max(k->p, k->q);
  return std::min(k->p, k->q) == n - 1 ? n : 0;
}

void emit_for(const KnotPtr& k, std::vector<SurfaceConstruction>& out) {
  if (long n = consecutive_torus(k)) {
    for (long d = 0; d < n; ++d) {
      ConstructionTag tag = (n - d) % 2 == 0 ? ConstructionTag::TrickEven
                                             : ConstructionTag::TrickOdd;
      out.push_back({tag, d, trick_genus(n, d), {}});
    }
  }
  if (k->kind == KnotKind::Mirror)
    if (long n = consecutive_torus(k->parts[0]))
      out.push_back({ConstructionTag::SliceDiskDegreeN, n, 0, {}});
}

}  // namespace

std::vector<SurfaceConstruction> cp2_upper_bounds(const KnotPtr& k) {
  std::vector<SurfaceConstruction> out;
  out.push_back({ConstructionTag::PushInB4, 0, g4_upper_bound(k), {}});
  emit_for(k, out);
  if (k->kind == KnotKind::Sum) {
    // one summand contributes any of its surfaces, the rest are pushed-in
    // Seifert surfaces in the boundary B^4; degrees and genera add
    for (std::size_t i = 0; i < k->parts.size(); ++i) {
      std::vector<SurfaceConstruction> own;
      emit_for(k->parts[i], own);
      long rest = 0;
      for (std::size_t j = 0; j < k->parts.size(); ++j)
        if (j != i) rest += g4_upper_bound(k->parts[j]);
      for (SurfaceConstruction& c : own) {
        SurfaceConstruction combo{ConstructionTag::BoundarySum, c.degree,
                                  c.genus + rest, {}};
        combo.parts.push_back(std::move(c));
        combo.parts.push_back({ConstructionTag::PushInB4, 0, rest, {}});
        out.push_back(std::move(combo));
      }
    }
  }
  return out;
}

TopologicalInterval topological_genus_interval(const KnotPtr& k) {
  if (arf(k) == 0) return TopologicalInterval{0, 0, std::nullopt};
  return TopologicalInterval{
      0, 1,
      "Arf = 1 only removes the generator-class disk criterion; it does not "
      "force a positive topological genus (the classification is not "
      "complete)"};
}

BoundReport cp2_report(const KnotPtr& k, SignatureOptions opts,
                       std::optional<long> window_override) {
  BoundReport report;
  report.knot = k;
  report.record = InvariantRecord::of(k, opts);
  LowerBoundResult lower = cp2_lower_bound(report.record);
  report.smooth_lower = lower.bound;
  report.window = std::max(lower.window, window_override.value_or(1));
  for (long d = 0; d <= report.window; ++d) {
    report.rows.push_back(degree_row(report.record, d));
    for (const std::string& note : report.rows.back().notes)
      report.notes.push_back(note);
  }
  if (!report.record.tau().known())
    report.notes.push_back(
        "tau unknown for this expression; rule (1) omitted, so degrees with "
        "|d| = 1 are unconstrained and the lower bound is 0");
  report.upper_candidates = cp2_upper_bounds(k);
  report.smooth_upper = report.upper_candidates.front().genus;
  for (const SurfaceConstruction& c : report.upper_candidates)
    report.smooth_upper = std::min(report.smooth_upper, c.genus);
  report.topological = topological_genus_interval(k);
  if (report.topological.note) report.notes.push_back(*report.topological.note);
  if (report.smooth_lower > report.smooth_upper)
    throw InternalError("certified lower bound exceeds constructive upper bound");
  return report;
}

}  // namespace cp2
