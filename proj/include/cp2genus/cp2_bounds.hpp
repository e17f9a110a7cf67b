#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cp2genus/invariants.hpp"
#include "cp2genus/knot.hpp"

namespace cp2 {

/// Lower bounds for the genus of a properly embedded surface in punctured
/// CP^2 whose class is d times the line, all floored at 0.

/// g >= -tau + |d|(1-|d|)/2.
long lemma_tau_bound(long tau_value, long d);

/// 2g+1 >= |d^2/2 - 1 - sigma|; d must be even.
long lemma_even_bound(long sigma, long d);

/// 2g+1 >= |(p^2-1)d^2/(2p^2) - 1 - sigma_p|; p must be an odd prime
/// dividing d. Exact rational arithmetic throughout.
long lemma_odd_prime_bound(long sigma_p_value, long d, long p);

struct DegreeBoundRow {
  long d = 0;
  std::optional<long> tau_bound;        // present iff tau is known
  std::optional<long> even_bound;       // present iff d even
  std::map<long, long> prime_bounds;    // odd primes dividing d
  std::vector<std::string> notes;       // skipped rules
  long combined = 0;
};

/// Applies every rule available for this degree and takes the max. A prime
/// whose sigma_p is singular is skipped with a note. For d = 0 the rules
/// depend on sigma only; prime rules need p | d with d != 0.
DegreeBoundRow degree_row(const InvariantRecord& record, long d);

struct LowerBoundResult {
  long bound = 0;
  long window = 1;  // search radius certifying the minimum over all of Z
};

/// Minimum of combined(d) over all integers d. The search over d >= 0
/// stops once the guaranteed growth floor (4/9)d^2 - 1 - sup|sigma_*|
/// exceeds 2*best + 1, which every later row's bound is at least.
LowerBoundResult cp2_lower_bound(const InvariantRecord& record);

enum class ConstructionTag { PushInB4, TrickEven, TrickOdd, SliceDiskDegreeN, BoundarySum };

std::string to_string(ConstructionTag t);

struct SurfaceConstruction {
  ConstructionTag tag;
  long degree = 0;
  long genus = 0;
  std::vector<SurfaceConstruction> parts;  // BoundarySum only
};

/// Every applicable explicit surface: the pushed-in Seifert surface, the
/// blow-up trick for T(n,n-1) at each 0 <= d < n, the degree-n slice disk
/// for -T(n,n-1), and boundary connected sums over the parts of a Sum.
std::vector<SurfaceConstruction> cp2_upper_bounds(const KnotPtr& k);

struct TopologicalInterval {
  long lower = 0;
  long upper = 0;
  std::optional<std::string> note;
};

/// [0,0] when Arf vanishes; otherwise [0,1] with a caveat that Arf = 1
/// does not by itself force the topological genus to be positive.
TopologicalInterval topological_genus_interval(const KnotPtr& k);

struct BoundReport {
  KnotPtr knot;
  InvariantRecord record;
  std::vector<DegreeBoundRow> rows;  // d = 0 .. window
  long smooth_lower = 0;
  long window = 1;
  std::vector<SurfaceConstruction> upper_candidates;
  long smooth_upper = 0;
  TopologicalInterval topological;
  std::vector<std::string> notes;
};

/// Full report; throws InternalError if the certified lower bound ever
/// exceeds the constructive upper bound. window_override may widen (never
/// narrow) the displayed/searched window.
BoundReport cp2_report(const KnotPtr& k, SignatureOptions opts = {},
                       std::optional<long> window_override = std::nullopt);

}  // namespace cp2
