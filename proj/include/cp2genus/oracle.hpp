#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cp2genus/cp2_bounds.hpp"
#include "cp2genus/invariants.hpp"

namespace cp2 {

/// Exact cyclotomic signature backend restricted to small matrices, where
/// it serves as the independent oracle for the float pipeline.
/// Throws SizeTooLarge above 8x8 and SingularAtOmega on vanishing forms.
int exact_signature(const SeifertMatrix& v, UnitRoot w);

/// Minimum of combined(d) over |d| <= radius, no early termination.
long brute_force_lower_bound(const InvariantRecord& record, long radius);

struct GoldenEntry {
  std::string expr;
  std::string invariant;  // arf | tau | sigma | alexander | g4
  std::string value;
  std::string provenance;
};

struct GoldenResult {
  GoldenEntry entry;
  bool pass = false;
  std::string actual;
};

/// Built-in seed table (paper values and exact-backend derivations).
std::vector<GoldenEntry> builtin_golden_table();

/// One entry per nonempty non-comment line: `expr ; invariant ; value ;
/// provenance`. Throws SemanticError on malformed lines.
std::vector<GoldenEntry> load_golden_file(const std::string& path);

std::vector<GoldenResult> run_golden_suite(
    const std::vector<GoldenEntry>& entries, SignatureOptions opts = {},
    const TauOverrides& overrides = TauOverrides::standard());

}  // namespace cp2
