#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cp2genus/cp2_bounds.hpp"
#include "cp2genus/invariants.hpp"

namespace cp2 {

enum class OutputFormat { Text, Json, Csv, Markdown };

std::optional<OutputFormat> parse_format(const std::string& name);

/// Sign conventions pinned by this engine, shown on every report.
extern const char* const kConventionBanner;

/// Invariant report for one knot; `primes` selects the sigma_p columns
/// (singular points render as "singular").
std::string render_invariants(const KnotPtr& k, const InvariantRecord& record,
                              const std::vector<long>& primes,
                              OutputFormat fmt);

std::string render_bound_report(const BoundReport& report, OutputFormat fmt);

std::string render_thom_table(long max, OutputFormat fmt);
std::string render_twocp2_table(long max, OutputFormat fmt);
std::string render_corollary_table(long max, OutputFormat fmt);

}  // namespace cp2
