#include "cp2genus/render.hpp"

#include <json.hpp>
#include <sstream>

#include "cp2genus/closed_genus.hpp"
#include "cp2genus/errors.hpp"

namespace cp2 {

using ordered_json = nlohmann::ordered_json;

const char* const kConventionBanner =
    "T(p,q) is the closure of the positive braid (s1...s[p-1])^q, so "
    "sigma(T(2,3)) = -2 and tau(T(3,2)) = +1; mirror acts on Seifert forms "
    "as V -> -V^T; the left-handed trefoil is -T(3,2)";

std::optional<OutputFormat> parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "markdown") return OutputFormat::Markdown;
  return std::nullopt;
}

namespace {

std::string tau_text(const TauValue& t) {
  if (!t.known()) return "unknown";
  std::string s = std::to_string(*t.value) + " (" + to_string(t.provenance);
  if (!t.citation.empty()) s += ": " + t.citation;
  return s + ")";
}

ordered_json tau_json(const TauValue& t) {
  ordered_json j;
  j["value"] = t.known() ? ordered_json(*t.value) : ordered_json(nullptr);
  j["provenance"] = to_string(t.provenance);
  if (!t.citation.empty()) j["citation"] = t.citation;
  return j;
}

std::optional<long> try_sigma_p(const InvariantRecord& r, long p) {
  try {
    return r.sigma_p(p);
  } catch (const SingularAtOmega&) {
    return std::nullopt;
  }
}

std::string md_escape(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\";
    out += c;
  }
  return out;
}

ordered_json row_json(const DegreeBoundRow& row) {
  ordered_json rules;
  if (row.tau_bound) rules["tau"] = *row.tau_bound;
  if (row.even_bound) rules["even"] = *row.even_bound;
  ordered_json prime = ordered_json::object();
  for (const auto& [p, b] : row.prime_bounds) prime[std::to_string(p)] = b;
  rules["prime"] = prime;
  return ordered_json{{"d", row.d}, {"rules", rules}, {"combined", row.combined}};
}

std::string prime_cell(const DegreeBoundRow& row) {
  std::string s;
  for (const auto& [p, b] : row.prime_bounds)
    s += (s.empty() ? "" : " ") + std::to_string(p) + ":" + std::to_string(b);
  return s.empty() ? "-" : s;
}

std::string opt_cell(const std::optional<long>& v) {
  return v ? std::to_string(*v) : "-";
}

}  // namespace

std::string render_invariants(const KnotPtr& k, const InvariantRecord& record,
                              const std::vector<long>& primes,
                              OutputFormat fmt) {
  std::ostringstream out;
  const std::string knot = print_knot(k);
  switch (fmt) {
    case OutputFormat::Json: {
      ordered_json j;
      j["knot"] = knot;
      j["conventions"] = kConventionBanner;
      ordered_json inv;
      inv["alexander"] = record.alexander().str();
      inv["sigma"] = record.signature();
      ordered_json sp = ordered_json::object();
      for (long p : primes) {
        auto v = try_sigma_p(record, p);
        sp[std::to_string(p)] = v ? ordered_json(*v) : ordered_json(nullptr);
      }
      inv["sigma_p"] = sp;
      inv["arf"] = record.arf();
      inv["tau"] = tau_json(record.tau());
      inv["g4"] = ordered_json{{"lower", record.g4().lower},
                               {"upper", record.g4().upper}};
      j["invariants"] = inv;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv: {
      out << "invariant,value\n";
      out << "knot," << knot << "\n";
      out << "alexander," << record.alexander().str() << "\n";
      out << "sigma," << record.signature() << "\n";
      for (long p : primes) {
        auto v = try_sigma_p(record, p);
        out << "sigma_" << p << "," << (v ? std::to_string(*v) : "singular")
            << "\n";
      }
      out << "arf," << record.arf() << "\n";
      out << "tau," << tau_text(record.tau()) << "\n";
      out << "g4_lower," << record.g4().lower << "\n";
      out << "g4_upper," << record.g4().upper << "\n";
      out << "conventions," << kConventionBanner << "\n";
      break;
    }
    case OutputFormat::Markdown: {
      out << "# Invariants of `" << knot << "`\n\n";
      out << "| invariant | value |\n|---|---|\n";
      out << "| Delta | `" << record.alexander().str() << "` |\n";
      out << "| sigma | " << record.signature() << " |\n";
      for (long p : primes) {
        auto v = try_sigma_p(record, p);
        out << "| sigma_" << p << " | "
            << (v ? std::to_string(*v) : "singular") << " |\n";
      }
      out << "| Arf | " << record.arf() << " |\n";
      out << "| tau | " << md_escape(tau_text(record.tau())) << " |\n";
      out << "| g4 | [" << record.g4().lower << ", " << record.g4().upper
          << "] |\n";
      out << "\nConventions: " << kConventionBanner << "\n";
      break;
    }
    case OutputFormat::Text: {
      out << "knot: " << knot << "\n";
      out << "conventions: " << kConventionBanner << "\n";
      out << "alexander: " << record.alexander().str() << "\n";
      out << "sigma: " << record.signature() << "\n";
      for (long p : primes) {
        auto v = try_sigma_p(record, p);
        out << "sigma_" << p << ": " << (v ? std::to_string(*v) : "singular")
            << "\n";
      }
      out << "arf: " << record.arf() << "\n";
      out << "tau: " << tau_text(record.tau()) << "\n";
      out << "g4: [" << record.g4().lower << ", " << record.g4().upper
          << "]\n";
      break;
    }
  }
  return out.str();
}

std::string render_bound_report(const BoundReport& report, OutputFormat fmt) {
  std::ostringstream out;
  const std::string knot = print_knot(report.knot);
  switch (fmt) {
    case OutputFormat::Json: {
      ordered_json j;
      j["knot"] = knot;
      j["conventions"] = kConventionBanner;
      ordered_json inv;
      inv["alexander"] = report.record.alexander().str();
      inv["sigma"] = report.record.signature();
      ordered_json sp = ordered_json::object();
      for (const auto& [p, v] : report.record.sigma_p_snapshot())
        sp[std::to_string(p)] = v;
      inv["sigma_p"] = sp;
      inv["arf"] = report.record.arf();
      inv["tau"] = tau_json(report.record.tau());
      inv["g4"] = ordered_json{{"lower", report.record.g4().lower},
                               {"upper", report.record.g4().upper}};
      j["invariants"] = inv;
      ordered_json rows = ordered_json::array();
      for (const DegreeBoundRow& row : report.rows) rows.push_back(row_json(row));
      j["degree_rows"] = rows;
      ordered_json ups = ordered_json::array();
      for (const SurfaceConstruction& c : report.upper_candidates)
        ups.push_back(ordered_json{{"tag", to_string(c.tag)},
                                   {"degree", c.degree},
                                   {"genus", c.genus}});
      j["upper_bounds"] = ups;
      j["smooth"] = ordered_json{{"lower", report.smooth_lower},
                                 {"upper", report.smooth_upper}};
      j["topological"] = ordered_json{{"lower", report.topological.lower},
                                      {"upper", report.topological.upper}};
      j["notes"] = report.notes;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv: {
      out << "# knot: " << knot << "\n";
      out << "# conventions: " << kConventionBanner << "\n";
      out << "# smooth: [" << report.smooth_lower << "," << report.smooth_upper
          << "] topological: [" << report.topological.lower << ","
          << report.topological.upper << "]\n";
      out << "d,tau_bound,even_bound,prime_bounds,combined\n";
      for (const DegreeBoundRow& row : report.rows)
        out << row.d << "," << opt_cell(row.tau_bound) << ","
            << opt_cell(row.even_bound) << "," << prime_cell(row) << ","
            << row.combined << "\n";
      break;
    }
    case OutputFormat::Markdown: {
      out << "# CP^2-genus bounds for `" << knot << "`\n\n";
      out << "Smooth genus in [" << report.smooth_lower << ", "
          << report.smooth_upper << "], topological genus in ["
          << report.topological.lower << ", " << report.topological.upper
          << "].\n\n";
      out << "| d | tau rule | even rule | prime rules | combined |\n";
      out << "|---|---|---|---|---|\n";
      for (const DegreeBoundRow& row : report.rows)
        out << "| " << row.d << " | " << opt_cell(row.tau_bound) << " | "
            << opt_cell(row.even_bound) << " | " << prime_cell(row) << " | "
            << row.combined << " |\n";
      out << "\n| construction | degree | genus |\n|---|---|---|\n";
      for (const SurfaceConstruction& c : report.upper_candidates)
        out << "| " << to_string(c.tag) << " | " << c.degree << " | "
            << c.genus << " |\n";
      if (!report.notes.empty()) {
        out << "\nNotes:\n";
        for (const std::string& n : report.notes) out << "- " << n << "\n";
      }
      out << "\nConventions: " << kConventionBanner << "\n";
      break;
    }
    case OutputFormat::Text: {
      out << "knot: " << knot << "\n";
      out << "conventions: " << kConventionBanner << "\n";
      out << "invariants: sigma=" << report.record.signature()
          << " arf=" << report.record.arf()
          << " tau=" << tau_text(report.record.tau()) << " g4=["
          << report.record.g4().lower << "," << report.record.g4().upper
          << "]\n";
      out << "degree table (certified window " << report.window << "):\n";
      out << "  d  tau  even  primes  combined\n";
      for (const DegreeBoundRow& row : report.rows)
        out << "  " << row.d << "  " << opt_cell(row.tau_bound) << "  "
            << opt_cell(row.even_bound) << "  " << prime_cell(row) << "  "
            << row.combined << "\n";
      out << "upper bounds:\n";
      for (const SurfaceConstruction& c : report.upper_candidates)
        out << "  " << to_string(c.tag) << " degree " << c.degree << " genus "
            << c.genus << "\n";
      out << "smooth genus: [" << report.smooth_lower << ", "
          << report.smooth_upper << "]\n";
      out << "topological genus: [" << report.topological.lower << ", "
          << report.topological.upper << "]\n";
      for (const std::string& n : report.notes) out << "note: " << n << "\n";
      break;
    }
  }
  return out.str();
}

namespace {

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string render_table(const Table& t, OutputFormat fmt) {
  std::ostringstream out;
  switch (fmt) {
    case OutputFormat::Json: {
      ordered_json j;
      j["table"] = t.name;
      j["conventions"] = kConventionBanner;
      ordered_json rows = ordered_json::array();
      for (const auto& row : t.rows) {
        ordered_json r;
        for (std::size_t i = 0; i < t.columns.size(); ++i)
          r[t.columns[i]] = row[i];
        rows.push_back(r);
      }
      j["rows"] = rows;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv: {
      for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << (i ? "," : "") << t.columns[i];
      out << "\n";
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
          out << (i ? "," : "") << row[i];
        out << "\n";
      }
      break;
    }
    case OutputFormat::Markdown: {
      out << "# " << t.name << "\n\n|";
      for (const auto& c : t.columns) out << " " << c << " |";
      out << "\n|";
      for (std::size_t i = 0; i < t.columns.size(); ++i) out << "---|";
      out << "\n";
      for (const auto& row : t.rows) {
        out << "|";
        for (const auto& cell : row) out << " " << cell << " |";
        out << "\n";
      }
      out << "\nConventions: " << kConventionBanner << "\n";
      break;
    }
    case OutputFormat::Text: {
      out << t.name << "\n";
      out << "conventions: " << kConventionBanner << "\n";
      for (const auto& c : t.columns) out << c << "  ";
      out << "\n";
      for (const auto& row : t.rows) {
        for (const auto& cell : row) out << cell << "  ";
        out << "\n";
      }
      break;
    }
  }
  return out.str();
}

}  // namespace

std::string render_thom_table(long max, OutputFormat fmt) {
  Table t{"minimal genus of d times the line in CP^2", {"d", "genus"}, {}};
  for (long d = 0; d <= max; ++d)
    t.rows.push_back({std::to_string(d), std::to_string(thom_genus(d))});
  return render_table(t, fmt);
}

std::string render_corollary_table(long max, OutputFormat fmt) {
  Table t{"null-homologous genus drop for T(n,n-1) in punctured CP^2",
          {"n", "trick_genus", "g4", "difference"},
          {}};
  for (long n = 2; n <= max; ++n) {
    long g4 = (n - 1) * (n - 2) / 2;
    t.rows.push_back({std::to_string(n), std::to_string(trick_genus(n, 0)),
                      std::to_string(g4),
                      std::to_string(corollary_difference(n))});
  }
  return render_table(t, fmt);
}

std::string render_twocp2_table(long max, OutputFormat fmt) {
  Table t{"minimal-genus upper bounds in CP^2 # CP^2",
          {"n", "d", "naive_upper", "trick", "best_upper",
           "difference_achieved", "difference_rhs", "significant"},
          {}};
  for (long n = 1; n <= max; ++n)
    for (long d = 0; d < n; ++d) {
      ClosedClassReport r = closed_report(n, d);
      t.rows.push_back(
          {std::to_string(n), std::to_string(d), std::to_string(r.naive_upper),
           r.trick ? std::to_string(*r.trick) : "-",
           std::to_string(r.best_upper),
           r.difference_achieved ? std::to_string(*r.difference_achieved) : "-",
           r.difference_rhs ? std::to_string(r.difference_rhs->value) : "-",
           r.difference_rhs ? (r.difference_rhs->significant ? "yes" : "no")
                            : "-"});
    }
  return render_table(t, fmt);
}

}  // namespace cp2
