#include <CLI11.hpp>
#include <iostream>

#include "cp2genus/commands.hpp"

namespace {

struct FormatFlag {
  std::string name = "text";
};

void add_common_flags(CLI::App* app, FormatFlag* fmt, cp2::CommandOptions* opts,
                      std::string* backend) {
  app->add_option("--format", fmt->name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "markdown"}))
      ->capture_default_str();
  app->add_option("--sigma-backend", *backend,
                  "Signature backend for Levine-Tristram evaluations")
      ->check(CLI::IsMember({"float", "exact"}))
      ->capture_default_str();
  app->add_option("--tol", opts->sig.tol,
                  "Relative eigenvalue tolerance of the float backend")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified genus bounds for knots in punctured CP^2 and for "
               "closed surfaces in CP^2 # CP^2"};
  app.require_subcommand(1);

  cp2::CommandOptions opts;
  FormatFlag fmt;
  std::string backend = "float";
  std::string expr;
  std::string table_kind;
  long table_max = 10;
  long window = 0;

  CLI::App* inv = app.add_subcommand("invariants",
                                     "Alexander polynomial, signatures, Arf, "
                                     "tau and slice-genus interval of a knot");
  inv->add_option("expr", expr, "Knot expression, e.g. \"T(3,2) # -T(3,2)\"")
      ->required();
  inv->add_option("--primes", opts.primes,
                  "Odd primes for the sigma_p columns")
      ->delimiter(',');
  add_common_flags(inv, &fmt, &opts, &backend);

  CLI::App* cp2cmd = app.add_subcommand(
      "cp2", "Lower/upper bounds for the smooth and topological CP^2-genus");
  cp2cmd->add_option("expr", expr, "Knot expression")->required();
  cp2cmd->add_option("--window", window,
                     "Widen the certified degree-search window");
  add_common_flags(cp2cmd, &fmt, &opts, &backend);

  CLI::App* tables = app.add_subcommand(
      "tables", "Genus tables: thom, twocp2 or corollary");
  tables->add_option("kind", table_kind, "Table kind")->required();
  tables->add_option("--max", table_max, "Largest degree / class coefficient")
      ->capture_default_str();
  add_common_flags(tables, &fmt, &opts, &backend);

  CLI::App* check = app.add_subcommand(
      "paper-check", "Run the golden tables, exact identities and oracle "
                     "cross-checks against the live engine");
  check->add_option("--golden", opts.golden_path,
                    "Alternate golden-table file");
  add_common_flags(check, &fmt, &opts, &backend);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cp2::kExitUsage;
  }

  opts.format = *cp2::parse_format(fmt.name);
  opts.sig.backend = backend == "exact" ? cp2::SignatureBackend::Exact
                                        : cp2::SignatureBackend::Float;
  if (window > 0) opts.window = window;

  if (inv->parsed())
    return cp2::cmd_invariants(expr, opts, std::cout, std::cerr);
  if (cp2cmd->parsed()) return cp2::cmd_cp2(expr, opts, std::cout, std::cerr);
  if (tables->parsed())
    return cp2::cmd_tables(table_kind, table_max, opts, std::cout, std::cerr);
  if (check->parsed()) return cp2::cmd_paper_check(opts, std::cout, std::cerr);
  return cp2::kExitUsage;
}
