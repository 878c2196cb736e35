#ifndef SUPERCOH_CLI_HPP
#define SUPERCOH_CLI_HPP

#include <supercoh/algebra.hpp>
#include <supercoh/cohomology.hpp>
#include <supercoh/differential.hpp>
#include <supercoh/errors.hpp>
#include <supercoh/formulas.hpp>
#include <supercoh/io.hpp>
#include <supercoh/verify.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace supercoh::cli {

enum ExitCode : int { ok = 0, usage = 1, validation = 2, resource = 3, mismatch = 4 };

namespace detail {

struct Common {
  std::string method = "rank";
  std::string format = "text";
  std::size_t column_cap = kDefaultColumnCap;
};

inline void add_common(CLI::App& cmd, Common& c, bool with_method) {
  if (with_method)
    cmd.add_option("--method", c.method, "rank, formula or both")
        ->check(CLI::IsMember({"rank", "formula", "both"}))
        ->capture_default_str();
  cmd.add_option("--format", c.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd.add_option("--column-cap", c.column_cap, "refuse matrices with more columns than this")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Rank and/or formula tables; "both" interleaves them by degree and fails
/// with `mismatch` when they disagree.
template <class FormulaFn>
int tables(const LieSuperalgebra& g, int q_max, const Common& c, FormulaFn formula, std::ostream& out,
           std::ostream& err) {
  std::vector<CohomologyReport> rank_side, formula_side;
  if (c.method != "formula") rank_side = betti_table(g, q_max, c.column_cap);
  if (c.method != "rank")
    for (int q = 0; q <= q_max; ++q) formula_side.push_back(formula(q));

  std::vector<CohomologyReport> all;
  int status = ok;
  for (int q = 0; q <= q_max; ++q) {
    if (!rank_side.empty()) all.push_back(rank_side[q]);
    if (!formula_side.empty()) all.push_back(formula_side[q]);
    if (!rank_side.empty() && !formula_side.empty() &&
        rank_side[q].dim_cohomology != formula_side[q].dim_cohomology) {
      err << "mismatch at q=" << q << ": rank " << rank_side[q].dim_cohomology << ", "
          << to_string(formula_side[q].method) << ' ' << formula_side[q].dim_cohomology << '\n';
      status = mismatch;
    }
  }
  out << emit_report(all, *parse_format(c.format));
  return status;
}

} // namespace detail

/// Runs the command line; args excludes the program name. Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cohomology of Heisenberg Lie superalgebras", "supercoh"};
  app.require_subcommand(1);

  detail::Common even_opts, odd_opts, compute_opts, verify_opts, matrix_opts;
  int n = 1, m = 1, q_max = 0, q = 0;
  int n_min = 1, n_max = 1, m_min = 1, m_max = 1;
  std::string algebra_path, family;

  auto* even = app.add_subcommand("even", "Betti numbers of h_{n,m} (even center)");
  even->add_option("--n", n, "n >= 1")->required()->check(CLI::PositiveNumber);
  even->add_option("--m", m, "m >= 1")->required()->check(CLI::PositiveNumber);
  even->add_option("--q-max", q_max, "largest degree")->required()->check(CLI::NonNegativeNumber);
  detail::add_common(*even, even_opts, true);

  auto* odd = app.add_subcommand("odd", "Betti numbers of h_n (odd center)");
  odd->add_option("--n", n, "n >= 1")->required()->check(CLI::PositiveNumber);
  odd->add_option("--q-max", q_max, "largest degree")->required()->check(CLI::NonNegativeNumber);
  detail::add_common(*odd, odd_opts, true);

  auto* compute = app.add_subcommand("compute", "Betti numbers of an algebra read from a file");
  compute->add_option("--algebra", algebra_path, "algebra file (YAML or JSON)")->required();
  compute->add_option("--q-max", q_max, "largest degree")->required()->check(CLI::NonNegativeNumber);
  detail::add_common(*compute, compute_opts, true);

  auto* verify = app.add_subcommand("verify", "Compare the closed forms with the rank oracle");
  verify->add_option("--family", family, "even or odd")->required()->check(CLI::IsMember({"even", "odd"}));
  verify->add_option("--n-min", n_min, "smallest n")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--n-max", n_max, "largest n")->required()->check(CLI::PositiveNumber);
  verify->add_option("--m-min", m_min, "smallest m (even family)")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--m-max", m_max, "largest m (even family)")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--q-max", q_max, "largest degree")->required()->check(CLI::NonNegativeNumber);
  detail::add_common(*verify, verify_opts, false);

  auto* describe = app.add_subcommand("describe", "Print an algebra in the file format");
  auto* matrix = app.add_subcommand("matrix", "Dump the coboundary matrix d_q");
  for (auto* cmd : {describe, matrix}) {
    cmd->add_option("--family", family, "even or odd")->check(CLI::IsMember({"even", "odd"}));
    cmd->add_option("--n", n, "n >= 1")->check(CLI::PositiveNumber);
    cmd->add_option("--m", m, "m >= 1 (even family)")->check(CLI::PositiveNumber);
    cmd->add_option("--algebra", algebra_path, "algebra file instead of a family");
  }
  matrix->add_option("--q", q, "source degree")->required()->check(CLI::NonNegativeNumber);
  matrix->add_option("--column-cap", matrix_opts.column_cap, "refuse matrices with more columns than this")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  auto selected = [&]() -> LieSuperalgebra {
    if (!algebra_path.empty()) return parse_algebra(detail::read_file(algebra_path));
    if (family == "even") return make_heisenberg_even(n, m);
    if (family == "odd") return make_heisenberg_odd(n);
    throw CLI::ValidationError("--family or --algebra is required");
  };

  try {
    if (*even) {
      const auto g = make_heisenberg_even(n, m);
      return detail::tables(g, q_max, even_opts, [&](int d) { return formulas::report_even(n, m, d); }, out, err);
    }
    if (*odd) {
      const auto g = make_heisenberg_odd(n);
      return detail::tables(g, q_max, odd_opts, [&](int d) { return formulas::report_odd(n, d); }, out, err);
    }
    if (*compute) {
      if (compute_opts.method != "rank") {
        err << "error: closed forms exist only for the built-in families; use --method rank\n";
        return usage;
      }
      const auto g = parse_algebra(detail::read_file(algebra_path));
      out << emit_report(betti_table(g, q_max, compute_opts.column_cap), *parse_format(compute_opts.format));
      return ok;
    }
    if (*verify) {
      VerifyGrid grid{n_min, n_max, m_min, m_max, q_max, verify_opts.column_cap};
      const auto result = verify_family(*parse_family(family), grid);
      out << emit_verify(result, *parse_format(verify_opts.format));
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(result.elapsed).count();
      err << "verify " << family << ": " << result.comparisons.size() << " comparisons in " << ms << " ms\n";
      for (const auto& d : result.displayed_deviations())
        err << "  displayed formula deviates at n=" << d.n << " q=" << d.q << ": " << d.formula_value
            << " vs oracle " << d.oracle_value << '\n';
      return result.failed() ? mismatch : ok;
    }
    if (*describe) {
      out << emit_algebra(selected());
      return ok;
    }
    if (*matrix) {
      write_matrix(out, differential_matrix(selected(), q, matrix_opts.column_cap));
      return ok;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return validation;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return resource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

} // namespace supercoh::cli

#endif
