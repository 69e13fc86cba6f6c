#include "agmpi/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <ostream>
#include <string_view>

#include "agmpi/agm.hpp"
#include "agmpi/borwein.hpp"
#include "agmpi/convergence.hpp"
#include "agmpi/equivalence.hpp"
#include "agmpi/integral_oracle.hpp"

namespace agmpi::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::int64_t parse_count(const std::string& text, const char* what,
                         std::int64_t minimum) {
  if (text.empty()) throw UsageError(std::string(what) + ": empty value");
  std::int64_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw UsageError(std::string(what) + ": not a number: " + text);
    if (value > (INT64_MAX - (c - '0')) / 10)
      throw UsageError(std::string(what) + ": out of range: " + text);
    value = value * 10 + (c - '0');
  }
  if (value < minimum)
    throw UsageError(std::string(what) + ": must be at least " +
                     std::to_string(minimum));
  return value;
}

std::string format_double(double v, int precision = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

std::string compute_digits(const CliConfig& cfg) {
  PrecisionContext ctx = PrecisionContext::make(cfg.digits, cfg.guard);
  std::int64_t planned = required_iterations(cfg.digits);
  switch (cfg.algorithm) {
    case Algorithm::kBrentSalamin: {
      std::int64_t n = cfg.iterations.value_or(planned);
      AgmState st = agm_init(ctx);
      for (std::int64_t i = 0; i < n; ++i) st = agm_step(st);
      return to_decimal_string(agm_output(st), cfg.digits);
    }
    case Algorithm::kBorweinQuadratic: {
      std::int64_t n = cfg.iterations.value_or(planned);
      BorweinQuadState st = bb2_init(ctx);
      for (std::int64_t i = 0; i < n; ++i) st = bb2_step(st);
      return to_decimal_string(bb2_output(st), cfg.digits);
    }
    case Algorithm::kBorweinQuartic: {
      // one quartic step doubles a quadratic one: half the plan, rounded up
      std::int64_t n = cfg.iterations.value_or((planned + 1) / 2);
      BorweinQuartState st = bb4_init(ctx);
      for (std::int64_t i = 0; i < n; ++i) st = bb4_step(st);
      return to_decimal_string(bb4_output(st), cfg.digits);
    }
  }
  throw std::logic_error("compute_digits: unreachable");
}

int run_compute(const CliConfig& cfg, std::ostream& out) {
  out << compute_digits(cfg) << '\n';
  return 0;
}

int run_table(const CliConfig& cfg, std::ostream& out) {
  std::int64_t n = cfg.iterations.value_or(required_iterations(cfg.digits));
  if (n < 1) throw UsageError("table: needs at least one iteration");
  PrecisionContext ctx = PrecisionContext::make(cfg.digits, cfg.guard);
  ConvergenceReport report = build_report((int)n, ctx);
  if (cfg.format == OutputFormat::kJson) {
    ordered_json doc;
    doc["digits"] = cfg.digits;
    doc["reference_iterations"] = report.reference_iterations;
    doc["reference_digits"] = report.reference_digits;
    ordered_json entries = ordered_json::array();
    for (const ConvergenceEntry& e : report.entries) {
      ordered_json row;
      row["n"] = e.n;
      row["output_prefix"] = e.output_prefix;
      row["correct_digits"] = e.correct_digits;
      if (e.log10_bound) row["log10_bound"] = *e.log10_bound;
      if (e.empirical_ratio) row["empirical_ratio"] = *e.empirical_ratio;
      entries.push_back(std::move(row));
    }
    doc["entries"] = std::move(entries);
    out << doc.dump(2) << '\n';
  } else {
    out << "  n  correct  bound(log10)  ratio       p_n\n";
    for (const ConvergenceEntry& e : report.entries) {
      char line[128];
      std::string bound = e.log10_bound ? format_double(*e.log10_bound, 4) : "-";
      std::string ratio = e.empirical_ratio ? format_double(*e.empirical_ratio, 3) : "-";
      std::snprintf(line, sizeof line, "%3d  %7lld  %-12s  %-10s  ", e.n,
                    (long long)e.correct_digits, bound.c_str(), ratio.c_str());
      out << line << e.output_prefix << '\n';
    }
    out << "reference (" << report.reference_iterations
        << " iterations): " << report.reference_digits.substr(0, 50) << "\n";
  }
  return 0;
}

void append_deviation(ordered_json& doc, const char* key, const BigFixed& dev) {
  doc[key] = to_science_string(dev);
  doc[std::string(key) + "_log10"] =
      dev.is_zero() ? ordered_json(nullptr) : ordered_json(log10_abs(dev));
}

int run_verify(const CliConfig& cfg, std::ostream& out) {
  std::int64_t n = cfg.iterations.value_or(required_iterations(cfg.digits));
  PrecisionContext ctx = PrecisionContext::make(cfg.digits, cfg.guard);
  EquivalenceReport report = check_all((int)n, ctx);
  if (cfg.format == OutputFormat::kJson) {
    ordered_json doc;
    doc["iterations"] = n;
    doc["digits"] = cfg.digits;
    doc["guard"] = cfg.guard;
    doc["tolerance"] = to_science_string(report.tolerance);
    append_deviation(doc, "max_dev_e", report.max_dev_e);
    append_deviation(doc, "max_dev_k", report.max_dev_k);
    append_deviation(doc, "max_dev_y", report.max_dev_y);
    append_deviation(doc, "max_dev_z", report.max_dev_z);
    append_deviation(doc, "max_dev_outputs", report.max_dev_outputs);
    doc["pass"] = report.pass;
    out << doc.dump(2) << '\n';
  } else {
    out << "iterations:      " << n << '\n';
    out << "tolerance:       " << to_science_string(report.tolerance) << '\n';
    out << "max_dev_e:       " << to_science_string(report.max_dev_e) << '\n';
    out << "max_dev_k:       " << to_science_string(report.max_dev_k) << '\n';
    out << "max_dev_y:       " << to_science_string(report.max_dev_y) << '\n';
    out << "max_dev_z:       " << to_science_string(report.max_dev_z) << '\n';
    out << "max_dev_outputs: " << to_science_string(report.max_dev_outputs) << '\n';
    out << "pass:            " << (report.pass ? "true" : "false") << '\n';
  }
  return report.pass ? 0 : 1;
}

int run_oracle(const CliConfig& cfg, std::ostream& out) {
  QuadratureSettings qs;
  std::vector<IdentityCheck> checks = run_standard_checks(qs);
  bool all_pass = true;
  if (cfg.format == OutputFormat::kJson) {
    ordered_json doc;
    ordered_json rows = ordered_json::array();
    for (const IdentityCheck& c : checks) {
      all_pass = all_pass && c.pass;
      ordered_json row;
      row["name"] = c.name;
      row["lhs"] = c.lhs;
      row["rhs"] = c.rhs;
      row["abs_dev"] = c.abs_dev;
      row["tol"] = c.tol;
      row["pass"] = c.pass;
      rows.push_back(std::move(row));
    }
    doc["checks"] = std::move(rows);
    doc["pass"] = all_pass;
    out << doc.dump(2) << '\n';
  } else {
    for (const IdentityCheck& c : checks) {
      all_pass = all_pass && c.pass;
      out << (c.pass ? "[ ok ] " : "[FAIL] ") << c.name
          << ": |dev| = " << format_double(c.abs_dev, 3)
          << " (tol " << format_double(c.tol, 3) << ")\n";
    }
    out << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
  }
  return all_pass ? 0 : 1;
}

}  // namespace

std::string usage_text() {
  return
      "usage: agmpi <command> [flags]\n"
      "\n"
      "commands:\n"
      "  compute   print pi digits\n"
      "  table     print the per-iteration convergence table\n"
      "  verify    run the three algorithms side by side and compare\n"
      "  oracle    run the numerical identity checks\n"
      "\n"
      "flags:\n"
      "  --digits N       decimal digits (default 100)\n"
      "  --algorithm A    bs | bb2 | bb4 (default bs)\n"
      "  --guard N        extra working digits (default 50)\n"
      "  --iterations N   fixed iteration count (default: planned from digits)\n"
      "  --format F       text | json (default text)\n"
      "  --help           this message\n";
}

CliConfig parse_args(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("missing command");
  CliConfig cfg;
  const std::string& command = args[0];
  if (command == "compute") {
    cfg.command = Command::kCompute;
  } else if (command == "table") {
    cfg.command = Command::kTable;
  } else if (command == "verify") {
    cfg.command = Command::kVerify;
  } else if (command == "oracle") {
    cfg.command = Command::kOracle;
  } else {
    throw UsageError("unknown command: " + command);
  }
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& flag = args[i];
    auto value = [&]() -> const std::string& {
      if (i + 1 >= args.size()) throw UsageError("missing value for " + flag);
      return args[++i];
    };
    if (flag == "--digits") {
      cfg.digits = parse_count(value(), "--digits", 1);
    } else if (flag == "--guard") {
      cfg.guard = parse_count(value(), "--guard", 0);
    } else if (flag == "--iterations") {
      cfg.iterations = parse_count(value(), "--iterations", 0);
    } else if (flag == "--algorithm") {
      const std::string& name = value();
      if (name == "bs") cfg.algorithm = Algorithm::kBrentSalamin;
      else if (name == "bb2") cfg.algorithm = Algorithm::kBorweinQuadratic;
      else if (name == "bb4") cfg.algorithm = Algorithm::kBorweinQuartic;
      else throw UsageError("unknown algorithm: " + name);
    } else if (flag == "--format") {
      const std::string& name = value();
      if (name == "text") cfg.format = OutputFormat::kText;
      else if (name == "json") cfg.format = OutputFormat::kJson;
      else throw UsageError("unknown format: " + name);
    } else {
      throw UsageError("unknown flag: " + flag);
    }
  }
  return cfg;
}

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::kCompute: return run_compute(cfg, out);
      case Command::kTable: return run_table(cfg, out);
      case Command::kVerify: return run_verify(cfg, out);
      case Command::kOracle: return run_oracle(cfg, out);
    }
    return 2;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  for (const std::string& a : args) {
    if (a == "--help" || a == "-h") {
      std::cout << usage_text();
      return 0;
    }
  }
  try {
    CliConfig cfg = parse_args(args);
    return run(cfg, std::cout, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << usage_text();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace agmpi::cli
