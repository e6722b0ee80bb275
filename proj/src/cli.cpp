#include "nefdual/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nefdual/report.hpp"

namespace nefdual {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Options {
  std::vector<std::string> files;
  std::string parts;
  std::string output;
  std::size_t r = 0;
  bool json = false;
};

// A parsed polytope file with its hull.
struct Loaded {
  PolytopeFile file;
  Polytope polytope;
};

Loaded load(const std::string& path) {
  PolytopeFile file = read_polytope_file(path);
  Polytope p = hull(file.points);
  return {std::move(file), std::move(p)};
}

int cmd_polar(const Options& opt, std::ostream& out, std::ostream& err) {
  Loaded in = load(opt.files.at(0));
  try {
    out << write_polytope_file(polar_dual(in.polytope));
  } catch (const GeometryError& e) {
    err << e.what() << "\n";
    return kExitNegative;
  }
  return kExitOk;
}

int cmd_check_reflexive(const Options& opt, std::ostream& out, std::ostream&) {
  Loaded in = load(opt.files.at(0));
  auto check = check_reflexive(in.polytope);
  if (check.reflexive) {
    out << "reflexive\n";
    return kExitOk;
  }
  out << "not reflexive: " << check.reason << "\n";
  return kExitNegative;
}

int cmd_minkowski(const Options& opt, std::ostream& out, std::ostream&) {
  Loaded a = load(opt.files.at(0));
  Loaded b = load(opt.files.at(1));
  out << write_polytope_file(minkowski_sum(a.polytope, b.polytope));
  return kExitOk;
}

// Shared front half of nef-validate and nef-dual.
struct PartitionInput {
  ReportInput report;
  Polytope delta;
  std::vector<Part> canonical_parts;  // user part order kept
};

PartitionInput load_partition(const std::string& command, const Options& opt) {
  Loaded in = load(opt.files.at(0));
  PartitionInput pi{{command, opt.files.at(0), in.file, {}, {}}, in.polytope, {}};
  pi.report.file_to_canonical = file_to_canonical(pi.report.file, pi.delta);
  pi.report.file_parts = parse_partition_spec(opt.parts, pi.report.file.points.size());
  for (const auto& part : pi.report.file_parts) {
    Part p;
    for (auto v : part) p.push_back(pi.report.file_to_canonical[v]);
    pi.canonical_parts.push_back(std::move(p));
  }
  return pi;
}

int not_reflexive(const Polytope& delta, std::ostream& err) {
  err << "NotReflexive: " << check_reflexive(delta).reason << "\n";
  return kExitNegative;
}

int cmd_nef_validate(const Options& opt, std::ostream& out, std::ostream& err) {
  auto start = Clock::now();
  PartitionInput pi = load_partition("nef-validate", opt);
  if (!is_reflexive(pi.delta)) return not_reflexive(pi.delta, err);
  auto result = validate_partition(pi.delta, pi.canonical_parts);
  const bool valid = std::holds_alternative<NefPartition>(result);
  if (opt.json) {
    out << validation_report(pi.report, pi.delta, result, ms_since(start)).dump(2) << "\n";
  } else if (valid) {
    out << "valid nef-partition: " << format_partition_spec(pi.report.file_parts) << "\n";
  } else {
    out << "invalid: "
        << rejection_text(pi.delta, std::get<Rejection>(result), pi.report.file_to_canonical)
        << "\n";
  }
  return valid ? kExitOk : kExitNegative;
}

int cmd_nef_dual(const Options& opt, std::ostream& out, std::ostream& err) {
  auto start = Clock::now();
  PartitionInput pi = load_partition("nef-dual", opt);
  if (!is_reflexive(pi.delta)) return not_reflexive(pi.delta, err);
  auto validated = validate_partition(pi.delta, pi.canonical_parts);
  if (auto* rej = std::get_if<Rejection>(&validated)) {
    if (opt.json) {
      out << validation_report(pi.report, pi.delta, validated, ms_since(start)).dump(2) << "\n";
    } else {
      out << "invalid: " << rejection_text(pi.delta, *rej, pi.report.file_to_canonical) << "\n";
    }
    return kExitNegative;
  }
  DualityResult result = run_full_duality(std::get<NefPartition>(validated));
  if (opt.json) {
    out << duality_report(pi.report, result, ms_since(start)).dump(2) << "\n";
  } else {
    out << "nabla " << write_polytope_file(result.nabla);
    if (result.dual) out << "dual parts: " << format_partition_spec(result.dual->parts()) << "\n";
    out << "relation matrix:";
    for (const auto& row : check_relations(result.source).matrix) {
      out << " [";
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << to_string(row[i]);
      out << "]";
    }
    out << "\n";
    for (const auto& c : result.checks) {
      out << c.name << ": " << (c.passed ? "pass" : "FAIL " + c.witness) << "\n";
    }
  }
  return result.all_passed() ? kExitOk : kExitNegative;
}

int cmd_nef_enumerate(const Options& opt, std::ostream& out, std::ostream& err) {
  auto start = Clock::now();
  Loaded in = load(opt.files.at(0));
  ReportInput report{"nef-enumerate", opt.files.at(0), in.file, {}, {}};
  report.file_to_canonical = file_to_canonical(in.file, in.polytope);
  if (!is_reflexive(in.polytope)) return not_reflexive(in.polytope, err);
  const std::size_t n = in.polytope.vertices().size();
  if (opt.r < 1 || opt.r > n) {
    throw ParseError("-r must lie in [1, " + std::to_string(n) + "]");
  }
  std::vector<std::vector<Part>> listing;
  for (const auto& np : enumerate_nef_partitions(in.polytope, opt.r)) {
    auto parts = to_file_parts(np.parts(), report.file_to_canonical);
    std::sort(parts.begin(), parts.end());
    listing.push_back(std::move(parts));
  }
  std::sort(listing.begin(), listing.end());
  if (opt.json) {
    out << enumeration_report(report, opt.r, listing, ms_since(start)).dump(2) << "\n";
  } else {
    for (const auto& parts : listing) out << format_partition_spec(parts) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice polytope computations and nef-partition duality", "nefdual"};
  app.require_subcommand(1);
  Options opt;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", opt.output, "Write the result to this file instead of stdout");
  };
  auto* polar = app.add_subcommand("polar", "Print the polar dual polytope");
  polar->add_option("file", opt.files, "Polytope file")->required()->expected(1);
  add_output(polar);

  auto* reflexive = app.add_subcommand("check-reflexive", "Decide whether a polytope is reflexive");
  reflexive->add_option("file", opt.files, "Polytope file")->required()->expected(1);
  add_output(reflexive);

  auto* validate = app.add_subcommand("nef-validate", "Check a vertex partition for nef-ness");
  validate->add_option("file", opt.files, "Polytope file")->required()->expected(1);
  validate->add_option("--parts", opt.parts, "Partition spec, e.g. 0,2;1,3")->required();
  validate->add_flag("--json", opt.json, "Emit a JSON report");
  add_output(validate);

  auto* dual = app.add_subcommand("nef-dual", "Build the dual nef-partition and verify the duality");
  dual->add_option("file", opt.files, "Polytope file")->required()->expected(1);
  dual->add_option("--parts", opt.parts, "Partition spec, e.g. 0,2;1,3")->required();
  dual->add_flag("--json", opt.json, "Emit a JSON report");
  add_output(dual);

  auto* enumerate = app.add_subcommand("nef-enumerate", "List all nef-partitions into r parts");
  enumerate->add_option("file", opt.files, "Polytope file")->required()->expected(1);
  enumerate->add_option("-r", opt.r, "Number of parts")->required();
  enumerate->add_flag("--json", opt.json, "Emit a JSON report");
  add_output(enumerate);

  auto* minkowski = app.add_subcommand("minkowski", "Print the Minkowski sum of two polytopes");
  minkowski->add_option("files", opt.files, "Two polytope files")->required()->expected(2);
  add_output(minkowski);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInputError;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (*polar) code = cmd_polar(opt, buffer, err);
    else if (*reflexive) code = cmd_check_reflexive(opt, buffer, err);
    else if (*validate) code = cmd_nef_validate(opt, buffer, err);
    else if (*dual) code = cmd_nef_dual(opt, buffer, err);
    else if (*enumerate) code = cmd_nef_enumerate(opt, buffer, err);
    else if (*minkowski) code = cmd_minkowski(opt, buffer, err);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DimensionMismatch& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitNegative;
  }

  if (opt.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(opt.output);
    if (!file) {
      err << "input error: cannot write '" << opt.output << "'\n";
      return kExitInputError;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace nefdual
