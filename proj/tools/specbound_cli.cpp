// specbound: spectral-radius expansions, contractions and certified bounds
// for nonnegative matrices.
//
// Exit codes: 0 success, 1 no certificate (compare inconclusive, failed
// example or replay), 2 usage or input error.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "specbound/contraction.hpp"
#include "specbound/matrix_io.hpp"
#include "specbound/report.hpp"
#include "specbound/search.hpp"
#include "specbound/worked_examples.hpp"

namespace sb = specbound;

namespace {

struct Common {
  std::string format;  // empty: by file extension
  std::string output = "text";
  double tol = sb::SpectralDefaults<double>::tol;
  bool deterministic = false;
  bool one_based = true;
};

struct SearchFlags {
  int depth = 1;
  std::string orientations = "row,col";
  std::size_t max_blocks = 0;
  std::uint64_t partition_cap = 5'000'000;
  bool allow_deep = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "Input format: text, csv or json (default: by extension)")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app->add_option("--output", c.output, "Report format")->check(CLI::IsMember({"text", "json"}));
  app->add_option("--tol", c.tol, "Spectral tolerance")
      ->envname("SPECBOUND_TOL")
      ->check(CLI::PositiveNumber);
  app->add_flag("--deterministic", c.deterministic, "Omit the timestamp from JSON output");
  app->add_flag("--one-based,!--zero-based", c.one_based, "Display indices 1-based (default)");
}

void add_search(CLI::App* app, SearchFlags& s) {
  app->add_option("--depth", s.depth, "Chained contraction stages")->check(CLI::PositiveNumber);
  app->add_option("--orientations", s.orientations, "Comma-separated subset of row,col");
  app->add_option("--max-blocks", s.max_blocks, "Largest contracted dimension (0: no cap)");
  app->add_option("--partition-cap", s.partition_cap, "Maximum partitions per stage")
      ->envname("SPECBOUND_PARTITION_CAP")
      ->check(CLI::PositiveNumber);
  app->add_flag("--allow-deep", s.allow_deep, "Permit depth >= 3");
}

sb::SearchOptions to_options(const SearchFlags& s, double tol) {
  sb::SearchOptions o;
  o.orientations.clear();
  std::stringstream in(s.orientations);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) o.orientations.push_back(sb::parse_orientation(item));
  }
  o.depth = s.depth;
  o.allow_deep = s.allow_deep;
  if (s.max_blocks > 0) o.max_blocks = s.max_blocks;
  o.limits.cap = s.partition_cap;
  o.tol = tol;
  return o;
}

sb::Matrix load(const std::string& path, const Common& c) {
  sb::MatrixFormat f = sb::MatrixFormat::Text;
  if (!c.format.empty()) {
    f = sb::format_from_name(c.format);
  } else if (path.ends_with(".json")) {
    f = sb::MatrixFormat::Json;
  } else if (path.ends_with(".csv")) {
    f = sb::MatrixFormat::Csv;
  }
  return sb::read_matrix(path, f);
}

void emit_json(sb::json doc, const Common& c) {
  if (!c.deterministic) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    doc["generated_at"] = buf;
  }
  std::cout << doc.dump(2) << '\n';
}

std::string groups(const sb::IndexPartition& p, const Common& c) { return p.to_group_string(c.one_based); }

void print_estimate(const sb::RhoEstimate<double>& e) {
  std::cout << "rho        " << sb::format_scalar(e.value) << '\n'
            << "enclosure  [" << sb::format_scalar(e.lower) << ", " << sb::format_scalar(e.upper) << "]\n"
            << "iterations " << e.iterations << '\n'
            << "converged  " << (e.converged ? "yes" : "no") << '\n';
}

void print_trail(const sb::Trail& t, const Common& c, const std::string& indent) {
  if (t.stages.empty()) std::cout << indent << "identity (no contraction)\n";
  for (std::size_t s = 0; s < t.stages.size(); ++s) {
    const auto& st = t.stages[s];
    std::cout << indent << "stage " << s + 1 << ": " << sb::to_string(t.direction) << '/'
              << sb::to_string(st.orientation) << " on " << groups(st.partition, c) << '\n';
    std::istringstream rows(sb::format_matrix_text(st.result));
    for (std::string line; std::getline(rows, line);) std::cout << indent << "  " << line << '\n';
  }
  std::cout << indent << "rho in [" << sb::format_scalar(t.estimate.lower) << ", "
            << sb::format_scalar(t.estimate.upper) << "]\n";
}

int cmd_rho(const std::string& file, const Common& c) {
  const auto m = load(file, c);
  const auto e = sb::rho(m, c.tol);
  if (c.output == "json") {
    emit_json({{"kind", "rho"}, {"n", m.n()}, {"estimate", sb::to_json(e)}}, c);
  } else {
    print_estimate(e);
  }
  return 0;
}

int cmd_bounds(const std::string& file, const Common& c, const SearchFlags& s, bool two_by_two) {
  const auto m = load(file, c);
  auto options = to_options(s, c.tol);
  const auto report = two_by_two ? sb::two_by_two_bounds(m, options.orientations)
                                 : sb::bounds_search(m, options);
  if (c.output == "json") {
    emit_json(sb::to_json(report, m), c);
    return 0;
  }
  const auto rs = sb::row_sum_bounds(m);
  std::cout << "row sums   [" << sb::format_scalar(rs.lower) << ", " << sb::format_scalar(rs.upper) << "]\n"
            << "bounds     [" << sb::format_scalar(report.lower) << ", " << sb::format_scalar(report.upper)
            << "]\n"
            << "evaluated  " << report.contractions_evaluated << " contractions\n"
            << "lower certificate:\n";
  print_trail(report.lower_certificate, c, "  ");
  std::cout << "upper certificate:\n";
  print_trail(report.upper_certificate, c, "  ");
  return 0;
}

int cmd_contract(const std::string& file, const Common& c, const std::string& partition,
                 const std::string& direction, const std::string& orientation, bool with_adjust) {
  const auto m = load(file, c);
  const sb::ContractionSpec spec{sb::IndexPartition::parse(partition), sb::parse_direction(direction),
                                 sb::parse_orientation(orientation)};
  const auto k = sb::contract(m, spec);
  if (c.output == "json") {
    sb::json doc = {{"kind", "contraction"},
                    {"partition", spec.partition.to_string()},
                    {"groups", groups(spec.partition, c)},
                    {"direction", sb::to_string(spec.direction)},
                    {"orientation", sb::to_string(spec.orientation)},
                    {"contracted", sb::to_json(k)}};
    if (with_adjust) doc["adjusted"] = sb::to_json(sb::adjust(m, spec));
    emit_json(std::move(doc), c);
    return 0;
  }
  std::cout << sb::format_matrix_text(k);
  if (with_adjust) std::cout << '\n' << sb::format_matrix_text(sb::adjust(m, spec));
  return 0;
}

int cmd_expand(const std::string& file, const Common& c, const std::string& plan_path,
               std::optional<std::uint64_t> seed) {
  const auto m = load(file, c);
  std::ifstream in(plan_path);
  if (!in) throw sb::Error(sb::ErrorKind::Parse, "cannot open plan " + plan_path);
  sb::json plan;
  try {
    plan = sb::json::parse(in);
  } catch (const sb::json::exception& e) {
    throw sb::Error(sb::ErrorKind::Parse, std::string("invalid plan JSON: ") + e.what());
  }
  const auto result = sb::apply_sequence(m, sb::parse_plan(plan, seed));
  const auto before = sb::rho(m, c.tol);
  const auto after = sb::rho(result.matrix, c.tol);
  const double diff = std::abs(after.value - before.value);
  const bool preserved = diff <= 1e-8 * std::max(1.0, before.value);
  if (c.output == "json") {
    emit_json({{"kind", "expansion"},
               {"dimensions", result.dimensions},
               {"matrix", sb::to_json(result.matrix)},
               {"rho_before", sb::to_json(before)},
               {"rho_after", sb::to_json(after)},
               {"abs_difference", diff},
               {"preserved", preserved}},
              c);
    return 0;
  }
  std::cout << sb::format_matrix_text(result.matrix) << '\n'
            << "rho before " << sb::format_scalar(before.value) << '\n'
            << "rho after  " << sb::format_scalar(after.value) << '\n'
            << "preserved  " << (preserved ? "yes" : "no") << " (|diff| = " << sb::format_scalar(diff, 3)
            << ")\n";
  return 0;
}

int cmd_compare(const std::string& fa, const std::string& fb, const Common& c, const SearchFlags& s) {
  const auto a = load(fa, c);
  const auto b = load(fb, c);
  const auto cert = sb::compare(a, b, to_options(s, c.tol));
  if (c.output == "json") {
    emit_json(sb::to_json(cert), c);
  } else {
    std::cout << "conclusion " << sb::to_string(cert.conclusion) << '\n'
              << "rho(A up)   <= " << sb::format_scalar(cert.a_trail.estimate.upper) << '\n'
              << "rho(B down) >= " << sb::format_scalar(cert.b_trail.estimate.lower) << '\n'
              << "A trail (up):\n";
    print_trail(cert.a_trail, c, "  ");
    std::cout << "B trail (down):\n";
    print_trail(cert.b_trail, c, "  ");
  }
  return cert.conclusion == sb::Conclusion::ALeB ? 0 : 1;
}

int cmd_verify(const std::vector<std::string>& files, const std::string& cert_path, const Common& c) {
  std::ifstream in(cert_path);
  if (!in) throw sb::Error(sb::ErrorKind::Parse, "cannot open certificate " + cert_path);
  sb::json doc;
  try {
    doc = sb::json::parse(in);
  } catch (const sb::json::exception& e) {
    throw sb::Error(sb::ErrorKind::Parse, std::string("invalid certificate JSON: ") + e.what());
  }
  const std::string kind = doc.value("kind", "");
  std::vector<std::pair<std::string, sb::ReplayResult>> checks;
  if (kind == "bounds") {
    if (files.size() != 1) throw sb::Error(sb::ErrorKind::Parse, "bounds certificates need one matrix");
    const auto m = load(files[0], c);
    checks.emplace_back("lower", sb::replay(m, sb::trail_from_json(doc.at("lower_certificate")), c.tol));
    checks.emplace_back("upper", sb::replay(m, sb::trail_from_json(doc.at("upper_certificate")), c.tol));
  } else if (kind == "comparison") {
    if (files.size() != 2) throw sb::Error(sb::ErrorKind::Parse, "comparison certificates need two matrices");
    checks.emplace_back("A", sb::replay(load(files[0], c), sb::trail_from_json(doc.at("a_trail")), c.tol));
    checks.emplace_back("B", sb::replay(load(files[1], c), sb::trail_from_json(doc.at("b_trail")), c.tol));
  } else {
    throw sb::Error(sb::ErrorKind::Parse, "certificate kind must be bounds or comparison");
  }
  bool ok = true;
  for (const auto& [name, r] : checks) ok = ok && r.matches;
  if (c.output == "json") {
    sb::json results = sb::json::array();
    for (const auto& [name, r] : checks) {
      results.push_back({{"trail", name}, {"matches", r.matches}, {"detail", r.detail}});
    }
    emit_json({{"kind", "verification"}, {"certificate_kind", kind}, {"valid", ok}, {"checks", results}}, c);
  } else {
    for (const auto& [name, r] : checks) {
      std::cout << name << ": " << (r.matches ? "replayed" : "MISMATCH")
                << (r.detail.empty() ? "" : " (" + r.detail + ")") << '\n';
    }
  }
  return ok ? 0 : 1;
}

int cmd_paper_examples(bool exact_check) {
  const auto results = sb::examples::run_all(exact_check);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << '\n';
    if (!r.passed) {
      ++failed;
      std::cout << "     " << r.detail << '\n';
    }
  }
  std::cout << results.size() - failed << '/' << results.size() << " examples passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral-radius expansions, contractions and certified bounds"};
  app.require_subcommand(1);
  Common common;
  SearchFlags search;

  std::string file, file_b, partition, direction, orientation = "row", plan, certificate;
  std::vector<std::string> files;
  bool two_by_two = false, with_adjust = false, exact_check = false;
  std::optional<std::uint64_t> seed;

  auto* rho = app.add_subcommand("rho", "Spectral radius with a certified enclosure");
  rho->add_option("FILE", file)->required()->check(CLI::ExistingFile);
  add_common(rho, common);

  auto* bounds = app.add_subcommand("bounds", "Contraction-search bounds on the spectral radius");
  bounds->add_option("FILE", file)->required()->check(CLI::ExistingFile);
  bounds->add_flag("--two-by-two", two_by_two, "Only bipartitions (closed-form 2x2 bounds)");
  add_common(bounds, common);
  add_search(bounds, search);

  auto* contract = app.add_subcommand("contract", "Downward/upward row or column sum contraction");
  contract->add_option("FILE", file)->required()->check(CLI::ExistingFile);
  contract->add_option("--partition", partition, "Group label per index, e.g. 0,1,1,1,2,2")->required();
  contract->add_option("--direction", direction)->required()->check(CLI::IsMember({"down", "up"}));
  contract->add_option("--orientation", orientation, "row (default) or column")
      ->check(CLI::IsMember({"row", "col", "column"}));
  contract->add_flag("--adjust", with_adjust, "Also print the same-dimension adjusted matrix");
  add_common(contract, common);

  auto* expand = app.add_subcommand("expand", "Spectral-radius preserving expansion");
  expand->add_option("FILE", file)->required()->check(CLI::ExistingFile);
  expand->add_option("--plan", plan, "Expansion plan JSON")->required()->check(CLI::ExistingFile);
  expand->add_option("--seed", seed, "Seed for every seeded-random fill");
  add_common(expand, common);

  auto* cmp = app.add_subcommand("compare", "Certify rho(A) <= rho(B)");
  cmp->add_option("FILE_A", file)->required()->check(CLI::ExistingFile);
  cmp->add_option("FILE_B", file_b)->required()->check(CLI::ExistingFile);
  add_common(cmp, common);
  add_search(cmp, search);

  auto* verify = app.add_subcommand("verify", "Replay a bounds or comparison certificate");
  verify->add_option("FILES", files, "Matrix (bounds) or A and B (comparison)")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--certificate", certificate)->required()->check(CLI::ExistingFile);
  add_common(verify, common);

  auto* examples = app.add_subcommand("paper-examples", "Run the embedded worked examples");
  examples->add_flag("--exact-check", exact_check, "Compare integer-valued results exactly");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*rho) return cmd_rho(file, common);
    if (*bounds) return cmd_bounds(file, common, search, two_by_two);
    if (*contract) return cmd_contract(file, common, partition, direction, orientation, with_adjust);
    if (*expand) return cmd_expand(file, common, plan, seed);
    if (*cmp) return cmd_compare(file, file_b, common, search);
    if (*verify) return cmd_verify(files, certificate, common);
    if (*examples) return cmd_paper_examples(exact_check);
  } catch (const sb::Error& e) {
    std::cerr << "error [" << sb::to_string(e.kind()) << "]: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
