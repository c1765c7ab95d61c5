// f1curve: place-to-point maps of rationals, defect-sum scans, ABC triples,
// the strong congruence space of P^1, and global sections.
//
// Exit codes: 0 ok, 2 bad input, 3 magnitude limit, 1 internal error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "f1curve/cli/commands.hpp"
#include "f1curve/errors.hpp"

namespace {

using namespace f1curve;
using namespace f1curve::cli;

Integer parse_positive_integer(const std::string& text) {
  const Rat r = Rat::parse(text);
  if (r.b() != 1) {
    throw ArgumentError("not an integer: '" + text + "'");
  }
  return r.a();
}

int run(int argc, char** argv) {
  CLI::App app{"Places of Q mapped into the projective line over F1"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_text = "table";
  std::string output_path;
  app.add_option("--format", format_text, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("-o,--output", output_path, "write the report to a file");

  auto* map = app.add_subcommand("map", "images, ramification and defects of q");
  std::string q_text;
  std::uint64_t prime_bound = 0;
  map->add_option("q", q_text, "a/b")->required();
  map->add_option("--primes", prime_bound, "also list every prime up to N");

  auto* scan = app.add_subcommand("scan", "top defect sums S(q) over a height range");
  ScanConfig cfg;
  int workers = 0;
  std::string checkpoint;
  scan->add_option("--min", cfg.height_min, "smallest height max(|a|, b)");
  scan->add_option("--max", cfg.height_max, "largest height");
  scan->add_option("--top", cfg.top_k, "number of rows");
  scan->add_option("--workers", workers, "worker threads (default F1CURVE_THREADS or 1)");
  scan->add_option("--checkpoint", checkpoint, "resume from / save progress to a file");

  auto* abc = app.add_subcommand("abc", "S(c/b) next to the ABC quality of a + b = c");
  std::string abc_text[3];
  abc->add_option("a", abc_text[0])->required();
  abc->add_option("b", abc_text[1])->required();
  abc->add_option("c", abc_text[2])->required();

  auto* projline = app.add_subcommand("projline", "points of P^1 over F1^m");
  projline->require_subcommand(1);
  ProjlineOptions popt;
  projline->add_option("--m", popt.m, "coefficient level m, F = mu_m u {0}");
  projline->add_option("--bound", popt.bound, "bound on n (level N for quotient)");
  auto* enumerate = projline->add_subcommand("enumerate", "all points with n <= bound");
  auto* fibers = projline->add_subcommand("fibers", "Phi_F^-1 of a point");
  std::string fiber_target;
  fibers->add_option("point", fiber_target, "e.g. [6] or [3,1/2]")->required();
  auto* quotient =
      projline->add_subcommand("quotient", "b_Gamma at level N = bound, Gamma = <generators>");
  std::vector<std::uint64_t> generators;
  quotient->add_option("generators", generators, "units mod N");
  auto* closure = projline->add_subcommand("closure", "specialization between two points");
  std::string closure_x;
  std::string closure_y;
  closure->add_option("x", closure_x)->required();
  closure->add_option("y", closure_y)->required();

  auto* sections = app.add_subcommand("sections", "sections over Spec Z-bar minus S");
  std::vector<std::string> excluded;
  std::uint64_t height = 10;
  sections->add_option("--exclude", excluded, "excluded places: primes, arch")->delimiter(',');
  sections->add_option("--height", height, "height bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const Format format = parse_format(format_text);
  Report report;
  if (*map) {
    report = map_report(Rat::parse(q_text), prime_bound, format, std::cerr);
  } else if (*scan) {
    cfg.workers = workers > 0 ? static_cast<unsigned>(workers) : default_workers();
    if (!checkpoint.empty()) {
      cfg.checkpoint = checkpoint;
    }
    report = scan_report(cfg, std::cerr);
  } else if (*abc) {
    report = abc_report(parse_positive_integer(abc_text[0]),
                        parse_positive_integer(abc_text[1]),
                        parse_positive_integer(abc_text[2]), std::cerr);
  } else if (*enumerate) {
    report = projline_enumerate(popt);
  } else if (*fibers) {
    report = projline_fibers(popt, fiber_target);
  } else if (*quotient) {
    report = projline_quotient(popt, generators);
  } else if (*closure) {
    report = projline_closure(popt, closure_x, closure_y);
  } else if (*sections) {
    report = sections_report(excluded, height);
  }

  std::ostringstream text;
  report.render(format, text);
  if (output_path.empty()) {
    std::cout << text.str() << std::flush;
  } else {
    std::ofstream out(output_path, std::ios::trunc);
    out << text.str();
    if (!out) {
      throw ArgumentError("cannot write " + output_path);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const f1curve::ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const f1curve::MagnitudeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
