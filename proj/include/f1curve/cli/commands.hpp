#pragma once

// The f1curve subcommands as functions from parsed arguments to a Report.
// Errors propagate as exceptions; tools/f1curve.cpp maps them to exit codes.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "f1curve/cli/report.hpp"
#include "f1curve/cli/scan.hpp"
#include "f1curve/rational.hpp"

namespace f1curve::cli {

// Printed once per process, to `notes`, the first time a command uses the
// absolute value for the archimedean ramification index.
void note_arch_sign(std::ostream& notes);

// Places of X(q) together with every prime up to prime_bound. CSV output
// gets a trailing "total" row carrying the defect sum.
[[nodiscard]] Report map_report(const Rat& q, std::uint64_t prime_bound,
                                Format format, std::ostream& notes);

[[nodiscard]] Report scan_report(const ScanConfig& cfg, std::ostream& notes);

// a + b = c, gcd(a, b) = 1, 1 <= a <= b.
[[nodiscard]] Report abc_report(const Integer& a, const Integer& b,
                                const Integer& c, std::ostream& notes);

struct ProjlineOptions {
  std::uint64_t m = 1;
  std::uint64_t bound = 10;
};

[[nodiscard]] Report projline_enumerate(const ProjlineOptions& opt);
[[nodiscard]] Report projline_fibers(const ProjlineOptions& opt,
                                     const std::string& target);
// Gamma is the subgroup of (Z/bound)^x generated by `generators`.
[[nodiscard]] Report projline_quotient(const ProjlineOptions& opt,
                                       const std::vector<std::uint64_t>& generators);
[[nodiscard]] Report projline_closure(const ProjlineOptions& opt,
                                      const std::string& x, const std::string& y);

// Sections over the complement of `excluded` (place names) up to `height`.
[[nodiscard]] Report sections_report(const std::vector<std::string>& excluded,
                                     std::uint64_t height);

}  // namespace f1curve::cli
