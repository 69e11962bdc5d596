#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "locdec/decomp.hpp"

namespace locdec::cli {

/// Declarations of one problem file, in file order where order matters.
struct ProblemFile {
  Ring ring;
  std::vector<std::pair<std::string, LRMatrix>> matrices;
  std::map<std::string, Polynomial> polys;
  std::map<std::string, std::vector<Polynomial>> ideals;
  std::map<std::string, std::vector<Polynomial>> maps;

  /// Named matrix, or the only one when name is empty.
  const LRMatrix& matrix(std::string_view name) const;
  const Polynomial& poly(std::string_view name) const;
  /// An ideal name, or a polynomial name read as a principal ideal.
  LocalIdeal ideal(std::string_view name) const;
  const std::vector<Polynomial>& map(std::string_view name) const;
};

ProblemFile parse_problem(std::string_view text);

enum class Command { Fitting, Check, Decompose, Split, Mf, Jacobian, Assumptions };
std::optional<Command> parse_command(std::string_view name);
std::string to_string(Command c);

struct Flags {
  std::string matrix;
  std::optional<std::size_t> fitting_index;
  std::string f1, f2;
  std::string j1, j2;
  /// Names, optionally with a multiplicity as "name^p" (mf only).
  std::vector<std::string> factors;
  std::string map;
  bool skip_kernel_check = false;
  unsigned max_order = kDefaultMaxOrder;
  std::optional<unsigned long> seed;
  bool timing = false;
};

namespace exit_code {
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInapplicable = 2;
constexpr int kInputError = 3;
constexpr int kResourceBound = 4;
constexpr int kInternalError = 5;
}  // namespace exit_code

struct ReportDocument {
  struct Check {
    std::string name;
    bool passed;
    std::string witness;
  };
  struct CertificateDoc {
    std::vector<std::vector<std::string>> u, v;
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    std::string verification;
    unsigned jet_order = 0;
  };

  std::string command;
  std::string ring;
  std::string verdict;
  std::vector<Check> checks;
  std::optional<CertificateDoc> certificate;
  nlohmann::ordered_json result;
  nlohmann::ordered_json config;
  std::optional<double> timing_ms;
  int exit_code = exit_code::kOk;
};

/// Never throws on bad input: errors become a report with exit code 3 or 4.
ReportDocument run_command(Command command, const ProblemFile& problem, const Flags& flags);
/// Parses the text first; parse errors are reported like command errors.
ReportDocument run_command(Command command, std::string_view problem_text, const Flags& flags);

std::string emit_json(const ReportDocument& report);
std::string emit_text(const ReportDocument& report);

std::string ring_to_string(const Ring& ring);

}  // namespace locdec::cli
