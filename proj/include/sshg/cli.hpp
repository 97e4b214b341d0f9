#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sshg/error.hpp"
#include "sshg/verifier.hpp"

// Suite runner and report emission behind the sshg tool and the Python module.
namespace sshg::cli {

inline constexpr int kSchemaVersion = 1;

enum class Format { Text, Json };
std::optional<Format> parse_format(const std::string& s);

// Bad check name, unreadable golden directory and the like: exit status 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct SuiteConfig {
  std::vector<std::string> checks;  // resolved names, sorted and distinct
  verifier::CheckOptions options;
  bool strict = false;
  Format format = Format::Text;
  std::optional<std::filesystem::path> golden;
};

// "all" expands to every check; throws ConfigError on an unknown name.
std::vector<std::string> resolve_checks(const std::vector<std::string>& names);

// Runs the checks concurrently; reports come back sorted by name. A check that
// throws becomes a failing report carrying the message; ParseError propagates.
std::vector<verifier::ResidualReport> run_suite(const SuiteConfig& cfg);

// 0 when nothing fails (non-blocking checks count only under strict), else 1.
int exit_status(const std::vector<verifier::ResidualReport>& reports, bool strict);

std::string emit_text(const std::vector<verifier::ResidualReport>& reports);
// Stable JSON: {"schema_version", "reports": [{check, status, blocking, residuals:
// [{label, value, terms}], free_symbols, assignments: [{symbol, value}],
// normalization, recombination?: {rows, columns, matrix}, notes}]}
std::string emit_json(const std::vector<verifier::ResidualReport>& reports);
std::string emit(const std::vector<verifier::ResidualReport>& reports, Format f);

}  // namespace sshg::cli
