#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "forestbetti/text_format.hpp"

namespace forestbetti::cli {

enum class OutputFormat { kTable, kJson };

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitParse = 2,
  kExitTooLarge = 3,
};

struct RunConfig {
  std::string subcommand;
  std::string input = "-";                // path, or "-" for stdin
  std::optional<std::string> inline_text; // ';' separates lines
  std::vector<std::uint32_t> fields{2};
  bool oracle = false;
  bool oracle_only = false;
  bool fast = false;
  bool all_subsets = false;
  bool random_input = false;  // verify: check seeded random forests
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::size_t max_vertices = 10;
  std::size_t max_facets = 8;
  std::size_t max_generators = 20;
  OutputFormat format = OutputFormat::kTable;
  InputKind as = InputKind::kAuto;
};

// Rejects non-prime fields and zero caps with kParse.
void validate(const RunConfig& config);

// Dispatches on config.subcommand. Library errors are reported on `err` and
// mapped to exit codes; the return value is the process exit status.
int run(const RunConfig& config, std::istream& in, std::ostream& out,
        std::ostream& err);

int cmd_betti(const RunConfig& config, std::istream& in, std::ostream& out);
int cmd_multigraded(const RunConfig& config, std::istream& in,
                    std::ostream& out);
int cmd_forest_check(const RunConfig& config, std::istream& in,
                     std::ostream& out);
int cmd_leaf_order(const RunConfig& config, std::istream& in,
                   std::ostream& out);
int cmd_verify(const RunConfig& config, std::istream& in, std::ostream& out);
int cmd_random_forest(const RunConfig& config, std::ostream& out);

}  // namespace forestbetti::cli
