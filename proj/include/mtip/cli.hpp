#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mtip/approx2d.hpp"
#include "mtip/io.hpp"
#include "mtip/oracle.hpp"

namespace mtip::cli {

using io::json;
namespace fs = std::filesystem;

struct GenOptions {
  std::string kind = "line";  // line | plane | gadget
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string spread = "uniform";
  std::optional<fs::path> grid;            // gadget only
  fs::path out;
  std::optional<fs::path> assignment_out;  // gadget with a bundled cycle
};

// Each command returns its run report. Reports re-measure the interference
// of the emitted assignment; they never just echo the solver's claim.
json cmd_gen(const GenOptions& options);
json cmd_solve1d(const fs::path& in, const std::optional<fs::path>& out, const std::optional<fs::path>& edges_out);
json cmd_approx2d(const fs::path& in, RootPolicy policy, const std::optional<fs::path>& out,
                  std::optional<OracleBudget> compare_oracle);
json cmd_oracle(const fs::path& in, const OracleBudget& budget, const std::optional<fs::path>& out);
json cmd_verify(const fs::path& instance, const fs::path& assignment, const std::optional<fs::path>& grid);
json cmd_export_dot(const fs::path& instance, const std::optional<fs::path>& assignment, const std::optional<fs::path>& out);

// Parses argv and dispatches. Reports go to `out` as JSON; failures print
// {"error": {"code", "message"}} to `err` and return nonzero.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mtip::cli
