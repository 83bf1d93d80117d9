#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "posmap/choi.hpp"
#include "posmap/renegar.hpp"

namespace posmap::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

inline constexpr std::uint64_t kDefaultWorkCap = 1'000'000;
inline constexpr std::uint64_t kDefaultMaxSystemSize = 64;

enum class Format { kText, kStructured };

struct RunConfig {
  std::string command;                  // decide, poly, choi, nonneg, falsify, sturm
  std::string query;                    // sturm only: exists-pos, tarski, count
  std::vector<std::string> inputs;      // paths or inline polynomials
  std::uint64_t seed = 1;
  std::uint64_t samples = 2000;
  std::optional<std::uint64_t> work_cap = kDefaultWorkCap;
  std::optional<std::uint64_t> max_system_size = kDefaultMaxSystemSize;
  choi::Route route = choi::Route::kKraus;
  Format format = Format::kText;
};

renegar::DecideOptions decide_options(const RunConfig& config);

/// Builds p_Phi by the configured route, checks it against another route and
/// decides its nonnegativity. Throws std::logic_error on a route mismatch.
renegar::DecisionReport decide_positivity(const choi::HermMap& phi, const RunConfig& config);

/// Executes one parsed command and returns the process exit code.
int run_subcommand(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; usage errors return kExitUsage.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace posmap::cli
