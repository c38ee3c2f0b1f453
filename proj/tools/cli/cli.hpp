#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mediator::cli {

enum class Format { Json, Text };

struct RunConfig {
  std::string subcommand;           // validate ckc check decide verify simulate multi potential demo
  std::vector<std::string> inputs;  // instance / game / demo name, then extra files for multi
  std::string phi_path;             // check
  std::string kernel_path;          // verify, simulate
  std::string signal = "s";         // verify, simulate
  std::vector<std::string> players; // ckc, decide: restrict to these players
  std::optional<std::uint64_t> seed;
  std::uint64_t samples = 0;
  Format format = Format::Json;
  std::string semantics = "spp";    // multi: pp | spp
  bool degraded = false;            // multi: fall back to PP weights when SPP fails
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kRejected = 2;
inline constexpr int kMismatch = 3;

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace mediator::cli
