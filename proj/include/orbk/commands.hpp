#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbk/fingroup.hpp"
#include "orbk/input.hpp"

namespace orbk {

struct CommandOptions {
  std::vector<std::size_t> sectors;
  std::vector<std::size_t> classes;
  std::optional<std::string> element;
  std::optional<std::string> c1a;
  std::optional<std::size_t> dim;
  std::optional<std::size_t> genus;
  std::optional<std::size_t> marks;
  std::vector<std::string> iotas;
  std::size_t cap = kDefaultCap;
  // lifts only
  std::vector<std::size_t> axes;
  std::optional<std::size_t> order;
  std::optional<std::int64_t> character;
};

struct CommandResult {
  std::string output;  // JSON text ending in a newline
  int exit_code = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

const std::vector<std::string>& command_names();

/// Never throws; failures become an {"error", "message"} document with exit 2.
CommandResult run_command(const std::string& command, const std::optional<InputSpec>& spec,
                          const CommandOptions& options);

/// Parses the text first, so syntax errors come back the same way.
CommandResult run_command_on_text(const std::string& command, const std::optional<std::string>& text,
                                  const CommandOptions& options);

CommandResult run_command_on_file(const std::string& command, const std::optional<std::string>& path,
                                  const CommandOptions& options);

}  // namespace orbk
