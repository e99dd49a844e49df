#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace pellab::cli {

/// Ok: command succeeded. Rejected: valid input with a negative answer
/// (not a solution, invalid tuple). Error: bad input or a failed operation.
enum class Status { Ok, Rejected, Error };

std::string_view to_string(Status status);
int exit_code(Status status);

struct CommandResult {
  Status status = Status::Ok;
  nlohmann::json payload;                // carries a top-level "schema" field
  std::vector<std::string> diagnostics;  // human-readable notes and errors
  std::vector<std::string> text;         // human rendering of the payload
  bool json = false;                     // --json was given
};

/// Parses and dispatches one command line (without the program name).
/// Never throws; failures come back as Status::Error. `in` serves "-" paths.
CommandResult run(const std::vector<std::string>& args, std::istream& in);

/// Machine form: the payload plus "status" and "diagnostics", one line.
std::string render_json(const CommandResult& result);
/// Text form: payload lines followed by diagnostics.
std::string render_text(const CommandResult& result);

}  // namespace pellab::cli
