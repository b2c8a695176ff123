#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wittkit/json_io.hpp"

namespace wk {

/// Defaults applied to requests that omit order/ring/tol.
struct RequestDefaults {
  int order = kDefaultOrder;
  std::optional<Ring> ring;
  double tol = 1e-9;
  /// Adds meta.timings (wall-clock microseconds). Off by default so that
  /// identical requests produce identical bytes.
  bool timings = false;
};

struct Request {
  std::string command;
  io::json args = io::json::object();
  int order = kDefaultOrder;
  /// When set, inputs are tagged with this ring (and validated against it).
  std::optional<Ring> ring;
  double tol = 1e-9;
};

/// Parses one request line. Throws ParseError for malformed JSON or fields.
Request parse_request(const std::string& line, const RequestDefaults& defaults = {});

/// {"ok", "result" | "error": {"code", "message"}, "meta": {"order"}}.
/// Error codes: E_PARSE, E_UNKNOWN_COMMAND, E_DOMAIN, E_NUMERIC, E_INTERNAL.
io::json dispatch(const Request& req, bool timings = false);

/// parse_request + dispatch, with parse failures reported as E_PARSE responses.
io::json handle_line(const std::string& line, const RequestDefaults& defaults = {});

/// Reads NDJSON requests, writes one response line per non-blank input line.
/// Returns true iff every response has ok = true.
bool batch(std::istream& in, std::ostream& out, const RequestDefaults& defaults = {});

std::vector<std::string> command_names();

}  // namespace wk
