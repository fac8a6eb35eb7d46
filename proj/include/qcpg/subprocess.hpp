#pragma once

#include <string>
#include <vector>

namespace qcpg {

// Runs `command` through /bin/sh with `input_lines` on standard input (one
// per line, newline terminated) and returns its standard output split into
// lines. Throws SpawnFailure when the command cannot be started (including
// shell status 126/127) and ProtocolError on any other non-zero exit.
std::vector<std::string> run_line_command(const std::string& command,
                                          const std::vector<std::string>& input_lines);

}  // namespace qcpg
