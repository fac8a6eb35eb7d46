#include "qcpg/subprocess.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>

#include "qcpg/errors.hpp"

namespace qcpg {

namespace {

// Scratch file holding the command's standard input; removed on scope exit.
class TempInput {
 public:
  explicit TempInput(const std::vector<std::string>& lines) {
    std::string pattern = (std::filesystem::temp_directory_path() / "qcpg-kit-XXXXXX").string();
    std::vector<char> buf(pattern.begin(), pattern.end());
    buf.push_back('\0');
    const int fd = ::mkstemp(buf.data());
    if (fd < 0) {
      throw Error(ErrorCode::kSpawnFailure,
                  std::string("cannot create temporary input file: ") + std::strerror(errno));
    }
    path_.assign(buf.data());
    FILE* f = ::fdopen(fd, "w");
    if (f == nullptr) {
      ::close(fd);
      std::remove(path_.c_str());
      throw Error(ErrorCode::kSpawnFailure, "cannot open temporary input file");
    }
    bool ok = true;
    for (const auto& line : lines) {
      ok = ok && std::fwrite(line.data(), 1, line.size(), f) == line.size();
      ok = ok && std::fputc('\n', f) != EOF;
    }
    ok = (std::fclose(f) == 0) && ok;
    if (!ok) {
      std::remove(path_.c_str());
      throw Error(ErrorCode::kSpawnFailure, "cannot write temporary input file");
    }
  }
  ~TempInput() { std::remove(path_.c_str()); }
  TempInput(const TempInput&) = delete;
  TempInput& operator=(const TempInput&) = delete;

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += '\'';
  return out;
}

}  // namespace

std::vector<std::string> run_line_command(const std::string& command,
                                          const std::vector<std::string>& input_lines) {
  if (command.empty()) throw Error(ErrorCode::kSpawnFailure, "empty command");
  for (std::size_t i = 0; i < input_lines.size(); ++i) {
    if (input_lines[i].find('\n') != std::string::npos) {
      throw LocatedError(ErrorCode::kProtocolError, "input line contains a newline", i + 1);
    }
  }

  TempInput input(input_lines);
  const std::string full = "(" + command + ") < " + shell_quote(input.path());
  std::fflush(nullptr);
  FILE* pipe = ::popen(full.c_str(), "r");
  if (pipe == nullptr) {
    throw Error(ErrorCode::kSpawnFailure,
                "cannot start '" + command + "': " + std::strerror(errno));
  }

  std::vector<std::string> lines;
  std::string current;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    for (std::size_t k = 0; k < got; ++k) {
      if (buf[k] == '\n') {
        if (!current.empty() && current.back() == '\r') current.pop_back();
        lines.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(buf[k]);
      }
    }
  }
  if (!current.empty()) lines.push_back(std::move(current));

  const int status = ::pclose(pipe);
  if (status == -1) throw Error(ErrorCode::kSpawnFailure, "cannot wait for '" + command + "'");
  if (WIFEXITED(status)) {
    const int code = WEXITSTATUS(status);
    if (code == 126 || code == 127) {
      throw Error(ErrorCode::kSpawnFailure,
                  "cannot run '" + command + "' (shell status " + std::to_string(code) + ")");
    }
    if (code != 0) {
      throw Error(ErrorCode::kProtocolError,
                  "'" + command + "' exited with status " + std::to_string(code));
    }
  } else {
    throw Error(ErrorCode::kProtocolError, "'" + command + "' terminated abnormally");
  }
  return lines;
}

}  // namespace qcpg
