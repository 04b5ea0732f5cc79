#pragma once

// Runs the command-line binary through the shell and captures stdout.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

namespace salpart::testing {

struct CliRun {
  int exit_code = -1;
  std::string out;
};

/// `args` is appended verbatim; the command runs inside `cwd` with stderr discarded.
inline CliRun run_cli(const std::string& args, const std::filesystem::path& cwd = SALPART_GOLDEN_DIR) {
  const std::string command =
      "cd '" + cwd.string() + "' && '" SALPART_CLI "' " + args + " 2>/dev/null";
  CliRun run;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return run;
  std::array<char, 4096> buffer;
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) run.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::filesystem::path golden(const std::string& name) {
  return std::filesystem::path(SALPART_GOLDEN_DIR) / name;
}

}  // namespace salpart::testing
