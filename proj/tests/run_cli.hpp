#pragma once

// Runs the command-line tool and captures stdout plus the exit code.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace testing_support {

struct CliRun {
  int exit_code = -1;
  std::string out;
};

inline std::string cli_path() { return TUZA_CLI; }
inline std::string data_path(const std::string& name) { return std::string(TUZA_DATA_DIR) + "/" + name; }

inline CliRun run_cli(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace testing_support
