#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace boolhd::testing {

struct CliResult {
  int code = -1;
  std::string out;
};

/// Runs the CLI with `args` (shell-quoted by the caller), capturing stdout.
inline CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(BOOLHD_CLI) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string sample(const std::string& name) { return std::string(BOOLHD_SAMPLES) + "/" + name; }

}  // namespace boolhd::testing
