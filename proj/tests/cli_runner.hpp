#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <string>
#include <sys/wait.h>

namespace dee::testing {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the dee binary through the shell, capturing stdout; stderr is discarded.
inline CliResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" DEE_CLI_PATH "\" " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string golden_path(const std::string& name) { return std::string(DEE_TEST_DIR "/golden/") + name; }
inline std::string data_path(const std::string& name) { return std::string(DEE_TEST_DIR "/data/") + name; }

// Compares against a committed golden file; DEE_UPDATE_GOLDEN=1 rewrites it instead.
inline bool matches_golden(const std::string& name, const std::string& actual) {
  const char* update = std::getenv("DEE_UPDATE_GOLDEN");
  if (update != nullptr && std::string(update) == "1") {
    std::ofstream(golden_path(name), std::ios::binary | std::ios::trunc) << actual;
    return true;
  }
  return read_file(golden_path(name)) == actual;
}

}  // namespace dee::testing
