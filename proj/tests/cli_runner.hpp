#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

namespace schurlab::testing {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

/// Runs the CLI through the shell; stdout is captured, stderr discarded
/// unless the caller redirects it.
inline RunResult run_cli(const std::string& args, const std::string& stdin_file = "") {
  std::string cmd = std::string("'") + SCHURLAB_CLI + "' " + args;
  if (!stdin_file.empty()) cmd += " < '" + stdin_file + "'";
  if (cmd.find("2>") == std::string::npos) cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string data_file(const std::string& name) { return std::string(SCHURLAB_DATA) + "/" + name; }

inline std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("schurlab_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace schurlab::testing
