#pragma once

// Shared fixtures: the two printed patterns from the source material and a
// helper for driving the CLI binary in subprocess tests.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <string>
#include <sys/wait.h>

#include "noneven/noneven.hpp"

namespace fixtures {

// 4x4 negative-diagonal pattern that fails to allow symplectic pairs.
inline noneven::SignPattern figure1_pattern() {
  return noneven::SignPattern(4, {-1, 1, 0, -1,
                                  0, -1, 0, 1,
                                  0, -1, -1, 1,
                                  0, -1, 0, -1});
}

// 2x2 pattern of C2*; (1/sqrt 2) H is an exact symplectic witness.
inline noneven::SignPattern c2star_pattern() {
  return noneven::SignPattern(2, {-1, 1, -1, -1});
}

// Negative-diagonal pattern whose digraph is C4*; (1/sqrt 3) H is orthogonal.
inline noneven::SignPattern c4star_pattern() {
  return noneven::SignPattern(4, {-1, -1, 0, -1,
                                  1, -1, -1, 0,
                                  0, 1, -1, -1,
                                  1, 0, 1, -1});
}

inline noneven::SignPattern random_pattern(int n, std::mt19937_64& rng,
                                           double zero_prob = 0.3) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  noneven::SignPattern h(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (u(rng) < zero_prob) continue;
      h.set(i, j, u(rng) < 0.5 ? -1 : 1);
    }
  return h;
}

struct CliResult {
  int exit_code;
  std::string out;
};

inline std::string temp_path(const std::string& name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/" + name;
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

// Runs the CLI with the given argument string, capturing stdout (stderr is
// folded in so diagnostics are inspectable).
inline CliResult run_cli(const std::string& args) {
#ifndef NONEVEN_CLI_PATH
#error "NONEVEN_CLI_PATH must be defined by the build"
#endif
  std::string cmd = std::string(NONEVEN_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

inline bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace fixtures
