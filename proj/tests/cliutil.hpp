#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace polarbox::test {

struct CmdResult {
  int code = -1;
  std::string out;
};

/// Runs a shell command, capturing stdout; stderr is dropped unless the
/// command redirects it itself.
inline CmdResult run_cmd(const std::string& cmd) {
  const std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + cmd);
  CmdResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace polarbox::test
