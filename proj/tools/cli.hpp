// Command-line front end. run() is the whole program minus process setup, so
// tests can drive it with string streams.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctxdrt::cli {

enum ExitCode { kOk = 0, kNoReading = 1, kInputError = 2, kUnknown = 3 };

struct RunConfig {
  std::string command;
  std::string input;  // "-" reads standard input
  std::string background;
  int gammaLimit = 5;
  int depthLimit = 20000;
  int modelBound = 3;
  bool json = false;
  bool noFilter = false;
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctxdrt::cli
