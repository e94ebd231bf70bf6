#include <string>
#include <vector>

#include "hive/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  // the binary may be installed as `lrc` for direct estimator access
  std::string name = argv[0];
  const auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  if (name == "lrc") args.insert(args.begin(), "lrc");
  return hive::dispatch(std::move(args));
}
