#include <cstdlib>
#include <iostream>
#include <string>

#include "criteria.hpp"

int main(int argc, char** argv) {
  srt::acceptance::Options opts;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) {
      opts.cli_path = argv[++i];
    } else if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (arg == "--seed" && i + 1 < argc) {
      opts.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: srt_acceptance [--cli path-to-srt] [--seed N] [--only ID]\n";
      return 2;
    }
  }
  if (only >= 1 && only < srt::acceptance::kNumCriteria) {
    const auto r = srt::acceptance::run(only, opts);
    std::cout << srt::acceptance::format_line(r) << std::endl;
    return r.pass ? 0 : 1;
  }
  bool all = true;
  srt::acceptance::run_all(opts, [&](const srt::acceptance::Result& r) {
    std::cout << srt::acceptance::format_line(r) << std::endl;
    all = all && r.pass;
  });
  return all ? 0 : 1;
}
