#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "gwa/acceptance.hpp"

int main(int argc, char** argv) {
  gwa::AcceptanceOptions opt;
  for (int k = 1; k < argc; ++k) {
    if (!std::strcmp(argv[k], "--serial")) opt.parallel = false;
    else if (!std::strcmp(argv[k], "--seed") && k + 1 < argc) opt.seed = std::strtoull(argv[++k], nullptr, 10);
  }
  int failed = 0;
  for (const auto& r : gwa::run_acceptance(opt)) {
    std::printf("%s\n", gwa::format_result(r).c_str());
    failed += !r.pass;
  }
  std::printf("%d/9 criteria passed\n", 9 - failed);
  return failed ? 1 : 0;
}
