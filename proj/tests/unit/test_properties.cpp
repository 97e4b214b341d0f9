#include <chrono>

#include "helpers.hpp"
#include "properties.hpp"

TEST_CASE("ring laws hold on seeded random elements") {
  auto t0 = std::chrono::steady_clock::now();
  sshg::testing::PropertyRun run = sshg::testing::run_properties(7, 2000);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (const auto& [name, n] : run.violations) {
    INFO(name);
    CHECK(n == 0);
  }
  CHECK(run.checked.size() == 7);
  MESSAGE("2000 cases in " << secs << " s");
}
