#pragma once

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

namespace testsupport {

// Seed for randomized corpora; override with TWISTCOLOR_TEST_SEED.
inline std::uint64_t seed() {
  static const std::uint64_t s = [] {
    std::uint64_t v = 20240611;
    if (const char* e = std::getenv("TWISTCOLOR_TEST_SEED")) v = std::strtoull(e, nullptr, 10);
    std::cout << "[seed] TWISTCOLOR_TEST_SEED=" << v << "\n";
    return v;
  }();
  return s;
}

}  // namespace testsupport
