#include "dataset.hpp"

#include <cstdio>
#include <cstring>

namespace entrss {

namespace {
constexpr double kRepairTimes[] = {
    0.2, 0.3, 0.5, 0.5, 0.5, 0.5, 0.6, 0.6, 0.7,  0.7,  0.7,  0.8,
    0.8, 1.0, 1.0, 1.0, 1.0, 1.1, 1.3, 1.5, 1.5,  1.5,  1.5,  2.0,
    2.0, 2.2, 2.5, 3.0, 3.0, 3.3, 3.3, 4.0, 4.0,  4.5,  4.7,  5.0,
    5.4, 5.4, 7.0, 7.5, 8.8, 9.0, 10.3, 22.0, 24.5};
}  // namespace

std::span<const double> repair_times() {
  return {kRepairTimes, sizeof(kRepairTimes) / sizeof(kRepairTimes[0])};
}

std::uint64_t repair_times_digest() {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](const char* s) {
    for (; *s; ++s) {
      h ^= static_cast<unsigned char>(*s);
      h *= 0x100000001b3ULL;
    }
  };
  char buf[16];
  const auto data = repair_times();
  for (std::size_t i = 0; i < data.size(); ++i) {
    std::snprintf(buf, sizeof(buf), i ? ",%.1f" : "%.1f", data[i]);
    mix(buf);
  }
  return h;
}

}  // namespace entrss
