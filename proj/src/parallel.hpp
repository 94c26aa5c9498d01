#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace cf {

// worker count comes from CHEBFOLD_THREADS only; default 1
inline unsigned thread_count() {
  const char* s = std::getenv("CHEBFOLD_THREADS");
  if (!s) return 1;
  try {
    int v = std::stoi(s);
    return v > 0 ? static_cast<unsigned>(v) : 1;
  } catch (...) {
    return 1;
  }
}

template <class Fn>
void parallel_for(size_t count, Fn fn) {
  unsigned t = thread_count();
  if (t <= 1 || count < 2) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < t; ++w)
    pool.emplace_back([&, w] {
      for (size_t i = w; i < count; i += t) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace cf
