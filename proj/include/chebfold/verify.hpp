#pragma once

#include <cstdint>
#include <string>

#include "chebfold/serialize.hpp"

namespace cf {

struct VerifyOptions {
  int unfold_depth = 6, unfold_random = 200, unfold_length = 20;
  int cube_depth = -1;  // -1: 8, or 6 for H4
  int cube_random = 500, cube_length = 30;
  uint64_t seed = 1;
};

// sections: unfolding, folding, cube, roots, blocks, tilting, complements, g_vectors
struct VerifyResult {
  bool pass = true;
  json report;
};

VerifyResult verify_all(const std::string& kind, int n, const VerifyOptions& opt = {});

}  // namespace cf
