#pragma once

#include <cstdint>

namespace revhash
{

/* Bounds for operations that enumerate every input or every state. */
struct exhaustive_limits
{
  /* largest input arity n for truth tables, brute force, and analysis */
  uint32_t input_bits = 24;
  /* largest circuit width for exhaustive forward/reverse identity checks */
  uint32_t state_bits = 20;
};

/* Default limits, with REVHASH_EXHAUSTIVE_LIMIT overriding input_bits. */
exhaustive_limits default_limits();

} // namespace revhash
