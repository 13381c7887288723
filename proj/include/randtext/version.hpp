#pragma once

namespace randtext {

inline constexpr const char* kToolVersion = "0.1.0";

// Identifies the symbol-stream recipe: splitmix64 PRNG, 53-bit uniform
// doubles, inverse-CDF lookup over the (m+1)-entry cumulative table.
// Any change to that recipe must bump this string.
inline constexpr const char* kPrngVersion = "splitmix64-invcdf/1";

}  // namespace randtext
