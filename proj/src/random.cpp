#include "lincert/random.hpp"

// RandomSource is header-only; this translation unit just anchors the header
// so missing-include breakage shows up at library build time.

namespace lincert {}
