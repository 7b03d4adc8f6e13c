#include "szkit/big_float.hpp"

// Header-only for now; this TU anchors the header in the build so interface
// breakage is caught even when no other unit includes it first.

namespace szkit {}
