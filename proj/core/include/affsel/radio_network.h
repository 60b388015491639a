#pragma once

#include <cstddef>
#include <vector>

#include "affsel/affectance_matrix.h"

namespace affsel {

// Radio Network semantics as an affectance matrix: a(u, (v, w)) = 1 when u is
// another sender of w, else 0. A receiver is then selected exactly when one
// of its senders transmits alone, and Abar_w = |F_w| - 1.
Instance EncodeRadioNetwork(std::size_t n, std::vector<Link> links);
Instance EncodeRadioNetwork(const LayerTopology& topology);

}  // namespace affsel
