#pragma once

#include <string>

#include "nearhex/incidence.hpp"

namespace nearhex {

// Lowercase hex of the mask's little-endian bytes, exactly ceil(n/8) bytes
// (2*ceil(n/8) characters); bit 0 is point 0.
std::string mask_to_hex(PointSet s, int num_points);

// Inverse of mask_to_hex; rejects wrong length, non-hex characters and bits
// beyond num_points.
PointSet mask_from_hex(const std::string& text, int num_points);

}  // namespace nearhex
