#pragma once

#include <cstdint>
#include <limits>

namespace chromadist {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Edge colours are positive integers. Zero marks an uncoloured edge.
using Colour = std::uint32_t;

inline constexpr Colour kNoColour = 0;
/// Exact products of 64-bit quantities in threshold comparisons.
__extension__ typedef unsigned __int128 UInt128;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

}  // namespace chromadist
