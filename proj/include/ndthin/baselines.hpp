#pragma once

#include <array>
#include <cstddef>

#include "ndthin/pattern.hpp"
#include "ndthin/thin_nd.hpp"

namespace ndthin {

/// 3x3 neighbourhood values, indexed 1..9 in the classic layout:
///
///   P9 P2 P3
///   P8 P1 P4
///   P7 P6 P5
///
/// with row index growing downward (P2 north, P4 east). Index 0 is unused.
struct NeighborRing {
  std::array<int, 10> p{};

  static NeighborRing at(const BinaryPattern& pattern, Index row, Index col);
};

struct ZSContext {
  NeighborRing ring;
  int bp = 0;  // foreground count among P2..P9
  int ap = 0;  // 0->1 transitions around P2..P9,P2

  explicit ZSContext(const NeighborRing& r);
  /// Deletion test of the first (southeast) or second (northwest) sub-iteration.
  bool deletable(int sub_iteration) const;
};

struct GHContext {
  NeighborRing ring;
  int np1 = 0;
  int np2 = 0;
  int np = 0;
  int cp = 0;

  explicit GHContext(const NeighborRing& r);
  bool deletable(int sub_iteration) const;
};

/// Zhang-Suen two-sub-iteration parallel thinning. 2D only.
ThinResult zs_thin(const BinaryPattern& pattern);

/// Guo-Hall two-sub-iteration parallel thinning. 2D only.
ThinResult gh_thin(const BinaryPattern& pattern);

}  // namespace ndthin
