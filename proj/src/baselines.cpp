#include "ndthin/baselines.hpp"

#include <algorithm>

#include "ndthin/errors.hpp"

namespace ndthin {

namespace {

void require_2d(const BinaryPattern& pattern, const char* algo) {
  if (pattern.rank() != 2) {
    throw DimensionError(std::string(algo) + " thinning is defined for 2D patterns only");
  }
}

/// Mark-then-sweep driver shared by both algorithms. Marking reads only the
/// pattern as it was at the start of the sub-iteration.
template <typename Context>
ThinResult parallel_thin(const BinaryPattern& pattern) {
  ThinResult result{pattern, 0};
  auto& img = result.skeleton;
  const auto rows = static_cast<Index>(img.extent(0));
  const auto cols = static_cast<Index>(img.extent(1));
  std::vector<std::size_t> marked;

  bool changed = true;
  while (changed) {
    ++result.iterations;
    changed = false;
    for (int sub = 0; sub < 2; ++sub) {
      marked.clear();
      for (Index r = 0; r < rows; ++r) {
        for (Index c = 0; c < cols; ++c) {
          const auto off = static_cast<std::size_t>(r * cols + c);
          if (!img[off]) continue;
          if (Context(NeighborRing::at(img, r, c)).deletable(sub)) marked.push_back(off);
        }
      }
      for (auto off : marked) img.cells()[off] = 0;
      changed = changed || !marked.empty();
    }
  }
  return result;
}

}  // namespace

NeighborRing NeighborRing::at(const BinaryPattern& pattern, Index row, Index col) {
  auto v = [&](Index r, Index c) { return pattern.get(Coord{r, c}) ? 1 : 0; };
  NeighborRing ring;
  ring.p = {0,
            v(row, col),
            v(row - 1, col),
            v(row - 1, col + 1),
            v(row, col + 1),
            v(row + 1, col + 1),
            v(row + 1, col),
            v(row + 1, col - 1),
            v(row, col - 1),
            v(row - 1, col - 1)};
  return ring;
}

ZSContext::ZSContext(const NeighborRing& r) : ring(r) {
  const auto& p = ring.p;
  for (int i = 2; i <= 9; ++i) {
    bp += p[i];
    const int next = i == 9 ? 2 : i + 1;
    if (p[i] == 0 && p[next] == 1) ++ap;
  }
}

bool ZSContext::deletable(int sub_iteration) const {
  const auto& p = ring.p;
  if (bp < 2 || bp > 6 || ap != 1) return false;
  if (sub_iteration == 0) return p[2] * p[4] * p[6] == 0 && p[4] * p[6] * p[8] == 0;
  return p[2] * p[4] * p[8] == 0 && p[2] * p[6] * p[8] == 0;
}

GHContext::GHContext(const NeighborRing& r) : ring(r) {
  const auto& p = ring.p;
  np1 = (p[9] | p[2]) + (p[3] | p[4]) + (p[5] | p[6]) + (p[7] | p[8]);
  np2 = (p[2] | p[3]) + (p[4] | p[5]) + (p[6] | p[7]) + (p[8] | p[9]);
  np = std::min(np1, np2);
  // Counts 8-connected foreground groups in the ring; 0 when all four edge
  // neighbours are set.
  cp = ((1 - p[2]) & (p[3] | p[4])) + ((1 - p[4]) & (p[5] | p[6])) +
       ((1 - p[6]) & (p[7] | p[8])) + ((1 - p[8]) & (p[9] | p[2]));
}

bool GHContext::deletable(int sub_iteration) const {
  const auto& p = ring.p;
  if (cp != 1 || (np != 2 && np != 3)) return false;
  const int m = sub_iteration == 0 ? ((p[2] | p[3] | (1 - p[5])) & p[4])
                                   : ((p[6] | p[7] | (1 - p[9])) & p[8]);
  return m == 0;
}

ThinResult zs_thin(const BinaryPattern& pattern) {
  require_2d(pattern, "Zhang-Suen");
  return parallel_thin<ZSContext>(pattern);
}

ThinResult gh_thin(const BinaryPattern& pattern) {
  require_2d(pattern, "Guo-Hall");
  return parallel_thin<GHContext>(pattern);
}

}  // namespace ndthin
