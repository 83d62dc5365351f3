#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ndthin/pattern.hpp"
#include "ndthin/schedule.hpp"

namespace ndthin {

/// Maximal foreground segment of a slice. `fixed` holds the slice's
/// coordinates on every axis except `axis`, in axis order.
struct Run {
  std::size_t axis = 0;
  std::vector<Index> fixed;
  Index back = 0;
  Index front = 0;

  Coord at(Index i) const;
  Coord back_pixel() const { return at(back); }
  Coord front_pixel() const { return at(front); }

  bool operator==(const Run&) const = default;
};

/// Runs of the slice along `axis` through `fixed` (k-1 entries), in
/// increasing index order.
std::vector<Run> extract_runs(const BinaryPattern& pattern, std::size_t axis,
                              std::span<const Index> fixed);

/// True when p's 3^k neighborhood, p included, holds at most 2 foreground
/// cells. Throws UsageError if p is background or out of bounds.
bool is_endpoint(const BinaryPattern& pattern, const Coord& p);

/// The connectivity witness for contour pixel p and one neighbour f lying
/// ahead (forward) or behind (backward) of it along the axis.
struct DeletabilityContext {
  Coord p;
  Neighborhood n_p;
  Coord f;
  std::vector<Coord> n_f;  // f's neighbours on p's side of f
  std::vector<Coord> s;    // n_f ∩ n_p minus p
};

/// Builds the context from explicit coordinate sets.
DeletabilityContext deletability_context(const BinaryPattern& pattern, const Coord& p,
                                         const Coord& f, std::size_t axis,
                                         Direction direction);

/// Decides whether the run extreme p may be removed without breaking local
/// connectivity. p must be the front (forward) or back (backward) cell of a
/// run along `axis`; a mismatch throws UsageError.
bool contour_deletable(const BinaryPattern& pattern, const Coord& p, std::size_t axis,
                       Direction direction);

/// One sequential pass over every slice along `axis`. Deletions are visible
/// to later tests in the same pass. Returns whether any cell changed.
bool thin_subcycle(BinaryPattern& pattern, std::size_t axis, Directions directions);

struct ThinResult {
  BinaryPattern skeleton;
  /// Full iterations executed, including each phase's final unchanged one.
  std::size_t iterations = 0;
};

ThinResult thin(const BinaryPattern& pattern, const Schedule& schedule);
inline ThinResult thin(const BinaryPattern& pattern) {
  return thin(pattern, Schedule::standard(pattern.rank()));
}

}  // namespace ndthin
