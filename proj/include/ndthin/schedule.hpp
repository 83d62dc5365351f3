#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ndthin {

/// Which contour of a run is tested: its highest-index end (forward) or its
/// lowest-index end (backward).
enum class Direction { forward, backward };

/// Set of directions enabled in a sub-cycle.
enum class Directions : std::uint8_t { forward = 1, backward = 2, both = 3 };

constexpr bool has(Directions set, Direction d) noexcept {
  const auto bit = d == Direction::forward ? 1u : 2u;
  return (static_cast<unsigned>(set) & bit) != 0;
}

/// One directional erosion pass over every slice along `axis`.
struct SubCycle {
  std::size_t axis = 0;
  Directions directions = Directions::both;

  bool operator==(const SubCycle&) const = default;
};

/// A phase repeats its sub-cycles in order until an iteration changes nothing.
using Phase = std::vector<SubCycle>;

/// Ordered phases of sub-cycles. Text form: `phase(;phase)*`, where a phase
/// is `sub(,sub)*` and a sub-cycle is an axis index followed by `f`, `b` or
/// `fb`. Example: `2fb;1fb,0fb`.
class Schedule {
 public:
  Schedule() = default;
  explicit Schedule(std::vector<Phase> phases);

  /// One phase visiting every axis with both directions, last axis first.
  static Schedule standard(std::size_t rank);
  /// Throws ScheduleError on malformed text.
  static Schedule parse(std::string_view text);

  const std::vector<Phase>& phases() const noexcept { return phases_; }
  std::string to_string() const;

  /// Throws ScheduleError unless non-empty and every axis is < rank.
  void validate(std::size_t rank) const;

  bool operator==(const Schedule&) const = default;

 private:
  std::vector<Phase> phases_;
};

}  // namespace ndthin
