#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace ndthin {

using Index = std::int64_t;

/// Extent of a pattern along each axis, outermost first.
using Shape = std::vector<std::size_t>;

/// Position of a cell; one index per axis. May be out of bounds.
struct Coord {
  std::vector<Index> idx;

  Coord() = default;
  explicit Coord(std::vector<Index> v) : idx(std::move(v)) {}
  Coord(std::initializer_list<Index> v) : idx(v) {}

  std::size_t rank() const noexcept { return idx.size(); }
  Index& operator[](std::size_t i) { return idx[i]; }
  Index operator[](std::size_t i) const { return idx[i]; }

  auto operator<=>(const Coord&) const = default;
  bool operator==(const Coord&) const = default;
};

/// k-dimensional binary array stored row-major (last axis contiguous).
/// Cells outside the array read as background.
class BinaryPattern {
 public:
  /// All-background pattern. Requires k >= 2 and every extent >= 1.
  explicit BinaryPattern(Shape shape);
  /// `cells` holds one 0/1 value per cell in row-major order.
  BinaryPattern(Shape shape, std::vector<std::uint8_t> cells);

  std::size_t rank() const noexcept { return shape_.size(); }
  const Shape& shape() const noexcept { return shape_; }
  std::size_t extent(std::size_t axis) const { return shape_.at(axis); }
  /// Distance in cells between neighbours along each axis.
  const std::vector<std::size_t>& strides() const noexcept { return strides_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }

  bool in_bounds(const Coord& c) const noexcept;
  std::size_t offset_of(const Coord& c) const;
  Coord coord_of(std::size_t offset) const;

  /// Throws UsageError when `c` is out of bounds.
  bool at(const Coord& c) const;
  /// Out-of-bounds coordinates are background.
  bool get(const Coord& c) const noexcept;
  void set(const Coord& c, bool foreground);

  bool operator[](std::size_t offset) const noexcept { return cells_[offset] != 0; }
  std::span<const std::uint8_t> cells() const noexcept { return cells_; }
  std::span<std::uint8_t> cells() noexcept { return cells_; }

  std::size_t foreground_count() const noexcept;
  /// Foreground coordinates in lexicographic order.
  std::vector<Coord> foreground() const;
  /// True when every foreground cell of *this is foreground in `other`.
  bool subset_of(const BinaryPattern& other) const;

  bool operator==(const BinaryPattern&) const = default;

 private:
  Shape shape_;
  std::vector<std::size_t> strides_;
  std::vector<std::uint8_t> cells_;
};

/// The in-bounds part of the 3^k block centred on a cell.
struct Neighborhood {
  Coord center;
  std::vector<Coord> members;  // lexicographic; includes center
  std::size_t foreground_count = 0;
};

Neighborhood neighborhood(const BinaryPattern& pattern, const Coord& center);

/// All offsets in {-1,0,1}^k in lexicographic order (center included).
std::vector<std::vector<int>> unit_offsets(std::size_t rank);

struct Components {
  std::size_t count = 0;
  /// One label per cell: 0 for background, 1..count for foreground.
  std::vector<std::uint32_t> labels;
};

/// Labels foreground cells under (3^k - 1)-adjacency.
Components connected_components(const BinaryPattern& pattern);

/// Foreground pixels covered by at least one all-foreground 2x2 window.
/// Lexicographic order. 2D only.
std::vector<Coord> non_unit_width_pixels(const BinaryPattern& pattern);

}  // namespace ndthin
