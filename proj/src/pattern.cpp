#include "ndthin/pattern.hpp"

#include <algorithm>
#include <string>

#include "ndthin/errors.hpp"

namespace ndthin {

namespace {

std::size_t checked_volume(const Shape& shape) {
  if (shape.size() < 2) {
    throw DimensionError("pattern needs at least 2 dimensions, got " +
                         std::to_string(shape.size()));
  }
  std::size_t volume = 1;
  for (auto n : shape) {
    if (n == 0) throw UsageError("pattern extents must be >= 1");
    volume *= n;
  }
  return volume;
}

std::vector<std::size_t> row_major_strides(const Shape& shape) {
  std::vector<std::size_t> strides(shape.size(), 1);
  for (std::size_t i = shape.size() - 1; i > 0; --i) strides[i - 1] = strides[i] * shape[i];
  return strides;
}

}  // namespace

BinaryPattern::BinaryPattern(Shape shape)
    : shape_(std::move(shape)),
      strides_(),
      cells_(checked_volume(shape_), 0) {
  strides_ = row_major_strides(shape_);
}

BinaryPattern::BinaryPattern(Shape shape, std::vector<std::uint8_t> cells)
    : shape_(std::move(shape)), cells_(std::move(cells)) {
  if (checked_volume(shape_) != cells_.size()) {
    throw UsageError("cell count " + std::to_string(cells_.size()) +
                     " does not match shape volume");
  }
  for (auto& v : cells_) {
    if (v > 1) throw UsageError("cell values must be 0 or 1");
  }
  strides_ = row_major_strides(shape_);
}

bool BinaryPattern::in_bounds(const Coord& c) const noexcept {
  if (c.rank() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (c[i] < 0 || static_cast<std::size_t>(c[i]) >= shape_[i]) return false;
  }
  return true;
}

std::size_t BinaryPattern::offset_of(const Coord& c) const {
  if (!in_bounds(c)) throw UsageError("coordinate out of bounds");
  std::size_t off = 0;
  for (std::size_t i = 0; i < rank(); ++i) off += static_cast<std::size_t>(c[i]) * strides_[i];
  return off;
}

Coord BinaryPattern::coord_of(std::size_t offset) const {
  Coord c;
  c.idx.resize(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    c[i] = static_cast<Index>(offset / strides_[i]);
    offset %= strides_[i];
  }
  return c;
}

bool BinaryPattern::at(const Coord& c) const { return cells_[offset_of(c)] != 0; }

bool BinaryPattern::get(const Coord& c) const noexcept {
  if (!in_bounds(c)) return false;
  std::size_t off = 0;
  for (std::size_t i = 0; i < rank(); ++i) off += static_cast<std::size_t>(c[i]) * strides_[i];
  return cells_[off] != 0;
}

void BinaryPattern::set(const Coord& c, bool foreground) {
  cells_[offset_of(c)] = foreground ? 1 : 0;
}

std::size_t BinaryPattern::foreground_count() const noexcept {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

std::vector<Coord> BinaryPattern::foreground() const {
  std::vector<Coord> out;
  for (std::size_t off = 0; off < cells_.size(); ++off) {
    if (cells_[off]) out.push_back(coord_of(off));
  }
  return out;
}

bool BinaryPattern::subset_of(const BinaryPattern& other) const {
  if (shape_ != other.shape_) return false;
  for (std::size_t off = 0; off < cells_.size(); ++off) {
    if (cells_[off] && !other.cells_[off]) return false;
  }
  return true;
}

std::vector<std::vector<int>> unit_offsets(std::size_t rank) {
  std::vector<std::vector<int>> out;
  std::vector<int> d(rank, -1);
  while (true) {
    out.push_back(d);
    std::size_t i = rank;
    while (i > 0) {
      --i;
      if (d[i] < 1) {
        ++d[i];
        break;
      }
      d[i] = -1;
      if (i == 0) return out;
    }
  }
}

Neighborhood neighborhood(const BinaryPattern& pattern, const Coord& center) {
  if (!pattern.in_bounds(center)) throw UsageError("neighborhood center out of bounds");
  Neighborhood nb;
  nb.center = center;
  for (const auto& d : unit_offsets(pattern.rank())) {
    Coord q = center;
    for (std::size_t i = 0; i < d.size(); ++i) q[i] += d[i];
    if (!pattern.in_bounds(q)) continue;
    if (pattern.get(q)) ++nb.foreground_count;
    nb.members.push_back(std::move(q));
  }
  return nb;
}

Components connected_components(const BinaryPattern& pattern) {
  const std::size_t k = pattern.rank();
  const auto& shape = pattern.shape();
  const auto offsets = unit_offsets(k);

  Components result;
  result.labels.assign(pattern.cell_count(), 0);

  std::vector<std::size_t> stack;
  for (std::size_t seed = 0; seed < pattern.cell_count(); ++seed) {
    if (!pattern[seed] || result.labels[seed] != 0) continue;
    const auto label = static_cast<std::uint32_t>(++result.count);
    result.labels[seed] = label;
    stack.push_back(seed);
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      const Coord c = pattern.coord_of(cur);
      for (const auto& d : offsets) {
        std::ptrdiff_t delta = 0;
        bool inside = true;
        for (std::size_t i = 0; i < k && inside; ++i) {
          const Index q = c[i] + d[i];
          inside = q >= 0 && static_cast<std::size_t>(q) < shape[i];
          delta += d[i] * static_cast<std::ptrdiff_t>(pattern.strides()[i]);
        }
        if (!inside) continue;
        const auto next = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(cur) + delta);
        if (pattern[next] && result.labels[next] == 0) {
          result.labels[next] = label;
          stack.push_back(next);
        }
      }
    }
  }
  return result;
}

std::vector<Coord> non_unit_width_pixels(const BinaryPattern& pattern) {
  if (pattern.rank() != 2) throw DimensionError("non_unit_width_pixels is defined for 2D only");
  const std::size_t rows = pattern.extent(0);
  const std::size_t cols = pattern.extent(1);
  std::vector<std::uint8_t> hit(pattern.cell_count(), 0);
  // One window per top-left corner; the four corner-origin templates all
  // mark the same window, so their union is the window itself.
  for (std::size_t r = 0; r + 1 < rows; ++r) {
    for (std::size_t c = 0; c + 1 < cols; ++c) {
      const std::size_t o = r * cols + c;
      if (pattern[o] && pattern[o + 1] && pattern[o + cols] && pattern[o + cols + 1]) {
        hit[o] = hit[o + 1] = hit[o + cols] = hit[o + cols + 1] = 1;
      }
    }
  }
  std::vector<Coord> out;
  for (std::size_t o = 0; o < hit.size(); ++o) {
    if (hit[o]) out.push_back(pattern.coord_of(o));
  }
  return out;
}

}  // namespace ndthin
