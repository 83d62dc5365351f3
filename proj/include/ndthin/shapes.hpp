#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ndthin/pattern.hpp"

namespace ndthin {

enum class ShapeKind {
  square,
  rectangle,
  disc,
  triangle,
  sphere,
  cylinder,
  hyperboloid_one_sheet,
  hyperboloid_two_sheet,
  elliptic_paraboloid,
};

std::optional<ShapeKind> parse_shape_kind(std::string_view name);
std::string_view to_string(ShapeKind kind);

/// Parameters of a synthetic solid centred in `grid`.
///
/// 2D kinds use axis 0 as rows and axis 1 as columns; 3D kinds use axis 2 as
/// the z (height) axis. Unused fields are ignored.
///
///  - square:     side
///  - rectangle:  width (axis 1), height (axis 0)
///  - disc:       radius
///  - triangle:   side (base width), height (defaults to side); apex at row 0 side
///  - sphere:     radius
///  - cylinder:   radius, height
///  - hyperboloid_one_sheet: (x/a)^2 + (y/b)^2 - (z/c)^2 <= 1
///  - hyperboloid_two_sheet: (z/c)^2 - (x/a)^2 - (y/b)^2 >= 1
///  - elliptic_paraboloid:   (x/a)^2 + (y/b)^2 <= z/c, z measured from the base
///
/// Quadrics are clipped to |z| <= height/2 (paraboloid: 0 <= z < height).
/// Their defaults are a = b = 4, c = 6 and height = N_z - 4.
struct ShapeSpec {
  ShapeKind kind = ShapeKind::square;
  Shape grid;
  double side = 0;
  double width = 0;
  double height = 0;
  double radius = 0;
  double a = 0;
  double b = 0;
  double c = 0;
};

/// Voxelises the solid: a cell is foreground iff its centre satisfies the
/// kind's inequality. Throws MarginError if the solid touches a grid face and
/// UsageError for missing or invalid parameters.
BinaryPattern generate(const ShapeSpec& spec);

struct RuggedSpec {
  double probability = 0.0;
  std::uint64_t seed = 0;
};

/// Removes each boundary foreground cell (one with a background face
/// neighbour) independently with the given probability. Deterministic in the
/// seed.
BinaryPattern ruggedize(const BinaryPattern& pattern, const RuggedSpec& spec);

}  // namespace ndthin
