#include "ndthin/shapes.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <string>

#include "ndthin/errors.hpp"

namespace ndthin {

namespace {

constexpr double kEps = 1e-9;

struct KindName {
  ShapeKind kind;
  std::string_view name;
};

constexpr std::array<KindName, 9> kKindNames{{
    {ShapeKind::square, "square"},
    {ShapeKind::rectangle, "rectangle"},
    {ShapeKind::disc, "disc"},
    {ShapeKind::triangle, "triangle"},
    {ShapeKind::sphere, "sphere"},
    {ShapeKind::cylinder, "cylinder"},
    {ShapeKind::hyperboloid_one_sheet, "hyperboloid-one-sheet"},
    {ShapeKind::hyperboloid_two_sheet, "hyperboloid-two-sheet"},
    {ShapeKind::elliptic_paraboloid, "elliptic-paraboloid"},
}};

std::size_t rank_of(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::square:
    case ShapeKind::rectangle:
    case ShapeKind::disc:
    case ShapeKind::triangle:
      return 2;
    default:
      return 3;
  }
}

double positive(double v, const char* what) {
  if (!(v > 0)) throw UsageError(std::string("shape parameter '") + what + "' must be > 0");
  return v;
}

double or_default(double v, double fallback) { return v > 0 ? v : fallback; }

/// Integer-aligned interval of `length` cells centred in [0, n).
bool in_centered_interval(Index i, std::size_t n, double length) {
  const auto len = static_cast<Index>(std::llround(length));
  const Index start = (static_cast<Index>(n) - len) / 2;
  return i >= start && i < start + len;
}

double centered(Index i, std::size_t n) {
  return static_cast<double>(i) - (static_cast<double>(n) - 1.0) / 2.0;
}

/// Builds the membership predicate for one cell.
std::function<bool(const Coord&)> membership(const ShapeSpec& s) {
  const auto& g = s.grid;
  switch (s.kind) {
    case ShapeKind::square: {
      const double side = positive(s.side, "side");
      return [=](const Coord& c) {
        return in_centered_interval(c[0], g[0], side) && in_centered_interval(c[1], g[1], side);
      };
    }
    case ShapeKind::rectangle: {
      const double w = positive(s.width, "width");
      const double h = positive(s.height, "height");
      return [=](const Coord& c) {
        return in_centered_interval(c[0], g[0], h) && in_centered_interval(c[1], g[1], w);
      };
    }
    case ShapeKind::disc: {
      const double r = positive(s.radius, "radius");
      return [=](const Coord& c) {
        const double y = centered(c[0], g[0]);
        const double x = centered(c[1], g[1]);
        return x * x + y * y <= r * r + kEps;
      };
    }
    case ShapeKind::triangle: {
      const double base = positive(s.side, "side");
      const double h = std::llround(or_default(s.height, base));
      const Index top = (static_cast<Index>(g[0]) - static_cast<Index>(h)) / 2;
      return [=](const Coord& c) {
        const double t = static_cast<double>(c[0] - top);
        if (t < 0 || t > h - 1) return false;
        const double half = (base - 1.0) / 2.0 * (h > 1 ? t / (h - 1) : 1.0);
        return std::abs(centered(c[1], g[1])) <= half + kEps;
      };
    }
    case ShapeKind::sphere: {
      const double r = positive(s.radius, "radius");
      return [=](const Coord& c) {
        const double x = centered(c[0], g[0]);
        const double y = centered(c[1], g[1]);
        const double z = centered(c[2], g[2]);
        return x * x + y * y + z * z <= r * r + kEps;
      };
    }
    case ShapeKind::cylinder: {
      const double r = positive(s.radius, "radius");
      const double h = or_default(s.height, static_cast<double>(g[2]) - 4);
      positive(h, "height");
      return [=](const Coord& c) {
        const double x = centered(c[0], g[0]);
        const double y = centered(c[1], g[1]);
        return x * x + y * y <= r * r + kEps && in_centered_interval(c[2], g[2], h);
      };
    }
    case ShapeKind::hyperboloid_one_sheet:
    case ShapeKind::hyperboloid_two_sheet:
    case ShapeKind::elliptic_paraboloid: {
      const double a = or_default(s.a, 4.0);
      const double b = or_default(s.b, a);
      const double cz = or_default(s.c, 6.0);
      const double h = or_default(s.height, static_cast<double>(g[2]) - 4);
      positive(h, "height");
      const ShapeKind kind = s.kind;
      return [=](const Coord& c) {
        const double x = centered(c[0], g[0]) / a;
        const double y = centered(c[1], g[1]) / b;
        const double z = centered(c[2], g[2]);
        if (std::abs(z) > h / 2 + kEps) return false;
        if (kind == ShapeKind::hyperboloid_one_sheet) {
          return x * x + y * y - (z / cz) * (z / cz) <= 1.0 + kEps;
        }
        if (kind == ShapeKind::hyperboloid_two_sheet) {
          return (z / cz) * (z / cz) - x * x - y * y >= 1.0 - kEps;
        }
        return x * x + y * y <= (z + h / 2) / cz + kEps;
      };
    }
  }
  throw UsageError("unknown shape kind");
}

bool touches_face(const BinaryPattern& p) {
  for (std::size_t off = 0; off < p.cell_count(); ++off) {
    if (!p[off]) continue;
    const Coord c = p.coord_of(off);
    for (std::size_t i = 0; i < p.rank(); ++i) {
      if (c[i] == 0 || static_cast<std::size_t>(c[i]) + 1 == p.extent(i)) return true;
    }
  }
  return false;
}

}  // namespace

std::optional<ShapeKind> parse_shape_kind(std::string_view name) {
  for (const auto& [kind, n] : kKindNames) {
    if (n == name) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(ShapeKind kind) {
  for (const auto& [k, n] : kKindNames) {
    if (k == kind) return n;
  }
  return "unknown";
}

BinaryPattern generate(const ShapeSpec& spec) {
  const std::size_t rank = rank_of(spec.kind);
  if (spec.grid.size() != rank) {
    throw UsageError(std::string(to_string(spec.kind)) + " needs a " + std::to_string(rank) +
                     "-D grid");
  }
  BinaryPattern out(spec.grid);
  const auto inside = membership(spec);
  for (std::size_t off = 0; off < out.cell_count(); ++off) {
    if (inside(out.coord_of(off))) out.cells()[off] = 1;
  }
  if (touches_face(out)) {
    throw MarginError(std::string(to_string(spec.kind)) +
                      " does not fit the grid with a one-cell background margin");
  }
  return out;
}

BinaryPattern ruggedize(const BinaryPattern& pattern, const RuggedSpec& spec) {
  if (!(spec.probability >= 0.0 && spec.probability <= 1.0)) {
    throw UsageError("rugged probability must lie in [0, 1]");
  }
  std::vector<std::size_t> boundary;
  for (std::size_t off = 0; off < pattern.cell_count(); ++off) {
    if (!pattern[off]) continue;
    const Coord c = pattern.coord_of(off);
    for (std::size_t i = 0; i < pattern.rank(); ++i) {
      Coord lo = c;
      Coord hi = c;
      --lo[i];
      ++hi[i];
      if (!pattern.get(lo) || !pattern.get(hi)) {
        boundary.push_back(off);
        break;
      }
    }
  }

  BinaryPattern out = pattern;
  std::mt19937_64 rng(spec.seed);
  for (auto off : boundary) {
    // 53-bit uniform in [0, 1), independent of the standard library's
    // distribution implementations.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < spec.probability) out.cells()[off] = 0;
  }
  return out;
}

}  // namespace ndthin
