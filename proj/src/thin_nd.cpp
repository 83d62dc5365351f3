#include "ndthin/thin_nd.hpp"

#include <algorithm>
#include <cstdlib>

#include "ndthin/errors.hpp"

namespace ndthin {

namespace {

/// Neighbour offsets of the 3^k block plus their flat deltas for one pattern.
class Stencil {
 public:
  explicit Stencil(const BinaryPattern& pattern)
      : pattern_(pattern), offsets_(unit_offsets(pattern.rank())) {
    deltas_.reserve(offsets_.size());
    for (const auto& d : offsets_) {
      std::ptrdiff_t delta = 0;
      for (std::size_t i = 0; i < d.size(); ++i) {
        delta += d[i] * static_cast<std::ptrdiff_t>(pattern.strides()[i]);
      }
      deltas_.push_back(delta);
    }
  }

  /// Foreground at c + offsets_[n]; outside the array reads as background.
  bool foreground(const Coord& c, std::size_t off, std::size_t n) const {
    const auto& d = offsets_[n];
    for (std::size_t i = 0; i < d.size(); ++i) {
      const Index q = c[i] + d[i];
      if (q < 0 || static_cast<std::size_t>(q) >= pattern_.extent(i)) return false;
    }
    return pattern_[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(off) + deltas_[n])];
  }

  bool endpoint(const Coord& c, std::size_t off) const {
    int count = 0;
    for (std::size_t n = 0; n < offsets_.size(); ++n) {
      if (foreground(c, off, n) && ++count > 2) return false;
    }
    return true;
  }

  /// Deletability of the run extreme at c (flat offset `off`).
  bool deletable(const Coord& c, std::size_t off, std::size_t axis, Direction dir) const {
    if (endpoint(c, off)) return false;
    const int ahead = dir == Direction::forward ? 1 : -1;
    for (std::size_t nf = 0; nf < offsets_.size(); ++nf) {
      const auto& d = offsets_[nf];
      if (d[axis] != ahead || !foreground(c, off, nf)) continue;
      // S: cells in p's own hyperplane (same axis index as p) adjacent to
      // both p and F, excluding p.
      bool witness = false;
      for (std::size_t ns = 0; ns < offsets_.size() && !witness; ++ns) {
        const auto& e = offsets_[ns];
        if (e[axis] != 0) continue;
        bool adjacent_to_f = true;
        bool is_center = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (std::abs(e[i] - d[i]) > 1) adjacent_to_f = false;
          if (e[i] != 0) is_center = false;
        }
        if (!adjacent_to_f || is_center) continue;
        witness = foreground(c, off, ns);
      }
      if (!witness) return false;
    }
    return true;
  }

 private:
  const BinaryPattern& pattern_;
  std::vector<std::vector<int>> offsets_;
  std::vector<std::ptrdiff_t> deltas_;
};

Coord step(Coord c, std::size_t axis, Index by) {
  c[axis] += by;
  return c;
}

bool contains(const std::vector<Coord>& sorted, const Coord& c) {
  return std::binary_search(sorted.begin(), sorted.end(), c);
}

}  // namespace

Coord Run::at(Index i) const {
  Coord c;
  c.idx.reserve(fixed.size() + 1);
  for (std::size_t a = 0, j = 0; a <= fixed.size(); ++a) {
    c.idx.push_back(a == axis ? i : fixed[j++]);
  }
  return c;
}

std::vector<Run> extract_runs(const BinaryPattern& pattern, std::size_t axis,
                              std::span<const Index> fixed) {
  if (axis >= pattern.rank() || fixed.size() + 1 != pattern.rank()) {
    throw UsageError("extract_runs: axis or fixed coordinates do not match pattern rank");
  }
  Run proto{axis, {fixed.begin(), fixed.end()}, 0, 0};
  const Coord start = proto.at(0);
  const std::size_t base = pattern.offset_of(start);
  const std::size_t stride = pattern.strides()[axis];
  const auto n = static_cast<Index>(pattern.extent(axis));

  std::vector<Run> runs;
  Index j = 0;
  while (j < n) {
    if (!pattern[base + static_cast<std::size_t>(j) * stride]) {
      ++j;
      continue;
    }
    Run run = proto;
    run.back = j;
    while (j < n && pattern[base + static_cast<std::size_t>(j) * stride]) ++j;
    run.front = j - 1;
    runs.push_back(std::move(run));
  }
  return runs;
}

bool is_endpoint(const BinaryPattern& pattern, const Coord& p) {
  if (!pattern.at(p)) throw UsageError("is_endpoint: pixel is background");
  return Stencil(pattern).endpoint(p, pattern.offset_of(p));
}

DeletabilityContext deletability_context(const BinaryPattern& pattern, const Coord& p,
                                         const Coord& f, std::size_t axis,
                                         Direction direction) {
  DeletabilityContext ctx;
  ctx.p = p;
  ctx.n_p = neighborhood(pattern, p);
  ctx.f = f;
  for (auto& q : neighborhood(pattern, f).members) {
    const bool far_side =
        direction == Direction::forward ? q[axis] < f[axis] : q[axis] > f[axis];
    if (far_side) ctx.n_f.push_back(std::move(q));
  }
  for (const auto& q : ctx.n_f) {
    if (q != p && contains(ctx.n_p.members, q)) ctx.s.push_back(q);
  }
  return ctx;
}

bool contour_deletable(const BinaryPattern& pattern, const Coord& p, std::size_t axis,
                       Direction direction) {
  if (axis >= pattern.rank()) throw UsageError("contour_deletable: axis out of range");
  if (!pattern.at(p)) throw UsageError("contour_deletable: pixel is background");
  const Index outward = direction == Direction::forward ? 1 : -1;
  if (pattern.get(step(p, axis, outward))) {
    throw UsageError(direction == Direction::forward
                         ? "contour_deletable: pixel is not the front of its run"
                         : "contour_deletable: pixel is not the back of its run");
  }
  return Stencil(pattern).deletable(p, pattern.offset_of(p), axis, direction);
}

bool thin_subcycle(BinaryPattern& pattern, std::size_t axis, Directions directions) {
  if (axis >= pattern.rank()) throw UsageError("thin_subcycle: axis out of range");
  const Stencil stencil(pattern);
  const std::size_t n = pattern.extent(axis);
  const std::size_t stride = pattern.strides()[axis];
  const std::size_t outer = pattern.cell_count() / (n * stride);
  const bool forward = has(directions, Direction::forward);
  const bool backward = has(directions, Direction::backward);
  auto cells = pattern.cells();

  bool changed = false;
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t inner = 0; inner < stride; ++inner) {
      const std::size_t base = o * n * stride + inner;
      std::size_t j = 0;
      while (j < n) {
        if (!cells[base + j * stride]) {
          ++j;
          continue;
        }
        const std::size_t back = j;
        while (j < n && cells[base + j * stride]) ++j;
        const std::size_t front = j - 1;
        if (front == back) continue;

        const std::size_t front_off = base + front * stride;
        const std::size_t back_off = base + back * stride;
        if (forward) {
          const Coord pf = pattern.coord_of(front_off);
          if (stencil.deletable(pf, front_off, axis, Direction::forward)) {
            cells[front_off] = 0;
            changed = true;
          }
        }
        // The cell after P_b must still be foreground; otherwise the run has
        // already been reduced to a single cell along this slice.
        if (backward && cells[back_off + stride]) {
          const Coord pb = pattern.coord_of(back_off);
          if (stencil.deletable(pb, back_off, axis, Direction::backward)) {
            cells[back_off] = 0;
            changed = true;
          }
        }
      }
    }
  }
  return changed;
}

ThinResult thin(const BinaryPattern& pattern, const Schedule& schedule) {
  schedule.validate(pattern.rank());
  ThinResult result{pattern, 0};
  for (const auto& phase : schedule.phases()) {
    bool changed = true;
    while (changed) {
      ++result.iterations;
      changed = false;
      for (const auto& sub : phase) {
        changed = thin_subcycle(result.skeleton, sub.axis, sub.directions) || changed;
      }
    }
  }
  return result;
}

}  // namespace ndthin
