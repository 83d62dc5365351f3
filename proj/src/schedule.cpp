#include "ndthin/schedule.hpp"

#include <charconv>
#include <string>

#include "ndthin/errors.hpp"

namespace ndthin {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

SubCycle parse_sub(std::string_view token) {
  std::size_t axis = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [rest, ec] = std::from_chars(first, last, axis);
  if (ec != std::errc{} || rest == first) {
    throw ScheduleError("sub-cycle '" + std::string(token) + "' must start with an axis index");
  }
  const std::string_view dirs(rest, static_cast<std::size_t>(last - rest));
  Directions d;
  if (dirs == "f") {
    d = Directions::forward;
  } else if (dirs == "b") {
    d = Directions::backward;
  } else if (dirs == "fb") {
    d = Directions::both;
  } else {
    throw ScheduleError("sub-cycle '" + std::string(token) + "' must end in f, b or fb");
  }
  return {axis, d};
}

}  // namespace

Schedule::Schedule(std::vector<Phase> phases) : phases_(std::move(phases)) {
  if (phases_.empty()) throw ScheduleError("schedule has no phases");
  for (const auto& phase : phases_) {
    if (phase.empty()) throw ScheduleError("schedule phase has no sub-cycles");
  }
}

Schedule Schedule::standard(std::size_t rank) {
  Phase phase;
  for (std::size_t axis = rank; axis > 0; --axis) phase.push_back({axis - 1, Directions::both});
  return Schedule({phase});
}

Schedule Schedule::parse(std::string_view text) {
  std::vector<Phase> phases;
  for (auto phase_text : split(text, ';')) {
    Phase phase;
    for (auto sub : split(phase_text, ',')) phase.push_back(parse_sub(sub));
    phases.push_back(std::move(phase));
  }
  return Schedule(std::move(phases));
}

std::string Schedule::to_string() const {
  std::string out;
  for (std::size_t p = 0; p < phases_.size(); ++p) {
    if (p) out += ';';
    for (std::size_t s = 0; s < phases_[p].size(); ++s) {
      if (s) out += ',';
      const auto& sub = phases_[p][s];
      out += std::to_string(sub.axis);
      if (has(sub.directions, Direction::forward)) out += 'f';
      if (has(sub.directions, Direction::backward)) out += 'b';
    }
  }
  return out;
}

void Schedule::validate(std::size_t rank) const {
  if (phases_.empty()) throw ScheduleError("schedule has no phases");
  for (const auto& phase : phases_) {
    if (phase.empty()) throw ScheduleError("schedule phase has no sub-cycles");
    for (const auto& sub : phase) {
      if (sub.axis >= rank) {
        throw ScheduleError("schedule axis " + std::to_string(sub.axis) +
                            " out of range for a " + std::to_string(rank) + "-D pattern");
      }
    }
  }
}

}  // namespace ndthin
