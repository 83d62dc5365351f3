#include "ndthin/metrics.hpp"

#include <cstdio>
#include <string>

#include "ndthin/errors.hpp"

namespace ndthin {

namespace {

std::string fixed9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

}  // namespace

double measure_mt(const BinaryPattern& skeleton) {
  if (skeleton.rank() != 2) throw DimensionError("m_t is defined for 2D skeletons only");
  const auto area = skeleton.foreground_count();
  if (area == 0) throw MetricError("m_t is undefined for an empty skeleton");
  const auto thick = non_unit_width_pixels(skeleton).size();
  return 1.0 - static_cast<double>(thick) / static_cast<double>(area);
}

double size_ratio(const BinaryPattern& input, const BinaryPattern& skeleton) {
  if (input.shape() != skeleton.shape()) {
    throw UsageError("size_ratio: input and skeleton shapes differ");
  }
  const auto area = input.foreground_count();
  if (area == 0) throw MetricError("size ratio is undefined for an empty input");
  return static_cast<double>(skeleton.foreground_count()) / static_cast<double>(area);
}

MetricsReport evaluate(const BinaryPattern& input, const ThinResult& result) {
  const auto& skeleton = result.skeleton;
  MetricsReport report;
  report.s_r = size_ratio(input, skeleton);
  if (input.rank() == 2) report.m_t = measure_mt(skeleton);
  report.n = result.iterations;
  report.area_input = input.foreground_count();
  report.area_skeleton = skeleton.foreground_count();
  report.component_delta = static_cast<long>(connected_components(skeleton).count) -
                           static_cast<long>(connected_components(input).count);
  report.skeleton_within_input = skeleton.subset_of(input);
  return report;
}

std::string_view csv_header() {
  return "algorithm,s_r,m_t,n,component_delta,area_input,area_skeleton";
}

std::string to_csv_row(std::string_view algorithm, const MetricsReport& report) {
  std::string row(algorithm);
  row += ',' + fixed9(report.s_r);
  row += ',' + (report.m_t ? fixed9(*report.m_t) : std::string("NA"));
  row += ',' + std::to_string(report.n);
  row += ',' + std::to_string(report.component_delta);
  row += ',' + std::to_string(report.area_input);
  row += ',' + std::to_string(report.area_skeleton);
  return row;
}

}  // namespace ndthin
