#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "ndthin/pattern.hpp"
#include "ndthin/thin_nd.hpp"

namespace ndthin {

/// Convergence to unit width: 1 - |pixels in any full 2x2 window| / |skeleton|.
/// Throws MetricError for an empty skeleton, DimensionError unless 2D.
double measure_mt(const BinaryPattern& skeleton);

/// |skeleton| / |input|. Throws MetricError for an empty input and UsageError
/// when shapes differ.
double size_ratio(const BinaryPattern& input, const BinaryPattern& skeleton);

struct MetricsReport {
  std::optional<double> m_t;  // empty when not applicable (k != 2)
  double s_r = 0.0;           // also written D_r
  std::size_t n = 0;
  long component_delta = 0;   // skeleton components minus input components
  std::size_t area_input = 0;
  std::size_t area_skeleton = 0;
  bool skeleton_within_input = true;
};

MetricsReport evaluate(const BinaryPattern& input, const ThinResult& result);

/// `algorithm,s_r,m_t,n,component_delta,area_input,area_skeleton`
std::string_view csv_header();
std::string to_csv_row(std::string_view algorithm, const MetricsReport& report);

}  // namespace ndthin
