#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "ndthin/pattern.hpp"

namespace ndthin {

/// Plain PBM (P1). '1' is foreground; axis 0 is the row.
BinaryPattern read_pbm(std::string_view bytes);
std::string write_pbm(const BinaryPattern& pattern);

/// `NDBIN\n<k>\n<N_1> ... <N_k>\n` followed by the cells in row-major order.
BinaryPattern read_ndbin(std::string_view bytes);
std::string write_ndbin(const BinaryPattern& pattern);

/// One `i_1,...,i_k` line per foreground cell under an `x0,...` header.
std::string export_voxels_csv(const BinaryPattern& pattern);

enum class FileFormat { pbm, ndbin, csv };

std::optional<FileFormat> parse_format(std::string_view name);
/// Format implied by the file extension, if recognised.
std::optional<FileFormat> format_from_path(const std::filesystem::path& path);

/// CSV is write-only; loading it throws UsageError.
BinaryPattern load_pattern(const std::filesystem::path& path, FileFormat format);
void save_pattern(const std::filesystem::path& path, const BinaryPattern& pattern,
                  FileFormat format);

}  // namespace ndthin
