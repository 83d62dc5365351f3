#include "ndthin/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "ndthin/errors.hpp"

namespace ndthin {

namespace {

constexpr std::size_t kMaxCells = std::size_t{1} << 31;

class Scanner {
 public:
  explicit Scanner(std::string_view bytes) : bytes_(bytes) {}

  std::size_t pos() const noexcept { return pos_; }
  bool done() const noexcept { return pos_ >= bytes_.size(); }
  char peek() const noexcept { return bytes_[pos_]; }
  void advance() noexcept { ++pos_; }

  bool consume(std::string_view literal) {
    if (bytes_.substr(pos_, literal.size()) != literal) return false;
    pos_ += literal.size();
    return true;
  }

  /// Skips whitespace and, when enabled, `#` comments running to end of line.
  void skip_space(bool comments) {
    while (!done()) {
      const char ch = peek();
      if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else if (comments && ch == '#') {
        while (!done() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::size_t number(const char* what) {
    if (done()) throw ParseError(std::string("truncated data: expected ") + what, pos_);
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError(std::string("expected ") + what, pos_);
    }
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::size_t>(peek() - '0');
      if (v > kMaxCells) throw ParseError(std::string(what) + " overflows", start);
      advance();
    }
    return v;
  }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

Shape read_dimensions(Scanner& in, std::size_t count, bool comments) {
  Shape shape;
  std::size_t volume = 1;
  for (std::size_t i = 0; i < count; ++i) {
    in.skip_space(comments);
    const std::size_t at = in.pos();
    const std::size_t n = in.number("dimension");
    if (n == 0) throw ParseError("dimension must be >= 1", at);
    if (volume > kMaxCells / n) throw ParseError("dimension overflow", at);
    volume *= n;
    shape.push_back(n);
  }
  return shape;
}

void require_end(Scanner& in, bool comments) {
  in.skip_space(comments);
  if (!in.done()) throw ParseError("unexpected data after the last cell", in.pos());
}

}  // namespace

BinaryPattern read_pbm(std::string_view bytes) {
  Scanner in(bytes);
  if (!in.consume("P1")) throw ParseError("unsupported magic (expected P1)", 0);
  if (!in.done() && !std::isspace(static_cast<unsigned char>(in.peek())) && in.peek() != '#') {
    throw ParseError("unsupported magic (expected P1)", 0);
  }
  // PBM lists width before height.
  const Shape wh = read_dimensions(in, 2, true);
  BinaryPattern out(Shape{wh[1], wh[0]});
  auto cells = out.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    in.skip_space(true);
    if (in.done()) throw ParseError("truncated data: expected more pixels", in.pos());
    const char ch = in.peek();
    if (ch != '0' && ch != '1') throw ParseError("invalid pixel character", in.pos());
    cells[i] = ch == '1' ? 1 : 0;
    in.advance();
  }
  require_end(in, true);
  return out;
}

std::string write_pbm(const BinaryPattern& pattern) {
  if (pattern.rank() != 2) throw DimensionError("PBM holds 2D patterns only");
  const std::size_t rows = pattern.extent(0);
  const std::size_t cols = pattern.extent(1);
  std::string out = "P1\n" + std::to_string(cols) + ' ' + std::to_string(rows) + '\n';
  out.reserve(out.size() + pattern.cell_count() * 2);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c) out += ' ';
      out += pattern[r * cols + c] ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

BinaryPattern read_ndbin(std::string_view bytes) {
  Scanner in(bytes);
  if (!in.consume("NDBIN")) throw ParseError("unsupported magic (expected NDBIN)", 0);
  in.skip_space(false);
  const std::size_t rank_at = in.pos();
  const std::size_t rank = in.number("dimension count");
  if (rank < 2 || rank > 32) throw ParseError("dimension count must be in [2, 32]", rank_at);
  BinaryPattern out(read_dimensions(in, rank, false));
  auto cells = out.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    in.skip_space(false);
    if (in.done()) {
      throw ParseError("cell count mismatch: header declares " + std::to_string(cells.size()) +
                           " cells, payload has " + std::to_string(i),
                       in.pos());
    }
    const std::size_t at = in.pos();
    const char ch = in.peek();
    in.advance();
    if ((ch != '0' && ch != '1') ||
        (!in.done() && !std::isspace(static_cast<unsigned char>(in.peek())))) {
      throw ParseError("cells must be single 0/1 tokens", at);
    }
    cells[i] = ch == '1' ? 1 : 0;
  }
  in.skip_space(false);
  if (!in.done()) {
    throw ParseError("cell count mismatch: payload has more cells than the header declares",
                     in.pos());
  }
  return out;
}

std::string write_ndbin(const BinaryPattern& pattern) {
  std::string out = "NDBIN\n" + std::to_string(pattern.rank()) + '\n';
  for (std::size_t i = 0; i < pattern.rank(); ++i) {
    if (i) out += ' ';
    out += std::to_string(pattern.extent(i));
  }
  out += '\n';
  const std::size_t line = pattern.extent(pattern.rank() - 1);
  for (std::size_t off = 0; off < pattern.cell_count(); ++off) {
    out += pattern[off] ? '1' : '0';
    out += (off + 1) % line == 0 ? '\n' : ' ';
  }
  return out;
}

std::string export_voxels_csv(const BinaryPattern& pattern) {
  std::string out;
  for (std::size_t i = 0; i < pattern.rank(); ++i) {
    if (i) out += ',';
    out += 'x' + std::to_string(i);
  }
  out += '\n';
  for (const auto& c : pattern.foreground()) {
    for (std::size_t i = 0; i < c.rank(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    out += '\n';
  }
  return out;
}

std::optional<FileFormat> parse_format(std::string_view name) {
  if (name == "pbm") return FileFormat::pbm;
  if (name == "ndbin") return FileFormat::ndbin;
  if (name == "csv") return FileFormat::csv;
  return std::nullopt;
}

std::optional<FileFormat> format_from_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext.empty()) return std::nullopt;
  return parse_format(std::string_view(ext).substr(1));
}

BinaryPattern load_pattern(const std::filesystem::path& path, FileFormat format) {
  if (format == FileFormat::csv) throw UsageError("CSV voxel lists cannot be read back");
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << file.rdbuf();
  const std::string bytes = buf.str();
  return format == FileFormat::pbm ? read_pbm(bytes) : read_ndbin(bytes);
}

void save_pattern(const std::filesystem::path& path, const BinaryPattern& pattern,
                  FileFormat format) {
  std::string bytes;
  switch (format) {
    case FileFormat::pbm:
      bytes = write_pbm(pattern);
      break;
    case FileFormat::ndbin:
      bytes = write_ndbin(pattern);
      break;
    case FileFormat::csv:
      bytes = export_voxels_csv(pattern);
      break;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write " + path.string());
  file << bytes;
  if (!file) throw IoError("failed writing " + path.string());
}

}  // namespace ndthin
