#include "diskpack/io.hpp"

#include <cerrno>
#include <cmath>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace diskpack {

namespace {

class LineReader
{
public:
  explicit LineReader(std::string_view text)
  {
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      if (!line.empty()) {
        lines_.push_back(line);
      }
      start = end + 1;
    }
  }

  std::string_view next(const char* what)
  {
    if (pos_ >= lines_.size()) {
      throw ParseError(std::string("unexpected end of file, expected ") + what);
    }
    return lines_[pos_++];
  }

  /// Value of a "key value" line; the value may be empty.
  std::string_view keyed(std::string_view key)
  {
    std::string_view line = next(std::string(key).c_str());
    if (line.substr(0, key.size()) != key || (line.size() > key.size() && line[key.size()] != ' ')) {
      throw ParseError("expected '" + std::string(key) + "', got '" + std::string(line) + "'");
    }
    return line.size() > key.size() ? line.substr(key.size() + 1) : std::string_view{};
  }

  void finish() const
  {
    if (pos_ != lines_.size()) {
      throw ParseError("trailing content: '" + std::string(lines_[pos_]) + "'");
    }
  }

private:
  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_words(std::string_view s)
{
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) {
    out.push_back(w);
  }
  return out;
}

double parse_real(const std::string& s, const char* what)
{
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ParseError(std::string("invalid ") + what + ": '" + s + "'");
  }
  return v;
}

long long parse_int(const std::string& s, const char* what)
{
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) {
    throw ParseError(std::string("invalid ") + what + ": '" + s + "'");
  }
  return v;
}

double keyed_real(LineReader& in, std::string_view key)
{
  return parse_real(std::string(in.keyed(key)), std::string(key).c_str());
}

long long keyed_int(LineReader& in, std::string_view key)
{
  return parse_int(std::string(in.keyed(key)), std::string(key).c_str());
}

void expect_header(LineReader& in, std::string_view magic)
{
  if (in.next("header") != magic) {
    throw ParseError("missing '" + std::string(magic) + "' header");
  }
  const long long version = keyed_int(in, "schema_version");
  if (version != kSchemaVersion) {
    throw ParseError("unsupported schema_version " + std::to_string(version));
  }
}

} // namespace

std::string format_real(double x)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string serialize_instance(const DiskSet& disks)
{
  std::string out = "diskpack-instance\n";
  out += "schema_version " + std::to_string(kSchemaVersion) + "\n";
  out += "radius " + format_real(disks.radius) + "\n";
  out += "count " + std::to_string(disks.size()) + "\n";
  for (const Point& c : disks.centers) {
    out += format_real(c.x()) + " " + format_real(c.y()) + "\n";
  }
  return out;
}

DiskSet parse_instance(std::string_view text)
{
  LineReader in(text);
  expect_header(in, "diskpack-instance");
  DiskSet disks;
  disks.radius = keyed_real(in, "radius");
  const long long count = keyed_int(in, "count");
  if (count < 0) {
    throw ParseError("count must be non-negative");
  }
  disks.centers.reserve(static_cast<std::size_t>(count));
  for (long long k = 0; k < count; ++k) {
    const auto words = split_words(in.next("center"));
    if (words.size() != 2) {
      throw ParseError("center line " + std::to_string(k) + " must hold two reals");
    }
    disks.centers.emplace_back(parse_real(words[0], "x"), parse_real(words[1], "y"));
  }
  in.finish();
  try {
    disks.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return disks;
}

std::string instance_hash(const DiskSet& disks)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char ch : serialize_instance(disks)) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

std::string serialize_result(const ResultFile& r)
{
  const Assignment& a = r.assignment;
  const CoverageReport& rep = r.report;
  std::string out = "diskpack-result\n";
  out += "schema_version " + std::to_string(kSchemaVersion) + "\n";
  out += "instance_hash " + r.instance_hash + "\n";
  out += "solver " + r.solver + "\n";
  out += r.parameters.empty() ? std::string("parameters\n") : "parameters " + r.parameters + "\n";
  out += "k " + std::to_string(a.k) + "\n";
  out += std::string("lattice ") + to_string(a.lattice.colouring) + " " + std::to_string(a.lattice.k) + " " +
         format_real(a.lattice.side) + " " + format_real(a.lattice.offset.x()) + " " +
         format_real(a.lattice.offset.y()) + "\n";
  out += "guarantee " + format_real(a.guarantee) + "\n";
  out += "union_area " + format_real(rep.union_area) + "\n";
  out += "selected_area " + format_real(rep.selected_area) + "\n";
  out += "ratio " + format_real(rep.ratio) + "\n";
  out += "lattice_points_hit " + std::to_string(rep.lattice_points_hit) + "\n";
  out += "hexagon_accounting " + format_real(rep.hexagon_accounting) + "\n";
  out += "selected_count " + std::to_string(a.selected_count) + "\n";
  out += "labels " + std::to_string(a.labels.size()) + "\n";
  for (const auto& label : a.labels) {
    out += label ? std::to_string(*label) : std::string("-");
    out += "\n";
  }
  return out;
}

ResultFile parse_result(std::string_view text)
{
  LineReader in(text);
  expect_header(in, "diskpack-result");
  ResultFile r;
  r.instance_hash = std::string(in.keyed("instance_hash"));
  r.solver = std::string(in.keyed("solver"));
  r.parameters = std::string(in.keyed("parameters"));
  Assignment& a = r.assignment;
  a.solver = r.solver;
  a.k = static_cast<int>(keyed_int(in, "k"));
  if (a.k < 1) {
    throw ParseError("k must be at least 1");
  }
  const auto lattice = split_words(in.keyed("lattice"));
  if (lattice.size() != 5) {
    throw ParseError("lattice line must hold colouring, k, side and offset");
  }
  a.lattice.colouring = colouring_from_string(lattice[0]);
  a.lattice.k = static_cast<int>(parse_int(lattice[1], "lattice k"));
  a.lattice.side = parse_real(lattice[2], "lattice side");
  if (!(a.lattice.side > 0.0)) {
    throw ParseError("lattice side must be positive");
  }
  a.lattice.offset = Point(parse_real(lattice[3], "offset x"), parse_real(lattice[4], "offset y"));
  a.guarantee = keyed_real(in, "guarantee");
  CoverageReport& rep = r.report;
  rep.union_area = keyed_real(in, "union_area");
  rep.selected_area = keyed_real(in, "selected_area");
  rep.ratio = keyed_real(in, "ratio");
  rep.lattice_points_hit = static_cast<int>(keyed_int(in, "lattice_points_hit"));
  rep.hexagon_accounting = keyed_real(in, "hexagon_accounting");
  rep.guarantee = a.guarantee;
  const long long selected = keyed_int(in, "selected_count");
  const long long count = keyed_int(in, "labels");
  if (count < 0 || selected < 0) {
    throw ParseError("counts must be non-negative");
  }
  std::size_t seen = 0;
  for (long long k = 0; k < count; ++k) {
    const std::string word(in.next("label"));
    if (word == "-") {
      a.labels.emplace_back(std::nullopt);
    } else {
      a.labels.emplace_back(static_cast<int>(parse_int(word, "label")));
      ++seen;
    }
  }
  if (seen != static_cast<std::size_t>(selected)) {
    throw ParseError("selected_count does not match the labels");
  }
  a.selected_count = seen;
  in.finish();
  return r;
}

std::string read_text_file(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  out << text;
  if (!out) {
    throw std::runtime_error("failed writing '" + path.string() + "'");
  }
}

} // namespace diskpack
