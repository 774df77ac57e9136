// Instance and result files.
//
// Both are line-oriented text. Reals are written with 17 significant digits
// so every double survives a round trip exactly; serialising a parsed file
// reproduces it byte for byte.
//
//   diskpack-instance            diskpack-result
//   schema_version 1             schema_version 1
//   radius 1                     instance_hash <16 hex digits>
//   count <n>                    solver <name>
//   <x> <y>      (n lines)       parameters <free text, may be empty>
//                                k <k>
//                                lattice <colouring> <k> <side> <x> <y>
//                                guarantee / union_area / selected_area /
//                                ratio / lattice_points_hit /
//                                hexagon_accounting / selected_count <value>
//                                labels <n>
//                                <colour or ->  (n lines)
#pragma once

#include "diskpack/selector.hpp"
#include "diskpack/union_area.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace diskpack {

inline constexpr int kSchemaVersion = 1;

class ParseError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// %.17g rendering of a double.
std::string format_real(double x);

std::string serialize_instance(const DiskSet& disks);
DiskSet parse_instance(std::string_view text);

/// FNV-1a 64 of the canonical instance text, as 16 lowercase hex digits.
std::string instance_hash(const DiskSet& disks);

struct ResultFile
{
  std::string instance_hash;
  std::string solver;
  std::string parameters;
  Assignment assignment;
  CoverageReport report;
};

std::string serialize_result(const ResultFile& result);
ResultFile parse_result(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace diskpack
