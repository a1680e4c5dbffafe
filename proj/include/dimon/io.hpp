#pragma once

// JSON forms and element-list export/import.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "dimon/partial_perm.hpp"

namespace dimon {

inline constexpr int kSchemaVersion = 1;

// {"n":5,"map":[[2,1],[4,3],[5,4]]}
nlohmann::json to_json(PartialPerm const& a);
PartialPerm partial_perm_from_json(nlohmann::json const& j);

enum class ExportFormat { jsonl, txt };

ExportFormat parse_export_format(std::string_view token);

// One element per line, in the given order. txt lines are canonical element
// text; jsonl lines are {"element":"<text>","schema_version":1}.
std::string format_elements(std::span<const PartialPerm> elements,
                            ExportFormat format);

// Parses a dump, rejecting any line that is not in canonical form, any
// duplicate and any out-of-order line.
std::vector<PartialPerm> parse_elements(std::string const& text,
                                        ExportFormat format);

void write_elements_file(std::filesystem::path const& path,
                         std::span<const PartialPerm> elements,
                         ExportFormat format, bool gzip);

// Reads plain or gzip-compressed dumps.
std::vector<PartialPerm> read_elements_file(std::filesystem::path const& path,
                                            ExportFormat format);

}  // namespace dimon
