#include "dimon/io.hpp"

#include <zlib.h>

#include <fstream>
#include <memory>
#include <sstream>

#include "dimon/error.hpp"

namespace dimon {

nlohmann::json to_json(PartialPerm const& a) {
  nlohmann::json map = nlohmann::json::array();
  for (auto const& p : a.pairs()) {
    map.push_back({static_cast<int>(p.from), static_cast<int>(p.to)});
  }
  return {{"n", a.degree()}, {"map", map}};
}

PartialPerm partial_perm_from_json(nlohmann::json const& j) {
  try {
    int const n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (auto const& entry : j.at("map")) {
      if (!entry.is_array() || entry.size() != 2) {
        throw ParseError("map entries must be [from, to] pairs");
      }
      pairs.emplace_back(entry[0].get<int>(), entry[1].get<int>());
    }
    return PartialPerm(n, pairs);
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(std::string("malformed element JSON: ") + e.what());
  } catch (DomainError const& e) {
    throw ParseError(e.what());
  }
}

ExportFormat parse_export_format(std::string_view token) {
  if (token == "jsonl") return ExportFormat::jsonl;
  if (token == "txt") return ExportFormat::txt;
  throw ParseError("unknown format '" + std::string(token) +
                   "' (expected jsonl or txt)");
}

namespace {

std::string format_line(PartialPerm const& a, ExportFormat format) {
  if (format == ExportFormat::txt) return to_string(a);
  nlohmann::json const j = {{"element", to_string(a)},
                            {"schema_version", kSchemaVersion}};
  return j.dump();
}

PartialPerm parse_line(std::string const& line, ExportFormat format) {
  if (format == ExportFormat::txt) return parse_partial_perm(line);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(std::string("invalid JSON line: ") + e.what());
  }
  if (!j.is_object() || !j.contains("element") || !j["element"].is_string()) {
    throw ParseError("JSON line lacks an element string");
  }
  if (j.value("schema_version", 0) != kSchemaVersion) {
    throw ParseError("unsupported schema_version");
  }
  PartialPerm a = parse_partial_perm(j["element"].get<std::string>());
  if (format_line(a, format) != line) {
    throw ParseError("line is not in canonical form: " + line);
  }
  return a;
}

}  // namespace

std::string format_elements(std::span<const PartialPerm> elements,
                            ExportFormat format) {
  std::string out;
  for (auto const& a : elements) {
    out += format_line(a, format);
    out += '\n';
  }
  return out;
}

std::vector<PartialPerm> parse_elements(std::string const& text,
                                        ExportFormat format) {
  std::vector<PartialPerm> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    PartialPerm a = [&] {
      try {
        return parse_line(line, format);
      } catch (ParseError const& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }();
    if (!out.empty()) {
      if (a.degree() != out.front().degree()) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": degree differs from the first element");
      }
      if (a == out.back()) {
        throw ParseError("line " + std::to_string(line_no) + ": duplicate");
      }
      if (a < out.back()) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": elements are not in canonical order");
      }
    }
    out.push_back(a);
  }
  return out;
}

void write_elements_file(std::filesystem::path const& path,
                         std::span<const PartialPerm> elements,
                         ExportFormat format, bool gzip) {
  std::string const data = format_elements(elements, format);
  if (gzip) {
    std::unique_ptr<gzFile_s, int (*)(gzFile)> f(
        gzopen(path.c_str(), "wb9"), &gzclose);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    if (!data.empty() &&
        gzwrite(f.get(), data.data(), static_cast<unsigned>(data.size())) <= 0) {
      throw IoError("write to " + path.string() + " failed");
    }
    if (gzclose(f.release()) != Z_OK) {
      throw IoError("closing " + path.string() + " failed");
    }
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << data;
  if (!out.flush()) throw IoError("write to " + path.string() + " failed");
}

std::vector<PartialPerm> read_elements_file(std::filesystem::path const& path,
                                            ExportFormat format) {
  std::unique_ptr<gzFile_s, int (*)(gzFile)> f(gzopen(path.c_str(), "rb"),
                                               &gzclose);
  if (!f) throw IoError("cannot open " + path.string());
  std::string data;
  char buf[1 << 14];
  int got = 0;
  while ((got = gzread(f.get(), buf, sizeof buf)) > 0) {
    data.append(buf, static_cast<std::size_t>(got));
  }
  if (got < 0) throw IoError("read from " + path.string() + " failed");
  return parse_elements(data, format);
}

}  // namespace dimon
