#include "hausdorff/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hausdorff::io {

using nlohmann::json;

namespace {

std::string located(std::size_t line, std::size_t column, const std::string& what) {
  if (line == 0) return what;
  return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
}

// 1-based line/column of a byte offset.
std::pair<std::size_t, std::size_t> position_of(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') { ++line; col = 1; } else { ++col; }
  }
  return {line, col};
}

VertexId parse_vertex(std::string_view token, std::size_t line, std::size_t column) {
  VertexId v = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, column, "expected a nonnegative integer vertex, got '" + std::string(token) + "'");
  }
  return v;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error(located(line, column, what)), line_(line), column_(column) {}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::kJson;
  if (name == "lines") return Format::kLines;
  if (name == "auto") return Format::kAuto;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

Complex parse_complex_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, col] = position_of(text, offset);
    throw ParseError(line, col, "invalid JSON");
  }
  if (!doc.is_object() || !doc.contains("maximal_faces")) {
    throw ParseError(0, 0, "expected an object with key \"maximal_faces\"");
  }
  const auto& list = doc["maximal_faces"];
  if (!list.is_array()) throw ParseError(0, 0, "/maximal_faces: expected an array of faces");
  std::vector<Face> faces;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& face = list[i];
    const std::string where = "/maximal_faces/" + std::to_string(i);
    if (!face.is_array()) throw ParseError(0, 0, where + ": expected an array of vertices");
    std::vector<VertexId> vs;
    for (std::size_t j = 0; j < face.size(); ++j) {
      if (!face[j].is_number_unsigned()) {
        throw ParseError(0, 0, where + "/" + std::to_string(j) + ": expected a nonnegative integer");
      }
      vs.push_back(face[j].get<VertexId>());
    }
    faces.emplace_back(std::move(vs));  // EmptyInput on []
  }
  return Complex::from_faces(faces);
}

Complex parse_complex_lines(std::string_view text) {
  std::vector<Face> faces;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<VertexId> vs;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) { ++i; continue; }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      vs.push_back(parse_vertex(line.substr(i, j - i), line_no, i + 1));
      i = j;
    }
    if (!vs.empty()) faces.emplace_back(std::move(vs));
    if (end == text.size()) break;
    start = end + 1;
  }
  return Complex::from_faces(faces);
}

Complex parse_complex(std::string_view text, Format format) {
  if (format == Format::kAuto) {
    const auto first = std::find_if(text.begin(), text.end(),
                                    [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
    format = (first != text.end() && *first == '{') ? Format::kJson : Format::kLines;
  }
  return format == Format::kJson ? parse_complex_json(text) : parse_complex_lines(text);
}

Complex read_complex(const std::string& path, Format format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str(), format);
}

namespace {

json faces_json(const Complex& k) {
  json faces = json::array();
  for (const auto& f : k.maximal_faces()) {
    faces.push_back(json(std::vector<VertexId>(f.vertices().begin(), f.vertices().end())));
  }
  return json{{"maximal_faces", faces}};
}

}  // namespace

std::string to_json(const Complex& k) { return faces_json(k).dump(); }

std::string to_json(std::span<const Complex> ks) {
  json arr = json::array();
  for (const auto& k : ks) arr.push_back(faces_json(k));
  return arr.dump();
}

std::string to_lines(const Complex& k) {
  std::string out;
  for (const auto& f : k.maximal_faces()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(f.vertices()[i]);
    }
    out += '\n';
  }
  return out;
}

Law parse_law(std::string_view text) {
  std::map<VertexId, Rat> weights;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(pos, end - pos);
    const std::size_t column = pos + 1;
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(1, column, "expected 'vertex:weight', got '" + std::string(item) + "'");
    }
    const VertexId v = parse_vertex(item.substr(0, colon), 1, column);
    Rat w;
    try {
      w = Rat::parse(item.substr(colon + 1));
    } catch (const std::invalid_argument& e) {
      throw ParseError(1, column + colon + 1, e.what());
    }
    if (!weights.emplace(v, std::move(w)).second) {
      throw ParseError(1, column, "vertex " + std::to_string(v) + " listed twice");
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return Law(std::move(weights));
}

std::string to_tsv(const DistanceMatrix& m) {
  std::string out;
  const auto labels = m.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += '\t';
    out += labels[i];
  }
  out += '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += '\t';
      out += m.at(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

}  // namespace hausdorff::io
