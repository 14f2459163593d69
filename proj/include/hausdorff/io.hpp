// Text formats: complexes (JSON and line-based), laws, rationals, matrices.
//
// JSON:  { "maximal_faces": [[0, 1], [1, 2]] }
// Lines: one face per line, vertices separated by whitespace; blank lines
//        and text after '#' are ignored.
// Both formats list generators; the complex is their downward closure.

#ifndef HAUSDORFF_IO_HPP
#define HAUSDORFF_IO_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hausdorff/complex.hpp"
#include "hausdorff/iso.hpp"
#include "hausdorff/metric.hpp"

namespace hausdorff::io {

enum class Format { kAuto, kJson, kLines };

/// Syntax or schema error. line/column are 1-based; 0 when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Format parse_format(std::string_view name);  // "json" | "lines" | "auto"

Complex parse_complex_json(std::string_view text);
Complex parse_complex_lines(std::string_view text);
/// kAuto picks JSON when the first non-blank character is '{'.
Complex parse_complex(std::string_view text, Format format = Format::kAuto);
Complex read_complex(const std::string& path, Format format = Format::kAuto);

std::string to_json(const Complex& k);
std::string to_lines(const Complex& k);
std::string to_json(std::span<const Complex> ks);

/// "v:p/q,v:p/q,...". Throws ParseError on syntax, InvalidLaw on bad weights.
Law parse_law(std::string_view text);

/// Header row of labels, then one row of "p/q" cells per label.
std::string to_tsv(const DistanceMatrix& m);

}  // namespace hausdorff::io

#endif  // HAUSDORFF_IO_HPP
