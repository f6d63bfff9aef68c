#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "unram/rootdatum.hpp"

namespace unram {

struct ParseError : std::runtime_error {
  std::size_t line, column;
  ParseError(const std::string& what, std::size_t line, std::size_t column);
};

/// Input line such as "2A5 sc", "D4 ad", "D4 custom[1,0,0,0;0,1,0,0;0,0,1,1;0,0,0,2]" or
/// "A3 --isogeny sc --lattice 1,1,1".
struct DatumSpec {
  std::string type_label;  // untwisted label, e.g. "A5"
  Isogeny::Kind isogeny = Isogeny::Kind::sc;
  std::optional<IntMatrix> custom_lattice;  // Hermite form rows, fundamental-weight coordinates
  std::optional<unsigned> twist;           // order of the diagram automorphism

  std::string full_label() const;
  std::string render() const;
  BasedRootDatum build() const;
  bool operator==(const DatumSpec& o) const;
};

/// column is the 1-based column of text within its source line (for error positions).
DatumSpec parse_spec(const std::string& text, std::size_t line = 1, std::size_t column = 1);
/// Blank lines and lines starting with '#' are skipped.
std::vector<DatumSpec> parse_spec_file(const std::string& text);
DatumSpec make_spec(const std::string& type, const std::string& isogeny, const std::string& lattice);

IntMatrix parse_lattice(const std::string& text, std::size_t line = 1, std::size_t column = 1);
std::vector<Rational> parse_point(const std::string& text);
/// 1-based comma-separated simple indices, returned 0-based.
std::vector<std::size_t> parse_word(const std::string& text, std::size_t rank);

}  // namespace unram
