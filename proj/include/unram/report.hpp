#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "unram/spec.hpp"
#include "unram/sweep.hpp"

namespace unram {

inline constexpr const char* kSchema = "unram/1";

enum class Format { text, records };

struct Report {
  std::string command;
  std::vector<nlohmann::ordered_json> records;
  std::vector<std::string> text;
  std::size_t passed = 0;
  std::size_t failed = 0;

  void check(nlohmann::ordered_json& record, bool pass);
  void append(const Report& other);
  /// Lines ending in '\n', closed by a summary line.
  std::string render(Format f) const;
  int exit_code() const { return failed ? 1 : 0; }
};

/// "omega:j" names the Omega element moving the origin to vertex j; otherwise a word of
/// 1-based simple indices ("" or "e" for the identity).
struct ElementRef {
  std::optional<std::size_t> omega_image;
  std::vector<std::size_t> word;
};
ElementRef parse_element(const std::string& text, std::size_t rank);

struct VerifyOptions {
  std::optional<std::vector<Rational>> point;
  std::size_t denominator = 4;
  int jobs = 1;
};

Report cmd_describe(const DatumSpec& s);
Report cmd_omega(const DatumSpec& s);
Report cmd_relative(const DatumSpec& s);
Report cmd_rgroup(const DatumSpec& s, const std::vector<Rational>& point);
Report cmd_pair(const DatumSpec& s, std::optional<std::size_t> vertex, const std::optional<std::string>& element);
Report cmd_coeff(const DatumSpec& s, const std::vector<Rational>& point, std::size_t vertex, const std::string& element);
Report cmd_verify(const DatumSpec& s, const VerifyOptions& o);
Report cmd_table(const DatumSpec& s, const std::vector<Rational>& point);

/// Point of the closed alcove from a_1..a_l; points outside are moved into the alcove.
AlcovePoint resolve_point(const Alcove& a, const std::vector<OmegaElement>& omega, const std::vector<Rational>& bary,
                          bool* moved = nullptr);

}  // namespace unram
