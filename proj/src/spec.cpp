#include "unram/spec.hpp"

#include <cctype>
#include <sstream>

namespace unram {

ParseError::ParseError(const std::string& what, std::size_t l, std::size_t c)
    : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + what), line(l), column(c) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& s, std::size_t column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    int depth = 0;
    while (j < s.size() && (depth > 0 || !std::isspace(static_cast<unsigned char>(s[j])))) {
      if (s[j] == '[') ++depth;
      if (s[j] == ']') --depth;
      ++j;
    }
    out.push_back({s.substr(i, j - i), column + i});
    i = j;
  }
  return out;
}

Integer parse_integer(const std::string& s, std::size_t line, std::size_t column) {
  std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (k == s.size()) throw ParseError("expected an integer, got '" + s + "'", line, column);
  for (std::size_t i = k; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected an integer, got '" + s + "'", line, column + i);
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

IntMatrix root_lattice_rows(const CartanType& t) { return hermite_normal_form(cartan_matrix(t).transpose()); }

void normalize(DatumSpec& d, const CartanType& base) {
  if (d.isogeny != Isogeny::Kind::custom) {
    d.custom_lattice.reset();
    return;
  }
  IntMatrix h = hermite_normal_form(*d.custom_lattice);
  d.custom_lattice = h;
  if (h == IntMatrix::identity(base.rank)) {
    d.isogeny = Isogeny::Kind::sc;
    d.custom_lattice.reset();
  } else if (h == root_lattice_rows(base)) {
    d.isogeny = Isogeny::Kind::ad;
    d.custom_lattice.reset();
  }
}

std::string render_rows(const IntMatrix& m) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += ';';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) s += ',';
      s += m(r, c).get_str();
    }
  }
  return s;
}

Isogeny::Kind parse_kind(const Token& t, std::size_t line) {
  if (t.text == "sc") return Isogeny::Kind::sc;
  if (t.text == "ad") return Isogeny::Kind::ad;
  throw ParseError("unknown isogeny '" + t.text + "' (expected sc or ad)", line, t.column);
}

}  // namespace

std::string DatumSpec::full_label() const { return (twist ? std::to_string(*twist) : std::string()) + type_label; }

std::string DatumSpec::render() const {
  std::string s = full_label() + ' ';
  switch (isogeny) {
    case Isogeny::Kind::sc: return s + "sc";
    case Isogeny::Kind::ad: return s + "ad";
    case Isogeny::Kind::custom: return s + "custom[" + render_rows(*custom_lattice) + "]";
  }
  return s;
}

BasedRootDatum DatumSpec::build() const {
  Isogeny i{isogeny, custom_lattice ? *custom_lattice : IntMatrix()};
  return standard_datum(full_label(), i);
}

bool DatumSpec::operator==(const DatumSpec& o) const {
  return type_label == o.type_label && isogeny == o.isogeny && twist == o.twist &&
         custom_lattice.has_value() == o.custom_lattice.has_value() &&
         (!custom_lattice || *custom_lattice == *o.custom_lattice);
}

IntMatrix parse_lattice(const std::string& text, std::size_t line, std::size_t column) {
  std::vector<IntVector> rows;
  std::size_t width = 0, start = 0;
  while (true) {
    std::size_t end = text.find(';', start);
    std::string row = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    IntVector v;
    std::size_t p = 0;
    while (true) {
      std::size_t q = row.find(',', p);
      std::string e = row.substr(p, q == std::string::npos ? std::string::npos : q - p);
      std::size_t lead = 0;
      while (lead < e.size() && e[lead] == ' ') ++lead;
      while (!e.empty() && e.back() == ' ') e.pop_back();
      v.push_back(parse_integer(e.substr(lead), line, column + start + p + lead));
      if (q == std::string::npos) break;
      p = q + 1;
    }
    if (rows.empty()) width = v.size();
    else if (v.size() != width)
      throw ParseError("lattice rows have different lengths", line, column + start);
    rows.push_back(std::move(v));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return IntMatrix::from_rows(rows, width);
}

DatumSpec parse_spec(const std::string& text, std::size_t line, std::size_t column) {
  auto tokens = tokenize(text, column);
  if (tokens.empty()) throw ParseError("empty datum spec", line, column);
  DatumSpec d;
  TypeLabel label;
  try {
    label = parse_type_label(tokens[0].text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line, tokens[0].column);
  }
  d.type_label = label.base.label();
  if (label.twist > 1) d.twist = label.twist;
  bool have_isogeny = false;
  for (std::size_t k = 1; k < tokens.size(); ++k) {
    const Token& t = tokens[k];
    if (have_isogeny) throw ParseError("unexpected token '" + t.text + "'", line, t.column);
    if (t.text == "--isogeny" || t.text == "--lattice") {
      if (k + 1 == tokens.size()) throw ParseError(t.text + " needs a value", line, t.column + t.text.size());
      const Token& v = tokens[++k];
      if (t.text == "--isogeny") {
        Isogeny::Kind k = parse_kind(v, line);
        if (d.custom_lattice) throw ParseError("--isogeny conflicts with --lattice", line, t.column);
        d.isogeny = k;
      } else {
        if (d.isogeny != Isogeny::Kind::sc || have_isogeny)
          throw ParseError("--lattice conflicts with the isogeny already given", line, t.column);
        d.isogeny = Isogeny::Kind::custom;
        d.custom_lattice = parse_lattice(v.text, line, v.column);
      }
      continue;
    }
    if (t.text.rfind("custom[", 0) == 0) {
      if (t.text.back() != ']') throw ParseError("missing ']'", line, t.column + t.text.size());
      d.isogeny = Isogeny::Kind::custom;
      d.custom_lattice = parse_lattice(t.text.substr(7, t.text.size() - 8), line, t.column + 7);
    } else {
      d.isogeny = parse_kind(t, line);
    }
    have_isogeny = true;
  }
  if (d.custom_lattice && d.custom_lattice->cols() != label.base.rank)
    throw ParseError("lattice rows must have " + std::to_string(label.base.rank) + " entries for " + d.type_label, line,
                     tokens[0].column);
  normalize(d, label.base);
  return d;
}

std::vector<DatumSpec> parse_spec_file(const std::string& text) {
  std::vector<DatumSpec> out;
  std::istringstream in(text);
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    std::size_t hash = raw.find('#');
    std::string body = raw.substr(0, hash);
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_spec(body, line, 1));
  }
  return out;
}

DatumSpec make_spec(const std::string& type, const std::string& isogeny, const std::string& lattice) {
  std::string s = type;
  if (!isogeny.empty()) s += " --isogeny " + isogeny;
  if (!lattice.empty()) s += " --lattice " + lattice;
  return parse_spec(s);
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> out;
  std::size_t p = 0;
  while (true) {
    std::size_t q = text.find(',', p);
    std::string e = text.substr(p, q == std::string::npos ? std::string::npos : q - p);
    try {
      out.push_back(parse_rational(e));
    } catch (const std::exception& ex) {
      throw ParseError(ex.what(), 1, p + 1);
    }
    if (q == std::string::npos) break;
    p = q + 1;
  }
  return out;
}

std::vector<std::size_t> parse_word(const std::string& text, std::size_t rank) {
  std::vector<std::size_t> out;
  if (text.empty() || text == "e") return out;
  std::size_t p = 0;
  while (true) {
    std::size_t q = text.find(',', p);
    std::string e = text.substr(p, q == std::string::npos ? std::string::npos : q - p);
    Integer v = parse_integer(e, 1, p + 1);
    if (v < 1 || v > static_cast<unsigned long>(rank))
      throw ParseError("simple index " + e + " out of range 1.." + std::to_string(rank), 1, p + 1);
    out.push_back(v.get_ui() - 1);
    if (q == std::string::npos) break;
    p = q + 1;
  }
  return out;
}

}  // namespace unram
