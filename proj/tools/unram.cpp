#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "unram/report.hpp"

using namespace unram;

namespace {

struct Options {
  std::string spec_text, type, isogeny, lattice, spec_file;
  std::string point, element, format = "text";
  std::optional<std::size_t> vertex;
  std::size_t denominator = 4;
  int jobs = 1;
};

void add_datum_options(CLI::App* cmd, Options& o, bool batch) {
  cmd->add_option("spec", o.spec_text, "datum spec, e.g. \"E6 sc\" or \"2A5 ad\"");
  cmd->add_option("--type", o.type, "type label: A1-A8, B2-B8, C2-C8, D3-D8, E6-E8, F4, G2, 2An, 2Dn, 2E6, 3D4");
  cmd->add_option("--isogeny", o.isogeny, "sc or ad");
  cmd->add_option("--lattice", o.lattice, "generators of X in fundamental-weight coordinates, rows separated by ';'");
  if (batch) cmd->add_option("--spec-file", o.spec_file, "file with one datum spec per line");
  cmd->add_option("--format", o.format, "text or records")->check(CLI::IsMember({"text", "records"}));
}

std::vector<DatumSpec> specs_of(const Options& o) {
  if (!o.spec_file.empty()) {
    if (!o.spec_text.empty() || !o.type.empty()) throw std::invalid_argument("--spec-file cannot be combined with a spec");
    std::ifstream in(o.spec_file);
    if (!in) throw std::invalid_argument("cannot read " + o.spec_file);
    std::stringstream buf;
    buf << in.rdbuf();
    auto specs = parse_spec_file(buf.str());
    if (specs.empty()) throw std::invalid_argument(o.spec_file + " contains no datum specs");
    return specs;
  }
  if (!o.spec_text.empty()) {
    if (!o.type.empty()) throw std::invalid_argument("give the type either positionally or with --type");
    std::string s = o.spec_text;
    if (!o.isogeny.empty()) s += " --isogeny " + o.isogeny;
    if (!o.lattice.empty()) s += " --lattice " + o.lattice;
    return {parse_spec(s)};
  }
  if (o.type.empty()) throw std::invalid_argument("a datum is required (positional spec, --type or --spec-file)");
  return {make_spec(o.type, o.isogeny, o.lattice)};
}

std::vector<Rational> required_point(const Options& o) {
  if (o.point.empty()) throw std::invalid_argument("--point is required");
  return parse_point(o.point);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unramified L-packet combinatorics: alcove symmetries, R-groups, pairings and cocycles"};
  app.require_subcommand(1);
  Options o;

  auto* describe = app.add_subcommand("describe", "root datum, marks, Omega and hyperspecial vertices");
  auto* omega = app.add_subcommand("omega", "elements of Omega with their iota classes");
  auto* relative = app.add_subcommand("relative", "relative root datum and the torsion comparison");
  auto* rgroup = app.add_subcommand("rgroup", "stabilizer of a point of the alcove");
  auto* pair = app.add_subcommand("pair", "pairing between hyperspecial vertices and Omega");
  auto* coeff = app.add_subcommand("coeff", "cocycle coefficient along a word");
  auto* verify = app.add_subcommand("verify", "check cocycle = pairing on a point or a sweep");
  auto* table = app.add_subcommand("table", "packet table: characters and fibers");

  for (auto* c : {describe, omega, relative, rgroup, pair, coeff, table}) add_datum_options(c, o, false);
  add_datum_options(verify, o, true);
  for (auto* c : {rgroup, coeff, verify, table})
    c->add_option("--point", o.point, "barycentric coordinates a_1,...,a_l as rationals p/q");
  for (auto* c : {pair, coeff}) {
    c->add_option("--vertex", o.vertex, "hyperspecial vertex (0 for the origin)");
    c->add_option("--element", o.element, "word of 1-based simple indices, or omega:<vertex>");
  }
  verify->add_option("--sweep-denominator", o.denominator, "largest denominator of swept points")
      ->check(CLI::PositiveNumber);
  verify->add_option("--jobs", o.jobs, "worker threads (1 runs the serial reference)")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Format fmt = o.format == "records" ? Format::records : Format::text;
  try {
    Report total;
    for (const auto& s : specs_of(o)) {
      Report r;
      if (*describe) r = cmd_describe(s);
      else if (*omega) r = cmd_omega(s);
      else if (*relative) r = cmd_relative(s);
      else if (*rgroup) r = cmd_rgroup(s, required_point(o));
      else if (*pair)
        r = cmd_pair(s, o.vertex, o.element.empty() ? std::nullopt : std::optional<std::string>(o.element));
      else if (*coeff) {
        if (!o.vertex || o.element.empty()) throw std::invalid_argument("coeff needs --vertex and --element");
        r = cmd_coeff(s, required_point(o), *o.vertex, o.element);
      } else if (*verify) {
        VerifyOptions v;
        if (!o.point.empty()) v.point = parse_point(o.point);
        v.denominator = o.denominator;
        v.jobs = o.jobs;
        r = cmd_verify(s, v);
      } else if (*table) r = cmd_table(s, required_point(o));
      total.append(r);
    }
    std::cout << total.render(fmt);
    return total.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 2;
}
