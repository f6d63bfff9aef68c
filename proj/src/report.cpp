#include "unram/report.hpp"

#include <algorithm>
#include <sstream>

namespace unram {

using json = nlohmann::ordered_json;

namespace {

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + ' ' : s + std::string(w - s.size(), ' '); }

json word_json(const std::vector<std::size_t>& w) {
  json a = json::array();
  for (auto i : w) a.push_back(i + 1);
  return a;
}

std::string word_text(const std::vector<std::size_t>& w) {
  if (w.empty()) return "e";
  std::string s;
  for (auto i : w) s += (s.empty() ? "s" : " s") + std::to_string(i + 1);
  return s;
}

json rationals_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(to_string(r));
  return a;
}

std::string rationals_text(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

json qz_json(const std::vector<QmodZ>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(q.str());
  return a;
}

std::string qz_text(const std::vector<QmodZ>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

std::string nodes_text(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto i : v) s += (s.empty() ? "" : " ") + std::to_string(i);
  return s.empty() ? "-" : s;
}

struct Context {
  DatumSpec spec;
  BasedRootDatum datum;
  Alcove alcove;
  std::vector<OmegaElement> omega;
  std::vector<HyperspecialVertex> vertices;

  explicit Context(const DatumSpec& s)
      : spec(s), datum(s.build()), alcove(alcove_of(datum)), omega(omega_group(alcove)),
        vertices(hyperspecial_vertices(alcove)) {}

  json record(const std::string& kind) const {
    json r;
    r["schema"] = kSchema;
    r["kind"] = kind;
    r["spec"] = spec.render();
    return r;
  }

  const HyperspecialVertex& vertex(std::size_t node) const {
    for (const auto& v : vertices)
      if (v.node == node) return v;
    throw std::invalid_argument("vertex " + std::to_string(node) + " is not a hyperspecial vertex of " + spec.render() +
                                " (hyperspecial: " + nodes_text(nodes()) + ")");
  }

  std::vector<std::size_t> nodes() const {
    std::vector<std::size_t> n;
    for (const auto& v : vertices) n.push_back(v.node);
    return n;
  }

  const OmegaElement& omega_element(const ElementRef& e) const {
    if (e.omega_image) {
      for (const auto& w : omega)
        if (w.vertex_image == *e.omega_image) return w;
      throw std::invalid_argument("no element of Omega moves the origin to vertex " + std::to_string(*e.omega_image));
    }
    IntMatrix m = alcove.weyl().from_word(e.word);
    for (const auto& w : omega)
      if (w.transform.linear == m) return w;
    throw std::invalid_argument("word " + word_text(e.word) + " is not the linear part of an element of Omega");
  }
};

std::string header(const Context& c, const std::string& what) { return "# " + what + " " + c.spec.render(); }

}  // namespace

void Report::check(json& record, bool pass) {
  record["pass"] = pass;
  ++(pass ? passed : failed);
}

void Report::append(const Report& o) {
  if (command.empty()) command = o.command;
  records.insert(records.end(), o.records.begin(), o.records.end());
  text.insert(text.end(), o.text.begin(), o.text.end());
  passed += o.passed;
  failed += o.failed;
}

std::string Report::render(Format f) const {
  std::ostringstream out;
  if (f == Format::records) {
    for (const auto& r : records) out << r.dump() << '\n';
    json s;
    s["schema"] = kSchema;
    s["kind"] = "summary";
    s["command"] = command;
    s["records"] = records.size();
    s["passed"] = passed;
    s["failed"] = failed;
    out << s.dump() << '\n';
  } else {
    for (const auto& l : text) out << l << '\n';
    out << "summary: " << records.size() << " records, " << passed << " passed, " << failed << " failed\n";
  }
  return out.str();
}

ElementRef parse_element(const std::string& text, std::size_t rank) {
  ElementRef e;
  if (text.rfind("omega:", 0) == 0) {
    std::string n = text.substr(6);
    if (n.empty() || !std::all_of(n.begin(), n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("expected omega:<vertex>, got '" + text + "'", 1, 7);
    e.omega_image = std::stoul(n);
    return e;
  }
  e.word = parse_word(text, rank);
  return e;
}

AlcovePoint resolve_point(const Alcove& a, const std::vector<OmegaElement>& omega, const std::vector<Rational>& bary,
                          bool* moved) {
  if (bary.size() != a.rank())
    throw std::invalid_argument("point needs " + std::to_string(a.rank()) + " coordinates a_1..a_" +
                                std::to_string(a.rank()) + ", got " + std::to_string(bary.size()));
  RatVector x(a.dimension(), Rational(0));
  for (std::size_t i = 0; i < bary.size(); ++i) x = add(x, scale(bary[i], a.fundamental_coweights[i]));
  bool inside = a.contains(x);
  if (moved) *moved = !inside;
  return inside ? a.point(x) : reduce_to_alcove(a, omega, x).point;
}

Report cmd_describe(const DatumSpec& s) {
  Context c(s);
  Report r;
  r.command = "describe";
  RelativeDatum rel = relative_datum(c.datum);
  json j = c.record("datum");
  j["label"] = c.datum.type_label;
  j["twist"] = s.twist ? *s.twist : 1u;
  j["rank"] = c.datum.rank();
  j["roots"] = c.datum.roots.size();
  j["cartan"] = to_string(c.datum.cartan());
  j["relative_root_type"] = rel.root_type;
  j["relative_type"] = rel.relative_type();
  json marks = json::array();
  for (const auto& m : c.alcove.marks) marks.push_back(m.get_si());
  j["marks"] = marks;
  j["omega_order"] = c.omega.size();
  j["omega_structure"] = c.alcove.translation_classes().torsion().structure();
  j["hyperspecial"] = c.nodes();
  r.records.push_back(j);

  std::string mk;
  for (const auto& m : c.alcove.marks) mk += (mk.empty() ? "" : " ") + m.get_str();
  r.text = {header(c, "describe"),
            pad("label", 14) + c.datum.type_label + (s.twist ? " (diagram automorphism of order " + std::to_string(*s.twist) + ")" : ""),
            pad("rank", 14) + std::to_string(c.datum.rank()) + ", " + std::to_string(c.datum.roots.size()) + " roots",
            pad("cartan", 14) + to_string(c.datum.cartan()),
            pad("relative", 14) + "roots " + rel.root_type + ", alcove type " + rel.relative_type(),
            pad("marks", 14) + mk,
            pad("omega", 14) + "order " + std::to_string(c.omega.size()) + ", " +
                c.alcove.translation_classes().torsion().structure(),
            pad("hyperspecial", 14) + nodes_text(c.nodes()) + " (" + std::to_string(c.vertices.size()) + " classes)"};
  return r;
}

Report cmd_omega(const DatumSpec& s) {
  Context c(s);
  Report r;
  r.command = "omega";
  r.text.push_back(header(c, "omega"));
  FiniteAbelianGroup tor = c.alcove.translation_classes().torsion();
  json g = c.record("omega_group");
  g["order"] = c.omega.size();
  g["structure"] = tor.structure();
  g["torsion_order"] = tor.order().get_str();
  r.check(g, Integer(static_cast<unsigned long>(c.omega.size())) == tor.order());
  r.records.push_back(g);
  r.text.push_back("order " + std::to_string(c.omega.size()) + ", Y/ZE torsion " + tor.structure() +
                   (g["pass"].get<bool>() ? " (agree)" : " (DISAGREE)"));
  r.text.push_back(pad("image", 7) + pad("word", 28) + pad("translation", 16) + pad("iota", 10) + "check");
  for (const auto& w : c.omega) {
    json e = c.record("omega_element");
    e["image"] = w.vertex_image;
    e["word"] = word_json(w.word);
    e["translation"] = to_string(w.transform.translation);
    e["facet_permutation"] = w.facet_permutation;
    e["iota_class"] = to_string(w.iota_class);
    bool fixes = w.transform(c.alcove.barycenter) == c.alcove.barycenter;
    bool agrees = iota_agrees(c.alcove, w);
    e["iota_agrees"] = agrees;
    e["fixes_barycenter"] = fixes;
    r.check(e, agrees && fixes);
    r.records.push_back(e);
    r.text.push_back(pad(std::to_string(w.vertex_image), 7) + pad(word_text(w.word), 28) +
                     pad(to_string(w.transform.translation), 16) + pad(to_string(w.iota_class), 10) +
                     (agrees && fixes ? "ok" : "FAIL"));
  }
  return r;
}

Report cmd_relative(const DatumSpec& s) {
  Context c(s);
  Report r;
  r.command = "relative";
  RelativeDatum rel = relative_datum(c.datum);
  json j = c.record("relative");
  j["root_type"] = rel.root_type;
  j["relative_type"] = rel.relative_type();
  j["rank"] = rel.datum.semisimple_rank();
  j["roots"] = rel.datum.roots.size();
  j["reduced"] = rel.datum.reduced_flag;
  j["weyl_order"] = weyl_group_order(classify_cartan(rel.datum.cartan())).get_str();
  j["fibers_are_orbits"] = rel.fibers_are_orbits;
  r.check(j, rel.fibers_are_orbits);
  r.records.push_back(j);
  LatticeLemma ll = lattice_lemma(c.datum);
  json k = c.record("lattice_lemma");
  k["torsion_quotient"] = ll.torsion_quotient.structure();
  k["cokernel"] = ll.cokernel.structure();
  r.check(k, ll.agrees);
  r.records.push_back(k);
  r.text = {header(c, "relative"),
            pad("roots", 12) + rel.root_type + (rel.datum.reduced_flag ? "" : " (non-reduced)") + ", " +
                std::to_string(rel.datum.roots.size()) + " roots",
            pad("alcove type", 12) + rel.relative_type(),
            pad("weyl order", 12) + j["weyl_order"].get<std::string>(),
            pad("fibers", 12) + (rel.fibers_are_orbits ? "orbits" : "NOT orbits"),
            pad("torsion", 12) + "Y/ZE " + ll.torsion_quotient.structure() + ", cokernel " + ll.cokernel.structure() +
                (ll.agrees ? " (agree)" : " (DISAGREE)")};
  return r;
}

Report cmd_rgroup(const DatumSpec& s, const std::vector<Rational>& point) {
  Context c(s);
  Report r;
  r.command = "rgroup";
  bool moved = false;
  AlcovePoint x = resolve_point(c.alcove, c.omega, point, &moved);
  RGroupData rg = stabilizer(c.alcove, c.omega, x);
  json j = c.record("rgroup");
  j["point"] = rationals_json(rg.point.barycentric);
  j["moved"] = moved;
  j["structure"] = rg.group.structure();
  j["order"] = rg.omega_x.size();
  j["reflection_type"] = rg.reflection_type;
  j["reflection_order"] = rg.reflection_order.get_str();
  j["stabilizer_order"] = rg.full_order.get_str();
  r.check(j, rg.semidirect_check);
  r.records.push_back(j);
  r.text = {header(c, "rgroup"),
            pad("point", 12) + rationals_text(rg.point.barycentric) + (moved ? " (moved into the alcove)" : ""),
            pad("R-group", 12) + rg.group.structure() + ", order " + std::to_string(rg.omega_x.size()),
            pad("reflections", 12) + rg.reflection_type + ", order " + rg.reflection_order.get_str(),
            pad("stabilizer", 12) + "order " + rg.full_order.get_str() + (rg.semidirect_check ? "" : " (CHECK FAILED)")};
  for (const auto& w : rg.omega_x) {
    json e = c.record("rgroup_element");
    e["point"] = j["point"];
    e["image"] = w.vertex_image;
    e["word"] = word_json(w.word);
    r.records.push_back(e);
    r.text.push_back(pad("  omega:" + std::to_string(w.vertex_image), 12) + word_text(w.word));
  }
  return r;
}

Report cmd_pair(const DatumSpec& s, std::optional<std::size_t> vertex, const std::optional<std::string>& element) {
  Context c(s);
  Report r;
  r.command = "pair";
  std::vector<HyperspecialVertex> rows = c.vertices;
  if (vertex) rows = {c.vertex(*vertex)};
  std::vector<OmegaElement> cols = c.omega;
  if (element) cols = {c.omega_element(parse_element(*element, c.alcove.rank()))};
  PairingTable t = pairing_table(c.alcove, rows, cols);
  r.text.push_back(header(c, "pair"));
  std::string head = pad("vertex", 8);
  for (const auto& w : cols) head += pad("omega:" + std::to_string(w.vertex_image), 10);
  r.text.push_back(head);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string line = pad(std::to_string(rows[i].node), 8);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      json e = c.record("pair");
      e["vertex"] = rows[i].node;
      e["image"] = cols[k].vertex_image;
      e["word"] = word_json(cols[k].word);
      e["value"] = t.entries[i][k].str();
      r.records.push_back(e);
      line += pad(t.entries[i][k].str(), 10);
    }
    r.text.push_back(line);
  }
  return r;
}

Report cmd_coeff(const DatumSpec& s, const std::vector<Rational>& point, std::size_t vertex, const std::string& element) {
  Context c(s);
  Report r;
  r.command = "coeff";
  AlcovePoint x = resolve_point(c.alcove, c.omega, point);
  const HyperspecialVertex& v = c.vertex(vertex);
  ElementRef ref = parse_element(element, c.alcove.rank());
  std::vector<std::size_t> word = ref.omega_image ? c.omega_element(ref).word : ref.word;
  CocycleCoefficient cc = cocycle(c.alcove, x.coordinates, v, word);
  json j = c.record("coeff");
  j["point"] = rationals_json(x.barycentric);
  j["vertex"] = vertex;
  j["word"] = word_json(word);
  j["exact"] = to_string(cc.exact);
  j["value"] = cc.value.str();
  r.text = {header(c, "coeff"), pad("point", 10) + rationals_text(x.barycentric), pad("vertex", 10) + std::to_string(vertex),
            pad("word", 10) + word_text(word), pad("sum", 10) + to_string(cc.exact),
            pad("value", 10) + cc.value.str() + " mod Z"};
  RGroupData rg = stabilizer(c.alcove, c.omega, x, 0);
  auto it = std::find_if(rg.omega_x.begin(), rg.omega_x.end(),
                         [&](const OmegaElement& w) { return w.transform.linear == cc.element.matrix; });
  if (it != rg.omega_x.end()) {
    QmodZ p = pairing(c.alcove, v, *it);
    j["image"] = it->vertex_image;
    j["pairing"] = p.str();
    r.check(j, p == cc.value);
    r.text.push_back(pad("pairing", 10) + p.str() + " (omega:" + std::to_string(it->vertex_image) + ", " +
                     (p == cc.value ? "equal" : "DIFFERENT") + ")");
  } else {
    r.text.push_back(pad("pairing", 10) + "- (element does not fix the point)");
  }
  r.records.push_back(j);
  return r;
}

Report cmd_verify(const DatumSpec& s, const VerifyOptions& o) {
  Context c(s);
  Report r;
  r.command = "verify";
  std::vector<AlcovePoint> points;
  if (o.point) points.push_back(resolve_point(c.alcove, c.omega, *o.point));
  else {
    if (o.denominator < 1) throw std::invalid_argument("sweep denominator must be at least 1");
    points = enumerate_points(c.alcove, c.omega, o.denominator);
  }
  SweepResult res = o.jobs == 1 ? verify_points_serial(c.alcove, c.omega, c.vertices, points)
                                 : verify_points_parallel(c.alcove, c.omega, c.vertices, points, o.jobs);
  r.text.push_back(header(c, "verify") + ", " + std::to_string(points.size()) + " points");
  r.text.push_back(pad("point", 28) + pad("R", 10) + pad("vertex", 8) + pad("omega", 7) + pad("cocycle", 9) +
                   pad("pairing", 9) + "check");
  for (const auto& p : res.points) {
    if (!p.error.empty()) {
      json e = c.record("error");
      e["point"] = rationals_json(p.point.barycentric);
      e["message"] = p.error;
      r.check(e, false);
      r.records.push_back(e);
      r.text.push_back(pad(rationals_text(p.point.barycentric), 28) + "error: " + p.error);
      continue;
    }
    for (const auto& rec : p.records) {
      json e = c.record("check");
      e["point"] = rationals_json(p.point.barycentric);
      e["r_group"] = p.r_group;
      e["vertex"] = rec.vertex;
      e["image"] = rec.element;
      e["word"] = word_json(rec.word);
      e["cocycle"] = rec.cocycle_value.str();
      e["pairing"] = rec.pairing_value.str();
      r.check(e, rec.pass);
      r.records.push_back(e);
      r.text.push_back(pad(rationals_text(p.point.barycentric), 28) + pad(p.r_group, 10) +
                       pad(std::to_string(rec.vertex), 8) + pad(std::to_string(rec.element), 7) +
                       pad(rec.cocycle_value.str(), 9) + pad(rec.pairing_value.str(), 9) + (rec.pass ? "ok" : "FAIL"));
    }
  }
  return r;
}

Report cmd_table(const DatumSpec& s, const std::vector<Rational>& point) {
  Context c(s);
  Report r;
  r.command = "table";
  AlcovePoint x = resolve_point(c.alcove, c.omega, point);
  RGroupData rg = stabilizer(c.alcove, c.omega, x, 0);
  PacketTable t = packet_table(c.alcove, c.vertices, rg);
  ZetaData z = zeta(c.alcove, c.vertices, rg);
  json j = c.record("packet");
  j["point"] = rationals_json(x.barycentric);
  j["r_group"] = rg.group.structure();
  j["elements"] = t.r_group;
  j["fibers"] = t.fibers;
  j["surjective"] = z.surjective;
  j["homomorphism"] = z.homomorphism;
  r.check(j, z.surjective && z.homomorphism);
  r.records.push_back(j);
  std::string elems;
  for (auto e : t.r_group) elems += (elems.empty() ? "omega:" : ", omega:") + std::to_string(e);
  r.text = {header(c, "table"), pad("point", 10) + rationals_text(x.barycentric),
            pad("R-group", 10) + rg.group.structure() + " {" + elems + "}",
            pad("zeta", 10) + (z.surjective ? "surjective" : "NOT surjective") + ", " +
                (z.homomorphism ? "additive" : "NOT additive"),
            pad("vertex", 8) + pad("character", 24) + "fiber"};
  for (const auto& row : t.rows) {
    json e = c.record("packet_row");
    e["point"] = j["point"];
    e["vertex"] = row.vertex;
    e["character"] = qz_json(row.character);
    e["fiber"] = row.fiber;
    r.records.push_back(e);
    r.text.push_back(pad(std::to_string(row.vertex), 8) + pad(qz_text(row.character), 24) + std::to_string(row.fiber) +
                     " {" + nodes_text(t.fibers[row.fiber]) + "}");
  }
  return r;
}

}  // namespace unram
