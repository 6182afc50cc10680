#include "burnside/render.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "burnside/ctx.hpp"
#include "burnside/errors.hpp"

namespace burnside {

namespace {

using nlohmann::json;

struct Term {
  int64_t coeff;
  std::string label;  // empty for the identity class
  int l_power;
};

void append_terms(std::vector<Term>& terms, const BurnsideElement& x, int l_power) {
  const SubgroupTable& table = x.table();
  for (int c = 0; c < table.num_classes(); ++c) {
    const int64_t k = x.coeff(c);
    if (k == 0) continue;
    terms.push_back(Term{k, c == table.identity_class_index() ? "" : table.cls(c).label,
                         l_power});
  }
}

std::string render_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms.size(); ++i) {
    const Term& t = terms[i];
    const int64_t mag = t.coeff < 0 ? -t.coeff : t.coeff;
    if (i == 0)
      out += t.coeff < 0 ? "-" : "";
    else
      out += t.coeff < 0 ? " - " : " + ";
    std::string body;
    if (!t.label.empty()) body += "[" + t.label + "]";
    if (t.l_power == 1)
      body += "L";
    else if (t.l_power > 1)
      body += "L^" + std::to_string(t.l_power);
    if (mag != 1 || body.empty())
      out += std::to_string(mag) + body;
    else
      out += body;
  }
  return out;
}

json element_to_json(const BurnsideElement& x) {
  json items = json::array();
  const SubgroupTable& table = x.table();
  for (int c = 0; c < table.num_classes(); ++c) {
    if (x.coeff(c) == 0) continue;
    items.push_back({{"class_label", table.cls(c).label}, {"coeff", x.coeff(c)}});
  }
  return items;
}

json lpoly_to_json(const LPolynomial& x) {
  json powers = json::array();
  for (int k = 0; k <= x.degree(); ++k) powers.push_back(element_to_json(x.coeff(k)));
  return powers;
}

int class_index_by_label(const SubgroupTable& table, const std::string& label) {
  for (int c = 0; c < table.num_classes(); ++c)
    if (table.cls(c).label == label) return c;
  throw std::invalid_argument("unknown class label: " + label);
}

BurnsideElement element_from_json(const TablePtr& table, const json& items) {
  BurnsideElement out = BurnsideElement::zero(table);
  if (!items.is_array()) throw std::invalid_argument("element JSON must be an array");
  for (const json& item : items) {
    const int c = class_index_by_label(*table, item.at("class_label").get<std::string>());
    out += BurnsideElement::basis(table, c) * item.at("coeff").get<int64_t>();
  }
  return out;
}

LPolynomial lpoly_from_json(const TablePtr& table, const json& powers) {
  if (!powers.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  LPolynomial out(table);
  int k = 0;
  for (const json& entry : powers) out.add_term(element_from_json(table, entry), k++);
  return out;
}

}  // namespace

std::string render_element_text(const BurnsideElement& x) {
  std::vector<Term> terms;
  append_terms(terms, x, 0);
  return render_terms(terms);
}

std::string render_lpolynomial_text(const LPolynomial& x) {
  std::vector<Term> terms;
  for (int k = x.degree(); k >= 0; --k) append_terms(terms, x.coeff(k), k);
  return render_terms(terms);
}

std::string render_marks_text(const SubgroupTable& table) {
  std::string out = "[";
  for (int r = 0; r < table.num_classes(); ++r) {
    if (r) out += ",";
    out += "[";
    for (int c = 0; c < table.num_classes(); ++c) {
      if (c) out += ",";
      out += std::to_string(table.mark(r, c));
    }
    out += "]";
  }
  out += "]";
  return out;
}

std::string render_subgroups_text(const SubgroupTable& table) {
  std::ostringstream out;
  out << "classes: " << table.num_classes() << "\n";
  for (const SubgroupClass& c : table.classes())
    out << c.label << " order=" << c.order << " normalizer_order=" << c.normalizer_order
        << "\n";
  return out.str();
}

std::string render_element_json(const BurnsideElement& x) { return element_to_json(x).dump(); }

std::string render_lpolynomial_json(const LPolynomial& x) { return lpoly_to_json(x).dump(); }

std::string render_series_json(const Series& s) {
  json out = json::array();
  for (int i = 0; i <= s.truncation(); ++i)
    out.push_back({{"T_power", i}, {"L_coeffs", lpoly_to_json(s.coeff(i))}});
  return out.dump();
}

std::string render_marks_json(const SubgroupTable& table) {
  json rows = json::array();
  for (const auto& row : table.marks()) rows.push_back(row);
  return json{{"degree", table.ambient().degree()},
              {"classes", json::parse(render_subgroups_json(table)).at("classes")},
              {"marks", rows}}
      .dump();
}

std::string render_subgroups_json(const SubgroupTable& table) {
  json classes = json::array();
  for (const SubgroupClass& c : table.classes())
    classes.push_back({{"label", c.label},
                       {"order", c.order},
                       {"normalizer_order", c.normalizer_order}});
  return json{{"degree", table.ambient().degree()},
              {"ambient_order", table.ambient().order()},
              {"classes", classes}}
      .dump();
}

std::string render_torus_report_json(const TorusClassReport& report,
                                     const LPolynomial* restricted) {
  json counts = json::array();
  for (const PointCountCheck& c : report.point_counts)
    counts.push_back({{"cycle_type", c.type.to_string()},
                      {"q", c.q},
                      {"formula", c.formula},
                      {"oracle", c.oracle},
                      {"pass", c.pass}});
  json out{{"n", report.n},
           {"binomial", lpoly_to_json(report.class_binomial)},
           {"lambda", lpoly_to_json(report.class_lambda)},
           {"routes_equal", report.routes_equal},
           {"point_counts", counts},
           {"effectivity_pass", report.effectivity_pass},
           {"flag_iso_pass", report.flag_iso_pass},
           {"all_pass", report.all_pass()}};
  if (restricted) out["restricted"] = lpoly_to_json(*restricted);
  return out.dump();
}

BurnsideElement parse_element_json(const TablePtr& table, const std::string& text) {
  try {
    return element_from_json(table, json::parse(text));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad element JSON: ") + e.what());
  }
}

LPolynomial parse_lpolynomial_json(const TablePtr& table, const std::string& text) {
  try {
    return lpoly_from_json(table, json::parse(text));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad polynomial JSON: ") + e.what());
  }
}

Series parse_series_json(Ctx& ctx, const std::string& text) {
  try {
    const json entries = json::parse(text);
    if (!entries.is_array() || entries.empty())
      throw std::invalid_argument("series JSON must be a nonempty array");
    Series out(ctx, static_cast<int>(entries.size()) - 1);
    for (const json& entry : entries) {
      const int i = entry.at("T_power").get<int>();
      out.set_coeff(i, lpoly_from_json(ctx.symmetric_table(i), entry.at("L_coeffs")));
    }
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad series JSON: ") + e.what());
  }
}

PermutationGroup parse_action_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open action file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    const json doc = json::parse(buffer.str());
    const int degree = doc.at("degree").get<int>();
    std::vector<Permutation> gens;
    for (const json& images : doc.at("generators"))
      gens.push_back(Permutation(images.get<std::vector<int>>()));
    return PermutationGroup::closure(degree, std::move(gens));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad action file: ") + e.what());
  }
}

}  // namespace burnside
