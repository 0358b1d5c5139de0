#include "sublat/report.hpp"

#include <sstream>

#include <json.hpp>

#include "sublat/arith.hpp"

namespace sublat {

using Json = nlohmann::ordered_json;

namespace {

std::vector<std::string> generator_strings(const Subgroup& s) {
  std::vector<std::string> out;
  for (Elem e : generators_of(s)) out.push_back(s.parent().element(e).to_string());
  return out;
}

std::vector<std::size_t> factor_orders(const std::vector<ChiefFactor>& series) {
  std::vector<std::size_t> out;
  for (const auto& f : series) out.push_back(f.order());
  return out;
}

std::string join_numbers(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "text") return Format::kText;
  if (text == "json") return Format::kJson;
  if (text == "dot") return Format::kDot;
  throw Error(ErrorCode::kUnsupportedFormat, "unknown format '" + std::string(text) + "'");
}

std::string export_report(const Report& report, Format format) {
  const Summary s = report.summary();
  if (format == Format::kJson) {
    Json doc;
    doc["results"] = Json::array();
    for (const auto& r : report.results) {
      Json row;
      row["group"] = r.group;
      row["check"] = std::string(to_string(r.check));
      row["verdict"] = std::string(to_string(r.verdict));
      row["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
      doc["results"].push_back(std::move(row));
    }
    doc["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"vacuous", s.vacuous},
                      {"undecided", s.undecided}};
    return doc.dump(2) + "\n";
  }
  if (format == Format::kText) {
    std::ostringstream out;
    for (const auto& r : report.results) {
      out << r.group << " " << to_string(r.check) << " " << to_string(r.verdict);
      if (r.witness) out << " [" << *r.witness << "]";
      if (!r.detail.empty()) out << " (" << r.detail << ")";
      out << "\n";
    }
    out << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.vacuous << " vacuous, "
        << s.undecided << " undecided\n";
    return out.str();
  }
  throw Error(ErrorCode::kUnsupportedFormat, "reports export as text or json");
}

std::string export_lattice(Workspace& ws, Format format, const std::optional<LatticeSpec>& highlight) {
  const auto& lat = ws.lattice();
  std::vector<bool> marked(lat.size(), false);
  if (highlight) {
    for (std::size_t m : lattice_members(ws, *highlight)) marked[m] = true;
  }
  const std::string name = ws.group()->name();

  if (format == Format::kDot) {
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < lat.size(); ++i) {
      out << "  s" << i << " [label=\"" << i << ": order " << lat[i].order() << "\"";
      if (marked[i]) out << ", style=filled, fillcolor=lightblue";
      out << "];\n";
    }
    for (std::size_t i = 0; i < lat.size(); ++i) {
      for (std::size_t j : lat.covers(i)) out << "  s" << i << " -> s" << j << ";\n";
    }
    out << "}\n";
    return out.str();
  }
  if (format == Format::kJson) {
    Json doc;
    doc["group"] = name;
    doc["order"] = ws.group()->order();
    if (highlight) {
      doc["highlight"] = std::visit(
          [](const auto& s) -> std::string {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, GroupClass>) {
              return "class:" + std::string(to_string(s));
            } else {
              return to_string(s);
            }
          },
          *highlight);
    }
    doc["subgroups"] = Json::array();
    for (std::size_t i = 0; i < lat.size(); ++i) {
      Json row;
      row["index"] = i;
      row["order"] = lat[i].order();
      row["generators"] = generator_strings(lat[i]);
      row["normal"] = is_normal(ws.group(), lat[i]);
      if (highlight) row["member"] = static_cast<bool>(marked[i]);
      doc["subgroups"].push_back(std::move(row));
    }
    doc["edges"] = Json::array();
    for (std::size_t i = 0; i < lat.size(); ++i) {
      for (std::size_t j : lat.covers(i)) doc["edges"].push_back({i, j});
    }
    return doc.dump(2) + "\n";
  }
  throw Error(ErrorCode::kUnsupportedFormat, "lattices export as dot or json");
}

std::string export_analysis(Workspace& ws, Format format) {
  const GroupPtr& g = ws.group();
  Json doc;
  doc["group"] = g->name();
  doc["order"] = g->order();
  doc["degree"] = g->degree();
  Json classes = Json::object();
  for (GroupClass c : kAllClasses) classes[std::string(to_string(c))] = is_in_class(g, c);
  doc["classes"] = classes;
  doc["normal_subgroups"] = ws.normals().size();
  doc["chief_factors"] = factor_orders(ws.chief_series(0, ws.normals().size() - 1));
  doc["center_order"] = center(g).order();
  doc["hypercenter_order"] = hypercenter(g).order();
  Json residuals = Json::object();
  for (GroupClass c : kAllClasses) residuals[std::string(to_string(c))] = residual(ws, c).order();
  doc["residual_orders"] = residuals;
  if (ws.lattice_available()) {
    const auto& lat = ws.lattice();
    doc["subgroups"] = lat.size();
    doc["frattini_order"] = distinguished_subgroups(lat).frattini.order();
    doc["label"] = std::string(to_string(classify_t_pt_pst(ws)));
  } else {
    doc["subgroups"] = nullptr;
    doc["frattini_order"] = nullptr;
    doc["label"] = nullptr;
  }

  if (format == Format::kJson) return doc.dump(2) + "\n";
  if (format != Format::kText) {
    throw Error(ErrorCode::kUnsupportedFormat, "analysis exports as text or json");
  }
  std::ostringstream out;
  out << "group " << g->name() << "\n";
  out << "order " << g->order() << ", degree " << g->degree() << "\n";
  out << "classes:";
  for (GroupClass c : kAllClasses) {
    if (is_in_class(g, c)) out << " " << to_string(c);
  }
  out << "\n";
  out << "normal subgroups " << ws.normals().size() << "\n";
  out << "chief factor orders "
      << join_numbers(factor_orders(ws.chief_series(0, ws.normals().size() - 1))) << "\n";
  out << "center order " << doc["center_order"] << ", hypercenter order "
      << doc["hypercenter_order"] << "\n";
  out << "residual orders:";
  for (GroupClass c : kAllClasses) out << " " << to_string(c) << "=" << residuals[std::string(to_string(c))];
  out << "\n";
  if (doc["subgroups"].is_null()) {
    out << "subgroup lattice over the cap\n";
  } else {
    out << "subgroups " << doc["subgroups"] << ", frattini order " << doc["frattini_order"] << "\n";
    out << "label " << doc["label"].get<std::string>() << "\n";
  }
  return out.str();
}

}  // namespace sublat
