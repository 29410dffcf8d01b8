#include "sympyr/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "sympyr/error.hpp"

#include <json.hpp>

namespace sympyr {

namespace {

using Json = nlohmann::ordered_json;

// 12 significant digits; documents round-trip byte-stably after one pass.
double round12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

VariableKind parse_kind(const std::string& s, const std::string& where) {
  if (s == "interval") return VariableKind::Interval;
  if (s == "categorical") return VariableKind::Categorical;
  if (s == "modal") return VariableKind::Modal;
  throw ParseError(where + ": unknown kind '" + s + "' (expected interval|categorical|modal)");
}

Cell parse_cell(const VariableSchema& var, const Json& j, const std::string& where) {
  switch (var.kind) {
    case VariableKind::Interval: {
      if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError(where + ": interval cell must be [lo, hi]");
      }
      return IntervalCell{j[0].get<double>(), j[1].get<double>()};
    }
    case VariableKind::Categorical: {
      if (!j.is_array()) {
        throw ParseError(where + ": categorical cell must be a label list");
      }
      std::vector<int> idx;
      for (const auto& item : j) {
        if (!item.is_string()) throw ParseError(where + ": category labels must be strings");
        const int k = var.label_index(item.get<std::string>());
        if (k < 0) {
          throw ParseError(where + ": label '" + item.get<std::string>() +
                           "' not in the domain of variable '" + var.name + "'");
        }
        idx.push_back(k);
      }
      std::sort(idx.begin(), idx.end());
      idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
      return CategoryCell{std::move(idx)};
    }
    case VariableKind::Modal: {
      if (!j.is_object()) {
        throw ParseError(where + ": modal cell must be a {label: weight} map");
      }
      ModalCell cell;
      cell.weights.assign(static_cast<size_t>(var.category_count()), 0.0);
      for (auto it = j.begin(); it != j.end(); ++it) {
        const int k = var.label_index(it.key());
        if (k < 0) {
          throw ParseError(where + ": label '" + it.key() + "' not in the domain of variable '" +
                           var.name + "'");
        }
        if (!it.value().is_number()) {
          throw ParseError(where + ", label '" + it.key() + "': weight must be a number");
        }
        cell.weights[static_cast<size_t>(k)] = it.value().get<double>();
      }
      return cell;
    }
  }
  throw ParseError(where + ": unreachable cell kind");
}

Json emit_cell(const VariableSchema& var, const Cell& cell) {
  switch (var.kind) {
    case VariableKind::Interval: {
      const auto& iv = std::get<IntervalCell>(cell);
      return Json::array({round12(iv.lo), round12(iv.hi)});
    }
    case VariableKind::Categorical: {
      Json arr = Json::array();
      for (int k : std::get<CategoryCell>(cell).labels) {
        arr.push_back(var.labels[static_cast<size_t>(k)]);
      }
      return arr;
    }
    case VariableKind::Modal: {
      Json obj = Json::object();
      const auto& weights = std::get<ModalCell>(cell).weights;
      for (size_t q = 0; q < weights.size(); ++q) {
        if (weights[q] != 0.0) obj[var.labels[q]] = round12(weights[q]);
      }
      return obj;
    }
  }
  return {};
}

Description parse_description(const Schema& schema, const Json& cells, const std::string& where) {
  if (!cells.is_array() || static_cast<int>(cells.size()) != schema.variable_count()) {
    throw ParseError(where + ": expected " + std::to_string(schema.variable_count()) + " cells");
  }
  Description d;
  d.cells.reserve(cells.size());
  for (int j = 0; j < schema.variable_count(); ++j) {
    const auto& var = schema.variables[static_cast<size_t>(j)];
    d.cells.push_back(parse_cell(var, cells[static_cast<size_t>(j)],
                                 where + ", variable '" + var.name + "'"));
  }
  return d;
}

Json emit_description(const Schema& schema, const Description& d) {
  Json arr = Json::array();
  for (int j = 0; j < schema.variable_count(); ++j) {
    arr.push_back(emit_cell(schema.variables[static_cast<size_t>(j)], d.cells[static_cast<size_t>(j)]));
  }
  return arr;
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("document is not valid JSON: ") + e.what());
  }
}

}  // namespace

SymbolicDataTable parse_table(const std::string& text) {
  const Json doc = parse_text(text);
  if (!doc.is_object() || !doc.contains("variables") || !doc.contains("rows")) {
    throw ParseError("table document must carry 'variables' and 'rows'");
  }

  Schema schema;
  if (!doc["variables"].is_array() || doc["variables"].empty()) {
    throw ParseError("'variables' must be a non-empty list");
  }
  int vi = 0;
  for (const auto& v : doc["variables"]) {
    ++vi;
    const std::string where = "variable " + std::to_string(vi);
    if (!v.is_object() || !v.contains("name") || !v.contains("kind") || !v.contains("domain")) {
      throw ParseError(where + ": needs 'name', 'kind' and 'domain'");
    }
    VariableSchema var;
    var.name = v["name"].get<std::string>();
    var.kind = parse_kind(v["kind"].get<std::string>(), where);
    const auto& dom = v["domain"];
    if (var.kind == VariableKind::Interval) {
      if (!dom.is_array() || dom.size() != 2 || !dom[0].is_number() || !dom[1].is_number()) {
        throw ParseError(where + ": interval domain must be [lo, hi]");
      }
      var.lo = dom[0].get<double>();
      var.hi = dom[1].get<double>();
    } else {
      if (!dom.is_array() || dom.empty()) {
        throw ParseError(where + ": domain must be a non-empty label list");
      }
      for (const auto& label : dom) {
        if (!label.is_string()) throw ParseError(where + ": domain labels must be strings");
        var.labels.push_back(label.get<std::string>());
      }
    }
    schema.variables.push_back(std::move(var));
  }

  if (!doc["rows"].is_array()) throw ParseError("'rows' must be a list");
  if (doc["rows"].empty()) throw ParseError("table must contain at least one row");
  std::vector<Description> rows;
  int expected_id = 0;
  for (const auto& r : doc["rows"]) {
    ++expected_id;
    const std::string where = "row " + std::to_string(expected_id);
    if (!r.is_object() || !r.contains("id") || !r.contains("cells")) {
      throw ParseError(where + ": needs 'id' and 'cells'");
    }
    if (!r["id"].is_number_integer() || r["id"].get<int>() != expected_id) {
      throw ParseError(where + ": ids must run 1..N in order");
    }
    rows.push_back(parse_description(schema, r["cells"], where));
  }

  return SymbolicDataTable(std::move(schema), std::move(rows));
}

std::string emit_pyramid(const PyramidStructure& result, const SymbolicDataTable& table,
                         const PyramidMeta& meta) {
  const Schema& schema = table.schema();
  Json doc = Json::object();
  Json m = Json::object();
  m["algorithm"] = meta.algorithm;
  m["iterations"] = meta.iterations;
  m["N"] = table.row_count();
  m["NG"] = result.node_count();
  if (meta.alpha) m["alpha"] = round12(*meta.alpha);
  doc["meta"] = std::move(m);
  doc["order"] = result.final_order;

  Json nodes = Json::array();
  for (int id = 1; id <= result.node_count(); ++id) {
    const auto& q = result.quadruple(id);
    Json node = Json::object();
    node["id"] = q.id;
    node["left"] = q.left;
    node["right"] = q.right;
    node["f"] = round12(q.f);
    node["object"] = emit_description(schema, result.object(id).description());
    node["extent"] = result.extent(id);
    if (meta.alpha) {
      node["extent_alpha"] = extent_modal(result.object(id), table, *meta.alpha);
    }
    nodes.push_back(std::move(node));
  }
  doc["nodes"] = std::move(nodes);
  return doc.dump(2) + "\n";
}

ParsedPyramid parse_pyramid(const std::string& text, const SymbolicDataTable& table) {
  const Json doc = parse_text(text);
  if (!doc.is_object() || !doc.contains("meta") || !doc.contains("order") ||
      !doc.contains("nodes")) {
    throw ParseError("pyramid document must carry 'meta', 'order' and 'nodes'");
  }
  ParsedPyramid out;
  out.meta.algorithm = doc["meta"].value("algorithm", std::string("caps"));
  out.meta.iterations = doc["meta"].value("iterations", 0);
  if (doc["meta"].contains("alpha")) out.meta.alpha = doc["meta"]["alpha"].get<double>();

  out.structure.final_order = doc["order"].get<std::vector<int>>();
  int expected_id = 0;
  for (const auto& node : doc["nodes"]) {
    ++expected_id;
    const std::string where = "node " + std::to_string(expected_id);
    if (!node.contains("id") || node["id"].get<int>() != expected_id) {
      throw ParseError(where + ": node ids must run 1..NG in order");
    }
    NodeQuadruple q;
    q.id = expected_id;
    q.left = node.at("left").get<int>();
    q.right = node.at("right").get<int>();
    q.f = node.at("f").get<double>();
    out.structure.quadruples.push_back(q);
    out.structure.objects.emplace_back(
        table.schema_ptr(), parse_description(table.schema(), node.at("object"), where));
    MemberSet extent;
    for (const auto& e : node.at("extent")) extent.insert(e.get<int>());
    out.structure.extents.push_back(std::move(extent));
  }
  return out;
}

std::string emit_dot(const PyramidStructure& result) {
  std::ostringstream os;
  os << "digraph pyramid {\n";
  os << "  node [shape=box];\n";
  os << "  { rank=same;";
  for (int id : result.final_order) os << " n" << id << ";";
  os << " }\n";
  for (int id = 1; id <= result.node_count(); ++id) {
    const auto& q = result.quadruple(id);
    if (q.terminal()) {
      os << "  n" << id << " [label=\"" << id << "\"];\n";
    } else {
      char f[32];
      std::snprintf(f, sizeof(f), "%.4f", q.f);
      os << "  n" << id << " [label=\"" << id << "\"];\n";
      os << "  n" << id << " -> n" << q.left << " [label=\"" << f << "\"];\n";
      os << "  n" << id << " -> n" << q.right << " [label=\"" << f << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string emit_validation_json(const ValidationReport& report) {
  Json doc = Json::object();
  doc["pass"] = report.pass();
  Json checks = Json::object();
  checks["axiom1_omega_present"] = report.axiom1_omega_present;
  checks["axiom2_singletons"] = report.axiom2_singletons;
  checks["axiom3_intersection_closed"] = report.axiom3_intersection_closed;
  checks["axiom4_order_compatible"] = report.axiom4_order_compatible;
  checks["completeness_ok"] = report.completeness_ok;
  doc["checks"] = std::move(checks);
  doc["violations"] = report.violations;
  return doc.dump(2) + "\n";
}

}  // namespace sympyr
