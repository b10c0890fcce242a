#include "homcat/modfile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace homcat {

namespace {

using nlohmann::json;

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return rat(j.get<long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw input_error("rational entries must be strings like \"p\" or \"p/q\"");
}

RatMatrix matrix_from_json(const json& j, int rows, int cols, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw input_error("matrix at " + where + " must have " + std::to_string(rows) + " rows");
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw input_error("matrix at " + where + " must have " + std::to_string(cols) + " columns");
    for (int c = 0; c < cols; ++c) m.at(r, c) = rat_from_json(row[c]);
  }
  return m;
}

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(format_rat(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

DegreewiseModule module_from_json_raw(const json& j);

DegreewiseModule module_from_json(const json& j) {
  DegreewiseModule m = module_from_json_raw(j);
  const ValidationReport rep = validate(m);
  if (!rep.ok) {
    const Violation& v = rep.violations.front();
    std::ostringstream os;
    os << "module violates " << v.relation << " var=" << v.var_a << " degree=" << v.degree;
    throw input_error(os.str());
  }
  return m;
}

DegreewiseModule module_from_json_raw(const json& j) {
  if (!j.is_object()) throw input_error("module file must contain one object");
  if (!j.contains("algebra") || !j["algebra"].is_object())
    throw input_error("module file needs an \"algebra\" object");
  const json& alg = j["algebra"];
  if (!alg.contains("kind") || !alg.contains("nvars"))
    throw input_error("algebra needs \"kind\" and \"nvars\"");
  AlgebraKind a{kind_from_name(alg["kind"].get<std::string>()), alg["nvars"].get<int>()};
  if (a.nvars < 2) throw input_error("nvars must be at least 2");

  int wlo = 0, whi = -1;
  bool has_window = false;
  if (j.contains("window")) {
    const json& w = j["window"];
    if (!w.is_array() || w.size() != 2) throw input_error("\"window\" must be [lo, hi]");
    wlo = w[0].get<int>();
    whi = w[1].get<int>();
    has_window = true;
  } else if (a.kind == Kind::symmetric) {
    throw input_error("symmetric modules need an explicit \"window\"");
  }

  ModuleBuilder b(a, a.kind == Kind::symmetric ? whi : kCompleteHorizon);
  std::map<int, int> dims;
  if (j.contains("dims")) {
    for (const auto& [key, value] : j["dims"].items()) {
      const int d = std::stoi(key);
      const int n = value.get<int>();
      if (n < 0) throw input_error("negative dimension at degree " + key);
      if (has_window && n > 0 && (d < wlo || d > whi))
        throw input_error("piece at degree " + key + " lies outside the declared window");
      dims[d] = n;
      b.set_dim(d, n);
    }
  }
  auto dim_at = [&dims](int d) {
    auto it = dims.find(d);
    return it == dims.end() ? 0 : it->second;
  };
  if (j.contains("action")) {
    for (const auto& [var_key, per_degree] : j["action"].items()) {
      const int var = std::stoi(var_key);
      if (var < 0 || var >= a.nvars) throw input_error("action variable out of range: " + var_key);
      for (const auto& [deg_key, mat] : per_degree.items()) {
        const int d = std::stoi(deg_key);
        const std::string where = "action[" + var_key + "][" + deg_key + "]";
        b.set_action(var, d, matrix_from_json(mat, dim_at(d + 1), dim_at(d), where));
      }
    }
  }
  return b.finalize();
}

json module_to_json(const DegreewiseModule& m) {
  json j;
  j["algebra"] = {{"kind", kind_name(m.algebra.kind)}, {"nvars", m.algebra.nvars}};
  const int hi = m.windowed() ? m.horizon : (m.is_zero() ? m.lo - 1 : m.hi());
  j["window"] = json::array({m.is_zero() ? 0 : m.lo, m.is_zero() && !m.windowed() ? -1 : hi});
  json dims = json::object();
  if (!m.is_zero())
    for (int d = m.lo; d <= m.hi(); ++d)
      if (m.dim(d) > 0) dims[std::to_string(d)] = m.dim(d);
  j["dims"] = std::move(dims);
  json action = json::object();
  for (int v = 0; v < m.algebra.nvars; ++v) {
    json per_degree = json::object();
    if (!m.is_zero())
      for (int d = m.lo; d < m.hi(); ++d) {
        const RatMatrix a = m.act(v, d);
        if (!a.is_zero()) per_degree[std::to_string(d)] = matrix_to_json(a);
      }
    if (!per_degree.empty()) action[std::to_string(v)] = std::move(per_degree);
  }
  j["action"] = std::move(action);
  return j;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("file is not well-formed JSON");
  return j;
}

}  // namespace

DegreewiseModule parse_module(const std::string& text) { return module_from_json(parse_text(text)); }

DegreewiseModule parse_module_raw(const std::string& text) {
  return module_from_json_raw(parse_text(text));
}

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}
}  // namespace

DegreewiseModule load_module(const std::string& path) { return parse_module(slurp(path)); }

DegreewiseModule load_module_raw(const std::string& path) { return parse_module_raw(slurp(path)); }

std::string serialize_module(const DegreewiseModule& m) { return module_to_json(m).dump(2) + "\n"; }

ExtensionClass parse_extension(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("extension"))
    throw input_error("extension file needs an \"extension\" object");
  const json& e = j["extension"];
  if (!e.contains("source") || !e.contains("target"))
    throw input_error("extension needs \"source\" and \"target\" modules");
  ExtensionClass out;
  out.source = module_from_json(e["source"]);
  out.target = module_from_json(e["target"]);
  if (e.contains("cocycle")) {
    for (const auto& [var_key, per_degree] : e["cocycle"].items()) {
      const int var = std::stoi(var_key);
      if (var < 0 || var >= out.source.algebra.nvars)
        throw input_error("cocycle variable out of range: " + var_key);
      for (const auto& [deg_key, mat] : per_degree.items()) {
        const int d = std::stoi(deg_key);
        auto it = out.cocycle.find(d);
        if (it == out.cocycle.end()) {
          std::vector<RatMatrix> mats;
          for (int v = 0; v < out.source.algebra.nvars; ++v)
            mats.emplace_back(out.target.dim(d + 1), out.source.dim(d));
          it = out.cocycle.emplace(d, std::move(mats)).first;
        }
        const std::string where = "cocycle[" + var_key + "][" + deg_key + "]";
        it->second[var] =
            matrix_from_json(mat, out.target.dim(d + 1), out.source.dim(d), where);
      }
    }
  }
  return out;
}

ExtensionClass load_extension(const std::string& path) { return parse_extension(slurp(path)); }

std::string serialize_extension(const ExtensionClass& e) {
  json j;
  j["extension"]["source"] = parse_text(serialize_module(e.source));
  j["extension"]["target"] = parse_text(serialize_module(e.target));
  json cocycle = json::object();
  for (int v = 0; v < e.source.algebra.nvars; ++v) {
    json per_degree = json::object();
    for (const auto& [d, mats] : e.cocycle)
      if (!mats[v].is_zero()) per_degree[std::to_string(d)] = matrix_to_json(mats[v]);
    if (!per_degree.empty()) cocycle[std::to_string(v)] = std::move(per_degree);
  }
  j["extension"]["cocycle"] = std::move(cocycle);
  return j.dump(2) + "\n";
}

}  // namespace homcat
