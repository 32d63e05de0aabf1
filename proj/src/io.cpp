#include "tiltlab/io.hpp"

#include <fstream>
#include <sstream>

#include "tiltlab/error.hpp"
#include "tiltlab/rational.hpp"

namespace tiltlab {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string label_of(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(where, "expected a vertex label");
}

Rational coeff_of(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return to_rational(j.get<long long>());
  } catch (const InputError& e) {
    fail(where, e.what());
  }
  fail(where, "expected a rational number written as a string");
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BoundQuiverAlgebra parse_algebra(const std::string& text) {
  Json doc = parse_json(text);
  const Json& jn = field(doc, "n", "algebra");
  if (!jn.is_number_integer() || jn.get<long long>() < 0) fail("n", "expected a nonnegative integer");
  const int n = jn.get<int>();

  const Json& jv = field(doc, "vertices", "algebra");
  if (!jv.is_array() || jv.empty()) fail("vertices", "expected a nonempty array");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < jv.size(); ++i) labels.push_back(label_of(jv[i], "vertices[" + std::to_string(i) + "]"));
  auto vertex = [&](const std::string& l, const std::string& where) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return static_cast<int>(i);
    fail(where, "unknown vertex \"" + l + "\"");
  };

  std::vector<Arrow> arrows;
  if (doc.contains("arrows")) {
    const Json& ja = doc["arrows"];
    if (!ja.is_array()) fail("arrows", "expected an array");
    for (std::size_t i = 0; i < ja.size(); ++i) {
      const std::string w = "arrows[" + std::to_string(i) + "]";
      const Json& name = field(ja[i], "name", w);
      if (!name.is_string()) fail(w + ".name", "expected a string");
      arrows.push_back({name.get<std::string>(), vertex(label_of(field(ja[i], "from", w), w + ".from"), w + ".from"),
                        vertex(label_of(field(ja[i], "to", w), w + ".to"), w + ".to")});
    }
  }
  Quiver q(labels, arrows);

  std::vector<AlgebraElement> rels;
  if (doc.contains("relations")) {
    const Json& jr = doc["relations"];
    if (!jr.is_array()) fail("relations", "expected an array");
    for (std::size_t i = 0; i < jr.size(); ++i) {
      const std::string w = "relations[" + std::to_string(i) + "]";
      if (!jr[i].is_array() || jr[i].empty()) fail(w, "expected a nonempty array of terms");
      AlgebraElement r;
      for (std::size_t t = 0; t < jr[i].size(); ++t) {
        const std::string wt = w + "[" + std::to_string(t) + "]";
        Rational c = coeff_of(field(jr[i][t], "coeff", wt), wt + ".coeff");
        const Json& jp = field(jr[i][t], "path", wt);
        if (!jp.is_array()) fail(wt + ".path", "expected an array of arrow names");
        if (jp.empty()) throw ValidationError(wt + ": relation not in square of arrow ideal");
        Path p;
        for (std::size_t s = 0; s < jp.size(); ++s) {
          const std::string ws = wt + ".path[" + std::to_string(s) + "]";
          if (!jp[s].is_string()) fail(ws, "expected an arrow name");
          auto idx = q.arrow_index(jp[s].get<std::string>());
          if (!idx) fail(ws, "unknown arrow name \"" + jp[s].get<std::string>() + "\"");
          p.arrows.push_back(*idx);
        }
        p.source = q.arrow(p.arrows.front()).source;
        p.target = q.arrow(p.arrows.back()).target;
        if (t == 0) {
          r.source = p.source;
          r.target = p.target;
        }
        r.add(p, c);
      }
      rels.push_back(std::move(r));
    }
  }
  return BoundQuiverAlgebra(q, n, rels);
}

BoundQuiverAlgebra load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

Json algebra_to_json(const BoundQuiverAlgebra& a) {
  const Quiver& q = a.quiver();
  Json out;
  out["n"] = a.n();
  out["vertices"] = q.labels();
  out["arrows"] = Json::array();
  for (const Arrow& ar : q.arrows())
    out["arrows"].push_back({{"name", ar.name}, {"from", q.label(ar.source)}, {"to", q.label(ar.target)}});
  out["relations"] = Json::array();
  for (const auto& r : a.relations()) {
    Json terms = Json::array();
    for (const auto& [p, c] : r.terms) {
      Json names = Json::array();
      for (int x : p.arrows) names.push_back(q.arrow(x).name);
      terms.push_back({{"coeff", to_string(c)}, {"path", names}});
    }
    out["relations"].push_back(terms);
  }
  return out;
}

Representation parse_representation(const BoundQuiverAlgebra& a, const std::string& text) {
  const Quiver& q = a.quiver();
  Json doc = parse_json(text);
  const Json& jd = field(doc, "dims", "representation");
  if (!jd.is_object()) fail("dims", "expected an object keyed by vertex label");
  Representation x;
  x.dims.assign(a.size(), 0);
  for (auto it = jd.begin(); it != jd.end(); ++it) {
    auto v = q.vertex_index(it.key());
    if (!v) fail("dims." + it.key(), "unknown vertex");
    if (!it.value().is_number_integer() || it.value().get<long long>() < 0)
      fail("dims." + it.key(), "expected a nonnegative integer");
    x.dims[*v] = it.value().get<std::size_t>();
  }
  const Json empty = Json::object();
  const Json& jm = doc.contains("maps") ? doc["maps"] : empty;
  if (!jm.is_object()) fail("maps", "expected an object keyed by arrow name");
  for (auto it = jm.begin(); it != jm.end(); ++it)
    if (!q.arrow_index(it.key())) fail("maps." + it.key(), "unknown arrow name");
  for (const Arrow& ar : q.arrows()) {
    const std::string w = "maps." + ar.name;
    const std::size_t rows = x.dims[ar.target], cols = x.dims[ar.source];
    RatMatrix m(rows, cols);
    auto it = jm.find(ar.name);
    if (it == jm.end()) {
      if (rows * cols != 0) fail(w, "missing map");
    } else {
      if (!it->is_array() || it->size() != rows) fail(w, "expected " + std::to_string(rows) + " rows");
      for (std::size_t r = 0; r < rows; ++r) {
        const Json& row = (*it)[r];
        if (!row.is_array() || row.size() != cols)
          fail(w + "[" + std::to_string(r) + "]", "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
          m(r, c) = coeff_of(row[c], w + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
      }
    }
    x.maps.push_back(std::move(m));
  }
  check_representation(a, x);
  return x;
}

Representation load_representation(const BoundQuiverAlgebra& a, const std::string& path) {
  return parse_representation(a, read_file(path));
}

Json representation_to_json(const BoundQuiverAlgebra& a, const Representation& x) {
  const Quiver& q = a.quiver();
  Json out;
  out["dims"] = Json::object();
  for (std::size_t v = 0; v < a.size(); ++v) out["dims"][q.label(static_cast<int>(v))] = x.dims[v];
  out["maps"] = Json::object();
  for (std::size_t e = 0; e < q.arrow_count(); ++e) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < x.maps[e].rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < x.maps[e].cols(); ++c) row.push_back(to_string(x.maps[e](r, c)));
      rows.push_back(row);
    }
    out["maps"][q.arrow(e).name] = rows;
  }
  return out;
}

std::string format_path(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.label(p.source);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) s += (i ? "*" : "") + q.arrow(p.arrows[i]).name;
  return s;
}

std::string format_element(const Quiver& q, const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [p, c] : x.terms) {
    Rational m = abs(c);
    if (first) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    if (m != 1) s += to_string(m) + " ";
    s += format_path(q, p);
    first = false;
  }
  return s;
}

DimensionVector parse_vector(const std::string& text, std::size_t length) {
  DimensionVector x;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      x.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad vector entry \"" + item + "\"");
    }
  }
  if (x.size() != length)
    throw InputError("vector has " + std::to_string(x.size()) + " entries, expected " + std::to_string(length));
  return x;
}

std::string format_vector(const DimensionVector& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

}  // namespace tiltlab
