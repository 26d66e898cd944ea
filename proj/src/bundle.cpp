#include "hopfkit/bundle.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "canonical_json.hpp"
#include "hopfkit/error.hpp"

namespace hopfkit {

namespace {

using nlohmann::json;
using Dims = std::vector<std::size_t>;

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& member(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where + ": missing \"" + key + "\"");
  return *it;
}

std::string string_member(const json& obj, const std::string& key, const std::string& where) {
  const json& v = member(obj, key, where);
  if (!v.is_string()) parse_fail(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

void allow_keys(const json& obj, const std::set<std::string>& keys, const std::string& where) {
  if (!obj.is_object()) parse_fail(where + " must be an object");
  for (const auto& [k, v] : obj.items())
    if (!keys.contains(k)) parse_fail(where + ": unexpected key \"" + k + "\"");
}

Scalar read_scalar(const json& v, const std::string& where) {
  if (!v.is_string()) parse_fail(where + ": coefficients are strings such as \"1/2\"");
  try {
    return Scalar::parse(v.get<std::string>());
  } catch (const Error&) {
    parse_fail(where + ": bad scalar \"" + v.get<std::string>() + "\"");
  }
}

Tensor read_tensor(const json& list, const Dims& dims, const std::string& where) {
  if (!list.is_array()) parse_fail(where + " must be a list of entries");
  Tensor t(dims);
  for (const auto& e : list) {
    if (!e.is_array() || e.size() != dims.size() + 1)
      parse_fail(where + ": entries have " + std::to_string(dims.size()) + " indices and a coefficient");
    Index idx;
    for (std::size_t l = 0; l < dims.size(); ++l) {
      if (!e[l].is_number_unsigned()) parse_fail(where + ": index " + e[l].dump() + " is not a natural number");
      auto i = e[l].get<std::uint64_t>();
      if (i >= dims[l])
        throw Error(ErrorCode::DimMismatch, where + ": index " + std::to_string(i) + " out of range for dimension " +
                                                std::to_string(dims[l]));
      idx.push_back(static_cast<std::size_t>(i));
    }
    t.add(idx, read_scalar(e[dims.size()], where));
  }
  return t;
}

Names read_names(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) parse_fail(where + ": basis must be a nonempty list of names");
  Names out;
  for (const auto& s : v) {
    if (!s.is_string()) parse_fail(where + ": basis names are strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

template <class Map>
const auto& lookup(const Map& m, const std::string& name, const std::string& kind, const std::string& where) {
  auto it = m.find(name);
  if (it == m.end()) throw Error(ErrorCode::DanglingReference, where + ": no " + kind + " named \"" + name + "\"");
  return it->second;
}

json write_tensor(const Tensor& t) {
  json out = json::array();
  for (const auto& [idx, v] : t.entries()) {
    json e = json::array();
    for (std::size_t l = 0; l < idx.size(); ++l) e.push_back(idx[l]);
    e.push_back(v.str());
    out.push_back(e);
  }
  return out;
}

json write_vec(const Vec& v) { return write_tensor(Tensor::vector(v)); }

}  // namespace

const Names& Bundle::space_names(const std::string& space) const {
  if (auto it = coalgebras.find(space); it != coalgebras.end()) return it->second.names();
  if (auto it = heaps.find(space); it != heaps.end()) return it->second.heap.names();
  if (auto it = hopf_algebras.find(space); it != hopf_algebras.end()) return it->second.hopf.names();
  if (auto it = modules.find(space); it != modules.end()) return it->second.module.names();
  throw Error(ErrorCode::DanglingReference, "no space named \"" + space + "\"");
}

Bundle parse_bundle(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail("byte " + std::to_string(e.byte) + ": " + e.what());
  }
  allow_keys(root,
             {"name", "note", "field", "coalgebras", "heaps", "hopf_algebras", "trusses", "modules", "operators",
              "vectors", "rb_modules"},
             "bundle");
  Bundle b;
  if (root.contains("name")) b.name = string_member(root, "name", "bundle");
  if (root.contains("note")) b.note = string_member(root, "note", "bundle");
  if (root.contains("field")) b.field = FieldSpec::parse(string_member(root, "field", "bundle"));
  auto section = [&](const char* key) {
    static const json empty = json::object();
    if (!root.contains(key)) return std::cref(empty);
    const json& s = root[key];
    if (!s.is_object()) parse_fail(std::string(key) + " must be an object keyed by name");
    return std::cref(s);
  };

  for (const auto& [name, v] : section("coalgebras").get().items()) {
    std::string where = "coalgebra \"" + name + "\"";
    allow_keys(v, {"basis", "comul", "counit"}, where);
    Names basis = read_names(member(v, "basis", where), where);
    std::size_t n = basis.size();
    b.coalgebras[name] = Coalgebra(b.field, basis, read_tensor(member(v, "comul", where), {n, n, n}, where + " comul"),
                                   read_tensor(member(v, "counit", where), {n}, where + " counit"));
  }
  for (const auto& [name, v] : section("heaps").get().items()) {
    std::string where = "heap \"" + name + "\"";
    allow_keys(v, {"coalgebra", "chi"}, where);
    std::string cname = string_member(v, "coalgebra", where);
    const Coalgebra& c = lookup(b.coalgebras, cname, "coalgebra", where);
    std::size_t n = c.dim();
    b.heaps[name] = {cname, HopfHeap(c, read_tensor(member(v, "chi", where), {n, n, n, n}, where + " chi"))};
  }
  for (const auto& [name, v] : section("hopf_algebras").get().items()) {
    std::string where = "Hopf algebra \"" + name + "\"";
    allow_keys(v, {"coalgebra", "mul", "unit", "antipode"}, where);
    std::string cname = string_member(v, "coalgebra", where);
    const Coalgebra& c = lookup(b.coalgebras, cname, "coalgebra", where);
    std::size_t n = c.dim();
    Tensor mul = read_tensor(member(v, "mul", where), {n, n, n}, where + " mul");
    Vec unit = read_tensor(member(v, "unit", where), {n}, where + " unit").to_vec();
    LinearMap s = LinearMap::from_operator(read_tensor(member(v, "antipode", where), {n, n}, where + " antipode"));
    b.hopf_algebras[name] = {cname, HopfAlgebra(c, mul, unit, s)};
  }
  for (const auto& [name, v] : section("trusses").get().items()) {
    std::string where = "truss \"" + name + "\"";
    allow_keys(v, {"heap", "circ"}, where);
    std::string hname = string_member(v, "heap", where);
    const HopfHeap& h = lookup(b.heaps, hname, "heap", where).heap;
    std::size_t n = h.dim();
    b.trusses[name] = {hname, HopfTruss(h, read_tensor(member(v, "circ", where), {n, n, n}, where + " circ"))};
  }
  for (const auto& [name, v] : section("modules").get().items()) {
    std::string where = "module \"" + name + "\"";
    allow_keys(v, {"heap", "side", "basis", "action", "coaction"}, where);
    std::string hname = string_member(v, "heap", where);
    const HopfHeap& h = lookup(b.heaps, hname, "heap", where).heap;
    std::string side = string_member(v, "side", where);
    if (side != "left" && side != "right") parse_fail(where + ": side is \"left\" or \"right\"");
    bool left = side == "left";
    Names basis = read_names(member(v, "basis", where), where);
    std::size_t n = h.dim(), d = basis.size();
    Tensor act = read_tensor(member(v, "action", where), left ? Dims{n, n, d, d} : Dims{d, n, n, d}, where + " action");
    Tensor rho = read_tensor(member(v, "coaction", where), left ? Dims{d, n, d} : Dims{d, d, n}, where + " coaction");
    b.modules[name] = {hname, HeapModule(h, left ? Side::Left : Side::Right, basis, act, rho)};
  }
  auto space_dim = [&](const std::string& space, const std::string& where) {
    try {
      return b.space_names(space).size();
    } catch (const Error&) {
      throw Error(ErrorCode::DanglingReference, where + ": no space named \"" + space + "\"");
    }
  };
  for (const auto& [name, v] : section("operators").get().items()) {
    std::string where = "operator \"" + name + "\"";
    allow_keys(v, {"space", "map"}, where);
    std::string space = string_member(v, "space", where);
    std::size_t n = space_dim(space, where);
    Tensor m = read_tensor(member(v, "map", where), {n, n}, where);
    check_in_field(m, b.field, where);
    b.operators[name] = {space, LinearMap::from_operator(m)};
  }
  for (const auto& [name, v] : section("vectors").get().items()) {
    std::string where = "vector \"" + name + "\"";
    allow_keys(v, {"space", "value"}, where);
    std::string space = string_member(v, "space", where);
    std::size_t n = space_dim(space, where);
    Tensor t = read_tensor(member(v, "value", where), {n}, where);
    check_in_field(t, b.field, where);
    b.vectors[name] = {space, t.to_vec()};
  }
  for (const auto& [name, v] : section("rb_modules").get().items()) {
    std::string where = "Rota-Baxter module \"" + name + "\"";
    allow_keys(v, {"module", "T", "B"}, where);
    Bundle::RBModule r{string_member(v, "module", where), string_member(v, "T", where), string_member(v, "B", where)};
    const Bundle::Module& m = lookup(b.modules, r.module, "module", where);
    const Bundle::Operator& t = lookup(b.operators, r.t, "operator", where);
    const Bundle::Operator& op = lookup(b.operators, r.b, "operator", where);
    if (t.map.rows() != m.module.dim()) throw Error(ErrorCode::DimMismatch, where + ": T does not act on the module");
    if (op.map.rows() != m.module.parent().dim())
      throw Error(ErrorCode::DimMismatch, where + ": B does not act on the module's heap");
    b.rb_modules[name] = r;
  }
  return b;
}

Bundle load_bundle(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_bundle(ss.str());
}

std::string serialize_bundle(const Bundle& b) {
  json root = json::object();
  if (!b.name.empty()) root["name"] = b.name;
  if (!b.note.empty()) root["note"] = b.note;
  root["field"] = b.field.name();
  for (const auto& [name, c] : b.coalgebras)
    root["coalgebras"][name] = {{"basis", c.names()}, {"comul", write_tensor(c.comul())}, {"counit", write_tensor(c.counit())}};
  for (const auto& [name, h] : b.heaps)
    root["heaps"][name] = {{"coalgebra", h.coalgebra}, {"chi", write_tensor(h.heap.chi())}};
  for (const auto& [name, h] : b.hopf_algebras)
    root["hopf_algebras"][name] = {{"coalgebra", h.coalgebra},
                                   {"mul", write_tensor(h.hopf.mul())},
                                   {"unit", write_vec(h.hopf.unit())},
                                   {"antipode", write_tensor(h.hopf.antipode().as_operator())}};
  for (const auto& [name, t] : b.trusses)
    root["trusses"][name] = {{"heap", t.heap}, {"circ", write_tensor(t.truss.circ())}};
  for (const auto& [name, m] : b.modules)
    root["modules"][name] = {{"heap", m.heap},
                             {"side", m.module.side() == Side::Left ? "left" : "right"},
                             {"basis", m.module.names()},
                             {"action", write_tensor(m.module.action())},
                             {"coaction", write_tensor(m.module.coaction())}};
  for (const auto& [name, o] : b.operators)
    root["operators"][name] = {{"space", o.space}, {"map", write_tensor(o.map.as_operator())}};
  for (const auto& [name, v] : b.vectors) root["vectors"][name] = {{"space", v.space}, {"value", write_vec(v.value)}};
  for (const auto& [name, r] : b.rb_modules) root["rb_modules"][name] = {{"module", r.module}, {"T", r.t}, {"B", r.b}};
  return detail::canonical(root);
}

void save_bundle(const Bundle& b, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << serialize_bundle(b);
}

}  // namespace hopfkit
