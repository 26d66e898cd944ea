#pragma once

#include <json.hpp>
#include <string>

namespace hopfkit::detail {

// Sorted keys, two-space indent; arrays of plain values stay on one line.
inline void write_canonical(const nlohmann::json& j, std::string& out, std::size_t indent) {
  std::string pad(indent, ' '), inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += inner + nlohmann::json(k).dump() + ": ";
      write_canonical(v, out, indent + 2);
    }
    out += "\n" + pad + "}";
  } else if (j.is_array()) {
    bool flat = true;
    for (const auto& v : j) flat = flat && v.is_primitive();
    if (flat) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += inner;
      write_canonical(j[i], out, indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else {
    out += j.dump();
  }
}

inline std::string canonical(const nlohmann::json& j) {
  std::string out;
  write_canonical(j, out, 0);
  out += "\n";
  return out;
}

}  // namespace hopfkit::detail
