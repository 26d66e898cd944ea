#include "hopfkit/report.hpp"

#include <algorithm>

#include "hopfkit/error.hpp"

namespace hopfkit {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* VerificationReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

const Check* VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (auto c : other.checks) {
    c.id = prefix + c.id;
    checks.push_back(std::move(c));
  }
}

Names default_names(std::size_t n, const std::string& stem) {
  Names names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

namespace {

std::string coefficient_prefix(const Scalar& s, bool empty_tail) {
  if (empty_tail) return s.str();
  if (s.is_one()) return "";
  if (s == Scalar(-1)) return "-";
  if (s.is_rational()) return s.str() + "*";
  return "(" + s.str() + ")*";
}

}  // namespace

std::string format_combination(const std::vector<std::pair<Index, Scalar>>& terms,
                               const std::vector<const Names*>& names) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [k, s] : terms) {
    std::string tail;
    for (std::size_t l = 0; l < k.size(); ++l) {
      if (l) tail += "⊗";
      tail += l < names.size() && names[l] ? names[l]->at(k[l]) : std::to_string(k[l]);
    }
    std::string term = coefficient_prefix(s, tail.empty()) + tail;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

std::string format_vec(const Vec& v, const Names& names) {
  std::vector<std::pair<Index, Scalar>> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) terms.push_back({Index{i}, v[i]});
  return format_combination(terms, {&names});
}

Check compare(const std::string& id, const std::string& law, const Composite& lhs, const Composite& rhs,
              const std::vector<const Names*>& input_names, const std::vector<const Names*>& output_names) {
  Check c{id, law, true, std::nullopt, ""};
  if (lhs.inputs() != rhs.inputs() || lhs.tensor().dims() != rhs.tensor().dims())
    throw Error(ErrorCode::DimMismatch, "sides of '" + law + "' have different shapes");
  if (lhs.tensor() == rhs.tensor()) return c;
  c.pass = false;
  std::size_t ni = lhs.inputs();
  // Entries are ordered with the inputs leading, so the first difference
  // carries the lexicographically smallest failing input tuple.
  Tensor diff = lhs.tensor() - rhs.tensor();
  const Index& first = diff.entries().begin()->first;
  auto restrict = [&](const Tensor& t) {
    std::vector<std::pair<Index, Scalar>> terms;
    for (const auto& [k, v] : t.entries()) {
      bool match = true;
      for (std::size_t l = 0; l < ni && match; ++l) match = k[l] == first[l];
      if (!match) continue;
      Index out;
      for (std::size_t l = ni; l < k.size(); ++l) out.push_back(k[l]);
      terms.emplace_back(out, v);
    }
    return format_combination(terms, output_names);
  };
  Witness w;
  for (std::size_t l = 0; l < ni; ++l)
    w.inputs.push_back(l < input_names.size() && input_names[l] ? input_names[l]->at(first[l]) : std::to_string(first[l]));
  w.lhs = restrict(lhs.tensor());
  w.rhs = restrict(rhs.tensor());
  c.witness = std::move(w);
  return c;
}

Check condition(const std::string& id, const std::string& law, bool ok, const std::string& note) {
  Check c{id, law, ok, std::nullopt, note};
  if (!ok) c.witness = Witness{{}, note, ""};
  return c;
}

}  // namespace hopfkit
