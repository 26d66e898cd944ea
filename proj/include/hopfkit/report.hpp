#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/composite.hpp"

namespace hopfkit {

using Names = std::vector<std::string>;

// Smallest failing input tuple with both sides evaluated there.
struct Witness {
  std::vector<std::string> inputs;
  std::string lhs;
  std::string rhs;
};

struct Check {
  std::string id;
  std::string law;
  bool pass = true;
  std::optional<Witness> witness;
  std::string note;
};

struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;

  bool passed() const;
  const Check* find(const std::string& id) const;
  const Check* first_failure() const;
  void add(Check c) { checks.push_back(std::move(c)); }
  // Appends other's checks with ids prefixed.
  void merge(const VerificationReport& other, const std::string& prefix = "");
};

// Compares two composites over the same inputs as full tensors.
Check compare(const std::string& id, const std::string& law, const Composite& lhs, const Composite& rhs,
              const std::vector<const Names*>& input_names, const std::vector<const Names*>& output_names);
Check condition(const std::string& id, const std::string& law, bool ok, const std::string& note = "");

// Linear combination of basis tensors, e.g. "theta⊗theta - u⊗u".
std::string format_combination(const std::vector<std::pair<Index, Scalar>>& terms,
                               const std::vector<const Names*>& names);
std::string format_vec(const Vec& v, const Names& names);
Names default_names(std::size_t n, const std::string& stem = "e");

}  // namespace hopfkit
