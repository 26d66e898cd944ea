#pragma once

#include <vector>

#include "hopfkit/report.hpp"
#include "hopfkit/tensor.hpp"

namespace hopfkit {

// Delta(e_i) = sum D[i][j][k] e_j (x) e_k; counit is a 1-leg tensor.
class Coalgebra {
 public:
  Coalgebra() = default;
  Coalgebra(FieldSpec field, Names basis, Tensor comul, Tensor counit);

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return names_.size(); }
  const Names& names() const { return names_; }
  const Tensor& comul() const { return comul_; }
  const Tensor& counit() const { return counit_; }

  Scalar counit_of(const Vec& x) const;
  // Same data over another field; fails if a coefficient does not belong to it.
  Coalgebra with_field(const FieldSpec& field) const;

  bool operator==(const Coalgebra& o) const {
    return field_ == o.field_ && names_ == o.names_ && comul_ == o.comul_ && counit_ == o.counit_;
  }

 private:
  FieldSpec field_;
  Names names_;
  Tensor comul_;
  Tensor counit_;
};

void check_in_field(const Tensor& t, const FieldSpec& field, const std::string& what);
void check_in_field(const Vec& v, const FieldSpec& field, const std::string& what);

VerificationReport verify_coalgebra(const Coalgebra& c);
bool is_cocommutative(const Coalgebra& c);
Coalgebra opposite_coalgebra(const Coalgebra& c);
Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d);

bool is_grouplike(const Coalgebra& c, const Vec& x);
// All group-likes over c.field(), sorted. Above dimension 4 only the verified
// hints are returned.
std::vector<Vec> find_grouplikes(const Coalgebra& c, const std::vector<Vec>& hints = {});

}  // namespace hopfkit
