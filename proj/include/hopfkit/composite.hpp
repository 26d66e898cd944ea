#pragma once

#include <vector>

#include "hopfkit/tensor.hpp"

namespace hopfkit {

// A multilinear map assembled by routing free inputs through structure maps.
// The underlying tensor has the free inputs as its leading legs, followed by
// the current output slots.
class Composite {
 public:
  // Identity on the given input spaces.
  explicit Composite(const std::vector<std::size_t>& input_dims);

  std::size_t inputs() const { return inputs_; }
  std::size_t slots() const { return t_.arity() - inputs_; }
  const Tensor& tensor() const { return t_; }

  // Feeds the listed slots, in order, into the leading op_inputs legs of op.
  // The op's remaining legs replace them, placed where slots.front() was.
  Composite& apply(const Tensor& op, std::size_t op_inputs, const std::vector<std::size_t>& slots);
  Composite& apply(const LinearMap& f, std::size_t slot);
  // Adds a constant element; its legs become new slots starting at position.
  Composite& insert(const Tensor& value, std::size_t position);
  Composite& insert(const Vec& value, std::size_t position) { return insert(Tensor::vector(value), position); }
  // New slot i is old slot order[i].
  Composite& reorder(const std::vector<std::size_t>& order);

 private:
  std::size_t inputs_;
  Tensor t_;
};

// Iterated comultiplication with k >= 1 output legs, as an input-first tensor.
Tensor iterated_comul(const Tensor& comul, std::size_t k);

}  // namespace hopfkit
