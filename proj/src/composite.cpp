#include "hopfkit/composite.hpp"

#include <map>
#include <string>

#include "hopfkit/error.hpp"

namespace hopfkit {

Composite::Composite(const std::vector<std::size_t>& input_dims) : inputs_(input_dims.size()) {
  std::vector<std::size_t> dims = input_dims;
  dims.insert(dims.end(), input_dims.begin(), input_dims.end());
  t_ = Tensor(dims);
  // Enumerate all basis tuples of the inputs.
  std::size_t total = 1;
  for (auto d : input_dims) total *= d;
  std::vector<std::size_t> idx(inputs_, 0);
  for (std::size_t n = 0; n < total; ++n) {
    Index k;
    for (auto i : idx) k.push_back(i);
    for (auto i : idx) k.push_back(i);
    t_.set(k, 1);
    for (std::size_t l = inputs_; l-- > 0;) {
      if (++idx[l] < input_dims[l]) break;
      idx[l] = 0;
    }
  }
}

Composite& Composite::apply(const Tensor& op, std::size_t op_inputs, const std::vector<std::size_t>& slots) {
  if (slots.size() != op_inputs) throw Error(ErrorCode::DimMismatch, "slot count differs from operator inputs");
  std::size_t nslots = this->slots();
  std::vector<bool> used(nslots, false);
  for (std::size_t j = 0; j < slots.size(); ++j) {
    std::size_t s = slots[j];
    if (s >= nslots || used[s]) throw Error(ErrorCode::DimMismatch, "bad slot list");
    if (t_.dim(inputs_ + s) != op.dim(j)) throw Error(ErrorCode::DimMismatch, "slot and operator input dimensions differ");
    used[s] = true;
  }
  std::size_t op_outputs = op.arity() - op_inputs;

  std::vector<std::size_t> kept;
  for (std::size_t s = 0; s < nslots; ++s)
    if (!used[s]) kept.push_back(s);
  std::size_t insert_at = 0;
  if (!slots.empty())
    while (insert_at < kept.size() && kept[insert_at] < slots.front()) ++insert_at;

  std::vector<std::size_t> dims(t_.dims().begin(), t_.dims().begin() + static_cast<long>(inputs_));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (i == insert_at)
      for (std::size_t o = 0; o < op_outputs; ++o) dims.push_back(op.dim(op_inputs + o));
    dims.push_back(t_.dim(inputs_ + kept[i]));
  }
  if (insert_at == kept.size())
    for (std::size_t o = 0; o < op_outputs; ++o) dims.push_back(op.dim(op_inputs + o));

  std::map<Index, std::vector<std::pair<Index, Scalar>>> table;
  for (const auto& [k, v] : op.entries()) {
    Index in, out;
    for (std::size_t l = 0; l < op_inputs; ++l) in.push_back(k[l]);
    for (std::size_t l = op_inputs; l < op.arity(); ++l) out.push_back(k[l]);
    table[in].emplace_back(out, v);
  }

  Tensor result(dims);
  for (const auto& [k, v] : t_.entries()) {
    Index sub;
    for (auto s : slots) sub.push_back(k[inputs_ + s]);
    auto it = table.find(sub);
    if (it == table.end()) continue;
    for (const auto& [out, w] : it->second) {
      Index nk;
      for (std::size_t l = 0; l < inputs_; ++l) nk.push_back(k[l]);
      for (std::size_t i = 0; i < kept.size(); ++i) {
        if (i == insert_at)
          for (std::size_t o = 0; o < out.size(); ++o) nk.push_back(out[o]);
        nk.push_back(k[inputs_ + kept[i]]);
      }
      if (insert_at == kept.size())
        for (std::size_t o = 0; o < out.size(); ++o) nk.push_back(out[o]);
      result.add(nk, v * w);
    }
  }
  t_ = std::move(result);
  return *this;
}

Composite& Composite::apply(const LinearMap& f, std::size_t slot) { return apply(f.as_operator(), 1, {slot}); }

Composite& Composite::insert(const Tensor& value, std::size_t position) {
  if (position > slots()) throw Error(ErrorCode::DimMismatch, "insert position out of range");
  // value as an operator with no inputs, spliced in front of slot `position`.
  std::size_t nslots = slots();
  Tensor prod = tensor_product_t(t_, value);
  std::vector<std::size_t> perm(prod.arity());
  std::size_t va = value.arity();
  for (std::size_t l = 0; l < inputs_ + nslots; ++l) {
    std::size_t s = l;
    if (l >= inputs_ && l - inputs_ >= position) s += va;
    perm[l] = s;
  }
  for (std::size_t j = 0; j < va; ++j) perm[inputs_ + nslots + j] = inputs_ + position + j;
  t_ = permute_legs(prod, perm);
  return *this;
}

Composite& Composite::reorder(const std::vector<std::size_t>& order) {
  if (order.size() != slots()) throw Error(ErrorCode::BadPermutation, "reorder needs every slot once");
  std::vector<std::size_t> perm(t_.arity());
  for (std::size_t l = 0; l < inputs_; ++l) perm[l] = l;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= order.size()) throw Error(ErrorCode::BadPermutation, "reorder index out of range");
    perm[inputs_ + order[i]] = inputs_ + i;
  }
  t_ = permute_legs(t_, perm);
  return *this;
}

Tensor iterated_comul(const Tensor& comul, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::DimMismatch, "iterated comultiplication needs at least one leg");
  Composite c({comul.dim(0)});
  for (std::size_t i = 1; i < k; ++i) c.apply(comul, 1, {i - 1});
  return c.tensor();
}

}  // namespace hopfkit
