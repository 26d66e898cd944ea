#pragma once

#include <map>
#include <string>

#include "hopfkit/rota.hpp"
#include "hopfkit/truss.hpp"

namespace hopfkit {

// A named collection of structures read from a JSON file. Tensors are stored
// as entry lists [i, j, ..., "coeff"] in input-first layout; every reference
// between entries is by name.
struct Bundle {
  struct Heap {
    std::string coalgebra;
    HopfHeap heap;
  };
  struct Hopf {
    std::string coalgebra;
    HopfAlgebra hopf;
  };
  struct Truss {
    std::string heap;
    HopfTruss truss;
  };
  struct Module {
    std::string heap;
    HeapModule module;
  };
  // space names a coalgebra, heap, Hopf algebra or module.
  struct Operator {
    std::string space;
    LinearMap map;
  };
  struct Vector {
    std::string space;
    Vec value;
  };
  struct RBModule {
    std::string module;
    std::string t;
    std::string b;
  };

  std::string name;
  std::string note;
  FieldSpec field;
  std::map<std::string, Coalgebra> coalgebras;
  std::map<std::string, Heap> heaps;
  std::map<std::string, Hopf> hopf_algebras;
  std::map<std::string, Truss> trusses;
  std::map<std::string, Module> modules;
  std::map<std::string, Operator> operators;
  std::map<std::string, Vector> vectors;
  std::map<std::string, RBModule> rb_modules;

  // Dimension and basis names of a space entry; DanglingReference if unknown.
  const Names& space_names(const std::string& space) const;
};

Bundle parse_bundle(const std::string& text);
Bundle load_bundle(const std::string& path);
// Canonical text: sorted keys, two-space indent, one tensor entry per line.
std::string serialize_bundle(const Bundle& b);
void save_bundle(const Bundle& b, const std::string& path);

}  // namespace hopfkit
