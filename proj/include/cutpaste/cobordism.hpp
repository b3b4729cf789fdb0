#pragma once

#include "cutpaste/random.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace cutpaste::cobordism {

enum class Generator {
  // dimension 2, objects are ordered lists of circles
  Id,
  Swap,
  Cap,      // empty -> 1
  Cup,      // 1 -> empty
  Pants,    // 2 -> 1
  Copants,  // 1 -> 2
  // dimension 1, objects are ordered lists of points
  PointId,
  ArcCap,  // empty -> 2
  ArcCup,  // 2 -> empty
};

int input_arity(Generator g);
int output_arity(Generator g);
int generator_dim(Generator g);
std::string_view name(Generator g);
// Euler characteristic of the generator as a surface (dimension 2) or
// 1-manifold (dimension 1).
int generator_chi(Generator g);

using Layer = std::vector<Generator>;

/// Layered word; the first layer is applied first. Empty layers are dropped
/// on construction, so the identity on the empty object is the empty word.
class CobordismWord {
 public:
  explicit CobordismWord(int dim = 2) : dim_(dim) {}
  // Throws ArityMismatch between consecutive layers and DimensionMismatch
  // for generators of the wrong dimension.
  CobordismWord(int dim, std::vector<Layer> layers);

  int dim() const noexcept { return dim_; }
  const std::vector<Layer>& layers() const noexcept { return layers_; }
  bool empty() const noexcept { return layers_.empty(); }
  int in_arity() const;
  int out_arity() const;
  bool is_closed() const { return in_arity() == 0 && out_arity() == 0; }

  friend bool operator==(const CobordismWord&, const CobordismWord&) = default;

 private:
  int dim_ = 2;
  std::vector<Layer> layers_;
};

int layer_in_arity(const Layer& layer);
int layer_out_arity(const Layer& layer);

// Throws SyntaxError (with a character position) and ArityMismatch.
CobordismWord parse_word(std::string_view text);
// "" for the empty word.
std::string to_string(const CobordismWord& w);

CobordismWord identity(int dim, int width);
// Throws ArityMismatch, DimensionMismatch.
CobordismWord compose(const CobordismWord& first, const CobordismWord& second);
// Throws DimensionMismatch.
CobordismWord tensor(const CobordismWord& left, const CobordismWord& right);

// Sum of generator Euler characteristics.
long word_chi(const CobordismWord& w);

struct ComponentRecord {
  int genus = 0;
  std::vector<int> in_positions;
  std::vector<int> out_positions;
  friend auto operator<=>(const ComponentRecord&, const ComponentRecord&) = default;
};

/// Classification data: one record per connected component, sorted. In
/// dimension 1 every genus is 0 and a component without boundary points is
/// a circle.
struct CobordismClass {
  int dim = 2;
  int in_arity = 0;
  int out_arity = 0;
  std::vector<ComponentRecord> components;
  friend bool operator==(const CobordismClass&, const CobordismClass&) = default;
};

// Throws InternalInvariantViolation if a component's genus comes out
// negative or fractional.
CobordismClass normal_form(const CobordismWord& w);
long class_chi(const CobordismClass& c);
std::string to_string(const CobordismClass& c);

// Throws ArityMismatch for different dimensions or arities.
bool equivalent(const CobordismWord& a, const CobordismWord& b);

struct OneManifold {
  int arcs = 0;
  int circles = 0;
  friend bool operator==(const OneManifold&, const OneManifold&) = default;
};
// Throws WrongDimension for dimension-2 words.
OneManifold one_manifold_class(const CobordismWord& w);

// Connected genus-g word with the given arities (dimension 2).
CobordismWord canonical_word(int genus, int in, int out);

// Random dimension-2 word with exactly the given arities. Widths stay
// below max_width where the arities allow.
CobordismWord random_word(Rng& rng, int in, int out, int max_layers, int max_width = 5);
// Random dimension-1 word with the given (even-sum) arities.
CobordismWord random_word_dim1(Rng& rng, int in, int out, int max_layers);

// One randomly chosen rewrite that keeps the normal form: identity-layer
// insertion, layer splitting along disjoint strands, swap;swap insertion,
// unit and counit laws, commutativity of (co)pants.
CobordismWord random_rewrite(Rng& rng, const CobordismWord& w);
CobordismWord scramble(Rng& rng, const CobordismWord& w, int steps);

}  // namespace cutpaste::cobordism
