#pragma once

#include "cutpaste/cobordism.hpp"
#include "cutpaste/scalar.hpp"
#include "cutpaste/surfaces.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cutpaste::tqft {

/// Invertible 2-dimensional field theory, determined by the scalars of the
/// cap (a) and cup (e). The relations force pants to a^-1, copants to e^-1,
/// and id and swap to 1.
struct InvertibleTQFT2 {
  GroupScalar cap;
  GroupScalar cup;

  static InvertibleTQFT2 trivial(GroupScalar::Variant v) { return {GroupScalar::one(v), GroupScalar::one(v)}; }
  GroupScalar::Variant variant() const { return cap.variant(); }
  friend bool operator==(const InvertibleTQFT2&, const InvertibleTQFT2&) = default;
};

// Throws VariantMismatch.
InvertibleTQFT2 make_tqft(const GroupScalar& cap, const GroupScalar& cup);
std::string to_string(const InvertibleTQFT2& t);

GroupScalar generator_value(const InvertibleTQFT2& t, cobordism::Generator g);
// Product of generator values. Throws WrongDimension for dimension-1 words.
GroupScalar evaluate(const InvertibleTQFT2& t, const cobordism::CobordismWord& w);
// Closed form on a closed class: product over components of (ae)^(1-g).
GroupScalar closed_value(const InvertibleTQFT2& t, const cobordism::CobordismClass& c);

// Throw VariantMismatch.
InvertibleTQFT2 product(const InvertibleTQFT2& s, const InvertibleTQFT2& t);
InvertibleTQFT2 inverse(const InvertibleTQFT2& t);

using WordEvaluator = std::function<GroupScalar(const cobordism::CobordismWord&)>;
WordEvaluator evaluator(const InvertibleTQFT2& t);
// Negative control: sends pants to a instead of a^-1.
WordEvaluator corrupted_pants_evaluator(const InvertibleTQFT2& t);

struct Violation {
  std::string law;
  std::string witness;
};

struct LawReport {
  std::map<std::string, long> checks;  // law -> number of instances checked
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Equivalence invariance, functoriality, monoidality, cylinder and empty
// manifold laws on `budget` random words. Composites are compared after
// random class-preserving rewrites, because a field theory is a functor on
// equivalence classes.
LawReport verify_axioms(const WordEvaluator& eval, GroupScalar::Variant v, std::uint64_t seed, int budget);
// As above, plus the closed-value law against closed_value().
LawReport verify_axioms(const InvertibleTQFT2& t, std::uint64_t seed, int budget);

/// A function on compact oriented manifolds of dimension 2 (surfaces) and
/// dimension 1 (arcs and circles).
struct ThetaFunction {
  std::function<GroupScalar(const surfaces::Surface&)> on_surfaces;
  std::function<GroupScalar(const cobordism::OneManifold&)> on_curves;
};

ThetaFunction theta_exp_chi();
ThetaFunction theta_constant_one();

struct ThetaResult {
  bool multiplicative = true;
  std::string witness;
  int gluings = 0;
};

// Samples gluings M u N and checks Theta(M u N) = Theta(M) Theta(N). The
// first sample in each dimension is the two-disk gluing.
ThetaResult check_theta_defines_tqft(const ThetaFunction& theta, int dim, std::uint64_t seed, int budget);

// For a kernel member (ae = 1): words with equal arities have equal values,
// and the value is e^(in - out). Throws NotInKernel when a sampled closed
// word does not evaluate to 1.
LawReport boundary_dependence_check(const InvertibleTQFT2& t, std::uint64_t seed, int budget);

}  // namespace cutpaste::tqft
