#pragma once

#include "cutpaste/scalar.hpp"
#include "cutpaste/simplicial.hpp"
#include "cutpaste/surfaces.hpp"
#include "cutpaste/tqft.hpp"
#include "cutpaste/virtual_bordism.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cutpaste::skk {

/// Complete invariant tuple of an SKK class: the semicharacteristic mod 2 in
/// dimension 1, chi/2 in dimension 2, (chi, sigma) in dimension 4.
struct SKKClass {
  struct Mod2 {
    bool odd = false;
    friend bool operator==(const Mod2&, const Mod2&) = default;
  };
  struct ChiSigma {
    Integer chi;
    Integer sigma;
    friend bool operator==(const ChiSigma&, const ChiSigma&) = default;
  };

  int dim = 2;
  std::variant<Mod2, Integer, ChiSigma> value;

  friend bool operator==(const SKKClass&, const SKKClass&) = default;
};

// Throws DimensionMismatch.
SKKClass operator+(const SKKClass& a, const SKKClass& b);
std::string to_string(const SKKClass& c);

// Throws NotClosed, UnsupportedDimension, and the homology/signature errors.
SKKClass skk_class(const simplicial::SimplicialComplex& m);
SKKClass skk_class(const surfaces::Surface& m);

enum class Group { Integers, Mod2, Zero };
std::string to_string(Group g);
// Group of the SKK-to-SK kernel term: Z for even n, Z/2 for n = 1 mod 4, 0
// for n = 3 mod 4. Throws InvalidSpec for n < 1.
Group i_n_table(int n);

// n = 2: chi/2. n = 4: ((chi - sigma)/2, sigma). Throws OddParity,
// UnsupportedDimension.
std::variant<Integer, std::pair<Integer, Integer>> sk_class(const simplicial::SimplicialComplex& m);
std::variant<Integer, std::pair<Integer, Integer>> sk_class_from(int n, const Integer& chi, const Integer& sigma);

struct HomStructure {
  enum class Shape { Zero, ChiStar, ChiStarPlusBordism };
  int n = 0;
  Shape shape = Shape::Zero;
  int bordism_rank = 0;  // only for ChiStarPlusBordism
};
// Bordism rank defaults to the number of partitions of n/4, the rank of the
// oriented bordism group in that degree; pass a value to override.
HomStructure hom_structure(int n, std::optional<int> bordism_rank = std::nullopt);
std::string to_string(const HomStructure& h);

/// Homomorphism out of SKK_n, described by its value on generators:
///   M -> chi_half_base^(chi/2) * sigma_base^sigma * exp(sum t_k * attribute_k).
/// The attribute part requires the exponential variant.
struct SKKInvariant {
  int dim = 2;
  GroupScalar chi_half_base;
  GroupScalar sigma_base;
  std::map<std::string, Rational> attribute_exponents;

  GroupScalar::Variant variant() const { return chi_half_base.variant(); }
  bool is_trivial() const;
  friend bool operator==(const SKKInvariant&, const SKKInvariant&) = default;
};

// exp(r * chi + s * sigma + sum t_k * attribute_k)
SKKInvariant exp_invariant(int dim, const Rational& r, const Rational& s = 0,
                           std::map<std::string, Rational> attribute_exponents = {});
std::string descriptor(const SKKInvariant& xi);

// Throws FractionalExponent (odd chi with a base lacking a square root),
// MissingAttribute, VariantMismatch.
GroupScalar evaluate(const SKKInvariant& xi, const Integer& chi, const Integer& sigma,
                     const std::map<std::string, Rational>& attributes = {});
GroupScalar evaluate(const SKKInvariant& xi, const surfaces::Surface& m);
GroupScalar evaluate(const SKKInvariant& xi, const simplicial::SimplicialComplex& m);
GroupScalar evaluate(const SKKInvariant& xi, const virtual_bordism::VirtualPiece& closed);

SKKInvariant pointwise_product(const SKKInvariant& a, const SKKInvariant& b);

// Restriction of a theory to closed surfaces: chi/2 -> ae.
SKKInvariant psi(const tqft::InvertibleTQFT2& t);
// |psi|: drops the sign.
SKKInvariant abs_psi(const tqft::InvertibleTQFT2& t);

// True iff |ae| = 1, i.e. every closed value is +-1.
bool kernel_membership(const tqft::InvertibleTQFT2& t);

/// Section of |psi|. The chi part is evaluated directly as exp(r chi(M));
/// the sigma and attribute part goes through the closing-up construction,
/// xi(C(M))^(1/l).
class Splitting {
 public:
  // Throws UnsupportedDimension for dims other than 2, 4, 8 and
  // VariantMismatch for a non-exponential invariant.
  Splitting(SKKInvariant xi, std::optional<virtual_bordism::Catalog> catalog = std::nullopt);

  const SKKInvariant& invariant() const noexcept { return xi_; }
  // Dimension 2 only: the theory with a = e = sqrt(chi_half_base).
  tqft::InvertibleTQFT2 tqft() const;
  // First in_count boundary labels are incoming. Throws MissingBSigma when
  // the closing-up part needs a catalog or a capping piece that is missing.
  GroupScalar evaluate(const virtual_bordism::VirtualPiece& m, std::size_t in_count) const;

 private:
  SKKInvariant xi_;
  std::optional<virtual_bordism::Catalog> catalog_;
};

Splitting splitting_S(const SKKInvariant& xi, std::optional<virtual_bordism::Catalog> catalog = std::nullopt);

// Dimension-2 section used by verify_split_sequence; replaceable for
// negative controls.
using SplittingFn = std::function<tqft::InvertibleTQFT2(const SKKInvariant&)>;
SplittingFn default_splitting();
// a = e^r, e = 1 for xi = exp(r chi): wrong by a factor on every closed value.
SplittingFn mismatched_splitting();

struct SequenceReport {
  struct Check {
    std::string name;
    long instances = 0;
    std::vector<std::string> witnesses;
    bool ok() const { return witnesses.empty(); }
  };
  std::vector<Check> checks;  // kernel = image, surjectivity, |psi| S = id, homomorphism
  bool ok() const;
};

// Grid axis value i (0-based): sign (-1)^i times exp((i - center)/2).
std::vector<GroupScalar> grid_axis(int size);
SequenceReport verify_split_sequence(int grid_size, std::uint64_t seed, const SplittingFn& splitting = default_splitting());

// xi = exp(p2) on D8 viewed as a cobordism from the empty set to S7, with
// B_S7 first as given in the catalog and then replaced by `alternative`.
std::pair<GroupScalar, GroupScalar> b_sigma_dependence_demo(const virtual_bordism::Catalog& catalog,
                                                            const std::string& alternative = "CP4-D8");

// Signature, as the configured detector of the oriented bordism class in
// dimension 4. Throws UnsupportedDimension.
long bordism_projection(const simplicial::SimplicialComplex& m);

}  // namespace cutpaste::skk
