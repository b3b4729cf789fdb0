#include "cutpaste/skk.hpp"

#include "cutpaste/error.hpp"
#include "cutpaste/intersection_form.hpp"

#include <sstream>

namespace cutpaste::skk {

using tqft::InvertibleTQFT2;

namespace {

Integer half_of_even(const Integer& chi, const std::string& what) {
  if (chi % 2 != 0) throw Error(ErrorKind::OddParity, what + " " + chi.str() + " is odd");
  return chi / 2;
}

long partitions(int k) {
  std::vector<long> p(static_cast<std::size_t>(k) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= k; ++part)
    for (int total = part; total <= k; ++total) p[total] += p[total - part];
  return p[k];
}

Integer signature_if_defined(const simplicial::SimplicialComplex& m) {
  if (m.dim() == 4) return intersection_form::signature(m);
  return 0;
}

}  // namespace

SKKClass operator+(const SKKClass& a, const SKKClass& b) {
  if (a.dim != b.dim || a.value.index() != b.value.index())
    throw Error(ErrorKind::DimensionMismatch, "adding classes of different dimensions");
  SKKClass out{a.dim, a.value};
  if (const auto* m = std::get_if<SKKClass::Mod2>(&a.value))
    out.value = SKKClass::Mod2{m->odd != std::get<SKKClass::Mod2>(b.value).odd};
  else if (const auto* i = std::get_if<Integer>(&a.value))
    out.value = Integer(*i + std::get<Integer>(b.value));
  else {
    const auto& x = std::get<SKKClass::ChiSigma>(a.value);
    const auto& y = std::get<SKKClass::ChiSigma>(b.value);
    out.value = SKKClass::ChiSigma{x.chi + y.chi, x.sigma + y.sigma};
  }
  return out;
}

std::string to_string(const SKKClass& c) {
  if (const auto* m = std::get_if<SKKClass::Mod2>(&c.value)) return std::string(m->odd ? "1" : "0") + " mod 2";
  if (const auto* i = std::get_if<Integer>(&c.value)) return i->str();
  const auto& cs = std::get<SKKClass::ChiSigma>(c.value);
  return "(" + cs.chi.str() + ", " + cs.sigma.str() + ")";
}

SKKClass skk_class(const simplicial::SimplicialComplex& m) {
  if (!simplicial::validate_closed(m)) throw Error(ErrorKind::NotClosed, "SKK classes are defined for closed manifolds");
  switch (m.dim()) {
    case 1:
      return {1, SKKClass::Mod2{simplicial::kervaire_semicharacteristic(m).value != 0}};
    case 2:
      return {2, half_of_even(simplicial::euler_characteristic(m), "Euler characteristic")};
    case 4:
      return {4, SKKClass::ChiSigma{simplicial::euler_characteristic(m), intersection_form::signature(m)}};
    default:
      throw Error(ErrorKind::UnsupportedDimension, "SKK classes are tabulated in dimensions 1, 2 and 4");
  }
}

SKKClass skk_class(const surfaces::Surface& m) {
  if (!m.is_closed()) throw Error(ErrorKind::NotClosed, "SKK classes are defined for closed surfaces");
  return {2, half_of_even(surfaces::chi(m), "Euler characteristic")};
}

std::string to_string(Group g) {
  switch (g) {
    case Group::Integers:
      return "Z";
    case Group::Mod2:
      return "Z/2";
    default:
      return "0";
  }
}

Group i_n_table(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidSpec, "dimension must be positive");
  if (n % 2 == 0) return Group::Integers;
  return n % 4 == 1 ? Group::Mod2 : Group::Zero;
}

std::variant<Integer, std::pair<Integer, Integer>> sk_class_from(int n, const Integer& chi, const Integer& sigma) {
  if (n == 2) return half_of_even(chi, "Euler characteristic");
  if (n == 4) return std::pair<Integer, Integer>{half_of_even(chi - sigma, "chi - sigma"), sigma};
  throw Error(ErrorKind::UnsupportedDimension, "SK classes are tabulated in dimensions 2 and 4");
}

std::variant<Integer, std::pair<Integer, Integer>> sk_class(const simplicial::SimplicialComplex& m) {
  if (m.dim() != 2 && m.dim() != 4)
    throw Error(ErrorKind::UnsupportedDimension, "SK classes are tabulated in dimensions 2 and 4");
  if (!simplicial::validate_closed(m)) throw Error(ErrorKind::NotClosed, "SK classes are defined for closed manifolds");
  return sk_class_from(m.dim(), simplicial::euler_characteristic(m), signature_if_defined(m));
}

HomStructure hom_structure(int n, std::optional<int> bordism_rank) {
  if (n < 1) throw Error(ErrorKind::InvalidSpec, "dimension must be positive");
  if (n % 2 != 0) return {n, HomStructure::Shape::Zero, 0};
  if (n % 4 == 2) return {n, HomStructure::Shape::ChiStar, 0};
  return {n, HomStructure::Shape::ChiStarPlusBordism, bordism_rank.value_or(static_cast<int>(partitions(n / 4)))};
}

std::string to_string(const HomStructure& h) {
  switch (h.shape) {
    case HomStructure::Shape::Zero:
      return "0";
    case HomStructure::Shape::ChiStar:
      return "chi*";
    default:
      return "chi* + Hom(Omega_" + std::to_string(h.n) + ", R+) (rank " + std::to_string(h.bordism_rank) + ")";
  }
}

bool SKKInvariant::is_trivial() const {
  for (const auto& [name, t] : attribute_exponents)
    if (t != 0) return false;
  return chi_half_base.is_one() && sigma_base.is_one();
}

SKKInvariant exp_invariant(int dim, const Rational& r, const Rational& s, std::map<std::string, Rational> attribute_exponents) {
  if (s != 0 && dim % 4 != 0) throw Error(ErrorKind::InvalidSpec, "signature term in dimension " + std::to_string(dim));
  return {dim, GroupScalar::exp(2 * r), GroupScalar::exp(s), std::move(attribute_exponents)};
}

std::string descriptor(const SKKInvariant& xi) {
  std::ostringstream os;
  if (xi.variant() == GroupScalar::Variant::Rational) {
    os << to_string(xi.chi_half_base) << "^(chi/2)";
    if (!xi.sigma_base.is_one()) os << " * " << to_string(xi.sigma_base) << "^sigma";
    return os.str();
  }
  std::vector<std::string> terms;
  auto term = [&](const Rational& c, const std::string& what) {
    if (c != 0) terms.push_back(cutpaste::to_string(c) + "*" + what);
  };
  term(xi.chi_half_base.exponent() / 2, "chi");
  term(xi.sigma_base.exponent(), "sigma");
  for (const auto& [name, t] : xi.attribute_exponents) term(t, name);
  if (xi.chi_half_base.sign() < 0) os << "(-1)^(chi/2) * ";
  if (xi.sigma_base.sign() < 0) os << "(-1)^sigma * ";
  os << "exp(";
  for (std::size_t i = 0; i < terms.size(); ++i) os << (i ? " + " : "") << terms[i];
  if (terms.empty()) os << '0';
  os << ')';
  return os.str();
}

GroupScalar evaluate(const SKKInvariant& xi, const Integer& chi, const Integer& sigma,
                     const std::map<std::string, Rational>& attributes) {
  GroupScalar value = chi % 2 == 0 ? xi.chi_half_base.pow(Integer(chi / 2)) : xi.chi_half_base.pow(chi).root(2);
  value = value * xi.sigma_base.pow(sigma);
  for (const auto& [name, t] : xi.attribute_exponents) {
    if (t == 0) continue;
    auto it = attributes.find(name);
    if (it == attributes.end()) throw Error(ErrorKind::MissingAttribute, "no value for attribute '" + name + "'");
    value = value * GroupScalar::exp(t * it->second);
  }
  return value;
}

GroupScalar evaluate(const SKKInvariant& xi, const surfaces::Surface& m) {
  if (xi.dim != 2) throw Error(ErrorKind::DimensionMismatch, "surface against a dimension-" + std::to_string(xi.dim) + " invariant");
  if (!m.is_closed()) throw Error(ErrorKind::NotClosed, "invariants are evaluated on closed surfaces");
  return evaluate(xi, Integer(surfaces::chi(m)), Integer(0));
}

GroupScalar evaluate(const SKKInvariant& xi, const simplicial::SimplicialComplex& m) {
  if (xi.dim != m.dim()) throw Error(ErrorKind::DimensionMismatch, "complex of the wrong dimension for the invariant");
  if (!simplicial::validate_closed(m)) throw Error(ErrorKind::NotClosed, "invariants are evaluated on closed manifolds");
  if (m.dim() % 4 == 0 && m.dim() != 4 && !xi.sigma_base.is_one())
    throw Error(ErrorKind::UnsupportedDimension, "signature is computed from triangulations in dimension 4 only");
  return evaluate(xi, simplicial::euler_characteristic(m), signature_if_defined(m));
}

GroupScalar evaluate(const SKKInvariant& xi, const virtual_bordism::VirtualPiece& closed) {
  if (xi.dim != closed.dim) throw Error(ErrorKind::DimensionMismatch, "piece of the wrong dimension for the invariant");
  if (!closed.closed()) throw Error(ErrorKind::NotClosed, "invariants are evaluated on closed pieces");
  return evaluate(xi, Integer(closed.chi), Integer(closed.sigma), closed.attributes);
}

SKKInvariant pointwise_product(const SKKInvariant& a, const SKKInvariant& b) {
  if (a.dim != b.dim) throw Error(ErrorKind::DimensionMismatch, "invariants of different dimensions");
  SKKInvariant out{a.dim, a.chi_half_base * b.chi_half_base, a.sigma_base * b.sigma_base, a.attribute_exponents};
  for (const auto& [name, t] : b.attribute_exponents) out.attribute_exponents[name] += t;
  return out;
}

SKKInvariant psi(const InvertibleTQFT2& t) {
  return {2, t.cap * t.cup, GroupScalar::one(t.variant()), {}};
}

SKKInvariant abs_psi(const InvertibleTQFT2& t) {
  return {2, (t.cap * t.cup).abs(), GroupScalar::one(t.variant()), {}};
}

bool kernel_membership(const InvertibleTQFT2& t) { return (t.cap * t.cup).abs().is_one(); }

Splitting::Splitting(SKKInvariant xi, std::optional<virtual_bordism::Catalog> catalog)
    : xi_(std::move(xi)), catalog_(std::move(catalog)) {
  if (xi_.dim != 2 && xi_.dim != 4 && xi_.dim != 8)
    throw Error(ErrorKind::UnsupportedDimension, "the splitting is realised in dimensions 2, 4 and 8");
  if (xi_.variant() != GroupScalar::Variant::SignedExp || xi_.sigma_base.variant() != GroupScalar::Variant::SignedExp)
    throw Error(ErrorKind::VariantMismatch, "the splitting takes invariants valued in exp(Q)");
  if (xi_.chi_half_base.sign() < 0 || xi_.sigma_base.sign() < 0)
    throw Error(ErrorKind::InvalidSpec, "the splitting takes positive-valued invariants");
  if (catalog_ && catalog_->dim() != xi_.dim) throw Error(ErrorKind::DimensionMismatch, "catalog dimension differs from the invariant");
}

InvertibleTQFT2 Splitting::tqft() const {
  if (xi_.dim != 2) throw Error(ErrorKind::UnsupportedDimension, "word-level theory exists in dimension 2");
  const GroupScalar half = xi_.chi_half_base.root(2);
  return {half, half};
}

GroupScalar Splitting::evaluate(const virtual_bordism::VirtualPiece& m, std::size_t in_count) const {
  if (m.dim != xi_.dim) throw Error(ErrorKind::DimensionMismatch, "piece of the wrong dimension for the splitting");
  // exp(r chi(M)) directly; closing up would add the caps' chi.
  GroupScalar value = GroupScalar::exp(xi_.chi_half_base.exponent() * Rational(m.chi) / 2);
  SKKInvariant rest = xi_;
  rest.chi_half_base = GroupScalar::one(GroupScalar::Variant::SignedExp);
  if (rest.is_trivial()) return value;
  if (!catalog_) throw Error(ErrorKind::MissingBSigma, "the bordism part needs a catalog of capping pieces");
  const auto closed = virtual_bordism::close_up(m, in_count, *catalog_);
  return value * skk::evaluate(rest, closed).root(catalog_->l());
}

Splitting splitting_S(const SKKInvariant& xi, std::optional<virtual_bordism::Catalog> catalog) {
  return Splitting(xi, std::move(catalog));
}

SplittingFn default_splitting() {
  return [](const SKKInvariant& xi) { return splitting_S(xi).tqft(); };
}

SplittingFn mismatched_splitting() {
  return [](const SKKInvariant& xi) {
    return InvertibleTQFT2{GroupScalar::exp(xi.chi_half_base.exponent() / 2), GroupScalar::exp(0)};
  };
}

bool SequenceReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok()) return false;
  return true;
}

std::vector<GroupScalar> grid_axis(int size) {
  std::vector<GroupScalar> axis;
  const int center = (size - 1) / 2;
  for (int i = 0; i < size; ++i) axis.push_back(GroupScalar::exp(Rational(i - center, 2), i % 2 == 0 ? 1 : -1));
  return axis;
}

SequenceReport verify_split_sequence(int grid_size, std::uint64_t seed, const SplittingFn& splitting) {
  const auto axis = grid_axis(grid_size);
  std::vector<InvertibleTQFT2> grid;
  for (const auto& a : axis)
    for (const auto& e : axis) grid.push_back({a, e});

  std::vector<cobordism::CobordismWord> closed_words{cobordism::canonical_word(0, 0, 0), cobordism::canonical_word(1, 0, 0),
                                                     cobordism::canonical_word(2, 0, 0)};
  std::vector<Integer> closed_chi;
  for (int i = 0; i < 24; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    closed_words.push_back(cobordism::random_word(rng, 0, 0, 5));
  }
  for (const auto& w : closed_words) closed_chi.push_back(cobordism::word_chi(w));

  SequenceReport report;
  for (const char* name : {"kernel = image", "surjectivity", "|psi| S = id", "homomorphism"}) {
    report.checks.emplace_back();
    report.checks.back().name = name;
  }
  auto& kernel = report.checks[0];
  auto& onto = report.checks[1];
  auto& section = report.checks[2];
  auto& hom = report.checks[3];

  for (const auto& t : grid) {
    ++kernel.instances;
    const bool trivial = abs_psi(t).is_trivial();
    bool plus_minus_one = true;
    for (const auto& w : closed_words) plus_minus_one = plus_minus_one && tqft::evaluate(t, w).abs().is_one();
    if (kernel_membership(t) != trivial || plus_minus_one != trivial)
      kernel.witnesses.push_back(tqft::to_string(t) + ": kernel " + std::to_string(kernel_membership(t)) + ", trivial |psi| " +
                                 std::to_string(trivial) + ", closed values +-1 " + std::to_string(plus_minus_one));
  }

  std::vector<SKKInvariant> samples;
  for (int k = -8; k <= 8; ++k) samples.push_back(exp_invariant(2, Rational(k, 4)));
  Rng rng(derive_seed(seed, 0x73616d706c65ULL));
  for (int i = 0; i < 16; ++i) samples.push_back(exp_invariant(2, Rational(uniform_int(rng, -30, 30), uniform_int(rng, 1, 7))));

  for (const auto& xi : samples) {
    ++onto.instances;
    const InvertibleTQFT2 t = splitting(xi);
    const auto axioms = tqft::verify_axioms(t, seed, 4);
    if (!axioms.ok()) onto.witnesses.push_back(descriptor(xi) + ": section is not a theory: " + axioms.violations.front().witness);
    const SKKInvariant image = abs_psi(t);
    for (std::size_t i = 0; i < closed_words.size(); ++i) {
      if (!(evaluate(image, closed_chi[i], 0) == evaluate(xi, closed_chi[i], 0))) {
        onto.witnesses.push_back(descriptor(xi) + " is missed on \"" + cobordism::to_string(closed_words[i]) + "\"");
        break;
      }
    }
  }

  auto check_section = [&](const SKKInvariant& xi) {
    ++section.instances;
    const SKKInvariant back = abs_psi(splitting(xi));
    if (!(back == xi)) section.witnesses.push_back(descriptor(xi) + " comes back as " + descriptor(back));
  };
  for (const auto& xi : samples) check_section(xi);
  for (const auto& t : grid) check_section(abs_psi(t));

  for (const auto& s : grid) {
    for (const auto& t : grid) {
      ++hom.instances;
      if (!(abs_psi(tqft::product(s, t)) == pointwise_product(abs_psi(s), abs_psi(t))))
        hom.witnesses.push_back(tqft::to_string(s) + " times " + tqft::to_string(t));
    }
  }
  for (int i = 0; i < 100; ++i) {
    const auto& s = grid[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(grid.size()) - 1))];
    const auto& t = grid[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(grid.size()) - 1))];
    const auto& w = closed_words[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(closed_words.size()) - 1))];
    ++hom.instances;
    const GroupScalar lhs = tqft::evaluate(tqft::product(s, t), w).abs();
    const GroupScalar rhs = tqft::evaluate(s, w).abs() * tqft::evaluate(t, w).abs();
    if (!(lhs == rhs)) hom.witnesses.push_back("pointwise on \"" + cobordism::to_string(w) + "\"");
  }
  return report;
}

std::pair<GroupScalar, GroupScalar> b_sigma_dependence_demo(const virtual_bordism::Catalog& catalog,
                                                            const std::string& alternative) {
  const SKKInvariant xi = exp_invariant(catalog.dim(), 0, 0, {{"p2", 1}});
  const auto& disk = catalog.piece("D8");
  if (disk.boundary.size() != 1) throw Error(ErrorKind::InvalidSpec, "D8 must have a single boundary label");
  const GroupScalar first = splitting_S(xi, catalog).evaluate(disk, 0);
  const GroupScalar second = splitting_S(xi, catalog.with_b_sigma(disk.boundary.front().name, alternative)).evaluate(disk, 0);
  return {first, second};
}

long bordism_projection(const simplicial::SimplicialComplex& m) {
  if (m.dim() != 4) throw Error(ErrorKind::UnsupportedDimension, "bordism projection is configured in dimension 4");
  return intersection_form::signature(m);
}

}  // namespace cutpaste::skk
