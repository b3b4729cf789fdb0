#include "cutpaste/tqft.hpp"

#include "cutpaste/error.hpp"

#include <algorithm>
#include <numeric>

namespace cutpaste::tqft {

using cobordism::CobordismWord;
using cobordism::Generator;
using cobordism::OneManifold;
using surfaces::Surface;

InvertibleTQFT2 make_tqft(const GroupScalar& cap, const GroupScalar& cup) {
  if (cap.variant() != cup.variant()) throw Error(ErrorKind::VariantMismatch, "cap and cup scalars must share a variant");
  return {cap, cup};
}

std::string to_string(const InvertibleTQFT2& t) { return "(a=" + to_string(t.cap) + ", e=" + to_string(t.cup) + ")"; }

GroupScalar generator_value(const InvertibleTQFT2& t, Generator g) {
  switch (g) {
    case Generator::Cap:
      return t.cap;
    case Generator::Cup:
      return t.cup;
    case Generator::Pants:
      return t.cap.inverse();
    case Generator::Copants:
      return t.cup.inverse();
    case Generator::Id:
    case Generator::Swap:
      return GroupScalar::one(t.variant());
    default:
      throw Error(ErrorKind::WrongDimension, "2-dimensional theory applied to a 1-dimensional generator");
  }
}

namespace {

GroupScalar evaluate_with(const CobordismWord& w, GroupScalar::Variant v,
                          const std::function<GroupScalar(Generator)>& value) {
  if (!w.empty() && w.dim() != 2) throw Error(ErrorKind::WrongDimension, "2-dimensional theory applied to a 1-dimensional word");
  GroupScalar total = GroupScalar::one(v);
  for (const auto& layer : w.layers())
    for (auto g : layer) total = total * value(g);
  return total;
}

std::string describe(const CobordismWord& w) { return w.empty() ? "(empty)" : "\"" + cobordism::to_string(w) + "\""; }

class Checker {
 public:
  explicit Checker(LawReport& report) : report_(report) {}
  void expect(const std::string& law, const GroupScalar& got, const GroupScalar& want, const std::string& context) {
    ++report_.checks[law];
    if (!(got == want))
      report_.violations.push_back({law, context + ": got " + to_string(got) + ", expected " + to_string(want)});
  }

 private:
  LawReport& report_;
};

}  // namespace

GroupScalar evaluate(const InvertibleTQFT2& t, const CobordismWord& w) {
  return evaluate_with(w, t.variant(), [&](Generator g) { return generator_value(t, g); });
}

GroupScalar closed_value(const InvertibleTQFT2& t, const cobordism::CobordismClass& c) {
  if (c.in_arity != 0 || c.out_arity != 0) throw Error(ErrorKind::NotClosed, "closed-value formula needs a closed class");
  const GroupScalar ae = t.cap * t.cup;
  GroupScalar total = GroupScalar::one(t.variant());
  for (const auto& r : c.components) total = total * ae.pow(1L - r.genus);
  return total;
}

InvertibleTQFT2 product(const InvertibleTQFT2& s, const InvertibleTQFT2& t) { return {s.cap * t.cap, s.cup * t.cup}; }

InvertibleTQFT2 inverse(const InvertibleTQFT2& t) { return {t.cap.inverse(), t.cup.inverse()}; }

WordEvaluator evaluator(const InvertibleTQFT2& t) {
  return [t](const CobordismWord& w) { return evaluate(t, w); };
}

WordEvaluator corrupted_pants_evaluator(const InvertibleTQFT2& t) {
  return [t](const CobordismWord& w) {
    return evaluate_with(w, t.variant(), [&](Generator g) { return g == Generator::Pants ? t.cap : generator_value(t, g); });
  };
}

LawReport verify_axioms(const WordEvaluator& eval, GroupScalar::Variant v, std::uint64_t seed, int budget) {
  LawReport report;
  Checker check(report);
  const GroupScalar one = GroupScalar::one(v);
  check.expect("empty manifold", eval(CobordismWord(2)), one, "empty word");

  for (int i = 0; i < budget; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const int in = uniform_int(rng, 0, 3);
    const int mid = uniform_int(rng, 0, 3);
    const int out = uniform_int(rng, 0, 3);
    const CobordismWord m = cobordism::random_word(rng, in, mid, 4);
    const CobordismWord n = cobordism::random_word(rng, mid, out, 4);
    const GroupScalar em = eval(m);
    const GroupScalar en = eval(n);

    const CobordismWord m2 = cobordism::scramble(rng, m, 3);
    check.expect("equivalence invariance", eval(m2), em, describe(m) + " vs " + describe(m2));

    const CobordismWord mn = cobordism::scramble(rng, cobordism::compose(m, n), 2);
    check.expect("functoriality", eval(mn), em * en, describe(mn) + " vs " + describe(m) + " then " + describe(n));

    const CobordismWord side = cobordism::scramble(rng, cobordism::tensor(m, n), 2);
    check.expect("monoidality", eval(side), em * en, describe(side) + " vs " + describe(m) + " beside " + describe(n));

    const CobordismWord cylinder = cobordism::scramble(rng, cobordism::identity(2, mid), 2);
    check.expect("cylinder", eval(cylinder), one, "cylinder word " + describe(cylinder));
    check.expect("cylinder", eval(cobordism::compose(m, cobordism::identity(2, mid))), em,
                 describe(m) + " followed by the identity");
  }
  return report;
}

LawReport verify_axioms(const InvertibleTQFT2& t, std::uint64_t seed, int budget) {
  LawReport report = verify_axioms(evaluator(t), t.variant(), seed, budget);
  Checker check(report);
  for (int i = 0; i < budget; ++i) {
    Rng rng(derive_seed(seed ^ 0x636c6f736564ULL, static_cast<std::uint64_t>(i)));
    const CobordismWord w = cobordism::random_word(rng, 0, 0, 6);
    check.expect("closed value", evaluate(t, w), closed_value(t, cobordism::normal_form(w)), describe(w));
  }
  return report;
}

ThetaFunction theta_exp_chi() {
  return {[](const Surface& s) { return GroupScalar::exp(Rational(surfaces::chi(s))); },
          [](const OneManifold& m) { return GroupScalar::exp(Rational(m.arcs)); }};
}

ThetaFunction theta_constant_one() {
  return {[](const Surface&) { return GroupScalar::exp(0); }, [](const OneManifold&) { return GroupScalar::exp(0); }};
}

namespace {

std::string to_string(const OneManifold& m) {
  return std::to_string(m.arcs) + " arcs + " + std::to_string(m.circles) + " circles";
}

// Glues endpoint pairs (index into the 2*arcs endpoints of a, index into those of b).
OneManifold glue_curves(const OneManifold& a, const OneManifold& b, const std::vector<std::pair<int, int>>& pairs) {
  const int n = a.arcs + b.arcs;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> edges(static_cast<std::size_t>(n), 0);
  for (const auto& [ea, eb] : pairs) {
    const int x = ea / 2;
    const int y = a.arcs + eb / 2;
    parent[find(x)] = find(y);
    ++edges[x];
  }
  std::vector<int> size(static_cast<std::size_t>(n), 0);
  std::vector<int> glued(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    ++size[find(i)];
    glued[find(i)] += edges[i];
  }
  OneManifold out{0, a.circles + b.circles};
  for (int i = 0; i < n; ++i) {
    if (find(i) != i) continue;
    (glued[i] == size[i] ? out.circles : out.arcs) += 1;
  }
  return out;
}

std::vector<int> pick(Rng& rng, int from, int count) {
  std::vector<int> ids(static_cast<std::size_t>(from));
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(static_cast<std::size_t>(count));
  return ids;
}

}  // namespace

ThetaResult check_theta_defines_tqft(const ThetaFunction& theta, int dim, std::uint64_t seed, int budget) {
  ThetaResult result;
  auto record = [&](const std::string& what, const GroupScalar& x, const GroupScalar& y, const GroupScalar& glued) {
    ++result.gluings;
    if (x * y == glued) return false;
    result.multiplicative = false;
    result.witness = what + ": " + to_exp_string(x) + "·" + to_exp_string(y) + " ≠ " + to_exp_string(glued);
    return true;
  };

  if (dim == 2) {
    const Surface disk = Surface::disk();
    const Surface sphere = surfaces::paste(surfaces::disjoint_union(disk, disk), {{{0, 1}}});
    if (record("two disks glued to a sphere", theta.on_surfaces(disk), theta.on_surfaces(disk), theta.on_surfaces(sphere)))
      return result;
    for (int i = 0; i < budget; ++i) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      const Surface m = surfaces::random_surface(rng, 2, 2, 3);
      const Surface n = surfaces::random_surface(rng, 2, 2, 3);
      const int k = uniform_int(rng, 0, std::min(m.circle_count(), n.circle_count()));
      const auto from_m = pick(rng, m.circle_count(), k);
      const auto from_n = pick(rng, n.circle_count(), k);
      surfaces::PasteSpec spec;
      for (int j = 0; j < k; ++j) spec.pairs.emplace_back(from_m[j], m.circle_count() + from_n[j]);
      const Surface glued = surfaces::paste(surfaces::disjoint_union(m, n), spec);
      const std::string what = surfaces::to_string(m) + " glued to " + surfaces::to_string(n) + " along " +
                               std::to_string(k) + " circles";
      if (record(what, theta.on_surfaces(m), theta.on_surfaces(n), theta.on_surfaces(glued))) return result;
    }
    return result;
  }
  if (dim == 1) {
    const OneManifold arc{1, 0};
    const OneManifold circle = glue_curves(arc, arc, {{0, 0}, {1, 1}});
    if (record("two arcs glued to a circle", theta.on_curves(arc), theta.on_curves(arc), theta.on_curves(circle)))
      return result;
    for (int i = 0; i < budget; ++i) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      const OneManifold m{uniform_int(rng, 0, 3), uniform_int(rng, 0, 2)};
      const OneManifold n{uniform_int(rng, 0, 3), uniform_int(rng, 0, 2)};
      const int k = uniform_int(rng, 0, 2 * std::min(m.arcs, n.arcs));
      const auto from_m = pick(rng, 2 * m.arcs, k);
      const auto from_n = pick(rng, 2 * n.arcs, k);
      std::vector<std::pair<int, int>> pairs;
      for (int j = 0; j < k; ++j) pairs.emplace_back(from_m[j], from_n[j]);
      const OneManifold glued = glue_curves(m, n, pairs);
      const std::string what = to_string(m) + " glued to " + to_string(n) + " at " + std::to_string(k) + " points";
      if (record(what, theta.on_curves(m), theta.on_curves(n), theta.on_curves(glued))) return result;
    }
    return result;
  }
  throw Error(ErrorKind::UnsupportedDimension, "multiplicativity is checked in dimensions 1 and 2");
}

LawReport boundary_dependence_check(const InvertibleTQFT2& t, std::uint64_t seed, int budget) {
  const GroupScalar one = GroupScalar::one(t.variant());
  const CobordismWord sphere = cobordism::parse_word("cap ; cup");
  if (!(evaluate(t, sphere) == one))
    throw Error(ErrorKind::NotInKernel, to_string(t) + " gives " + to_string(evaluate(t, sphere)) + " on the sphere");
  for (int i = 0; i < 20; ++i) {
    Rng rng(derive_seed(seed ^ 0x6b65726e656cULL, static_cast<std::uint64_t>(i)));
    const CobordismWord w = cobordism::random_word(rng, 0, 0, 6);
    if (!(evaluate(t, w) == one))
      throw Error(ErrorKind::NotInKernel, to_string(t) + " gives " + to_string(evaluate(t, w)) + " on " + describe(w));
  }

  LawReport report;
  Checker check(report);
  for (int i = 0; i < budget; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const int in = uniform_int(rng, 0, 3);
    const int out = uniform_int(rng, 0, 3);
    const CobordismWord first = cobordism::random_word(rng, in, out, 5);
    const CobordismWord second = cobordism::random_word(rng, in, out, 5);
    check.expect("equal arities", evaluate(t, first), evaluate(t, second), describe(first) + " vs " + describe(second));
    check.expect("boundary formula", evaluate(t, first), t.cup.pow(static_cast<long>(in - out)),
                 describe(first) + " against e^(in-out)");
  }
  return report;
}

}  // namespace cutpaste::tqft
