#include "cutpaste/surfaces.hpp"

#include "cutpaste/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace cutpaste::surfaces {

namespace {

long component_chi(const SurfaceComponent& c) { return 2 - 2L * c.genus - c.boundary; }

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

[[noreturn]] void bad_line(std::size_t line, const std::string& why) {
  throw Error(ErrorKind::FormatError, "line " + std::to_string(line) + ": " + why);
}

int parse_int(const std::string& token, std::size_t line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size()) bad_line(line, "expected an integer, got '" + token + "'");
    return v;
  } catch (const std::logic_error&) {
    bad_line(line, "expected an integer, got '" + token + "'");
  }
}

}  // namespace

Surface::Surface(std::vector<SurfaceComponent> components) : components_(std::move(components)) {
  for (const auto& c : components_)
    if (c.genus < 0 || c.boundary < 0) throw Error(ErrorKind::InvalidSpec, "genus and boundary counts must be non-negative");
}

int Surface::circle_count() const {
  int total = 0;
  for (const auto& c : components_) total += c.boundary;
  return total;
}

int Surface::first_circle_of(std::size_t component) const {
  int id = 0;
  for (std::size_t i = 0; i < component; ++i) id += components_[i].boundary;
  return id;
}

std::pair<std::size_t, int> Surface::locate_circle(int circle) const {
  if (circle < 0) throw Error(ErrorKind::InvalidMatching, "negative circle id");
  int remaining = circle;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (remaining < components_[i].boundary) return {i, remaining};
    remaining -= components_[i].boundary;
  }
  throw Error(ErrorKind::InvalidMatching, "no circle with id " + std::to_string(circle));
}

std::vector<SurfaceComponent> Surface::sorted_components() const {
  auto out = components_;
  std::sort(out.begin(), out.end());
  return out;
}

Surface disjoint_union(const Surface& a, const Surface& b) {
  auto comps = a.components();
  comps.insert(comps.end(), b.components().begin(), b.components().end());
  return Surface(std::move(comps));
}

bool same_multiset(const Surface& a, const Surface& b) { return a.sorted_components() == b.sorted_components(); }

long chi(const Surface& s) {
  long total = 0;
  for (const auto& c : s.components()) total += component_chi(c);
  return total;
}

Surface cut(const Surface& s, const CutSpec& spec) {
  if (spec.component >= s.component_count())
    throw Error(ErrorKind::InvalidSpec, "no component " + std::to_string(spec.component));
  auto comps = s.components();
  const SurfaceComponent target = comps[spec.component];
  if (std::holds_alternative<NonSeparating>(spec.curve)) {
    if (target.genus == 0) throw Error(ErrorKind::InvalidSpec, "a genus-0 component has no non-separating curve");
    comps[spec.component] = {target.genus - 1, target.boundary + 2};
    return Surface(std::move(comps));
  }
  const auto& sep = std::get<Separating>(spec.curve);
  if (sep.first_genus < 0 || sep.first_genus > target.genus)
    throw Error(ErrorKind::InvalidSpec, "genus split " + std::to_string(sep.first_genus) + " out of range");
  std::set<int> chosen;
  for (int c : sep.first_circles) {
    if (c < 0 || c >= target.boundary)
      throw Error(ErrorKind::InvalidSpec, "boundary partition names circle " + std::to_string(c) + " not on the component");
    if (!chosen.insert(c).second) throw Error(ErrorKind::InvalidSpec, "boundary partition repeats a circle");
  }
  const int first_b = static_cast<int>(chosen.size());
  comps[spec.component] = {sep.first_genus, first_b + 1};
  comps.insert(comps.begin() + static_cast<long>(spec.component) + 1,
               SurfaceComponent{target.genus - sep.first_genus, target.boundary - first_b + 1});
  return Surface(std::move(comps));
}

std::pair<int, int> created_circles(const Surface& s, const CutSpec& spec) {
  const Surface after = cut(s, spec);
  const int base = after.first_circle_of(spec.component);
  const auto& comps = after.components();
  if (std::holds_alternative<NonSeparating>(spec.curve)) {
    const int b = comps[spec.component].boundary;
    return {base + b - 2, base + b - 1};
  }
  const int first_end = base + comps[spec.component].boundary - 1;
  const int second_end = first_end + comps[spec.component + 1].boundary;
  return {first_end, second_end};
}

Surface paste(const Surface& s, const PasteSpec& spec) {
  const int circles = s.circle_count();
  std::set<int> used;
  UnionFind uf(s.component_count());
  std::vector<int> removed(s.component_count(), 0);
  for (const auto& [x, y] : spec.pairs) {
    if (x < 0 || y < 0 || x >= circles || y >= circles)
      throw Error(ErrorKind::InvalidMatching, "circle id out of range in " + std::to_string(x) + "~" + std::to_string(y));
    if (x == y || !used.insert(x).second || !used.insert(y).second)
      throw Error(ErrorKind::InvalidMatching, "circle matched more than once in " + std::to_string(x) + "~" + std::to_string(y));
    const auto cx = s.locate_circle(x).first;
    const auto cy = s.locate_circle(y).first;
    uf.unite(cx, cy);
    ++removed[cx];
    ++removed[cy];
  }

  const auto& comps = s.components();
  std::vector<long> group_chi(comps.size(), 0);
  std::vector<int> group_boundary(comps.size(), 0);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::size_t root = uf.find(i);
    group_chi[root] += component_chi(comps[i]);
    group_boundary[root] += comps[i].boundary - removed[i];
  }
  std::vector<SurfaceComponent> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (uf.find(i) != i) continue;
    // chi(S^1) = 0, so chi is additive; a connected surface has chi = 2 - 2g - b.
    const long twice_genus = 2 - group_chi[i] - group_boundary[i];
    if (twice_genus < 0 || twice_genus % 2 != 0)
      throw Error(ErrorKind::InternalInvariantViolation, "genus recovery failed for merged component");
    out.push_back({static_cast<int>(twice_genus / 2), group_boundary[i]});
  }
  return Surface(std::move(out));
}

bool sk_equivalent(const Surface& m, const Surface& n) {
  if (!m.is_closed() || !n.is_closed()) throw Error(ErrorKind::NotClosed, "SK equivalence is defined on closed surfaces");
  return chi(m) == chi(n);
}

Surface double_surface(const Surface& s) {
  std::vector<SurfaceComponent> out;
  for (const auto& c : s.components()) {
    if (c.boundary == 0) {
      out.push_back(c);
      out.push_back(c);
    } else {
      out.push_back({2 * c.genus + c.boundary - 1, 0});
    }
  }
  return Surface(std::move(out));
}

Surface mapping_torus_demo() {
  // Orientation-preserving circle diffeomorphisms are isotopic to the
  // identity, so every such mapping torus is S^1 x S^1.
  return Surface::torus();
}

simplicial::SimplicialComplex to_complex(const Surface& s) {
  if (!s.is_closed()) throw Error(ErrorKind::NotClosed, "only closed surfaces have a simplicial fixture");
  simplicial::SimplicialComplex k(2, {});
  for (const auto& c : s.components()) k = simplicial::disjoint_union(k, simplicial::fixtures::closed_surface(c.genus));
  return k;
}

std::string to_string(const Surface& s) {
  if (s.component_count() == 0) return "empty";
  std::ostringstream os;
  for (std::size_t i = 0; i < s.component_count(); ++i) {
    const auto& c = s.components()[i];
    os << (i ? " + " : "") << 'g' << c.genus;
    if (c.boundary) os << 'b' << c.boundary;
  }
  return os.str();
}

Surface parse_surface(const std::string& text) {
  std::string cleaned;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) cleaned += ch;
  if (cleaned == "empty" || cleaned.empty()) return Surface{};
  std::vector<SurfaceComponent> comps;
  std::size_t pos = 0;
  auto number = [&](std::size_t& p) {
    const std::size_t start = p;
    while (p < cleaned.size() && std::isdigit(static_cast<unsigned char>(cleaned[p]))) ++p;
    if (p == start) throw Error(ErrorKind::SyntaxError, "expected digits at position " + std::to_string(start));
    return std::stoi(cleaned.substr(start, p - start));
  };
  for (;;) {
    if (pos >= cleaned.size() || cleaned[pos] != 'g')
      throw Error(ErrorKind::SyntaxError, "expected 'g' at position " + std::to_string(pos));
    ++pos;
    SurfaceComponent c;
    c.genus = number(pos);
    if (pos < cleaned.size() && cleaned[pos] == 'b') {
      ++pos;
      c.boundary = number(pos);
    }
    comps.push_back(c);
    if (pos == cleaned.size()) break;
    if (cleaned[pos] != '+') throw Error(ErrorKind::SyntaxError, "expected '+' at position " + std::to_string(pos));
    ++pos;
  }
  return Surface(std::move(comps));
}

std::vector<Move> parse_script(const std::string& text) {
  std::vector<Move> moves;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (tok[0] == "cut") {
      if (tok.size() < 3) bad_line(line, "cut needs a component and a curve kind");
      CutSpec spec;
      const int comp = parse_int(tok[1], line);
      if (comp < 0) bad_line(line, "component index must be non-negative");
      spec.component = static_cast<std::size_t>(comp);
      if (tok[2] == "nonsep") {
        if (tok.size() != 3) bad_line(line, "unexpected tokens after 'nonsep'");
        spec.curve = NonSeparating{};
      } else if (tok[2] == "sep") {
        if (tok.size() != 5) bad_line(line, "expected: cut <component> sep <g1> <b-partition>");
        Separating sep;
        sep.first_genus = parse_int(tok[3], line);
        if (tok[4] != "-") {
          std::istringstream parts(tok[4]);
          for (std::string p; std::getline(parts, p, ',');) sep.first_circles.push_back(parse_int(p, line));
        }
        spec.curve = sep;
      } else {
        bad_line(line, "unknown curve kind '" + tok[2] + "'");
      }
      moves.emplace_back(spec);
    } else if (tok[0] == "paste") {
      PasteSpec spec;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const auto tilde = tok[i].find('~');
        if (tilde == std::string::npos) bad_line(line, "expected <circle>~<circle>, got '" + tok[i] + "'");
        spec.pairs.emplace_back(parse_int(tok[i].substr(0, tilde), line), parse_int(tok[i].substr(tilde + 1), line));
      }
      moves.emplace_back(spec);
    } else {
      bad_line(line, "unknown move '" + tok[0] + "'");
    }
  }
  return moves;
}

Surface apply(const Surface& s, const Move& move) {
  if (const auto* c = std::get_if<CutSpec>(&move)) return cut(s, *c);
  return paste(s, std::get<PasteSpec>(move));
}

std::string to_string(const Move& move) {
  std::ostringstream os;
  if (const auto* c = std::get_if<CutSpec>(&move)) {
    os << "cut " << c->component;
    if (std::holds_alternative<NonSeparating>(c->curve)) {
      os << " nonsep";
    } else {
      const auto& sep = std::get<Separating>(c->curve);
      os << " sep " << sep.first_genus << ' ';
      if (sep.first_circles.empty()) os << '-';
      for (std::size_t i = 0; i < sep.first_circles.size(); ++i) os << (i ? "," : "") << sep.first_circles[i];
    }
  } else {
    os << "paste";
    for (const auto& [x, y] : std::get<PasteSpec>(move).pairs) os << ' ' << x << '~' << y;
  }
  return os.str();
}

Surface random_surface(Rng& rng, int max_components, int max_genus, int max_boundary) {
  const int n = uniform_int(rng, 1, max_components);
  std::vector<SurfaceComponent> comps;
  for (int i = 0; i < n; ++i) comps.push_back({uniform_int(rng, 0, max_genus), uniform_int(rng, 0, max_boundary)});
  return Surface(std::move(comps));
}

CutSpec random_cut(Rng& rng, const Surface& s) {
  if (s.component_count() == 0) throw Error(ErrorKind::InvalidSpec, "nothing to cut");
  CutSpec spec;
  spec.component = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(s.component_count()) - 1));
  const auto& c = s.components()[spec.component];
  if (c.genus > 0 && coin(rng)) {
    spec.curve = NonSeparating{};
    return spec;
  }
  Separating sep;
  sep.first_genus = uniform_int(rng, 0, c.genus);
  for (int i = 0; i < c.boundary; ++i)
    if (coin(rng)) sep.first_circles.push_back(i);
  spec.curve = sep;
  return spec;
}

namespace {

PasteSpec pair_up(Rng& rng, std::vector<int> ids) {
  std::shuffle(ids.begin(), ids.end(), rng);
  PasteSpec spec;
  for (std::size_t i = 0; i + 1 < ids.size(); i += 2) spec.pairs.emplace_back(ids[i], ids[i + 1]);
  return spec;
}

}  // namespace

PasteSpec random_paste(Rng& rng, const Surface& s) {
  const int n = s.circle_count();
  if (n < 2) return {};
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  const int pairs = uniform_int(rng, 1, n / 2);
  ids.resize(2 * pairs);
  return pair_up(rng, std::move(ids));
}

PasteSpec random_closing_paste(Rng& rng, const Surface& s) {
  const int n = s.circle_count();
  if (n % 2 != 0) throw Error(ErrorKind::InvalidMatching, "an odd number of circles cannot be closed up");
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return pair_up(rng, std::move(ids));
}

}  // namespace cutpaste::surfaces
