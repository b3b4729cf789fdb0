#include "cutpaste/simplicial.hpp"

#include "cutpaste/error.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace cutpaste::simplicial {

namespace {

// Sorts in place and returns the parity of the sorting permutation.
int sort_with_parity(Simplex& s) {
  int parity = 1;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j + 1 < s.size() - i; ++j)
      if (s[j] > s[j + 1]) {
        std::swap(s[j], s[j + 1]);
        parity = -parity;
      }
  return parity;
}

Simplex drop(const Simplex& s, std::size_t i) {
  Simplex r;
  r.reserve(s.size() - 1);
  for (std::size_t j = 0; j < s.size(); ++j)
    if (j != i) r.push_back(s[j]);
  return r;
}

void add_subsets(const Simplex& s, std::size_t size, std::size_t start, Simplex& current, std::set<Simplex>& out) {
  if (current.size() == size) {
    out.insert(current);
    return;
  }
  for (std::size_t i = start; i + (size - current.size()) <= s.size(); ++i) {
    current.push_back(s[i]);
    add_subsets(s, size, i + 1, current, out);
    current.pop_back();
  }
}

// ridge -> list of (facet index, position dropped)
std::map<Simplex, std::vector<std::pair<std::size_t, std::size_t>>> ridge_incidence(const SimplicialComplex& k) {
  std::map<Simplex, std::vector<std::pair<std::size_t, std::size_t>>> inc;
  const auto& facets = k.facets();
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (std::size_t i = 0; i < facets[f].size(); ++i) inc[drop(facets[f], i)].emplace_back(f, i);
  return inc;
}

int alternating(std::size_t i) { return i % 2 == 0 ? 1 : -1; }

}  // namespace

SimplicialComplex::SimplicialComplex(int dim, std::vector<Simplex> facets, std::optional<std::vector<int>> orientations)
    : dim_(dim) {
  if (dim < 0) throw Error(ErrorKind::FormatError, "dimension must be non-negative");
  if (orientations && orientations->size() != facets.size())
    throw Error(ErrorKind::FormatError, "orientations must have one sign per facet");
  std::vector<std::pair<Simplex, int>> items;
  items.reserve(facets.size());
  for (std::size_t f = 0; f < facets.size(); ++f) {
    Simplex s = std::move(facets[f]);
    if (s.size() != static_cast<std::size_t>(dim) + 1)
      throw Error(ErrorKind::FormatError, "facet " + std::to_string(f) + " does not have dim+1 vertices");
    int sign = sort_with_parity(s);
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(ErrorKind::FormatError, "facet " + std::to_string(f) + " repeats a vertex");
    if (orientations) {
      const int o = (*orientations)[f];
      if (o != 1 && o != -1) throw Error(ErrorKind::FormatError, "orientation signs must be +1 or -1");
      sign *= o;
    }
    items.emplace_back(std::move(s), sign);
  }
  std::sort(items.begin(), items.end());
  for (std::size_t i = 1; i < items.size(); ++i)
    if (items[i].first == items[i - 1].first) throw Error(ErrorKind::FormatError, "duplicate facet");
  facets_.reserve(items.size());
  std::vector<int> signs;
  for (auto& [s, sign] : items) {
    facets_.push_back(std::move(s));
    signs.push_back(sign);
  }
  if (orientations) orientations_ = std::move(signs);
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::set<Vertex> vs;
  for (const auto& f : facets_) vs.insert(f.begin(), f.end());
  return {vs.begin(), vs.end()};
}

std::vector<Simplex> SimplicialComplex::faces(int k) const {
  if (k < 0 || k > dim_) return {};
  std::set<Simplex> out;
  Simplex current;
  for (const auto& f : facets_) add_subsets(f, static_cast<std::size_t>(k) + 1, 0, current, out);
  return {out.begin(), out.end()};
}

IntMatrix SimplicialComplex::boundary_matrix(int k) const {
  const auto cols = faces(k);
  if (k <= 0) return IntMatrix(0, cols.size());
  const auto rows = faces(k - 1);
  std::map<Simplex, std::size_t> index;
  for (std::size_t i = 0; i < rows.size(); ++i) index.emplace(rows[i], i);
  IntMatrix d(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) d(index.at(drop(cols[j], i)), j) = alternating(i);
  return d;
}

SimplicialComplex SimplicialComplex::with_orientations(std::vector<int> signs) const {
  return SimplicialComplex(dim_, facets_, std::move(signs));
}

SimplicialComplex SimplicialComplex::reversed() const {
  SimplicialComplex base = orientations_ ? *this : orient(*this);
  std::vector<int> signs = *base.orientations_;
  for (int& s : signs) s = -s;
  return base.with_orientations(std::move(signs));
}

bool validate_closed(const SimplicialComplex& k) {
  if (k.dim() == 0) return true;
  for (const auto& [ridge, incident] : ridge_incidence(k))
    if (incident.size() != 2) return false;
  return true;
}

SimplicialComplex orient(const SimplicialComplex& k) {
  if (!validate_closed(k)) throw Error(ErrorKind::NotClosed, "every ridge must lie in exactly two facets");
  const auto& facets = k.facets();
  std::vector<int> sign(facets.size(), 0);
  if (k.dim() == 0) return k.with_orientations(std::vector<int>(facets.size(), 1));

  const auto incidence = ridge_incidence(k);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> ridges_of(facets.size());
  std::vector<const std::vector<std::pair<std::size_t, std::size_t>>*> lists;
  for (const auto& [ridge, incident] : incidence) {
    for (const auto& [f, pos] : incident) ridges_of[f].emplace_back(lists.size(), pos);
    lists.push_back(&incident);
  }

  for (std::size_t root = 0; root < facets.size(); ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::queue<std::size_t> todo;
    todo.push(root);
    while (!todo.empty()) {
      const std::size_t f = todo.front();
      todo.pop();
      for (const auto& [ridge, pos] : ridges_of[f]) {
        const int induced = sign[f] * alternating(pos);
        for (const auto& [g, gpos] : *lists[ridge]) {
          if (g == f) continue;
          const int required = -induced * alternating(gpos);
          if (sign[g] == 0) {
            sign[g] = required;
            todo.push(g);
          } else if (sign[g] != required) {
            throw Error(ErrorKind::NotOrientable, "inconsistent orientation across a ridge of facet " + std::to_string(g));
          }
        }
      }
    }
  }
  return k.with_orientations(std::move(sign));
}

bool orientation_is_cycle(const SimplicialComplex& k) {
  if (!k.orientations()) return false;
  if (k.dim() == 0) return true;
  std::map<Simplex, long> total;
  const auto& facets = k.facets();
  const auto& signs = *k.orientations();
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (std::size_t i = 0; i < facets[f].size(); ++i) total[drop(facets[f], i)] += signs[f] * alternating(i);
  return std::all_of(total.begin(), total.end(), [](const auto& kv) { return kv.second == 0; });
}

SimplicialComplex ensure_oriented(const SimplicialComplex& k) {
  if (!k.orientations()) return orient(k);
  if (!validate_closed(k)) throw Error(ErrorKind::NotClosed, "every ridge must lie in exactly two facets");
  if (!orientation_is_cycle(k)) throw Error(ErrorKind::NotOrientable, "stored facet signs do not form a cycle");
  return k;
}

Integer euler_characteristic(const SimplicialComplex& k) {
  Integer chi = 0;
  for (int d = 0; d <= k.dim(); ++d) {
    const auto count = static_cast<long>(k.faces(d).size());
    chi += d % 2 == 0 ? count : -count;
  }
  return chi;
}

HomologyProfile homology(const SimplicialComplex& k, Coefficients coefficients) {
  const int n = k.dim();
  HomologyProfile out;
  out.betti.assign(n + 1, 0);
  out.torsion.assign(n + 1, {});
  if (k.empty()) return out;

  // rank[d] = rank of d_d, with d_0 = d_{n+1} = 0.
  std::vector<std::size_t> rank(n + 2, 0);
  std::vector<std::size_t> chains(n + 1, 0);
  for (int d = 0; d <= n; ++d) chains[d] = k.faces(d).size();
  for (int d = 1; d <= n; ++d) {
    const IntMatrix bd = k.boundary_matrix(d);
    switch (coefficients) {
      case Coefficients::Integers: {
        const SNFResult snf = smith_normal_form(bd);
        rank[d] = snf.rank();
        for (const auto& div : snf.diag)
          if (div > 1) out.torsion[d - 1].push_back(div);
        break;
      }
      case Coefficients::Rationals:
        rank[d] = rational_rank(bd);
        break;
      case Coefficients::Mod2:
        rank[d] = rank_mod2(bd);
        break;
    }
  }
  for (int d = 0; d <= n; ++d) out.betti[d] = chains[d] - rank[d] - rank[d + 1];
  return out;
}

Semicharacteristic kervaire_semicharacteristic(const SimplicialComplex& k) {
  if (!validate_closed(k)) throw Error(ErrorKind::NotClosed, "semicharacteristic needs a closed complex");
  if (k.dim() % 2 == 0) {
    const Integer chi = euler_characteristic(k);
    if (chi % 2 != 0) throw Error(ErrorKind::OddEulerCharacteristic, "chi = " + chi.str() + " is odd");
    return {false, chi / 2};
  }
  const auto h = homology(k, Coefficients::Rationals);
  std::size_t sum = 0;
  for (std::size_t d = 0; d < h.betti.size(); d += 2) sum += h.betti[d];
  return {true, Integer(sum % 2)};
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (b.empty()) return a;
  if (a.empty()) return b;
  if (a.dim() != b.dim())
    throw Error(ErrorKind::DimensionMismatch, "cannot take disjoint union of dimensions " + std::to_string(a.dim()) +
                                                  " and " + std::to_string(b.dim()));
  // An oriented side forces the other to be oriented too, so that its
  // signs are not silently dropped.
  if (a.is_oriented() != b.is_oriented()) return disjoint_union(ensure_oriented(a), ensure_oriented(b));
  const auto va = a.vertices();
  const Vertex offset = va.back() + 1;
  std::vector<Simplex> facets = a.facets();
  for (Simplex s : b.facets()) {
    for (auto& v : s) v += offset;
    facets.push_back(std::move(s));
  }
  std::optional<std::vector<int>> signs;
  if (a.orientations() && b.orientations()) {
    signs = *a.orientations();
    signs->insert(signs->end(), b.orientations()->begin(), b.orientations()->end());
  }
  return SimplicialComplex(a.dim(), std::move(facets), std::move(signs));
}

SimplicialComplex connected_sum(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::InvalidSpec, "connected sum needs non-empty complexes");
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "connected sum of different dimensions");
  const Simplex& fa = a.facets().front();
  const Simplex& fb = b.facets().front();
  const Vertex offset = a.vertices().back() + 1;
  std::map<Vertex, Vertex> relabel;
  for (std::size_t i = 0; i < fb.size(); ++i) relabel[fb[i]] = fa[i];
  std::vector<Simplex> facets(a.facets().begin() + 1, a.facets().end());
  for (std::size_t f = 1; f < b.facets().size(); ++f) {
    Simplex s = b.facets()[f];
    for (auto& v : s) {
      auto it = relabel.find(v);
      v = it != relabel.end() ? it->second : v + offset;
    }
    facets.push_back(std::move(s));
  }
  return SimplicialComplex(a.dim(), std::move(facets));
}

SimplicialComplex complex_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::FormatError, "complex document must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "dim" && key != "facets" && key != "orientations")
      throw Error(ErrorKind::FormatError, "unknown field '" + key + "'");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw Error(ErrorKind::FormatError, "field 'dim' must be an integer");
  if (!doc.contains("facets") || !doc["facets"].is_array())
    throw Error(ErrorKind::FormatError, "field 'facets' must be an array");
  const int dim = doc["dim"].get<int>();
  std::vector<Simplex> facets;
  std::size_t index = 0;
  for (const auto& f : doc["facets"]) {
    if (!f.is_array()) throw Error(ErrorKind::FormatError, "facets[" + std::to_string(index) + "] is not an array");
    Simplex s;
    for (const auto& v : f) {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw Error(ErrorKind::FormatError, "facets[" + std::to_string(index) + "] has a non-integer or negative vertex");
      s.push_back(v.get<Vertex>());
    }
    facets.push_back(std::move(s));
    ++index;
  }
  std::optional<std::vector<int>> signs;
  if (doc.contains("orientations")) {
    if (!doc["orientations"].is_array()) throw Error(ErrorKind::FormatError, "field 'orientations' must be an array");
    signs.emplace();
    for (const auto& o : doc["orientations"]) {
      if (!o.is_number_integer()) throw Error(ErrorKind::FormatError, "orientations must be +1 or -1");
      signs->push_back(o.get<int>());
    }
  }
  return SimplicialComplex(dim, std::move(facets), std::move(signs));
}

nlohmann::json complex_to_json(const SimplicialComplex& k) {
  nlohmann::json doc;
  doc["dim"] = k.dim();
  doc["facets"] = k.facets();
  if (k.orientations()) doc["orientations"] = *k.orientations();
  return doc;
}

SimplicialComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FormatError, "cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::FormatError, path + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  try {
    return complex_from_json(doc);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.message());
  }
}

namespace fixtures {

SimplicialComplex sphere(int n) {
  Simplex all;
  for (Vertex v = 0; v < static_cast<Vertex>(n) + 2; ++v) all.push_back(v);
  std::vector<Simplex> facets;
  for (std::size_t i = 0; i < all.size(); ++i) facets.push_back(drop(all, i));
  return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex torus7() {
  std::vector<Simplex> facets;
  for (Vertex i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex(2, std::move(facets));
}

SimplicialComplex projective_plane6() {
  return SimplicialComplex(2, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                               {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

SimplicialComplex cp2_9() {
  static const std::vector<Simplex> facets = {
      {0, 1, 2, 3, 4}, {0, 1, 2, 3, 5}, {0, 1, 2, 4, 5}, {0, 1, 3, 4, 6}, {0, 1, 3, 5, 7}, {0, 1, 3, 6, 7},
      {0, 1, 4, 5, 6}, {0, 1, 5, 6, 8}, {0, 1, 5, 7, 8}, {0, 1, 6, 7, 8}, {0, 2, 3, 4, 8}, {0, 2, 3, 5, 8},
      {0, 2, 4, 5, 6}, {0, 2, 4, 6, 7}, {0, 2, 4, 7, 8}, {0, 2, 5, 6, 8}, {0, 2, 6, 7, 8}, {0, 3, 4, 6, 7},
      {0, 3, 4, 7, 8}, {0, 3, 5, 7, 8}, {1, 2, 3, 4, 8}, {1, 2, 3, 5, 7}, {1, 2, 3, 6, 7}, {1, 2, 3, 6, 8},
      {1, 2, 4, 5, 7}, {1, 2, 4, 7, 8}, {1, 2, 6, 7, 8}, {1, 3, 4, 6, 8}, {1, 4, 5, 6, 8}, {1, 4, 5, 7, 8},
      {2, 3, 5, 6, 7}, {2, 3, 5, 6, 8}, {2, 4, 5, 6, 7}, {3, 4, 5, 6, 7}, {3, 4, 5, 6, 8}, {3, 4, 5, 7, 8}};
  static const std::vector<int> signs = {-1, 1, -1, 1, -1, 1, 1, -1, 1, -1, -1, 1, -1, -1, -1, 1, 1, 1, 1, -1, 1, -1, 1, -1, 1, 1, -1, -1, -1, 1, -1, 1, 1, -1, 1, -1};
  return SimplicialComplex(4, facets, signs);
}

SimplicialComplex closed_surface(int genus) {
  if (genus < 0) throw Error(ErrorKind::InvalidSpec, "genus must be non-negative");
  if (genus == 0) return sphere(2);
  SimplicialComplex k = torus7();
  for (int g = 1; g < genus; ++g) k = connected_sum(k, torus7());
  return k;
}

}  // namespace fixtures

}  // namespace cutpaste::simplicial
