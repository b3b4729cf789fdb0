#include "cutpaste/virtual_bordism.hpp"

#include "cutpaste/error.hpp"
#include "cutpaste/scalar.hpp"

#include <fstream>
#include <set>

namespace cutpaste::virtual_bordism {

using nlohmann::json;

namespace {

const std::string kEmptyRecipe = "∅";

std::string wrap(const std::string& recipe) {
  return recipe.find(' ') == std::string::npos ? recipe : "(" + recipe + ")";
}

// True when the whole recipe is a single rev(...) application.
bool is_reversal(const std::string& recipe) {
  if (recipe.size() < 5 || recipe.compare(0, 4, "rev(") != 0 || recipe.back() != ')') return false;
  int depth = 0;
  for (std::size_t i = 3; i < recipe.size(); ++i) {
    if (recipe[i] == '(') ++depth;
    if (recipe[i] == ')' && --depth == 0) return i + 1 == recipe.size();
  }
  return false;
}

bool is_empty_piece(const VirtualPiece& p) { return p.closed() && p.chi == 0 && p.sigma == 0 && p.recipe == kEmptyRecipe; }

[[noreturn]] void format_error(const std::string& what) { throw Error(ErrorKind::FormatError, "catalog: " + what); }

void only_fields(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) format_error(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) format_error("unknown field '" + key + "' in " + where);
  }
}

template <typename T>
T required(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) format_error("missing field '" + std::string(key) + "' in " + where);
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    format_error("field '" + std::string(key) + "' in " + where + " has the wrong type");
  }
}

Rational rational_from_json(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error&) {
    }
  }
  format_error(where + " must be an integer or a \"p/q\" string");
}

}  // namespace

BoundaryLabel reversed(const BoundaryLabel& label) { return {label.name, label.chi, -label.orientation}; }

void validate(const VirtualPiece& p) {
  if (p.dim < 0) throw Error(ErrorKind::InvalidSpec, "negative dimension");
  if (p.sigma != 0 && p.dim % 4 != 0)
    throw Error(ErrorKind::InvalidSpec, "signature " + std::to_string(p.sigma) + " on a piece of dimension " + std::to_string(p.dim));
  for (const auto& label : p.boundary) {
    if (label.orientation != 1 && label.orientation != -1)
      throw Error(ErrorKind::InvalidSpec, "label '" + label.name + "' has orientation other than +-1");
    if ((p.dim - 1) % 2 != 0 && label.chi != 0)
      throw Error(ErrorKind::InvalidSpec, "odd-dimensional label '" + label.name + "' must have chi 0");
  }
}

VirtualPiece make_piece(int dim, long chi, long sigma, std::vector<BoundaryLabel> boundary, std::string recipe,
                        std::map<std::string, Rational> attributes) {
  VirtualPiece p{dim, chi, sigma, std::move(boundary), std::move(attributes), std::move(recipe)};
  validate(p);
  return p;
}

VirtualPiece empty_piece(int dim) { return make_piece(dim, 0, 0, {}, kEmptyRecipe); }

VirtualPiece glue(const VirtualPiece& p, const VirtualPiece& q, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  if (p.dim != q.dim)
    throw Error(ErrorKind::DimensionMismatch, "gluing pieces of dimension " + std::to_string(p.dim) + " and " + std::to_string(q.dim));
  if (pairs.empty()) {
    if (is_empty_piece(p)) return q;
    if (is_empty_piece(q)) return p;
  }
  std::set<std::size_t> used_p;
  std::set<std::size_t> used_q;
  long matched_chi = 0;
  for (const auto& [i, j] : pairs) {
    if (i >= p.boundary.size() || j >= q.boundary.size())
      throw Error(ErrorKind::InvalidMatching, "boundary label index out of range");
    if (!used_p.insert(i).second || !used_q.insert(j).second)
      throw Error(ErrorKind::InvalidMatching, "boundary label matched twice");
    if (p.boundary[i].name != q.boundary[j].name)
      throw Error(ErrorKind::LabelMismatch, "cannot glue '" + p.boundary[i].name + "' to '" + q.boundary[j].name + "'");
    matched_chi += p.boundary[i].chi;
  }

  VirtualPiece out;
  out.dim = p.dim;
  out.chi = p.chi + q.chi - matched_chi;
  out.sigma = p.sigma + q.sigma;
  for (std::size_t i = 0; i < p.boundary.size(); ++i)
    if (!used_p.count(i)) out.boundary.push_back(p.boundary[i]);
  for (std::size_t j = 0; j < q.boundary.size(); ++j)
    if (!used_q.count(j)) out.boundary.push_back(q.boundary[j]);
  if (pairs.empty() && p.closed() && q.closed()) {
    // Characteristic numbers add over disjoint unions of closed pieces.
    for (const auto& [key, value] : p.attributes)
      if (auto it = q.attributes.find(key); it != q.attributes.end()) out.attributes[key] = value + it->second;
  }
  out.recipe = wrap(p.recipe) + (pairs.empty() ? " ⊔ " : " ∪ ") + wrap(q.recipe);
  return out;
}

VirtualPiece glue_all(const VirtualPiece& p, const VirtualPiece& q) {
  if (p.boundary.size() != q.boundary.size())
    throw Error(ErrorKind::LabelMismatch, std::to_string(p.boundary.size()) + " boundary labels against " +
                                              std::to_string(q.boundary.size()));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < p.boundary.size(); ++i) pairs.emplace_back(i, i);
  return glue(p, q, pairs);
}

VirtualPiece disjoint_union(const VirtualPiece& p, const VirtualPiece& q) { return glue(p, q, {}); }

VirtualPiece reverse(const VirtualPiece& p) {
  VirtualPiece out = p;
  out.sigma = -p.sigma;
  for (auto& label : out.boundary) label = reversed(label);
  for (auto& [key, value] : out.attributes) value = -value;
  if (p.recipe == kEmptyRecipe)
    out.recipe = p.recipe;
  else if (is_reversal(p.recipe))
    out.recipe = p.recipe.substr(4, p.recipe.size() - 5);
  else
    out.recipe = "rev(" + p.recipe + ")";
  return out;
}

VirtualPiece double_piece(const VirtualPiece& p) { return glue_all(p, reverse(p)); }

VirtualPiece from_surface(const surfaces::SurfaceComponent& c) {
  return make_piece(2, 2 - 2L * c.genus - c.boundary, 0,
                    std::vector<BoundaryLabel>(static_cast<std::size_t>(c.boundary), BoundaryLabel{"S1", 0, 1}),
                    surfaces::to_string(surfaces::Surface({c})));
}

VirtualPiece from_surface(const surfaces::Surface& s) {
  VirtualPiece out = empty_piece(2);
  for (const auto& c : s.components()) out = disjoint_union(out, from_surface(c));
  return out;
}

Catalog::Catalog(int dim, long l, std::map<std::string, VirtualPiece> pieces, std::map<std::string, std::string> b_sigma,
                 std::map<std::string, std::string> identities)
    : dim_(dim), l_(l), pieces_(std::move(pieces)), b_sigma_(std::move(b_sigma)), identities_(std::move(identities)) {
  if (l_ < 1) throw Error(ErrorKind::InvalidSpec, "l must be positive");
  for (auto& [name, piece] : pieces_) {
    if (piece.dim != dim_) throw Error(ErrorKind::InvalidSpec, "piece '" + name + "' has the wrong dimension");
    validate(piece);
  }
  for (const auto& [label, name] : b_sigma_) {
    const VirtualPiece& b = piece(name);
    bool ok = b.boundary.size() == static_cast<std::size_t>(l_);
    for (const auto& bl : b.boundary) ok = ok && bl.name == label;
    if (!ok)
      throw Error(ErrorKind::InvalidSpec, "B for '" + label + "' must have " + std::to_string(l_) + " copies of it as boundary");
  }
  for (const auto& [recipe, name] : identities_) {
    if (!piece(name).closed()) throw Error(ErrorKind::InvalidSpec, "identity target '" + name + "' is not closed");
  }
}

const VirtualPiece& Catalog::piece(const std::string& name) const {
  auto it = pieces_.find(name);
  if (it == pieces_.end()) throw Error(ErrorKind::InvalidSpec, "no catalog piece named '" + name + "'");
  return it->second;
}

const VirtualPiece& Catalog::b_sigma(const std::string& label) const {
  auto it = b_sigma_.find(label);
  if (it == b_sigma_.end()) throw Error(ErrorKind::MissingBSigma, "no capping piece chosen for '" + label + "'");
  return piece(it->second);
}

Catalog Catalog::with_b_sigma(const std::string& label, const std::string& piece_name) const {
  auto b = b_sigma_;
  b[label] = piece_name;
  return Catalog(dim_, l_, pieces_, std::move(b), identities_);
}

VirtualPiece Catalog::resolve(const VirtualPiece& p) const {
  if (!p.closed()) return p;
  auto it = identities_.find(p.recipe);
  if (it == identities_.end()) return p;
  VirtualPiece entry = piece(it->second);
  if (entry.chi != p.chi || entry.sigma != p.sigma)
    throw Error(ErrorKind::InternalInvariantViolation, "recipe '" + p.recipe + "' is declared equal to '" + it->second +
                                                           "' but the invariants differ");
  entry.recipe = it->second;
  return entry;
}

Catalog catalog_from_json(const json& doc) {
  only_fields(doc, {"dim", "l", "pieces", "b_sigma", "identities"}, "catalog");
  const int dim = required<int>(doc, "dim", "catalog");
  const long l = required<long>(doc, "l", "catalog");
  std::map<std::string, VirtualPiece> pieces;
  const json list = required<json>(doc, "pieces", "catalog");
  if (!list.is_array()) format_error("'pieces' must be an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "pieces[" + std::to_string(i) + "]";
    const json& entry = list[i];
    only_fields(entry, {"name", "chi", "sigma", "boundary", "attributes"}, where);
    VirtualPiece p;
    p.dim = dim;
    p.recipe = required<std::string>(entry, "name", where);
    p.chi = required<long>(entry, "chi", where);
    p.sigma = entry.contains("sigma") ? required<long>(entry, "sigma", where) : 0;
    if (entry.contains("boundary")) {
      const json& labels = entry.at("boundary");
      if (!labels.is_array()) format_error(where + ".boundary must be an array");
      for (std::size_t j = 0; j < labels.size(); ++j) {
        const std::string lw = where + ".boundary[" + std::to_string(j) + "]";
        only_fields(labels[j], {"name", "chi", "orientation"}, lw);
        BoundaryLabel label;
        label.name = required<std::string>(labels[j], "name", lw);
        label.chi = labels[j].contains("chi") ? required<long>(labels[j], "chi", lw) : 0;
        label.orientation = labels[j].contains("orientation") ? required<int>(labels[j], "orientation", lw) : 1;
        p.boundary.push_back(label);
      }
    }
    if (entry.contains("attributes")) {
      const json& attrs = entry.at("attributes");
      if (!attrs.is_object()) format_error(where + ".attributes must be an object");
      for (const auto& [key, value] : attrs.items()) p.attributes[key] = rational_from_json(value, where + ".attributes." + key);
    }
    if (!pieces.emplace(p.recipe, p).second) format_error("duplicate piece name '" + p.recipe + "'");
  }
  std::map<std::string, std::string> b_sigma;
  if (doc.contains("b_sigma")) b_sigma = required<std::map<std::string, std::string>>(doc, "b_sigma", "catalog");
  std::map<std::string, std::string> identities;
  if (doc.contains("identities")) {
    const json& ids = doc.at("identities");
    if (!ids.is_array()) format_error("'identities' must be an array");
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const std::string where = "identities[" + std::to_string(i) + "]";
      only_fields(ids[i], {"recipe", "equals"}, where);
      identities[required<std::string>(ids[i], "recipe", where)] = required<std::string>(ids[i], "equals", where);
    }
  }
  return Catalog(dim, l, std::move(pieces), std::move(b_sigma), std::move(identities));
}

json catalog_to_json(const Catalog& c) {
  json pieces = json::array();
  for (const auto& [name, p] : c.pieces()) {
    json entry{{"name", name}, {"chi", p.chi}, {"sigma", p.sigma}};
    if (!p.boundary.empty()) {
      json labels = json::array();
      for (const auto& l : p.boundary) labels.push_back({{"name", l.name}, {"chi", l.chi}, {"orientation", l.orientation}});
      entry["boundary"] = labels;
    }
    if (!p.attributes.empty()) {
      json attrs = json::object();
      for (const auto& [key, value] : p.attributes) attrs[key] = to_string(value);
      entry["attributes"] = attrs;
    }
    pieces.push_back(entry);
  }
  json identities = json::array();
  for (const auto& [recipe, name] : c.identities()) identities.push_back({{"recipe", recipe}, {"equals", name}});
  return {{"dim", c.dim()}, {"l", c.l()}, {"pieces", pieces}, {"b_sigma", c.b_sigma_names()}, {"identities", identities}};
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FormatError, path + ": cannot open");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::FormatError, path + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  try {
    return catalog_from_json(doc);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.message());
  }
}

namespace catalogs {

namespace {

VirtualPiece named(int dim, const std::string& name, long chi, long sigma, std::vector<BoundaryLabel> boundary = {},
                   std::map<std::string, Rational> attributes = {}) {
  return make_piece(dim, chi, sigma, std::move(boundary), name, std::move(attributes));
}

std::map<std::string, VirtualPiece> by_name(std::initializer_list<VirtualPiece> pieces) {
  std::map<std::string, VirtualPiece> out;
  for (const auto& p : pieces) out.emplace(p.recipe, p);
  return out;
}

}  // namespace

Catalog dim2() {
  const BoundaryLabel s1{"S1", 0, 1};
  return Catalog(2, 1,
                 by_name({named(2, "disk", 1, 0, {s1}), named(2, "cylinder", 0, 0, {s1, s1}),
                          named(2, "pants", -1, 0, {s1, s1, s1}), named(2, "sphere", 2, 0), named(2, "torus", 0, 0)}),
                 {{"S1", "disk"}}, {{"disk ∪ rev(disk)", "sphere"}, {"disk ∪ disk", "sphere"}});
}

Catalog dim4() {
  const BoundaryLabel s3{"S3", 0, 1};
  return Catalog(4, 1,
                 by_name({named(4, "D4", 1, 0, {s3}), named(4, "S4", 2, 0), named(4, "CP2", 3, 1),
                          named(4, "CP2-D4", 2, 1, {s3})}),
                 {{"S3", "D4"}},
                 {{"D4 ∪ rev(D4)", "S4"}, {"D4 ∪ D4", "S4"}, {"CP2-D4 ∪ D4", "CP2"}, {"D4 ∪ CP2-D4", "CP2"}});
}

Catalog dim8_demo() {
  const BoundaryLabel s7{"S7", 0, 1};
  // CP4-D8 is oriented so that capping D8 with its reverse gives CP4.
  return Catalog(8, 1,
                 by_name({named(8, "D8", 1, 0, {s7}), named(8, "S8", 2, 0, {}, {{"p2", 0}}),
                          named(8, "CP4", 5, 1, {}, {{"p2", 10}}), named(8, "CP4-D8", 4, -1, {s7})}),
                 {{"S7", "D8"}},
                 {{"D8 ∪ rev(D8)", "S8"}, {"D8 ∪ rev(CP4-D8)", "CP4"}, {"rev(CP4-D8) ∪ D8", "CP4"}});
}

}  // namespace catalogs

VirtualPiece close_up(const VirtualPiece& m, std::size_t in_count, const Catalog& catalog) {
  if (m.dim != catalog.dim())
    throw Error(ErrorKind::DimensionMismatch, "piece of dimension " + std::to_string(m.dim) + " against a dimension-" +
                                                  std::to_string(catalog.dim()) + " catalog");
  if (in_count > m.boundary.size()) throw Error(ErrorKind::InvalidSpec, "more incoming labels than boundary labels");
  const std::size_t l = static_cast<std::size_t>(catalog.l());
  const std::size_t b = m.boundary.size();

  VirtualPiece copies = m;
  for (std::size_t t = 1; t < l; ++t) copies = disjoint_union(copies, m);
  if (m.closed()) return catalog.resolve(copies);

  // Incoming caps, in label order; each carries l copies of its label.
  VirtualPiece result = copies;
  if (in_count > 0) {
    VirtualPiece caps = empty_piece(m.dim);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < in_count; ++j) {
      const std::size_t offset = caps.boundary.size();
      caps = disjoint_union(caps, catalog.b_sigma(m.boundary[j].name));
      for (std::size_t t = 0; t < l; ++t) pairs.emplace_back(offset + t, t * b + j);
    }
    result = glue(caps, result, pairs);
  }
  // What is left is the outgoing labels, copy-major.
  const std::size_t out_count = b - in_count;
  if (out_count > 0) {
    VirtualPiece caps = empty_piece(m.dim);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < out_count; ++j) {
      const std::size_t offset = caps.boundary.size();
      caps = disjoint_union(caps, reverse(catalog.b_sigma(m.boundary[in_count + j].name)));
      for (std::size_t t = 0; t < l; ++t) pairs.emplace_back(t * out_count + j, offset + t);
    }
    result = glue(result, caps, pairs);
  }
  return catalog.resolve(result);
}

long invariant_of(const VirtualPiece& p, Invariant which) { return which == Invariant::Chi ? p.chi : p.sigma; }

std::pair<long, long> lemma_relation_sides(const VirtualPiece& x1, const VirtualPiece& x2, const VirtualPiece& x3,
                                           Invariant which) {
  auto names = [](const VirtualPiece& p) {
    std::multiset<std::string> out;
    for (const auto& l : p.boundary) out.insert(l.name);
    return out;
  };
  if (names(x1) != names(x2) || names(x1) != names(x3))
    throw Error(ErrorKind::LabelMismatch, "the three pieces must share their boundary labels");
  const long lhs = invariant_of(glue_all(x1, reverse(x2)), which) + invariant_of(glue_all(x2, x3), which);
  const long rhs = invariant_of(glue_all(x1, x3), which) + invariant_of(double_piece(x2), which);
  return {lhs, rhs};
}

bool lemma_relation_check(const VirtualPiece& x1, const VirtualPiece& x2, const VirtualPiece& x3, Invariant which) {
  const auto [lhs, rhs] = lemma_relation_sides(x1, x2, x3, which);
  return lhs == rhs;
}

std::vector<VirtualPiece> random_triple(Rng& rng, int dim) {
  if (dim != 2 && dim != 4) throw Error(ErrorKind::UnsupportedDimension, "random triples exist in dimensions 2 and 4");
  static const char* const kThreeManifolds[] = {"S3", "T3", "RP3"};
  std::vector<BoundaryLabel> labels;
  const int k = uniform_int(rng, 0, 3);
  for (int i = 0; i < k; ++i)
    labels.push_back({dim == 2 ? "S1" : kThreeManifolds[uniform_int(rng, 0, 2)], 0, 1});
  std::vector<VirtualPiece> out;
  for (int i = 1; i <= 3; ++i) {
    const long sigma = dim == 4 ? uniform_int(rng, -3, 3) : 0;
    out.push_back(make_piece(dim, uniform_int(rng, -6, 6), sigma, labels, "X" + std::to_string(i)));
  }
  return out;
}

}  // namespace cutpaste::virtual_bordism
