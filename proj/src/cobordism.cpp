#include "cutpaste/cobordism.hpp"

#include "cutpaste/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace cutpaste::cobordism {

namespace {

struct GeneratorInfo {
  Generator gen;
  std::string_view name;
  int dim;
  int in;
  int out;
  int chi;
};

constexpr GeneratorInfo kGenerators[] = {
    {Generator::Id, "id", 2, 1, 1, 0},          {Generator::Swap, "swap", 2, 2, 2, 0},
    {Generator::Cap, "cap", 2, 0, 1, 1},        {Generator::Cup, "cup", 2, 1, 0, 1},
    {Generator::Pants, "pants", 2, 2, 1, -1},   {Generator::Copants, "copants", 2, 1, 2, -1},
    {Generator::PointId, "pid", 1, 1, 1, 1},    {Generator::ArcCap, "acap", 1, 0, 2, 1},
    {Generator::ArcCup, "acup", 1, 2, 0, 1},
};

const GeneratorInfo& info(Generator g) { return kGenerators[static_cast<int>(g)]; }

[[noreturn]] void fail(const std::string& what, std::size_t at) {
  throw Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(at));
}

Generator id_generator(int dim) { return dim == 1 ? Generator::PointId : Generator::Id; }

Layer ids(int dim, int count) { return Layer(static_cast<std::size_t>(std::max(count, 0)), id_generator(dim)); }

Layer concat(Layer a, const Layer& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Widths of every level between layers; level 0 is the input.
std::vector<int> level_widths(const CobordismWord& w) {
  std::vector<int> widths{w.in_arity()};
  for (const auto& layer : w.layers()) widths.push_back(layer_out_arity(layer));
  return widths;
}

}  // namespace

int input_arity(Generator g) { return info(g).in; }
int output_arity(Generator g) { return info(g).out; }
int generator_dim(Generator g) { return info(g).dim; }
std::string_view name(Generator g) { return info(g).name; }
int generator_chi(Generator g) { return info(g).chi; }

int layer_in_arity(const Layer& layer) {
  int n = 0;
  for (auto g : layer) n += input_arity(g);
  return n;
}

int layer_out_arity(const Layer& layer) {
  int n = 0;
  for (auto g : layer) n += output_arity(g);
  return n;
}

CobordismWord::CobordismWord(int dim, std::vector<Layer> layers) : dim_(dim) {
  if (dim != 1 && dim != 2) throw Error(ErrorKind::UnsupportedDimension, "cobordism words exist in dimensions 1 and 2");
  for (auto& layer : layers) {
    if (layer.empty()) continue;
    for (auto g : layer)
      if (generator_dim(g) != dim)
        throw Error(ErrorKind::DimensionMismatch,
                    "generator '" + std::string(name(g)) + "' in a dimension-" + std::to_string(dim) + " word");
    if (!layers_.empty() && layer_out_arity(layers_.back()) != layer_in_arity(layer))
      throw Error(ErrorKind::ArityMismatch, "layer " + std::to_string(layers_.size() + 1) + " expects " +
                                                std::to_string(layer_in_arity(layer)) + " inputs but receives " +
                                                std::to_string(layer_out_arity(layers_.back())));
    layers_.push_back(std::move(layer));
  }
}

int CobordismWord::in_arity() const { return layers_.empty() ? 0 : layer_in_arity(layers_.front()); }
int CobordismWord::out_arity() const { return layers_.empty() ? 0 : layer_out_arity(layers_.back()); }

CobordismWord parse_word(std::string_view text) {
  std::vector<Layer> layers(1);
  int dim = 0;
  bool expect_generator = true;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
    } else if (ch == ';' || ch == '|') {
      if (expect_generator) fail("expected a generator before '" + std::string(1, ch) + "'", pos);
      if (ch == ';') layers.emplace_back();
      expect_generator = true;
      ++pos;
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos;
      while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
      const std::string_view token = text.substr(start, pos - start);
      if (!expect_generator) fail("expected ';' or '|' before '" + std::string(token) + "'", start);
      const auto* found = std::find_if(std::begin(kGenerators), std::end(kGenerators),
                                       [&](const GeneratorInfo& g) { return g.name == token; });
      if (found == std::end(kGenerators)) fail("unknown generator '" + std::string(token) + "'", start);
      if (dim != 0 && found->dim != dim)
        fail("generator '" + std::string(token) + "' mixes dimensions 1 and 2", start);
      dim = found->dim;
      layers.back().push_back(found->gen);
      expect_generator = false;
    } else {
      fail("unexpected character '" + std::string(1, ch) + "'", pos);
    }
  }
  if (dim == 0 && layers.size() == 1) return CobordismWord(2);  // blank text is the empty word
  if (expect_generator) fail("expected a generator", pos);
  return CobordismWord(dim, std::move(layers));
}

std::string to_string(const CobordismWord& w) {
  std::string out;
  for (std::size_t k = 0; k < w.layers().size(); ++k) {
    if (k) out += " ; ";
    for (std::size_t i = 0; i < w.layers()[k].size(); ++i) {
      if (i) out += " | ";
      out += name(w.layers()[k][i]);
    }
  }
  return out;
}

CobordismWord identity(int dim, int width) { return CobordismWord(dim, {ids(dim, width)}); }

CobordismWord compose(const CobordismWord& first, const CobordismWord& second) {
  if (first.empty()) {
    if (second.in_arity() != 0) throw Error(ErrorKind::ArityMismatch, "composing 0 outputs into " + std::to_string(second.in_arity()) + " inputs");
    return second;
  }
  if (second.empty()) {
    if (first.out_arity() != 0) throw Error(ErrorKind::ArityMismatch, "composing " + std::to_string(first.out_arity()) + " outputs into 0 inputs");
    return first;
  }
  if (first.dim() != second.dim()) throw Error(ErrorKind::DimensionMismatch, "composing words of different dimensions");
  if (first.out_arity() != second.in_arity())
    throw Error(ErrorKind::ArityMismatch, "composing " + std::to_string(first.out_arity()) + " outputs into " +
                                              std::to_string(second.in_arity()) + " inputs");
  auto layers = first.layers();
  layers.insert(layers.end(), second.layers().begin(), second.layers().end());
  return CobordismWord(first.dim(), std::move(layers));
}

CobordismWord tensor(const CobordismWord& left, const CobordismWord& right) {
  if (left.empty()) return right;
  if (right.empty()) return left;
  if (left.dim() != right.dim()) throw Error(ErrorKind::DimensionMismatch, "tensoring words of different dimensions");
  const int dim = left.dim();
  const std::size_t depth = std::max(left.layers().size(), right.layers().size());
  std::vector<Layer> layers;
  for (std::size_t k = 0; k < depth; ++k) {
    const Layer a = k < left.layers().size() ? left.layers()[k] : ids(dim, left.out_arity());
    const Layer b = k < right.layers().size() ? right.layers()[k] : ids(dim, right.out_arity());
    layers.push_back(concat(a, b));
  }
  return CobordismWord(dim, std::move(layers));
}

long word_chi(const CobordismWord& w) {
  long chi = 0;
  for (const auto& layer : w.layers())
    for (auto g : layer) chi += generator_chi(g);
  if (w.dim() == 1) {
    // Intervals glued at a point lose that point's contribution.
    const auto widths = level_widths(w);
    for (std::size_t k = 1; k + 1 < widths.size(); ++k) chi -= widths[k];
  }
  return chi;
}

CobordismClass normal_form(const CobordismWord& w) {
  const auto widths = level_widths(w);
  std::vector<std::size_t> offset(widths.size() + 1, 0);
  for (std::size_t k = 0; k < widths.size(); ++k) offset[k + 1] = offset[k] + static_cast<std::size_t>(widths[k]);
  const std::size_t nodes = offset.back();
  UnionFind uf(nodes);

  std::vector<std::pair<std::size_t, int>> contributions;  // (node on the generator, chi)
  for (std::size_t k = 0; k < w.layers().size(); ++k) {
    std::size_t p = offset[k];
    std::size_t q = offset[k + 1];
    for (auto g : w.layers()[k]) {
      if (g == Generator::Swap) {
        // Two crossing cylinders, not one piece.
        uf.unite(p, q + 1);
        uf.unite(p + 1, q);
        p += 2;
        q += 2;
        continue;
      }
      std::vector<std::size_t> touched;
      for (int i = 0; i < input_arity(g); ++i) touched.push_back(p++);
      for (int i = 0; i < output_arity(g); ++i) touched.push_back(q++);
      for (std::size_t i = 1; i < touched.size(); ++i) uf.unite(touched[0], touched[i]);
      contributions.emplace_back(touched.front(), generator_chi(g));
    }
  }

  struct Acc {
    long chi = 0;
    ComponentRecord record;
  };
  std::map<std::size_t, Acc> by_root;
  for (std::size_t n = 0; n < nodes; ++n) by_root[uf.find(n)];
  for (const auto& [node, chi] : contributions) by_root[uf.find(node)].chi += chi;
  const std::size_t last = widths.size() - 1;
  for (std::size_t k = 0; k < widths.size(); ++k) {
    for (int i = 0; i < widths[k]; ++i) {
      auto& acc = by_root[uf.find(offset[k] + static_cast<std::size_t>(i))];
      if (k == 0) acc.record.in_positions.push_back(i);
      if (k == last) acc.record.out_positions.push_back(i);
      if (w.dim() == 1 && k != 0 && k != last) acc.chi -= 1;
    }
  }

  CobordismClass out;
  out.dim = w.dim();
  out.in_arity = w.in_arity();
  out.out_arity = w.out_arity();
  for (auto& [root, acc] : by_root) {
    const long boundary = static_cast<long>(acc.record.in_positions.size() + acc.record.out_positions.size());
    if (w.dim() == 2) {
      const long twice_genus = 2 - acc.chi - boundary;
      if (twice_genus < 0 || twice_genus % 2 != 0)
        throw Error(ErrorKind::InternalInvariantViolation,
                    "component with chi " + std::to_string(acc.chi) + " and " + std::to_string(boundary) +
                        " boundary circles has no genus");
      acc.record.genus = static_cast<int>(twice_genus / 2);
    } else if (2 * acc.chi != boundary) {
      throw Error(ErrorKind::InternalInvariantViolation, "1-dimensional component is neither an arc nor a circle");
    }
    out.components.push_back(std::move(acc.record));
  }
  std::sort(out.components.begin(), out.components.end());
  return out;
}

long class_chi(const CobordismClass& c) {
  long chi = 0;
  for (const auto& r : c.components) {
    const long boundary = static_cast<long>(r.in_positions.size() + r.out_positions.size());
    chi += c.dim == 2 ? 2 - 2L * r.genus - boundary : boundary / 2;
  }
  return chi;
}

std::string to_string(const CobordismClass& c) {
  std::ostringstream os;
  auto list = [&](const std::vector<int>& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
  };
  os << c.in_arity << " -> " << c.out_arity << ':';
  if (c.components.empty()) os << " empty";
  for (const auto& r : c.components) {
    os << ' ';
    if (c.dim == 2)
      os << 'g' << r.genus;
    else
      os << (r.in_positions.empty() && r.out_positions.empty() ? "circle" : "arc");
    os << " in";
    list(r.in_positions);
    os << " out";
    list(r.out_positions);
  }
  return os.str();
}

bool equivalent(const CobordismWord& a, const CobordismWord& b) {
  const bool a_dim = a.empty() || b.empty() || a.dim() == b.dim();
  if (!a_dim || a.in_arity() != b.in_arity() || a.out_arity() != b.out_arity())
    throw Error(ErrorKind::ArityMismatch, "equivalence needs words with the same dimension and arities");
  auto na = normal_form(a);
  auto nb = normal_form(b);
  na.dim = nb.dim = 0;
  return na == nb;
}

OneManifold one_manifold_class(const CobordismWord& w) {
  if (!w.empty() && w.dim() != 1) throw Error(ErrorKind::WrongDimension, "not a dimension-1 word");
  OneManifold out;
  for (const auto& r : normal_form(w).components)
    (r.in_positions.empty() && r.out_positions.empty() ? out.circles : out.arcs) += 1;
  return out;
}

CobordismWord canonical_word(int genus, int in, int out) {
  if (genus < 0 || in < 0 || out < 0) throw Error(ErrorKind::InvalidSpec, "negative genus or arity");
  std::vector<Layer> layers;
  int w = in;
  if (w == 0) {
    layers.push_back({Generator::Cap});
    w = 1;
  }
  for (; w > 1; --w) layers.push_back(concat({Generator::Pants}, ids(2, w - 2)));
  for (int g = 0; g < genus; ++g) {
    layers.push_back({Generator::Copants});
    layers.push_back({Generator::Pants});
  }
  if (out == 0) {
    layers.push_back({Generator::Cup});
  } else {
    for (; w < out; ++w) layers.push_back(concat({Generator::Copants}, ids(2, w - 1)));
  }
  if (layers.empty()) layers.push_back({Generator::Id});
  return CobordismWord(2, std::move(layers));
}

CobordismWord random_word(Rng& rng, int in, int out, int max_layers, int max_width) {
  if (in < 0 || out < 0) throw Error(ErrorKind::InvalidSpec, "negative arity");
  std::vector<Layer> layers;
  int w = in;
  const int depth = uniform_int(rng, 0, max_layers);
  for (int k = 0; k < depth; ++k) {
    Layer layer;
    int produced = 0;
    for (int i = 0; i < w;) {
      if (produced < max_width && uniform_int(rng, 0, 7) == 0) {
        layer.push_back(Generator::Cap);
        ++produced;
        continue;
      }
      const int roll = uniform_int(rng, 0, 9);
      const bool pair = i + 1 < w;
      if (roll <= 3) {
        layer.push_back(Generator::Id);
        ++i, ++produced;
      } else if (roll == 4 && pair) {
        layer.push_back(Generator::Swap);
        i += 2, produced += 2;
      } else if (roll == 5) {
        layer.push_back(Generator::Cup);
        ++i;
      } else if (roll <= 7 && pair) {
        layer.push_back(Generator::Pants);
        i += 2, ++produced;
      } else if (produced + 2 <= max_width) {
        layer.push_back(Generator::Copants);
        ++i, produced += 2;
      } else {
        layer.push_back(Generator::Id);
        ++i, ++produced;
      }
    }
    if (w == 0 && produced == 0 && coin(rng)) {
      layer.push_back(Generator::Cap);
      produced = 1;
    }
    if (!layer.empty()) layers.push_back(std::move(layer));
    w = produced;
  }
  while (w > out) {
    if (w == 1) {
      layers.push_back({Generator::Cup});
      w = 0;
    } else {
      layers.push_back(concat({Generator::Pants}, ids(2, w - 2)));
      --w;
    }
  }
  while (w < out) {
    if (w == 0)
      layers.push_back({Generator::Cap});
    else
      layers.push_back(concat({Generator::Copants}, ids(2, w - 1)));
    ++w;
  }
  if (layers.empty() && in > 0) return identity(2, in);
  return CobordismWord(2, std::move(layers));
}

CobordismWord random_word_dim1(Rng& rng, int in, int out, int max_layers) {
  if (in < 0 || out < 0 || (in + out) % 2 != 0)
    throw Error(ErrorKind::InvalidSpec, "a 1-manifold has an even number of boundary points");
  std::vector<Layer> layers;
  int w = in;
  const int depth = uniform_int(rng, 0, max_layers);
  for (int k = 0; k < depth; ++k) {
    Layer layer;
    int produced = 0;
    for (int i = 0; i < w;) {
      if (uniform_int(rng, 0, 5) == 0) {
        layer.push_back(Generator::ArcCap);
        produced += 2;
      } else if (i + 1 < w && uniform_int(rng, 0, 3) == 0) {
        layer.push_back(Generator::ArcCup);
        i += 2;
      } else {
        layer.push_back(Generator::PointId);
        ++i, ++produced;
      }
    }
    if (w == 0 && coin(rng)) {
      layer.push_back(Generator::ArcCap);
      produced = 2;
    }
    if (!layer.empty()) layers.push_back(std::move(layer));
    w = produced;
  }
  for (; w > out; w -= 2) layers.push_back(concat({Generator::ArcCup}, ids(1, w - 2)));
  for (; w < out; w += 2) layers.push_back(concat({Generator::ArcCap}, ids(1, w)));
  if (layers.empty() && in > 0) return identity(1, in);
  return CobordismWord(1, std::move(layers));
}

namespace {

// Layers of width w built around a single generator at position p.
Layer around(int dim, int p, Layer middle, int rest) { return concat(concat(ids(dim, p), middle), ids(dim, rest)); }

}  // namespace

CobordismWord random_rewrite(Rng& rng, const CobordismWord& w) {
  if (w.empty()) return w;
  const int dim = w.dim();
  auto layers = w.layers();
  const auto widths = level_widths(w);
  const int level = uniform_int(rng, 0, static_cast<int>(layers.size()));
  const int width = widths[static_cast<std::size_t>(level)];
  auto insert_at = [&](int at, std::vector<Layer> extra) {
    layers.insert(layers.begin() + at, extra.begin(), extra.end());
    return CobordismWord(dim, std::move(layers));
  };

  const int kind = uniform_int(rng, 0, dim == 2 ? 5 : 1);
  switch (kind) {
    case 0:
      if (width > 0) return insert_at(level, {ids(dim, width)});
      break;
    case 1: {
      const int k = uniform_int(rng, 0, static_cast<int>(layers.size()) - 1);
      const Layer& layer = layers[static_cast<std::size_t>(k)];
      if (layer.size() < 2) break;
      const auto split = static_cast<long>(uniform_int(rng, 1, static_cast<int>(layer.size()) - 1));
      const Layer head(layer.begin(), layer.begin() + split);
      const Layer tail(layer.begin() + split, layer.end());
      std::vector<Layer> two;
      if (coin(rng))
        two = {concat(head, ids(dim, layer_in_arity(tail))), concat(ids(dim, layer_out_arity(head)), tail)};
      else
        two = {concat(ids(dim, layer_in_arity(head)), tail), concat(head, ids(dim, layer_out_arity(tail)))};
      layers.erase(layers.begin() + k);
      return insert_at(k, std::move(two));
    }
    case 2:
      if (width >= 2) {
        const int p = uniform_int(rng, 0, width - 2);
        const Layer swap_layer = around(dim, p, {Generator::Swap}, width - p - 2);
        return insert_at(level, {swap_layer, swap_layer});
      }
      break;
    case 3:
      if (width >= 1) {
        const int p = uniform_int(rng, 0, width - 1);
        const Layer unit = coin(rng) ? Layer{Generator::Id, Generator::Cap} : Layer{Generator::Cap, Generator::Id};
        return insert_at(level, {around(dim, p, unit, width - p - 1), around(dim, p, {Generator::Pants}, width - p - 1)});
      }
      break;
    case 4:
      if (width >= 1) {
        const int p = uniform_int(rng, 0, width - 1);
        const Layer counit = coin(rng) ? Layer{Generator::Id, Generator::Cup} : Layer{Generator::Cup, Generator::Id};
        return insert_at(level,
                         {around(dim, p, {Generator::Copants}, width - p - 1), around(dim, p, counit, width - p - 1)});
      }
      break;
    default: {
      // Commutativity: precompose a pants or postcompose a copants with a swap.
      for (std::size_t k = 0; k < layers.size(); ++k) {
        int p = 0;
        int q = 0;
        for (auto g : layers[k]) {
          if (g == Generator::Pants && coin(rng)) {
            const int in = layer_in_arity(layers[k]);
            return insert_at(static_cast<int>(k), {around(dim, p, {Generator::Swap}, in - p - 2)});
          }
          if (g == Generator::Copants && coin(rng)) {
            const int out = layer_out_arity(layers[k]);
            return insert_at(static_cast<int>(k) + 1, {around(dim, q, {Generator::Swap}, out - q - 2)});
          }
          p += input_arity(g);
          q += output_arity(g);
        }
      }
      break;
    }
  }
  return CobordismWord(dim, std::move(layers));
}

CobordismWord scramble(Rng& rng, const CobordismWord& w, int steps) {
  CobordismWord out = w;
  for (int i = 0; i < steps; ++i) out = random_rewrite(rng, out);
  return out;
}

}  // namespace cutpaste::cobordism
