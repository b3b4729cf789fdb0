#pragma once

#include "cutpaste/random.hpp"
#include "cutpaste/simplicial.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cutpaste::surfaces {

struct SurfaceComponent {
  int genus = 0;
  int boundary = 0;
  friend auto operator<=>(const SurfaceComponent&, const SurfaceComponent&) = default;
};

/// Compact oriented surface in normal form: an ordered list of connected
/// components, each (genus, boundary circles).
///
/// Boundary circles carry global ids: components in order, and within a
/// component in birth order. Ids are therefore positional and are
/// renumbered by every cut and paste.
class Surface {
 public:
  Surface() = default;
  explicit Surface(std::vector<SurfaceComponent> components);

  static Surface closed(int genus) { return Surface({{genus, 0}}); }
  static Surface sphere() { return closed(0); }
  static Surface torus() { return closed(1); }
  static Surface disk() { return Surface({{0, 1}}); }
  static Surface cylinder() { return Surface({{0, 2}}); }
  static Surface pants() { return Surface({{0, 3}}); }

  const std::vector<SurfaceComponent>& components() const noexcept { return components_; }
  std::size_t component_count() const noexcept { return components_.size(); }
  int circle_count() const;
  bool is_closed() const { return circle_count() == 0; }
  // Component index and local birth index of a global circle id.
  std::pair<std::size_t, int> locate_circle(int circle) const;
  int first_circle_of(std::size_t component) const;

  // Multiset view, used for order-insensitive comparison.
  std::vector<SurfaceComponent> sorted_components() const;

  friend bool operator==(const Surface&, const Surface&) = default;

 private:
  std::vector<SurfaceComponent> components_;
};

Surface disjoint_union(const Surface& a, const Surface& b);
bool same_multiset(const Surface& a, const Surface& b);

struct NonSeparating {
  friend bool operator==(const NonSeparating&, const NonSeparating&) = default;
};
struct Separating {
  int first_genus = 0;
  std::vector<int> first_circles;  // local circle indices that go to the first piece
  friend bool operator==(const Separating&, const Separating&) = default;
};

struct CutSpec {
  std::size_t component = 0;
  std::variant<NonSeparating, Separating> curve;
  friend bool operator==(const CutSpec&, const CutSpec&) = default;
};

struct PasteSpec {
  std::vector<std::pair<int, int>> pairs;  // global circle ids
  friend bool operator==(const PasteSpec&, const PasteSpec&) = default;
};

long chi(const Surface& s);

// NonSeparating: (g, b) -> (g-1, b+2). Separating: piece one stays at the
// component's index, piece two is inserted right after it; each piece lists
// its inherited circles in order and then the new one. Throws InvalidSpec.
Surface cut(const Surface& s, const CutSpec& spec);
// Global ids, in the cut result, of the two circles a cut creates.
std::pair<int, int> created_circles(const Surface& s, const CutSpec& spec);

// Merged components take the position of their lowest member; genus is
// recovered from chi. Throws InvalidMatching.
Surface paste(const Surface& s, const PasteSpec& spec);

// Throws NotClosed.
bool sk_equivalent(const Surface& m, const Surface& n);

// Glues each component to its mirror along the whole boundary. A closed
// component doubles to two copies of itself.
Surface double_surface(const Surface& s);

// Mapping torus of an orientation-preserving circle diffeomorphism.
Surface mapping_torus_demo();

// Simplicial realisation of a closed surface, for cross-checking chi.
simplicial::SimplicialComplex to_complex(const Surface& s);

std::string to_string(const Surface& s);
// "g1 + g0b2 + g3": components joined by '+', each g<genus> optionally
// followed by b<circles>; "empty" is the empty surface.
Surface parse_surface(const std::string& text);

// One line of the cut/paste script format.
using Move = std::variant<CutSpec, PasteSpec>;
std::vector<Move> parse_script(const std::string& text);
Surface apply(const Surface& s, const Move& move);
std::string to_string(const Move& move);

// Random surface with up to max_components components of genus <= max_genus
// and up to max_boundary circles each.
Surface random_surface(Rng& rng, int max_components, int max_genus, int max_boundary);
CutSpec random_cut(Rng& rng, const Surface& s);
// Matches a random subset of circles (at least one pair when possible).
PasteSpec random_paste(Rng& rng, const Surface& s);
// Matches every circle; requires an even circle count.
PasteSpec random_closing_paste(Rng& rng, const Surface& s);

}  // namespace cutpaste::surfaces
