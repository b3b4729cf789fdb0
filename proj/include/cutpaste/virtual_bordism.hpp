#pragma once

#include "cutpaste/exact_linalg.hpp"
#include "cutpaste/random.hpp"
#include "cutpaste/surfaces.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cutpaste::virtual_bordism {

struct BoundaryLabel {
  std::string name;
  long chi = 0;
  int orientation = 1;
  friend bool operator==(const BoundaryLabel&, const BoundaryLabel&) = default;
};

BoundaryLabel reversed(const BoundaryLabel& label);

/// Manifold piece known only through its invariants. Signature is additive
/// under gluing and changes sign under reversal by fiat; it is not derived
/// from any geometric model.
struct VirtualPiece {
  int dim = 0;
  long chi = 0;
  long sigma = 0;
  std::vector<BoundaryLabel> boundary;
  // Characteristic numbers of closed pieces, e.g. "p2".
  std::map<std::string, Rational> attributes;
  std::string recipe;

  bool closed() const { return boundary.empty(); }
  friend bool operator==(const VirtualPiece&, const VirtualPiece&) = default;
};

// Checks the invariants of a piece: sigma = 0 unless 4 | dim, labels of odd
// dimension have chi = 0, orientations are +-1. Throws InvalidSpec.
void validate(const VirtualPiece& p);
VirtualPiece make_piece(int dim, long chi, long sigma, std::vector<BoundaryLabel> boundary, std::string recipe,
                        std::map<std::string, Rational> attributes = {});
VirtualPiece empty_piece(int dim);

// pairs: (index into p.boundary, index into q.boundary). Matched labels must
// carry the same name; orientations are not compared. Throws LabelMismatch,
// DimensionMismatch, InvalidMatching.
VirtualPiece glue(const VirtualPiece& p, const VirtualPiece& q, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
// Glues boundary i of p to boundary i of q for every i.
VirtualPiece glue_all(const VirtualPiece& p, const VirtualPiece& q);
VirtualPiece disjoint_union(const VirtualPiece& p, const VirtualPiece& q);
// Negates sigma and every attribute, flips label orientations.
VirtualPiece reverse(const VirtualPiece& p);
VirtualPiece double_piece(const VirtualPiece& p);

// Piece of a connected surface component with boundary labels "S1".
VirtualPiece from_surface(const surfaces::SurfaceComponent& c);
VirtualPiece from_surface(const surfaces::Surface& s);

/// Named pieces with the chosen capping pieces B_label and the order l of
/// the relevant bordism group, plus declared recipe identities used to
/// recognise closed results.
class Catalog {
 public:
  Catalog() = default;
  Catalog(int dim, long l, std::map<std::string, VirtualPiece> pieces, std::map<std::string, std::string> b_sigma,
          std::map<std::string, std::string> identities);

  int dim() const noexcept { return dim_; }
  long l() const noexcept { return l_; }
  const std::map<std::string, VirtualPiece>& pieces() const noexcept { return pieces_; }
  const std::map<std::string, std::string>& b_sigma_names() const noexcept { return b_sigma_; }
  const std::map<std::string, std::string>& identities() const noexcept { return identities_; }

  // Throws InvalidSpec for unknown names.
  const VirtualPiece& piece(const std::string& name) const;
  // Throws MissingBSigma.
  const VirtualPiece& b_sigma(const std::string& label) const;
  // Copy with B_label replaced. Throws InvalidSpec if the piece does not
  // have l copies of the label as boundary.
  Catalog with_b_sigma(const std::string& label, const std::string& piece_name) const;

  // Replaces a closed piece by the catalog entry its recipe is declared to
  // equal. Throws InternalInvariantViolation when chi or sigma disagree.
  VirtualPiece resolve(const VirtualPiece& p) const;

  friend bool operator==(const Catalog&, const Catalog&) = default;

 private:
  int dim_ = 0;
  long l_ = 1;
  std::map<std::string, VirtualPiece> pieces_;
  std::map<std::string, std::string> b_sigma_;
  std::map<std::string, std::string> identities_;  // recipe -> piece name
};

// Throws FormatError (malformed or unknown fields) and InvalidSpec.
Catalog catalog_from_json(const nlohmann::json& doc);
nlohmann::json catalog_to_json(const Catalog& c);
Catalog load_catalog(const std::string& path);

namespace catalogs {
// Disk, cylinder, pants, sphere, torus; B_S1 = disk; l = 1.
Catalog dim2();
// D4, S4, CP2, CP2-D4; B_S3 = D4; l = 1.
Catalog dim4();
// D8, S8, CP4, CP4-D8 with p2 values; B_S7 = D8; l = 1.
Catalog dim8_demo();
}  // namespace catalogs

// Closes up a cobordism: the first in_count labels of m are incoming, the
// rest outgoing. Takes l copies of m, caps every incoming label with B and
// every outgoing label with reverse(B), then resolves the result through the
// catalog identities. Throws MissingBSigma.
VirtualPiece close_up(const VirtualPiece& m, std::size_t in_count, const Catalog& catalog);

enum class Invariant { Chi, Sigma };
long invariant_of(const VirtualPiece& p, Invariant which);

// Both sides of [X1 u rev X2] + [X2 u X3] = [X1 u X3] + [D(X2)], with every
// gluing along the full boundary. Throws LabelMismatch when the three
// boundaries do not carry the same label names.
std::pair<long, long> lemma_relation_sides(const VirtualPiece& x1, const VirtualPiece& x2, const VirtualPiece& x3,
                                           Invariant which);
bool lemma_relation_check(const VirtualPiece& x1, const VirtualPiece& x2, const VirtualPiece& x3, Invariant which);

// Three random pieces sharing a boundary label list, for dims 2 and 4.
std::vector<VirtualPiece> random_triple(Rng& rng, int dim);

}  // namespace cutpaste::virtual_bordism
