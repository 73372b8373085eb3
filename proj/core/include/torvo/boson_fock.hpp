#pragma once

#include <torvo/lattice_fock.hpp>
#include <torvo/sparse.hpp>

#include <compare>
#include <cstdint>
#include <vector>

namespace torvo {

// creation mode of flavor j; mode2 = 2r-1 <= -1 encodes the half-integer mode r-1/2
struct BosonMode {
  int flavor = 1;
  int mode2 = -1;
  friend auto operator<=>(const BosonMode&, const BosonMode&) = default;
  friend bool operator==(const BosonMode&, const BosonMode&) = default;
};

// φ-creations and φ*-creations as sorted multisets
struct BosonKey {
  std::vector<BosonMode> phi;
  std::vector<BosonMode> phi_star;

  std::int64_t energy2() const;  // Σ |mode2|
  std::int64_t depth() const;    // max |mode2|, 0 for the vacuum
  void canonicalize();
  friend auto operator<=>(const BosonKey&, const BosonKey&) = default;
  friend bool operator==(const BosonKey&, const BosonKey&) = default;
};

using BosonState = SparseVector<BosonKey>;

struct BosonSpace {
  int N = 1;
  void validate() const;
};

BosonState boson_vacuum();

// φ^j_{r-1/2} and φ^{j*}_{r-1/2}; r <= 0 creates, r > 0 annihilates
BosonState phi_image(const BosonSpace& space, int flavor, std::int64_t r, const BosonKey& key);
BosonState phi_star_image(const BosonSpace& space, int flavor, std::int64_t r, const BosonKey& key);

BosonState phi_apply(const BosonSpace& space, int flavor, std::int64_t r, const BosonState& s);
BosonState phi_star_apply(const BosonSpace& space, int flavor, std::int64_t r, const BosonState& s);
std::int64_t depth(const BosonState& s);  // kNoBound on the zero state

}  // namespace torvo
