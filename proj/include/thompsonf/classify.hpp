#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "thompsonf/lattice.hpp"
#include "thompsonf/plmap.hpp"

namespace thompsonf {

/// A finite-index subgroup H of F, stored as its image phi(H) in Z^2.
/// H always contains F', so it is the full preimage of that lattice and is
/// normal in F; its index in F is the lattice index.
struct FIFSubgroup {
  LatticeSubgroup lattice;
  std::vector<PLMap> generators;   ///< element generators, when given
  std::vector<IntPair> phi_pairs;  ///< phi-images the lattice was built from

  std::int64_t index_in_f() const { return index(lattice); }
};

/// <F', gens>. Throws NotFiniteIndex when the phi-images have rank < 2.
FIFSubgroup from_f_generators(std::span<const PLMap> gens);
/// <F', elements with the given phi-images>.
FIFSubgroup from_phi_pairs(std::span<const IntPair> pairs);

FIFSubgroup whole_group();

/// Rectangular subgroups are exactly the finite-index subgroups isomorphic to F.
bool is_isomorphic_to_f(const FIFSubgroup& H);

enum class IsoWitness { EqualAfterTau, EqualAfterTauAndRev, None };

std::string_view witness_name(IsoWitness w);

struct IsoVerdict {
  bool isomorphic = false;
  IsoWitness witness = IsoWitness::None;
  LatticeSubgroup scaled_first;
  LatticeSubgroup scaled_second;
};

/// H = H' iff their tau-rescaled lattices agree, directly or after swapping
/// the coordinates of the second.
IsoVerdict are_isomorphic(const FIFSubgroup& H, const FIFSubgroup& H2);

struct ExtensionSummary {
  RectPair inner;
  std::int64_t quotient_order = 1;
  IntPair quotient_generator;
  std::int64_t index_in_f = 1;
  bool iso_to_f = true;
};

ExtensionSummary extension_summary(const FIFSubgroup& H);

struct RectQuotient {
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::int64_t order = 1;
};

/// F / K(a,b) = Z_a x Z_b.
RectQuotient quotient_by_rectangular(std::int64_t a, std::int64_t b);

/// A complete isomorphism invariant: the lexicographically smaller of the
/// tau-rescaled lattice and its coordinate swap.
LatticeSubgroup isomorphism_key(const LatticeSubgroup& L);

/// The index-n subgroups partitioned into isomorphism classes. Classes are
/// ordered by key, members by (g, h, m).
std::vector<std::vector<LatticeSubgroup>> classify_index(std::int64_t n);

}  // namespace thompsonf
