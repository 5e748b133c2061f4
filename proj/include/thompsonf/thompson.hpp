#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thompsonf/plmap.hpp"

namespace thompsonf {

/// (log2 f'(0), log2 f'(1)).
struct PhiImage {
  std::int64_t e0 = 0;
  std::int64_t e1 = 0;

  PhiImage swapped() const { return {e1, e0}; }

  friend PhiImage operator+(PhiImage a, PhiImage b) { return {a.e0 + b.e0, a.e1 + b.e1}; }
  friend PhiImage operator-(PhiImage a) { return {-a.e0, -a.e1}; }
  friend bool operator==(const PhiImage&, const PhiImage&) = default;
};

struct GeneratorPair {
  PLMap first;
  PLMap second;
};

/// f0 with breaks (1/4,1/2), (1/2,3/4) and f1 with breaks (1/2,1/2),
/// (5/8,3/4), (3/4,7/8). They realize x0 and x1 of the standard presentations.
GeneratorPair standard_generators();

/// x0 = f0, x1 = f1, x_n = x1 conjugated by x0^(n-1).
PLMap x_n(std::int64_t n);

PhiImage phi(const PLMap& f);

/// Membership in F' = ker phi.
bool in_commutator_subgroup(const PLMap& f);

/// Membership in K(a,b): a | e0 and b | e1.
bool in_rectangular(const PLMap& f, std::int64_t a, std::int64_t b);

/// Generators of the full subgroup of F supported in [3/8, 7/8].
GeneratorPair g0_g1();

/// Conjugation by the affine map t -> (8t - 3)/4 taking [3/8, 7/8] onto [0,1].
/// Throws SupportOutOfRange unless f is the identity outside [3/8, 7/8].
PLMap omega_rescale(const PLMap& f);

/// Generators y0, y1 of K(a,b).
///
/// y0 is fixed on (0, a1), (1/8, 5/8) and (a4, 1) and has the slopes forced
/// by (a,b) there; on the two connector regions it is filled by a
/// deterministic rule, or pseudo-randomly when a seed is given. y1 is the
/// identity on [0,3/8], t -> 2t - 3/8 on [3/8,5/8] and agrees with y0 on
/// [5/8,1].
GeneratorPair kab_generators(std::int64_t a, std::int64_t b, std::optional<std::uint64_t> seed = std::nullopt);

struct CertificateCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct KabCertificate {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::vector<CertificateCheck> checks;
  PLMap commutator;            ///< [y0, y1]
  PLMap commutator_by_y0;      ///< [y0, y1]^y0, expected g0
  PLMap commutator_by_y0y1inv; ///< [y0, y1]^(y0 y1^-1), expected g1

  bool all_passed() const;
};

/// The breaks of [y0, y1] forced by the construction, independent of how the
/// connector regions were filled.
PLMap expected_kab_commutator();

/// Checks every finitely checkable premise that makes <y0, y1> = K(a,b) = F:
/// slope membership, the support and relator conditions, non-commutation,
/// the two commutator identities yielding g0 and g1, and y0 > id on (0,1).
KabCertificate verify_kab_certificate(std::int64_t a, std::int64_t b, const PLMap& y0, const PLMap& y1);

}  // namespace thompsonf
