#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thompsonf/dyadic.hpp"

namespace thompsonf {

struct Breakpoint {
  Dyadic x;
  Dyadic y;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Open interval (lo, hi) on which a map has no fixed point.
struct Orbital {
  Rational lo;
  Rational hi;

  friend bool operator==(const Orbital&, const Orbital&) = default;
};

/// An element of Thompson's group F: a PL orientation-preserving homeomorphism
/// of [0,1] with dyadic breakpoints and power-of-two slopes.
///
/// The break list always starts at (0,0), ends at (1,1), and carries no
/// redundant interior point, so two maps are equal iff their lists are.
/// Products are in word order: compose(f, g) applies f first, then g.
class PLMap {
public:
  /// The identity.
  PLMap();

  /// Validates and canonicalizes a break list. (0,0) and (1,1) are added when
  /// absent; the points may be given in any order.
  static PLMap from_breaks(std::vector<Breakpoint> points);
  /// "(1/4,1/2);(1/2,3/4)". An empty string gives the identity.
  static PLMap parse_breaks(std::string_view text);

  const std::vector<Breakpoint>& breaks() const noexcept { return breaks_; }
  /// Breaks without the (0,0), (1,1) endpoints.
  std::span<const Breakpoint> interior_breaks() const;
  std::size_t segment_count() const noexcept { return breaks_.size() - 1; }
  /// log2 of the slope of segment i.
  std::int64_t segment_exponent(std::size_t i) const;

  bool is_identity() const noexcept { return breaks_.size() == 2; }

  /// "(1/4, 1/2); (1/2, 3/4)" without the endpoints; empty for the identity.
  std::string breaks_text() const;

  friend bool operator==(const PLMap&, const PLMap&) = default;

private:
  explicit PLMap(std::vector<Breakpoint> canonical) : breaks_(std::move(canonical)) {}
  friend PLMap make_canonical(std::vector<Breakpoint> points);

  std::vector<Breakpoint> breaks_;
};

PLMap identity();

Rational evaluate(const PLMap& f, const Rational& t);
Dyadic evaluate(const PLMap& f, const Dyadic& t);
/// Preimage of t under f.
Dyadic evaluate_inverse(const PLMap& f, const Dyadic& t);

PLMap compose(const PLMap& f, const PLMap& g);
PLMap inverse(const PLMap& f);
/// g^-1 f g in word order.
PLMap conjugate(const PLMap& f, const PLMap& g);
/// f g f^-1 g^-1 in word order.
PLMap commutator(const PLMap& f, const PLMap& g);
PLMap power(const PLMap& f, std::int64_t n);
/// Conjugation by t -> 1 - t.
PLMap rev(const PLMap& f);

/// log2 of the one-sided derivative of f at t. At a breakpoint the side
/// matters; at t = 0 only the right one exists, at t = 1 only the left one.
std::int64_t right_slope_exponent(const PLMap& f, const Rational& t);
std::int64_t left_slope_exponent(const PLMap& f, const Rational& t);

/// Maximal open intervals moved by f, in increasing order.
std::vector<Orbital> orbitals(const PLMap& f);

/// True iff f and g agree pointwise on [lo, hi].
bool support_equals(const PLMap& f, const PLMap& g, const Dyadic& lo, const Dyadic& hi);

inline constexpr std::int64_t kDefaultIterationCap = 1'000'000;

/// n such that lo < c f^n < lo + eps, where (lo, hi) = orb is an orbital of f
/// containing c. Iterates f or its inverse, whichever pushes points to lo.
std::int64_t push_to_end(const PLMap& f, const Orbital& orb, const Rational& c, const Rational& eps,
                         std::int64_t iteration_cap = kDefaultIterationCap);

/// Some element of F taking xs[i] to ys[i]. Both lists must be strictly
/// increasing, of equal length and inside (0,1). Between consecutive
/// constraints the two intervals are cut into the same number of standard
/// dyadic pieces which are matched affinely, so equal intervals map by the
/// identity.
PLMap dyadic_interpolator(std::span<const Dyadic> xs, std::span<const Dyadic> ys);
/// As above, rejecting non-dyadic input with BadInput.
PLMap dyadic_interpolator(std::span<const Rational> xs, std::span<const Rational> ys);

}  // namespace thompsonf
