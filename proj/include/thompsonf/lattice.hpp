#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thompsonf {

struct IntPair {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const IntPair&, const IntPair&) = default;
  friend auto operator<=>(const IntPair&, const IntPair&) = default;
};

/// K~(a,b) = <(a,0), (0,b)>.
struct RectPair {
  std::int64_t a = 1;
  std::int64_t b = 1;

  friend bool operator==(const RectPair&, const RectPair&) = default;
};

/// A finite-index subgroup of Z^2 in triangular form: the span of (g,h) and
/// (0,m) with g, m > 0 and 0 <= h < m. Every such subgroup has exactly one
/// such basis, so equality is field equality.
class LatticeSubgroup {
public:
  /// Z^2 itself.
  LatticeSubgroup() = default;

  /// Throws NotFiniteIndex when vs spans a subgroup of rank < 2.
  static LatticeSubgroup from_generators(std::span<const IntPair> vs);
  /// Validates and wraps an already canonical triple.
  static LatticeSubgroup from_canonical(std::int64_t g, std::int64_t h, std::int64_t m);
  static LatticeSubgroup rectangular(RectPair r) { return from_canonical(r.a, 0, r.b); }

  std::int64_t g() const noexcept { return g_; }
  std::int64_t h() const noexcept { return h_; }
  std::int64_t m() const noexcept { return m_; }

  /// "g=1 h=1 m=2".
  std::string to_string() const;

  friend bool operator==(const LatticeSubgroup&, const LatticeSubgroup&) = default;
  friend auto operator<=>(const LatticeSubgroup&, const LatticeSubgroup&) = default;

private:
  LatticeSubgroup(std::int64_t g, std::int64_t h, std::int64_t m) : g_(g), h_(h), m_(m) {}

  std::int64_t g_ = 1;
  std::int64_t h_ = 0;
  std::int64_t m_ = 1;
};

/// "(3,7);(5,11)".
std::vector<IntPair> parse_generator_list(std::string_view text);
std::string generator_list_text(std::span<const IntPair> vs);

bool contains(const LatticeSubgroup& L, IntPair v);
std::int64_t index(const LatticeSubgroup& L);

/// Largest rectangular subgroup inside L: (g m / gcd(h,m), m).
RectPair inner_rect(const LatticeSubgroup& L);
/// Smallest rectangular subgroup containing L: (g, gcd(h,m)).
RectPair outer_rect(const LatticeSubgroup& L);
/// |L / inner_rect(L)| = m / gcd(h,m).
std::int64_t residue(const LatticeSubgroup& L);

struct CyclicQuotient {
  IntPair generator;  ///< in Z_a x Z_b for (a,b) = inner_rect(L)
  std::int64_t order = 1;
};

/// Generator of the cyclic group L / inner_rect(L) inside Z_a x Z_b.
CyclicQuotient cyclic_quotient_generator(const LatticeSubgroup& L);

/// {(x/a', y/b') : (x,y) in L} for (a',b') = outer_rect(L).
LatticeSubgroup tau_rescale(const LatticeSubgroup& L);
/// {(y,x) : (x,y) in L}.
LatticeSubgroup rev_lattice(const LatticeSubgroup& L);

/// All subgroups of index n, ordered by (g, h, m).
std::vector<LatticeSubgroup> enumerate_index(std::int64_t n);

}  // namespace thompsonf
