// Construction of generators y0, y1 for the rectangular subgroup K(a,b).

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "thompsonf/error.hpp"
#include "thompsonf/thompson.hpp"

namespace thompsonf {

namespace {

// Slope exponents tried for the two boundary segments of a connector, in
// order of preference.
constexpr std::int64_t kCandidateExponents[] = {1, -1, 2, -2, 3, -3, 4, -4, 5, 6};

struct Connector {
  Dyadic c1, d1, c2, d2;
  std::vector<Breakpoint> waypoints;  // strictly inside (c1,c2) x (d1,d2)
};

Dyadic random_dyadic_between(const Dyadic& lo, const Dyadic& hi, std::uint32_t k, std::mt19937_64& rng) {
  // Uniform over m / 2^k with lo < m / 2^k < hi.
  BigInt lo_n = (lo.numerator() << (k - lo.exponent())) + 1;
  BigInt hi_n = (hi.numerator() << (k - hi.exponent())) - 1;
  BigInt span = hi_n - lo_n;
  const BigInt cap = BigInt(1) << 62;
  if (span > cap) span = cap;
  std::uniform_int_distribution<std::uint64_t> dist(0, static_cast<std::uint64_t>(span));
  return Dyadic(lo_n + dist(rng), k);
}

// Fills the region between breakpoints start and end, which both lie above the
// diagonal. The connector's first and last slopes avoid 2^forbidden. Its
// corners satisfy d1 > c2, so every point in between stays above y = x.
Connector make_connector(const Breakpoint& start, const Breakpoint& end, std::int64_t forbidden_a,
                         std::int64_t forbidden_b, std::mt19937_64* rng) {
  const Dyadic quarter = (end.x - start.x).scaled(-2);
  Connector c;
  c.c1 = start.x + quarter;
  c.c2 = end.x - quarter;

  std::vector<std::pair<std::int64_t, std::int64_t>> valid;
  for (std::int64_t e1 : kCandidateExponents) {
    if (e1 == forbidden_a || e1 == forbidden_b) continue;
    for (std::int64_t e2 : kCandidateExponents) {
      if (e2 == forbidden_a || e2 == forbidden_b) continue;
      Dyadic d1 = start.y + quarter.scaled(e1);
      Dyadic d2 = end.y - quarter.scaled(e2);
      if (d1 > c.c2 && d1 < d2) valid.emplace_back(e1, e2);
    }
  }
  if (valid.empty()) throw std::logic_error("no admissible connector slopes");

  auto [e1, e2] = valid.front();
  if (rng != nullptr) std::tie(e1, e2) = valid[std::uniform_int_distribution<std::size_t>(0, valid.size() - 1)(*rng)];
  c.d1 = start.y + quarter.scaled(e1);
  c.d2 = end.y - quarter.scaled(e2);

  if (rng != nullptr) {
    const std::uint32_t k = std::max({c.c1.exponent(), c.c2.exponent(), c.d1.exponent(), c.d2.exponent()}) + 4;
    const std::size_t count = std::uniform_int_distribution<std::size_t>(0, 3)(*rng);
    std::set<Dyadic> xs;
    std::set<Dyadic> ys;
    for (std::size_t tries = 0; xs.size() < count && tries < 64; ++tries)
      xs.insert(random_dyadic_between(c.c1, c.c2, k, *rng));
    for (std::size_t tries = 0; ys.size() < xs.size() && tries < 64; ++tries)
      ys.insert(random_dyadic_between(c.d1, c.d2, k, *rng));
    while (xs.size() > ys.size()) xs.erase(std::prev(xs.end()));
    auto yi = ys.begin();
    for (const auto& x : xs) c.waypoints.push_back({x, *yi++});
  }
  return c;
}

}  // namespace

GeneratorPair kab_generators(std::int64_t a, std::int64_t b, std::optional<std::uint64_t> seed) {
  if (a < 1 || b < 1) fail(ErrorCode::BadInput, "K(a,b) needs a, b >= 1");
  if (a > 10'000 || b > 10'000) fail(ErrorCode::BadInput, "a and b must be at most 10000");

  const Dyadic one(1);
  const Breakpoint p1 = a == 1 ? Breakpoint{Dyadic(BigInt(1), 4), Dyadic(BigInt(1), 3)}
                               : Breakpoint{Dyadic::power_of_two(-2 * a), Dyadic::power_of_two(-a)};
  const Breakpoint p2{Dyadic(BigInt(1), 3), Dyadic(BigInt(3), 3)};
  const Breakpoint p3{Dyadic(BigInt(5), 3), Dyadic(BigInt(7), 3)};
  const Breakpoint p4 = b == 1 ? Breakpoint{Dyadic(BigInt(7), 3), Dyadic(BigInt(15), 4)}
                               : Breakpoint{one - Dyadic::power_of_two(-b), one - Dyadic::power_of_two(-2 * b)};

  std::mt19937_64 engine(seed.value_or(0));
  std::mt19937_64* rng = seed ? &engine : nullptr;
  // Neighbouring slopes: 2^a before p1 and 1 after p2; 1 before p3 and 2^-b after p4.
  const Connector left = make_connector(p1, p2, a, 0, rng);
  const Connector right = make_connector(p3, p4, 0, -b, rng);

  std::vector<Dyadic> xs;
  std::vector<Dyadic> ys;
  auto add = [&](const Dyadic& x, const Dyadic& y) {
    xs.push_back(x);
    ys.push_back(y);
  };
  auto add_connector = [&](const Connector& c) {
    add(c.c1, c.d1);
    for (const auto& w : c.waypoints) add(w.x, w.y);
    add(c.c2, c.d2);
  };
  add(p1.x, p1.y);
  add_connector(left);
  add(p2.x, p2.y);
  add(p3.x, p3.y);
  add_connector(right);
  add(p4.x, p4.y);

  // Between consecutive constraints with a power-of-two ratio the interpolator
  // uses one affine piece, so the forced slopes near 0, on [1/8, 5/8] and
  // near 1 come out exactly as prescribed.
  PLMap y0 = dyadic_interpolator(std::span<const Dyadic>(xs), std::span<const Dyadic>(ys));
  for (const auto& bp : y0.interior_breaks())
    if (!(bp.y > bp.x)) throw std::logic_error("y0 construction touched the diagonal");

  std::vector<Breakpoint> y1_breaks{{p2.y, p2.y}, {p3.x, p3.y}};
  for (const auto& bp : y0.interior_breaks())
    if (bp.x > p3.x) y1_breaks.push_back(bp);
  PLMap y1 = PLMap::from_breaks(std::move(y1_breaks));
  return {std::move(y0), std::move(y1)};
}

}  // namespace thompsonf
