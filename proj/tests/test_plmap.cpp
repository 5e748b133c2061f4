#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "test_util.hpp"
#include "thompsonf/plmap.hpp"
#include "thompsonf/thompson.hpp"

using namespace thompsonf;
using oracle::Q;
using oracle::to_q;
using testutil::code_of;

namespace {

Dyadic D(const char* s) { return Dyadic::parse(s); }
Rational R(const char* s) { return Rational::parse(s); }
PLMap B(const char* s) { return PLMap::parse_breaks(s); }

const PLMap f0 = B("(1/4,1/2);(1/2,3/4)");
const PLMap f1 = B("(1/2,1/2);(5/8,3/4);(3/4,7/8)");

PLMap random_map(std::mt19937_64& rng) {
  return rng() % 2 ? oracle::random_tree_pair(rng, 7) : oracle::random_interpolated(rng, 4, 6);
}

// Sample points: every break of both maps and a 1/64 grid.
std::vector<Dyadic> sample_points(const PLMap& f, const PLMap& g) {
  std::vector<Dyadic> pts;
  for (int k = 0; k <= 64; ++k) pts.push_back(Dyadic(k, 6));
  for (const auto& b : f.breaks()) pts.push_back(b.x);
  for (const auto& b : g.breaks()) pts.push_back(b.x);
  return pts;
}

struct Interval {
  Rational lo, hi;
};

std::vector<Interval> merged_support(const std::vector<PLMap>& maps) {
  std::vector<Interval> all;
  for (const auto& f : maps)
    for (const auto& o : orbitals(f)) all.push_back({o.lo, o.hi});
  std::sort(all.begin(), all.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  for (const auto& iv : all) {
    if (!out.empty() && iv.lo < out.back().hi) {
      if (out.back().hi < iv.hi) out.back().hi = iv.hi;
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

bool inside_union(const Orbital& o, const std::vector<Interval>& u) {
  return std::any_of(u.begin(), u.end(), [&](const Interval& c) { return c.lo <= o.lo && o.hi <= c.hi; });
}

}  // namespace

TEST_CASE("identity") {
  PLMap id = identity();
  CHECK(id.is_identity());
  CHECK(evaluate(id, R("3/8")) == R("3/8"));
  CHECK(compose(id, f0) == f0);
  CHECK(orbitals(id).empty());
  CHECK(id.breaks_text().empty());
  CHECK(B("") == id);
}

TEST_CASE("from_breaks validation") {
  CHECK(f0.breaks().size() == 4);
  CHECK(f0.breaks_text() == "(1/4, 1/2); (1/2, 3/4)");
  CHECK(f1.breaks_text() == "(1/2, 1/2); (5/8, 3/4); (3/4, 7/8)");
  CHECK(code_of([] { B("(1/4,3/4);(1/2,1/2)"); }) == ErrorCode::NotMonotone);
  CHECK(code_of([] { B("(1/4,3/4)"); }) == ErrorCode::SlopeNotPowerOfTwo);
  CHECK(code_of([] { B("(3/2,1/2)"); }) == ErrorCode::CoordinateOutOfRange);
  CHECK(code_of([] { B("(0,1/2)"); }) == ErrorCode::CoordinateOutOfRange);
  CHECK(code_of([] { B("(1/4,1/2)(1/2,3/4)"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { B("(1/4;1/2)"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { B("(1/3,1/2)"); }) == ErrorCode::ParseError);
  // order of input points and redundant collinear points do not matter
  CHECK(B("(1/2,3/4);(1/4,1/2)") == f0);
  CHECK(B("(1/4,1/2);(3/8,5/8);(1/2,3/4);(0,0);(1,1)") == f0);
  CHECK(B("(1/4,1/4);(1/2,1/2)").is_identity());
}

TEST_CASE("evaluate") {
  CHECK(evaluate(f0, R("1/4")) == R("1/2"));
  CHECK(evaluate(f0, R("3/8")) == R("5/8"));
  CHECK(evaluate(f0, R("0")) == R("0"));
  CHECK(evaluate(f0, R("1")) == R("1"));
  CHECK(evaluate(f0, R("1/3")) == R("7/12"));
  CHECK(evaluate(f0, D("1/8")) == D("1/4"));
  CHECK(evaluate_inverse(f0, D("1/4")) == D("1/8"));
  CHECK(code_of([] { evaluate(f0, R("3/2")); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { evaluate(f0, R("-1/2")); }) == ErrorCode::OutOfRange);
}

TEST_CASE("compose, inverse, power, conjugate, commutator examples") {
  CHECK(compose(f0, inverse(f0)).is_identity());
  CHECK(compose(f0, f0) == B("(1/8,1/2);(1/4,3/4);(1/2,7/8)"));
  CHECK(inverse(identity()).is_identity());
  CHECK(inverse(f0) == B("(1/2,1/4);(3/4,1/2)"));
  CHECK(inverse(inverse(f1)) == f1);
  CHECK(conjugate(f0, identity()) == f0);
  CHECK(commutator(f0, f0).is_identity());
  CHECK(commutator(compose(f0, inverse(f1)), conjugate(f1, f0)).is_identity());
  CHECK(power(f0, 0).is_identity());
  CHECK(power(f0, 2) == compose(f0, f0));
  CHECK(power(f0, -1) == inverse(f0));
  CHECK(power(f0, -3) == inverse(compose(f0, compose(f0, f0))));
  // word order: f then g
  CHECK(evaluate(compose(f0, f1), R("1/4")) == evaluate(f1, evaluate(f0, R("1/4"))));
}

TEST_CASE("rev") {
  CHECK(rev(identity()).is_identity());
  CHECK(rev(f0) == B("(1/2,1/4);(3/4,1/2)"));
  CHECK(rev(rev(f1)) == f1);
}

TEST_CASE("orbitals examples") {
  auto o = orbitals(f0);
  REQUIRE(o.size() == 1);
  CHECK(o[0] == Orbital{0, 1});
  auto [g0, g1] = g0_g1();
  CHECK(orbitals(g1) == std::vector<Orbital>{{R("3/8"), R("5/8")}});
  CHECK(orbitals(g0) == std::vector<Orbital>{{R("3/8"), R("7/8")}});
  CHECK(orbitals(f1) == std::vector<Orbital>{{R("1/2"), R("1")}});
  // crossing inside a segment: fixed point at a non-break, non-dyadic point
  PLMap h = compose(f0, rev(f0));
  for (const auto& orb : orbitals(h)) {
    CHECK(evaluate(h, orb.lo) == orb.lo);
    CHECK(evaluate(h, orb.hi) == orb.hi);
  }
}

TEST_CASE("support_equals") {
  CHECK(support_equals(f0, f0, D("1/8"), D("3/4")));
  CHECK_FALSE(support_equals(f0, f1, Dyadic(0), D("1/8")));
  CHECK(support_equals(f1, identity(), Dyadic(0), D("1/2")));
  CHECK_FALSE(support_equals(f1, identity(), Dyadic(0), D("9/16")));
}

TEST_CASE("push_to_end") {
  const Orbital unit{0, 1};
  // 1/2 -> 1/4 -> 1/8 under f0^-1; 1/4 itself is not strictly below 0 + 1/4
  CHECK(push_to_end(f0, unit, R("1/2"), R("1/4")) == -2);
  CHECK(evaluate(power(f0, -2), R("1/2")) == R("1/8"));
  CHECK(push_to_end(f0, unit, R("1/2"), R("1")) == 0);
  CHECK(code_of([&] { push_to_end(f0, {R("1/2"), 1}, R("3/4"), R("1/4")); }) == ErrorCode::NotInOrbital);
  CHECK(code_of([&] { push_to_end(f1, {R("1/2"), 1}, R("1/4"), R("1/4")); }) == ErrorCode::NotInOrbital);
  CHECK(code_of([&] { push_to_end(f0, unit, R("1/2"), R("0")); }) == ErrorCode::BadInput);
  CHECK(code_of([&] { push_to_end(f0, unit, R("1/2"), R("1/1000000"), 3); }) == ErrorCode::IterationCap);
  // g1 moves points of (3/8,5/8) up, so reaching 3/8 needs negative powers
  auto [g0, g1] = g0_g1();
  std::int64_t n = push_to_end(g1, {R("3/8"), R("5/8")}, R("1/2"), R("1/64"));
  Rational img = evaluate(power(g1, n), R("1/2"));
  CHECK(n < 0);
  CHECK(R("3/8") < img);
  CHECK(img < R("3/8") + R("1/64"));
}

TEST_CASE("push_to_end property") {
  std::mt19937_64 rng(5);
  int tested = 0;
  for (int i = 0; i < 200; ++i) {
    PLMap f = random_map(rng);
    for (const auto& orb : orbitals(f)) {
      Rational c = (orb.lo + orb.hi) / Rational(2);
      Rational eps = (orb.hi - orb.lo) / Rational(1000);
      std::int64_t n = push_to_end(f, orb, c, eps);
      Rational img = evaluate(power(f, n), c);
      CHECK(orb.lo < img);
      CHECK(img < orb.lo + eps);
      ++tested;
    }
  }
  CHECK(tested > 50);
}

TEST_CASE("dyadic_interpolator") {
  std::vector<Dyadic> xs{D("1/4"), D("1/2")}, ys{D("1/2"), D("3/4")};
  PLMap f = dyadic_interpolator(xs, ys);
  CHECK(evaluate(f, D("1/4")) == D("1/2"));
  CHECK(evaluate(f, D("1/2")) == D("3/4"));
  CHECK(dyadic_interpolator(xs, xs).is_identity());
  std::vector<Dyadic> empty;
  CHECK(dyadic_interpolator(empty, empty).is_identity());
  std::vector<Rational> rx{R("1/2")}, ry{R("1/3")};
  CHECK(code_of([&] { dyadic_interpolator(rx, ry); }) == ErrorCode::BadInput);
  std::vector<Dyadic> one{D("1/2")};
  CHECK(code_of([&] { dyadic_interpolator(xs, one); }) == ErrorCode::BadInput);
  std::vector<Dyadic> down{D("1/2"), D("1/4")};
  CHECK(code_of([&] { dyadic_interpolator(down, xs); }) == ErrorCode::BadInput);
  std::vector<Dyadic> edge{Dyadic(0), D("1/2")};
  CHECK(code_of([&] { dyadic_interpolator(edge, xs); }) == ErrorCode::BadInput);
}

TEST_CASE("dyadic_interpolator contract on random lists") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    std::set<Dyadic> sx, sy;
    std::uniform_int_distribution<int> count(1, 6);
    int k = count(rng);
    while (static_cast<int>(sx.size()) < k) {
      Dyadic d = oracle::random_unit_dyadic(rng, 9);
      if (d.sign() > 0 && d < Dyadic(1)) sx.insert(d);
    }
    while (static_cast<int>(sy.size()) < k) {
      Dyadic d = oracle::random_unit_dyadic(rng, 9);
      if (d.sign() > 0 && d < Dyadic(1)) sy.insert(d);
    }
    std::vector<Dyadic> xs(sx.begin(), sx.end()), ys(sy.begin(), sy.end());
    PLMap f = dyadic_interpolator(xs, ys);
    for (int j = 0; j < k; ++j) CHECK(evaluate(f, xs[j]) == ys[j]);
  }
}

TEST_CASE("evaluation matches interpolation oracle") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    PLMap f = random_map(rng);
    for (const auto& t : sample_points(f, f)) CHECK(to_q(evaluate(f, t)) == oracle::interpolate(f, to_q(t)));
    for (std::size_t s = 0; s < f.segment_count(); ++s) {
      const auto& a = f.breaks()[s];
      const auto& b = f.breaks()[s + 1];
      auto e = oracle::log2_exact((to_q(b.y) - to_q(a.y)) / (to_q(b.x) - to_q(a.x)));
      REQUIRE(e.has_value());
      CHECK(*e == f.segment_exponent(s));
    }
  }
}

TEST_CASE("group laws on random maps") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 150; ++i) {
    PLMap f = random_map(rng), g = random_map(rng), h = random_map(rng);
    PLMap fg = compose(f, g);
    for (const auto& t : sample_points(f, g))
      CHECK(to_q(evaluate(fg, t)) == oracle::interpolate(g, oracle::interpolate(f, to_q(t))));
    CHECK(compose(fg, h) == compose(f, compose(g, h)));
    CHECK(compose(f, identity()) == f);
    CHECK(compose(identity(), f) == f);
    CHECK(compose(f, inverse(f)).is_identity());
    CHECK(compose(inverse(f), f).is_identity());
    CHECK(conjugate(conjugate(f, g), h) == conjugate(f, compose(g, h)));
    CHECK(conjugate(f, g) == compose(compose(inverse(g), f), g));
    CHECK(commutator(f, g) == compose(compose(f, g), compose(inverse(f), inverse(g))));
    CHECK(rev(rev(f)) == f);
    CHECK(rev(compose(f, g)) == compose(rev(f), rev(g)));
    PLMap finv = inverse(f);
    for (const auto& b : finv.breaks()) CHECK(evaluate(f, b.y) == b.x);
  }
}

TEST_CASE("canonicalization soundness") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 150; ++i) {
    PLMap f = random_map(rng);
    CHECK(PLMap::from_breaks(f.breaks()) == f);
    // inserting points on existing segments gives back the same map
    std::vector<Breakpoint> dense = f.breaks();
    for (int k = 1; k < 32; k += 3) {
      Dyadic t(k, 5);
      if (std::none_of(dense.begin(), dense.end(), [&](const Breakpoint& b) { return b.x == t; }))
        dense.push_back({t, evaluate(f, t)});
    }
    PLMap g = PLMap::from_breaks(dense);
    CHECK(g == f);
    for (int k = 0; k <= 128; ++k) CHECK(evaluate(g, Dyadic(k, 7)) == evaluate(f, Dyadic(k, 7)));
    for (std::size_t s = 0; s + 1 < f.segment_count(); ++s) CHECK(f.segment_exponent(s) != f.segment_exponent(s + 1));
  }
}

TEST_CASE("orbitals partition [0,1]") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    PLMap f = random_map(rng);
    auto orbs = orbitals(f);
    Rational prev = 0;
    for (const auto& o : orbs) {
      CHECK(prev <= o.lo);
      CHECK(o.lo < o.hi);
      CHECK(evaluate(f, o.lo) == o.lo);
      CHECK(evaluate(f, o.hi) == o.hi);
      Rational mid = (o.lo + o.hi) / Rational(2);
      CHECK(evaluate(f, mid) != mid);
      // the sign of f(t) - t is constant on an orbital
      Rational q1 = o.lo + (o.hi - o.lo) / Rational(4), q3 = o.hi - (o.hi - o.lo) / Rational(4);
      CHECK(((evaluate(f, q1) < q1) == (evaluate(f, mid) < mid)));
      CHECK(((evaluate(f, q3) < q3) == (evaluate(f, mid) < mid)));
      if (prev < o.lo) CHECK(evaluate(f, (prev + o.lo) / Rational(2)) == (prev + o.lo) / Rational(2));
      prev = o.hi;
    }
    if (prev < Rational(1)) CHECK(evaluate(f, (prev + 1) / Rational(2)) == (prev + 1) / Rational(2));
    // every break off the orbitals is fixed
    for (const auto& b : f.breaks()) {
      bool in_orbital = std::any_of(orbs.begin(), orbs.end(), [&](const Orbital& o) {
        return o.lo < Rational(b.x) && Rational(b.x) < o.hi;
      });
      if (!in_orbital) CHECK(b.x == b.y);
    }
  }
}

TEST_CASE("conjugate orbitals are g-images with matching end slopes") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    PLMap f = random_map(rng), g = random_map(rng);
    auto orbs = orbitals(f);
    auto conj = orbitals(conjugate(f, g));
    REQUIRE(conj.size() == orbs.size());
    for (std::size_t k = 0; k < orbs.size(); ++k) {
      CHECK(conj[k].lo == evaluate(g, orbs[k].lo));
      CHECK(conj[k].hi == evaluate(g, orbs[k].hi));
      CHECK(right_slope_exponent(conjugate(f, g), conj[k].lo) == right_slope_exponent(f, orbs[k].lo));
      CHECK(left_slope_exponent(conjugate(f, g), conj[k].hi) == left_slope_exponent(f, orbs[k].hi));
    }
  }
}

TEST_CASE("disjoint supports commute") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<int> cut(1, 15);
    Dyadic c(cut(rng), 4);
    PLMap f = oracle::random_supported_in(rng, Dyadic(0), c, 5);
    PLMap g = oracle::random_supported_in(rng, c, Dyadic(1), 5);
    CHECK(compose(f, g) == compose(g, f));
    CHECK(commutator(f, g).is_identity());
  }
}

TEST_CASE("support of words lies in the union of supports") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    std::uniform_int_distribution<int> cut(1, 15);
    Dyadic a(cut(rng), 4), b(cut(rng), 4);
    if (b < a) std::swap(a, b);
    if (a == b) continue;
    PLMap f = oracle::random_supported_in(rng, Dyadic(0), b, 5);
    PLMap g = oracle::random_supported_in(rng, a, Dyadic(1), 5);
    auto u = merged_support({f, g});
    std::vector<PLMap> words{f, g};
    std::uniform_int_distribution<int> len(1, 6);
    for (int w = 0; w < 10; ++w) {
      PLMap x = identity();
      for (int k = len(rng); k > 0; --k) {
        const PLMap& s = rng() % 2 ? f : g;
        x = compose(x, rng() % 2 ? s : inverse(s));
      }
      for (const auto& o : orbitals(x)) CHECK(inside_union(o, u));
      words.push_back(x);
    }
    auto sampled = merged_support(words);
    REQUIRE(sampled.size() == u.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
      CHECK(sampled[k].lo == u[k].lo);
      CHECK(sampled[k].hi == u[k].hi);
    }
  }
}
