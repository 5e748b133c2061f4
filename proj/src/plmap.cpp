#include "thompsonf/plmap.hpp"

#include <algorithm>
#include <cctype>

#include "thompsonf/error.hpp"

namespace thompsonf {

namespace {

// Function-local so that PLMaps built during static initialization see them.
const Dyadic& zero() {
  static const Dyadic z{0};
  return z;
}
const Dyadic& one() {
  static const Dyadic o{1};
  return o;
}

bool same_odd_part(const Dyadic& a, const Dyadic& b) { return a.odd_part() == b.odd_part(); }

std::vector<std::int64_t> segment_exponents(const std::vector<Breakpoint>& pts) {
  std::vector<std::int64_t> out;
  out.reserve(pts.size() - 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    out.push_back(slope_exponent(pts[i + 1].x - pts[i].x, pts[i + 1].y - pts[i].y));
  return out;
}

// Index of the segment [x_i, x_{i+1}] used to evaluate at t. Points exactly
// on a break resolve to the segment on their right, except t = 1.
template <class T>
std::size_t find_segment(const std::vector<Breakpoint>& pts, const T& t, bool by_y = false) {
  auto coord = [by_y](const Breakpoint& b) -> const Dyadic& { return by_y ? b.y : b.x; };
  std::size_t lo = 0;
  std::size_t hi = pts.size() - 1;
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (T(coord(pts[mid])) <= t)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

PLMap make_canonical(std::vector<Breakpoint> pts) {
  auto exps = segment_exponents(pts);
  std::vector<Breakpoint> out;
  out.reserve(pts.size());
  out.push_back(pts.front());
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (exps[i - 1] != exps[i]) out.push_back(pts[i]);
  }
  out.push_back(pts.back());
  return PLMap(std::move(out));
}

PLMap::PLMap() : breaks_{{zero(), zero()}, {one(), one()}} {}

PLMap identity() { return PLMap(); }

PLMap PLMap::from_breaks(std::vector<Breakpoint> points) {
  for (const auto& p : points) {
    if (p.x < zero() || p.x > one() || p.y < zero() || p.y > one())
      fail(ErrorCode::CoordinateOutOfRange,
           "break (" + p.x.to_string() + "," + p.y.to_string() + ") lies outside the unit square");
    if ((p.x == zero()) != (p.y == zero()) || (p.x == one()) != (p.y == one()))
      fail(ErrorCode::CoordinateOutOfRange,
           "break (" + p.x.to_string() + "," + p.y.to_string() + ") does not fix the endpoints");
  }
  std::stable_sort(points.begin(), points.end(),
                   [](const Breakpoint& a, const Breakpoint& b) { return a.x < b.x; });
  if (points.empty() || points.front().x != zero()) points.insert(points.begin(), {zero(), zero()});
  if (points.back().x != one()) points.push_back({one(), one()});
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i].x < points[i + 1].x) || !(points[i].y < points[i + 1].y))
      fail(ErrorCode::NotMonotone, "breaks (" + points[i].x.to_string() + "," + points[i].y.to_string() +
                                       ") and (" + points[i + 1].x.to_string() + "," +
                                       points[i + 1].y.to_string() + ") are not strictly increasing");
  }
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    Dyadic dx = points[i + 1].x - points[i].x;
    Dyadic dy = points[i + 1].y - points[i].y;
    if (!same_odd_part(dx, dy))
      fail(ErrorCode::SlopeNotPowerOfTwo, "segment from (" + points[i].x.to_string() + "," +
                                              points[i].y.to_string() + ") has slope " + dy.to_string() +
                                              " / " + dx.to_string());
  }
  return make_canonical(std::move(points));
}

PLMap PLMap::parse_breaks(std::string_view text) {
  std::vector<Breakpoint> pts;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto bad = [&](const std::string& what) {
    fail(ErrorCode::ParseError, what + " at position " + std::to_string(i) + " in break list '" +
                                    std::string(text) + "'");
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') bad("expected '('");
    auto close = text.find(')', i);
    if (close == std::string_view::npos) bad("missing ')'");
    std::string_view inner = text.substr(i + 1, close - i - 1);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos) bad("expected 'x,y'");
    pts.push_back({Dyadic::parse(inner.substr(0, comma)), Dyadic::parse(inner.substr(comma + 1))});
    i = close + 1;
    skip_ws();
    if (i < text.size()) {
      if (text[i] != ';') bad("expected ';'");
      ++i;
      skip_ws();
      if (i == text.size()) bad("trailing ';'");
    }
  }
  return from_breaks(std::move(pts));
}

std::span<const Breakpoint> PLMap::interior_breaks() const {
  return std::span<const Breakpoint>(breaks_).subspan(1, breaks_.size() - 2);
}

std::int64_t PLMap::segment_exponent(std::size_t i) const {
  return slope_exponent(breaks_[i + 1].x - breaks_[i].x, breaks_[i + 1].y - breaks_[i].y);
}

std::string PLMap::breaks_text() const {
  std::string out;
  for (const auto& b : interior_breaks()) {
    if (!out.empty()) out += "; ";
    out += "(" + b.x.to_string() + ", " + b.y.to_string() + ")";
  }
  return out;
}

// ---------------------------------------------------------------------------

Rational evaluate(const PLMap& f, const Rational& t) {
  if (t < Rational(0) || t > Rational(1)) fail(ErrorCode::OutOfRange, t.to_string() + " is outside [0,1]");
  const auto& pts = f.breaks();
  std::size_t i = find_segment(pts, t);
  std::int64_t e = f.segment_exponent(i);
  return Rational(pts[i].y) + (t - Rational(pts[i].x)) * Rational(Dyadic::power_of_two(e));
}

Dyadic evaluate(const PLMap& f, const Dyadic& t) {
  if (t < zero() || t > one()) fail(ErrorCode::OutOfRange, t.to_string() + " is outside [0,1]");
  const auto& pts = f.breaks();
  std::size_t i = find_segment(pts, t);
  return pts[i].y + (t - pts[i].x).scaled(f.segment_exponent(i));
}

Dyadic evaluate_inverse(const PLMap& f, const Dyadic& t) {
  if (t < zero() || t > one()) fail(ErrorCode::OutOfRange, t.to_string() + " is outside [0,1]");
  const auto& pts = f.breaks();
  std::size_t i = find_segment(pts, t, /*by_y=*/true);
  return pts[i].x + (t - pts[i].y).scaled(-f.segment_exponent(i));
}

PLMap compose(const PLMap& f, const PLMap& g) {
  std::vector<Dyadic> xs;
  xs.reserve(f.breaks().size() + g.breaks().size());
  for (const auto& b : f.breaks()) xs.push_back(b.x);
  for (const auto& b : g.breaks()) xs.push_back(evaluate_inverse(f, b.x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Breakpoint> pts;
  pts.reserve(xs.size());
  for (auto& x : xs) {
    Dyadic y = evaluate(g, evaluate(f, x));
    pts.push_back({std::move(x), std::move(y)});
  }
  return make_canonical(std::move(pts));
}

PLMap inverse(const PLMap& f) {
  std::vector<Breakpoint> pts;
  pts.reserve(f.breaks().size());
  for (const auto& b : f.breaks()) pts.push_back({b.y, b.x});
  return make_canonical(std::move(pts));
}

PLMap conjugate(const PLMap& f, const PLMap& g) { return compose(compose(inverse(g), f), g); }

PLMap commutator(const PLMap& f, const PLMap& g) {
  return compose(compose(compose(f, g), inverse(f)), inverse(g));
}

PLMap power(const PLMap& f, std::int64_t n) {
  PLMap base = n < 0 ? inverse(f) : f;
  // Avoid negating INT64_MIN.
  std::uint64_t k = n < 0 ? ~static_cast<std::uint64_t>(n) + 1 : static_cast<std::uint64_t>(n);
  PLMap result;
  while (k > 0) {
    if (k & 1U) result = compose(result, base);
    k >>= 1U;
    if (k > 0) base = compose(base, base);
  }
  return result;
}

PLMap rev(const PLMap& f) {
  std::vector<Breakpoint> pts;
  pts.reserve(f.breaks().size());
  for (auto it = f.breaks().rbegin(); it != f.breaks().rend(); ++it) pts.push_back({one() - it->x, one() - it->y});
  return make_canonical(std::move(pts));
}

std::int64_t right_slope_exponent(const PLMap& f, const Rational& t) {
  if (t < Rational(0) || t >= Rational(1))
    fail(ErrorCode::OutOfRange, "right derivative needs 0 <= t < 1, got " + t.to_string());
  return f.segment_exponent(find_segment(f.breaks(), t));
}

std::int64_t left_slope_exponent(const PLMap& f, const Rational& t) {
  if (t <= Rational(0) || t > Rational(1))
    fail(ErrorCode::OutOfRange, "left derivative needs 0 < t <= 1, got " + t.to_string());
  const auto& pts = f.breaks();
  std::size_t i = find_segment(pts, t);
  if (i > 0 && Rational(pts[i].x) == t) --i;
  if (i + 1 == pts.size()) --i;
  return f.segment_exponent(i);
}

std::vector<Orbital> orbitals(const PLMap& f) {
  // Walk the graph as an alternating sequence point, gap, point, ... tracking
  // the sign of f(t) - t on each. Interior zero crossings become points.
  struct Item {
    Rational at;  // meaningful for points only
    int sign;
    bool is_point;
  };
  std::vector<Item> items;
  const auto& pts = f.breaks();
  items.push_back({Rational(pts[0].x), 0, true});
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Dyadic d0 = pts[i].y - pts[i].x;
    Dyadic d1 = pts[i + 1].y - pts[i + 1].x;
    int s0 = d0.sign();
    int s1 = d1.sign();
    if (s0 != 0 && s1 != 0 && s0 != s1) {
      Dyadic slope = Dyadic::power_of_two(f.segment_exponent(i));
      Rational crossing = Rational(pts[i].x) + Rational(d0) / Rational(one() - slope);
      items.push_back({Rational(), s0, false});
      items.push_back({crossing, 0, true});
      items.push_back({Rational(), s1, false});
    } else {
      items.push_back({Rational(), s0 != 0 ? s0 : s1, false});
    }
    items.push_back({Rational(pts[i + 1].x), s1, true});
  }

  std::vector<Orbital> out;
  bool open = false;
  Rational lo;
  Rational last_point;
  for (const auto& it : items) {
    if (it.is_point) {
      if (open && it.sign == 0) {
        out.push_back({lo, it.at});
        open = false;
      }
      last_point = it.at;
    } else if (!open && it.sign != 0) {
      open = true;
      lo = last_point;
    }
  }
  return out;
}

bool support_equals(const PLMap& f, const PLMap& g, const Dyadic& lo, const Dyadic& hi) {
  if (!(lo < hi)) fail(ErrorCode::BadInput, "support_equals needs lo < hi");
  std::vector<Dyadic> grid{lo, hi};
  for (const auto* m : {&f, &g})
    for (const auto& b : m->breaks())
      if (lo < b.x && b.x < hi) grid.push_back(b.x);
  return std::all_of(grid.begin(), grid.end(),
                     [&](const Dyadic& x) { return evaluate(f, x) == evaluate(g, x); });
}

std::int64_t push_to_end(const PLMap& f, const Orbital& orb, const Rational& c, const Rational& eps,
                         std::int64_t iteration_cap) {
  if (eps.sign() <= 0) fail(ErrorCode::BadInput, "eps must be positive");
  auto orbs = orbitals(f);
  if (std::find(orbs.begin(), orbs.end(), orb) == orbs.end())
    fail(ErrorCode::NotInOrbital,
         "(" + orb.lo.to_string() + ", " + orb.hi.to_string() + ") is not an orbital of the map");
  if (!(orb.lo < c && c < orb.hi))
    fail(ErrorCode::NotInOrbital, c.to_string() + " is not inside (" + orb.lo.to_string() + ", " +
                                      orb.hi.to_string() + ")");
  const Rational target = orb.lo + eps;
  if (c < target) return 0;
  const bool forward = evaluate(f, c) < c;
  const PLMap step = forward ? f : inverse(f);
  Rational t = c;
  for (std::int64_t n = 1; n <= iteration_cap; ++n) {
    t = evaluate(step, t);
    if (t < target) return forward ? n : -n;
  }
  fail(ErrorCode::IterationCap, "no iterate within " + std::to_string(iteration_cap) + " steps");
}

// ---------------------------------------------------------------------------

namespace {

// Maximal standard dyadic intervals [k/2^n, (k+1)/2^n] tiling [p, q], as lengths.
std::vector<Dyadic> standard_pieces(const Dyadic& p, const Dyadic& q) {
  std::vector<Dyadic> out;
  Dyadic t = p;
  while (t < q) {
    std::int64_t n = t.exponent();
    Dyadic len = Dyadic::power_of_two(-n);
    while (t + len > q) {
      ++n;
      len = Dyadic::power_of_two(-n);
    }
    out.push_back(len);
    t += len;
  }
  return out;
}

void split_largest(std::vector<Dyadic>& pieces) {
  auto it = std::max_element(pieces.begin(), pieces.end());
  Dyadic half = it->scaled(-1);
  *it = half;
  pieces.insert(it, half);
}

// Appends breaks of a PL map [p,q] -> [r,s], excluding (p, r).
void append_interval_map(std::vector<Breakpoint>& out, const Dyadic& p, const Dyadic& q, const Dyadic& r,
                         const Dyadic& s) {
  if (same_odd_part(q - p, s - r)) {
    out.push_back({q, s});
    return;
  }
  auto src = standard_pieces(p, q);
  auto dst = standard_pieces(r, s);
  while (src.size() != dst.size()) split_largest(src.size() < dst.size() ? src : dst);
  Dyadic x = p;
  Dyadic y = r;
  for (std::size_t i = 0; i < src.size(); ++i) {
    x += src[i];
    y += dst[i];
    out.push_back({x, y});
  }
}

void check_increasing_inside(std::span<const Dyadic> v, const char* name) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(zero() < v[i] && v[i] < one()))
      fail(ErrorCode::BadInput, std::string(name) + " entry " + v[i].to_string() + " is outside (0,1)");
    if (i > 0 && !(v[i - 1] < v[i]))
      fail(ErrorCode::BadInput, std::string(name) + " is not strictly increasing");
  }
}

}  // namespace

PLMap dyadic_interpolator(std::span<const Dyadic> xs, std::span<const Dyadic> ys) {
  if (xs.size() != ys.size()) fail(ErrorCode::BadInput, "xs and ys differ in length");
  check_increasing_inside(xs, "xs");
  check_increasing_inside(ys, "ys");
  std::vector<Breakpoint> pts{{zero(), zero()}};
  Dyadic px = zero();
  Dyadic py = zero();
  for (std::size_t i = 0; i <= xs.size(); ++i) {
    const Dyadic& qx = i < xs.size() ? xs[i] : one();
    const Dyadic& qy = i < ys.size() ? ys[i] : one();
    append_interval_map(pts, px, qx, py, qy);
    px = qx;
    py = qy;
  }
  return make_canonical(std::move(pts));
}

PLMap dyadic_interpolator(std::span<const Rational> xs, std::span<const Rational> ys) {
  auto convert = [](std::span<const Rational> v) {
    std::vector<Dyadic> out;
    out.reserve(v.size());
    for (const auto& r : v) {
      auto d = r.to_dyadic();
      if (!d) fail(ErrorCode::BadInput, r.to_string() + " is not a dyadic rational");
      out.push_back(*d);
    }
    return out;
  };
  auto dx = convert(xs);
  auto dy = convert(ys);
  return dyadic_interpolator(std::span<const Dyadic>(dx), std::span<const Dyadic>(dy));
}

}  // namespace thompsonf
