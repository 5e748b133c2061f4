#include "thompsonf/lattice.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>

#include "thompsonf/error.hpp"

namespace thompsonf {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    fail(ErrorCode::BadInput, "lattice coordinates overflow 64-bit integers");
  return static_cast<std::int64_t>(v);
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// s*a + t*b = g = gcd(a,b) >= 0.
struct Bezout {
  std::int64_t g, s, t;
};

Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

}  // namespace

LatticeSubgroup LatticeSubgroup::from_generators(std::span<const IntPair> vs) {
  // Column elimination: keep one pivot row (px, py) carrying the gcd of the
  // first coordinates seen so far, and fold every vector with x = 0 that the
  // elimination produces into the gcd of second coordinates.
  std::int64_t px = 0;
  std::int64_t py = 0;
  std::int64_t ygcd = 0;
  for (const auto& v : vs) {
    if (v.x == 0) {
      ygcd = std::gcd(ygcd, narrow(Wide(v.y) < 0 ? -Wide(v.y) : Wide(v.y)));
    } else if (px == 0) {
      px = v.x;
      py = v.y;
    } else {
      Bezout bz = extended_gcd(px, v.x);
      std::int64_t new_y = narrow(Wide(bz.s) * py + Wide(bz.t) * v.y);
      // (v.x/g) * pivot - (px/g) * v has zero first coordinate.
      Wide eliminated = Wide(v.x / bz.g) * py - Wide(px / bz.g) * v.y;
      if (eliminated < 0) eliminated = -eliminated;
      ygcd = std::gcd(ygcd, narrow(eliminated));
      px = bz.g;
      py = new_y;
    }
    if (ygcd != 0) py = floor_mod(py, ygcd);
  }
  if (px == 0 || ygcd == 0) {
    fail(ErrorCode::NotFiniteIndex,
         "generators " + generator_list_text(vs) + " span a subgroup of rank < 2, which has infinite index");
  }
  if (px < 0) {
    px = -px;
    py = -py;
  }
  return LatticeSubgroup(px, floor_mod(py, ygcd), ygcd);
}

LatticeSubgroup LatticeSubgroup::from_canonical(std::int64_t g, std::int64_t h, std::int64_t m) {
  if (g <= 0 || m <= 0 || h < 0 || h >= m)
    fail(ErrorCode::BadInput, "(g,h,m) = (" + std::to_string(g) + "," + std::to_string(h) + "," +
                                  std::to_string(m) + ") is not canonical");
  return LatticeSubgroup(g, h, m);
}

std::string LatticeSubgroup::to_string() const {
  return "g=" + std::to_string(g_) + " h=" + std::to_string(h_) + " m=" + std::to_string(m_);
}

std::vector<IntPair> parse_generator_list(std::string_view text) {
  std::vector<IntPair> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto bad = [&](const std::string& what) {
    fail(ErrorCode::ParseError,
         what + " at position " + std::to_string(i) + " in generator list '" + std::string(text) + "'");
  };
  auto number = [&]() -> std::int64_t {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view tok = text.substr(start, i - start);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      i = start;
      bad("expected an integer");
    }
    skip_ws();
    return v;
  };
  skip_ws();
  if (i == text.size()) bad("empty generator list");
  while (i < text.size()) {
    if (text[i] != '(') bad("expected '('");
    ++i;
    std::int64_t x = number();
    if (i >= text.size() || text[i] != ',') bad("expected ','");
    ++i;
    std::int64_t y = number();
    if (i >= text.size() || text[i] != ')') bad("expected ')'");
    ++i;
    out.push_back({x, y});
    skip_ws();
    if (i < text.size()) {
      if (text[i] != ';') bad("expected ';'");
      ++i;
      skip_ws();
      if (i == text.size()) bad("trailing ';'");
    }
  }
  return out;
}

std::string generator_list_text(std::span<const IntPair> vs) {
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "" : ";") + ("(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")");
  return s;
}

bool contains(const LatticeSubgroup& L, IntPair v) {
  if (v.x % L.g() != 0) return false;
  Wide rest = Wide(v.y) - Wide(v.x / L.g()) * L.h();
  return rest % L.m() == 0;
}

std::int64_t index(const LatticeSubgroup& L) { return narrow(Wide(L.g()) * L.m()); }

RectPair inner_rect(const LatticeSubgroup& L) {
  return {narrow(Wide(L.g()) * (L.m() / std::gcd(L.h(), L.m()))), L.m()};
}

RectPair outer_rect(const LatticeSubgroup& L) { return {L.g(), std::gcd(L.h(), L.m())}; }

std::int64_t residue(const LatticeSubgroup& L) { return L.m() / std::gcd(L.h(), L.m()); }

CyclicQuotient cyclic_quotient_generator(const LatticeSubgroup& L) {
  RectPair in = inner_rect(L);
  return {{floor_mod(L.g(), in.a), floor_mod(L.h(), in.b)}, residue(L)};
}

LatticeSubgroup tau_rescale(const LatticeSubgroup& L) {
  RectPair out = outer_rect(L);
  return LatticeSubgroup::from_canonical(1, L.h() / out.b, L.m() / out.b);
}

LatticeSubgroup rev_lattice(const LatticeSubgroup& L) {
  const IntPair swapped[] = {{L.h(), L.g()}, {L.m(), 0}};
  return LatticeSubgroup::from_generators(swapped);
}

std::vector<LatticeSubgroup> enumerate_index(std::int64_t n) {
  if (n < 1) fail(ErrorCode::BadInput, "index must be positive");
  std::vector<LatticeSubgroup> out;
  for (std::int64_t g = 1; g <= n; ++g) {
    if (n % g != 0) continue;
    const std::int64_t m = n / g;
    for (std::int64_t h = 0; h < m; ++h) out.push_back(LatticeSubgroup::from_canonical(g, h, m));
  }
  return out;
}

}  // namespace thompsonf
