#include "thompsonf/thompson.hpp"

#include <algorithm>

#include "thompsonf/error.hpp"

namespace thompsonf {

namespace {

Dyadic dy(std::int64_t num, std::uint32_t exponent) { return Dyadic(BigInt(num), exponent); }

PLMap breaks_of(std::initializer_list<std::pair<Dyadic, Dyadic>> pts) {
  std::vector<Breakpoint> v;
  for (const auto& [x, y] : pts) v.push_back({x, y});
  return PLMap::from_breaks(std::move(v));
}

}  // namespace

GeneratorPair standard_generators() {
  return {breaks_of({{dy(1, 2), dy(1, 1)}, {dy(1, 1), dy(3, 2)}}),
          breaks_of({{dy(1, 1), dy(1, 1)}, {dy(5, 3), dy(3, 2)}, {dy(3, 2), dy(7, 3)}})};
}

PLMap x_n(std::int64_t n) {
  if (n < 0) fail(ErrorCode::NegativeIndex, "x_n needs n >= 0, got " + std::to_string(n));
  auto [f0, f1] = standard_generators();
  if (n == 0) return f0;
  if (n == 1) return f1;
  return conjugate(f1, power(f0, n - 1));
}

PhiImage phi(const PLMap& f) { return {f.segment_exponent(0), f.segment_exponent(f.segment_count() - 1)}; }

bool in_commutator_subgroup(const PLMap& f) { return phi(f) == PhiImage{}; }

bool in_rectangular(const PLMap& f, std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) fail(ErrorCode::BadInput, "rectangular subgroup needs a, b >= 1");
  PhiImage p = phi(f);
  return p.e0 % a == 0 && p.e1 % b == 0;
}

GeneratorPair g0_g1() {
  return {breaks_of({{dy(3, 3), dy(3, 3)}, {dy(1, 1), dy(5, 3)}, {dy(5, 3), dy(3, 2)}, {dy(7, 3), dy(7, 3)}}),
          breaks_of({{dy(3, 3), dy(3, 3)}, {dy(7, 4), dy(1, 1)}, {dy(1, 1), dy(9, 4)}, {dy(5, 3), dy(5, 3)}})};
}

PLMap omega_rescale(const PLMap& f) {
  const Dyadic lo = dy(3, 3);
  const Dyadic hi = dy(7, 3);
  const PLMap id;
  if (!support_equals(f, id, Dyadic(0), lo) || !support_equals(f, id, hi, Dyadic(1)))
    fail(ErrorCode::SupportOutOfRange, "support is not contained in [3/8, 7/8]");
  const Dyadic shift = dy(3, 2);
  std::vector<Breakpoint> pts;
  for (const auto& b : f.breaks()) {
    if (b.x < lo || b.x > hi) continue;
    pts.push_back({b.x.scaled(1) - shift, b.y.scaled(1) - shift});
  }
  return PLMap::from_breaks(std::move(pts));
}

bool KabCertificate::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) { return c.passed; });
}

PLMap expected_kab_commutator() {
  return breaks_of({{dy(1, 3), dy(1, 3)}, {dy(1, 2), dy(3, 3)}, {dy(3, 3), dy(1, 1)}, {dy(5, 3), dy(5, 3)}});
}

KabCertificate verify_kab_certificate(std::int64_t a, std::int64_t b, const PLMap& y0, const PLMap& y1) {
  KabCertificate cert{a, b, {}, {}, {}, {}};
  auto check = [&cert](std::string name, bool ok, std::string detail) {
    cert.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  auto phi_text = [](PhiImage p) { return "(" + std::to_string(p.e0) + ", " + std::to_string(p.e1) + ")"; };
  auto orbitals_text = [](const std::vector<Orbital>& orbs) {
    std::string s;
    for (const auto& o : orbs) s += (s.empty() ? "" : " ") + ("(" + o.lo.to_string() + ", " + o.hi.to_string() + ")");
    return s.empty() ? std::string("none") : s;
  };

  const PhiImage p0 = phi(y0);
  const PhiImage p1 = phi(y1);
  check("phi_y0", p0 == PhiImage{a, -b}, "phi(y0) = " + phi_text(p0) + ", want " + phi_text({a, -b}));
  check("phi_y1", p1 == PhiImage{0, -b}, "phi(y1) = " + phi_text(p1) + ", want " + phi_text({0, -b}));

  const PLMap y1_inv = inverse(y1);
  const PLMap y0_y1inv = compose(y0, y1_inv);
  const auto supp = orbitals(y0_y1inv);
  const std::vector<Orbital> want_supp{{Rational(0), Rational(5) / Rational(8)}};
  check("support_y0_y1inv", supp == want_supp, "orbitals of y0 y1^-1: " + orbitals_text(supp) + ", want (0, 5/8)");

  const bool rel1 = commutator(y0_y1inv, conjugate(y1, y0)).is_identity();
  check("relator_y1_by_y0", rel1, "[y0 y1^-1, y1^y0] " + std::string(rel1 ? "= 1" : "!= 1"));
  const bool rel2 = commutator(y0_y1inv, conjugate(y1, power(y0, 2))).is_identity();
  check("relator_y1_by_y0_squared", rel2, "[y0 y1^-1, y1^(y0^2)] " + std::string(rel2 ? "= 1" : "!= 1"));

  cert.commutator = commutator(y0, y1);
  const Rational quarter = Rational(1) / Rational(4);
  const Rational moved = evaluate(cert.commutator, quarter);
  check("non_commuting", moved != quarter, "1/4 [y0, y1] = " + moved.to_string());

  check("commutator_forced", cert.commutator == expected_kab_commutator(),
        "[y0, y1] breaks: " + cert.commutator.breaks_text());

  auto [g0, g1] = g0_g1();
  cert.commutator_by_y0 = conjugate(cert.commutator, y0);
  cert.commutator_by_y0y1inv = conjugate(cert.commutator, y0_y1inv);
  check("commutator_by_y0_is_g0", cert.commutator_by_y0 == g0,
        "[y0, y1]^y0 breaks: " + cert.commutator_by_y0.breaks_text());
  check("commutator_by_y0y1inv_is_g1", cert.commutator_by_y0y1inv == g1,
        "[y0, y1]^(y0 y1^-1) breaks: " + cert.commutator_by_y0y1inv.breaks_text());

  const auto y0_orbs = orbitals(y0);
  const Rational half = Rational(1) / Rational(2);
  const bool above = y0_orbs == std::vector<Orbital>{{Rational(0), Rational(1)}} && evaluate(y0, half) > half;
  check("y0_above_diagonal", above, "orbitals of y0: " + orbitals_text(y0_orbs));
  return cert;
}

}  // namespace thompsonf
