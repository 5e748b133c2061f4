#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "test_util.hpp"
#include "thompsonf/classify.hpp"
#include "thompsonf/thompson.hpp"

using namespace thompsonf;
using testutil::code_of;

namespace {

FIFSubgroup S(const char* pairs) { return from_phi_pairs(parse_generator_list(pairs)); }
LatticeSubgroup C(std::int64_t g, std::int64_t h, std::int64_t m) { return LatticeSubgroup::from_canonical(g, h, m); }

FIFSubgroup of(const LatticeSubgroup& l) {
  const IntPair basis[] = {{l.g(), l.h()}, {0, l.m()}};
  return from_phi_pairs(basis);
}

// An element of F with the given slope exponents: f0^p f1^(-p-q).
PLMap element_with_phi(IntPair v) {
  auto [f0, f1] = standard_generators();
  return compose(power(f0, v.x), power(f1, -v.x - v.y));
}

std::vector<LatticeSubgroup> all_up_to(std::int64_t n) {
  std::vector<LatticeSubgroup> out;
  for (std::int64_t k = 1; k <= n; ++k)
    for (const auto& l : enumerate_index(k)) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("subgroups from elements") {
  auto [f0, f1] = standard_generators();
  const PLMap both[] = {f0, f1};
  FIFSubgroup whole = from_f_generators(both);
  CHECK(whole.lattice == LatticeSubgroup());
  CHECK(whole.index_in_f() == 1);
  CHECK(whole.generators.size() == 2);
  const PLMap only_f1[] = {f1};
  CHECK(code_of([&] { from_f_generators(only_f1); }) == ErrorCode::NotFiniteIndex);
  const PLMap ex1[] = {element_with_phi({3, 7}), element_with_phi({5, 11})};
  FIFSubgroup h = from_f_generators(ex1);
  CHECK(h.lattice == C(1, 1, 2));
  CHECK(h.index_in_f() == 2);
  CHECK(code_of([] { S("(2,4)"); }) == ErrorCode::NotFiniteIndex);
}

TEST_CASE("isomorphism to F") {
  CHECK_FALSE(is_isomorphic_to_f(S("(3,7);(5,11)")));
  CHECK(is_isomorphic_to_f(S("(2,0);(0,3)")));
  CHECK(is_isomorphic_to_f(whole_group()));
}

TEST_CASE("worked isomorphism decisions") {
  IsoVerdict v2 = are_isomorphic(S("(15,0);(0,15);(3,3)"), S("(15,0);(0,15);(3,6)"));
  CHECK_FALSE(v2.isomorphic);
  CHECK(v2.witness == IsoWitness::None);
  CHECK(v2.scaled_first == C(1, 1, 5));
  CHECK(v2.scaled_second == C(1, 2, 5));

  IsoVerdict v3 = are_isomorphic(S("(10,0);(0,15);(2,6)"), S("(35,0);(0,20);(14,4)"));
  CHECK(v3.isomorphic);
  CHECK(v3.witness == IsoWitness::EqualAfterTauAndRev);
  CHECK(v3.scaled_first == C(1, 2, 5));
  CHECK(v3.scaled_second == C(1, 3, 5));
  CHECK(witness_name(v3.witness) == "Equal-after-tau-and-Rev");

  FIFSubgroup h = S("(3,7);(5,11)");
  IsoVerdict self = are_isomorphic(h, h);
  CHECK(self.isomorphic);
  CHECK(self.witness == IsoWitness::EqualAfterTau);
  CHECK(witness_name(IsoWitness::EqualAfterTau) == "Equal-after-tau");
  CHECK(witness_name(IsoWitness::None) == "None");
}

TEST_CASE("extension summary and rectangular quotients") {
  ExtensionSummary e1 = extension_summary(S("(3,7);(5,11)"));
  CHECK(e1.inner == RectPair{2, 2});
  CHECK(e1.quotient_order == 2);
  CHECK(e1.index_in_f == 2);
  CHECK_FALSE(e1.iso_to_f);
  ExtensionSummary e3 = extension_summary(S("(10,0);(0,15);(2,6)"));
  CHECK(e3.inner == RectPair{10, 15});
  CHECK(e3.quotient_order == 5);
  CHECK(e3.quotient_generator == IntPair{2, 6});
  ExtensionSummary ek = extension_summary(S("(4,0);(0,6)"));
  CHECK(ek.quotient_order == 1);
  CHECK(ek.iso_to_f);

  RectQuotient q11 = quotient_by_rectangular(1, 1);
  CHECK(q11.order == 1);
  RectQuotient q23 = quotient_by_rectangular(2, 3);
  CHECK(q23.a == 2);
  CHECK(q23.b == 3);
  CHECK(q23.order == 6);
  for (std::int64_t a = 1; a <= 6; ++a)
    for (std::int64_t b = 1; b <= 6; ++b)
      CHECK(quotient_by_rectangular(a, b).order == index(LatticeSubgroup::rectangular({a, b})));
  CHECK(code_of([] { quotient_by_rectangular(0, 3); }) == ErrorCode::BadInput);
}

TEST_CASE("lattice correspondence round-trips through elements") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> size(2, 3);
  int done = 0;
  while (done < 100) {
    auto gens = oracle::random_generators(rng, size(rng), 6);
    if (!oracle::has_rank_two(gens)) continue;
    ++done;
    std::vector<PLMap> elements;
    for (const auto& v : gens) {
      PLMap f = element_with_phi(v);
      PhiImage p = phi(f);
      REQUIRE(IntPair{p.e0, p.e1} == v);
      elements.push_back(f);
    }
    FIFSubgroup from_elems = from_f_generators(elements);
    FIFSubgroup from_pairs = from_phi_pairs(gens);
    CHECK(from_elems.lattice == from_pairs.lattice);
    CHECK(of(from_pairs.lattice).lattice == from_pairs.lattice);
    CHECK(extension_summary(from_pairs).quotient_order * from_pairs.index_in_f() ==
          inner_rect(from_pairs.lattice).a * inner_rect(from_pairs.lattice).b);
  }
}

TEST_CASE("are_isomorphic is an equivalence relation up to index 12") {
  auto all = all_up_to(12);
  const std::size_t n = all.size();
  std::vector<std::vector<char>> iso(n, std::vector<char>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) iso[i][j] = are_isomorphic(of(all[i]), of(all[j])).isomorphic;
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(iso[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(iso[i][j] == iso[j][i]);
      if (!iso[i][j]) continue;
      CHECK(residue(all[i]) == residue(all[j]));
      CHECK(isomorphism_key(all[i]) == isomorphism_key(all[j]));
      for (std::size_t k = 0; k < n; ++k)
        if (iso[j][k]) CHECK(iso[i][k]);
    }
    CHECK(is_isomorphic_to_f(of(all[i])) == are_isomorphic(of(all[i]), whole_group()).isomorphic);
  }
}

TEST_CASE("isomorphic subgroups can have different Inner and Outer rectangles") {
  // K(1,4) and K(2,2) are both isomorphic to F; only Inner / Outer is shared.
  FIFSubgroup a = S("(1,0);(0,4)"), b = S("(2,0);(0,2)");
  CHECK(are_isomorphic(a, b).isomorphic);
  CHECK_FALSE(inner_rect(a.lattice) == inner_rect(b.lattice));
  CHECK_FALSE(inner_rect(a.lattice) == RectPair{inner_rect(b.lattice).b, inner_rect(b.lattice).a});
}

TEST_CASE("classify_index") {
  auto c2 = classify_index(2);
  CHECK(c2.size() == 2);
  auto c4 = classify_index(4);
  REQUIRE(c4.size() == 4);
  CHECK(c4[0] == std::vector<LatticeSubgroup>{C(1, 0, 4), C(2, 0, 2), C(4, 0, 1)});
  CHECK(c4[1] == std::vector<LatticeSubgroup>{C(1, 2, 4), C(2, 1, 2)});
  CHECK(c4[2] == std::vector<LatticeSubgroup>{C(1, 1, 4)});
  CHECK(c4[3] == std::vector<LatticeSubgroup>{C(1, 3, 4)});
  for (std::int64_t n = 1; n <= 30; ++n) {
    std::size_t total = 0;
    for (const auto& cls : classify_index(n)) {
      total += cls.size();
      for (const auto& l : cls) {
        CHECK(residue(l) == residue(cls.front()));
        CHECK(index(l) == n);
        CHECK(are_isomorphic(of(l), of(cls.front())).isomorphic);
      }
    }
    CHECK(total == enumerate_index(n).size());
  }
}
