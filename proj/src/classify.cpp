#include "thompsonf/classify.hpp"

#include <algorithm>
#include <map>

#include "thompsonf/error.hpp"
#include "thompsonf/thompson.hpp"

namespace thompsonf {

FIFSubgroup from_phi_pairs(std::span<const IntPair> pairs) {
  FIFSubgroup H;
  H.lattice = LatticeSubgroup::from_generators(pairs);
  H.phi_pairs.assign(pairs.begin(), pairs.end());
  return H;
}

FIFSubgroup from_f_generators(std::span<const PLMap> gens) {
  std::vector<IntPair> pairs;
  pairs.reserve(gens.size());
  for (const auto& f : gens) {
    PhiImage p = phi(f);
    pairs.push_back({p.e0, p.e1});
  }
  FIFSubgroup H = from_phi_pairs(pairs);
  H.generators.assign(gens.begin(), gens.end());
  return H;
}

FIFSubgroup whole_group() {
  const IntPair basis[] = {{1, 0}, {0, 1}};
  return from_phi_pairs(basis);
}

bool is_isomorphic_to_f(const FIFSubgroup& H) { return residue(H.lattice) == 1; }

std::string_view witness_name(IsoWitness w) {
  switch (w) {
    case IsoWitness::EqualAfterTau: return "Equal-after-tau";
    case IsoWitness::EqualAfterTauAndRev: return "Equal-after-tau-and-Rev";
    case IsoWitness::None: return "None";
  }
  return "None";
}

IsoVerdict are_isomorphic(const FIFSubgroup& H, const FIFSubgroup& H2) {
  IsoVerdict v;
  v.scaled_first = tau_rescale(H.lattice);
  v.scaled_second = tau_rescale(H2.lattice);
  if (v.scaled_first == v.scaled_second) {
    v.isomorphic = true;
    v.witness = IsoWitness::EqualAfterTau;
  } else if (v.scaled_first == rev_lattice(v.scaled_second)) {
    v.isomorphic = true;
    v.witness = IsoWitness::EqualAfterTauAndRev;
  }
  return v;
}

ExtensionSummary extension_summary(const FIFSubgroup& H) {
  ExtensionSummary s;
  s.inner = inner_rect(H.lattice);
  CyclicQuotient q = cyclic_quotient_generator(H.lattice);
  s.quotient_order = q.order;
  s.quotient_generator = q.generator;
  s.index_in_f = index(H.lattice);
  s.iso_to_f = q.order == 1;
  return s;
}

RectQuotient quotient_by_rectangular(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) fail(ErrorCode::BadInput, "K(a,b) needs a, b >= 1");
  return {a, b, index(LatticeSubgroup::rectangular({a, b}))};
}

LatticeSubgroup isomorphism_key(const LatticeSubgroup& L) {
  LatticeSubgroup t = tau_rescale(L);
  return std::min(t, rev_lattice(t));
}

std::vector<std::vector<LatticeSubgroup>> classify_index(std::int64_t n) {
  std::map<LatticeSubgroup, std::vector<LatticeSubgroup>> classes;
  for (const auto& L : enumerate_index(n)) classes[isomorphism_key(L)].push_back(L);
  std::vector<std::vector<LatticeSubgroup>> out;
  out.reserve(classes.size());
  for (auto& [key, members] : classes) out.push_back(std::move(members));
  return out;
}

}  // namespace thompsonf
