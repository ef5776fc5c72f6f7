#pragma once

#include <cstdint>
#include <optional>

#include "cablefloer/alexander_model.hpp"
#include "cablefloer/box_pairing.hpp"
#include "cablefloer/f2_homology.hpp"
#include "cablefloer/invariants.hpp"
#include "cablefloer/typea_pattern.hpp"
#include "cablefloer/typed_complement.hpp"

namespace cablefloer {

struct CableInput {
  LaurentPolynomial delta;
  std::int64_t tau = 0;
  std::int64_t p = 2;
  std::int64_t n = 0;

  std::int64_t q() const { return p * n + 1; }
};

struct HfkChecks {
  bool symmetry = false;
  bool euler = false;
  TableRank table;
  bool table_match = false;

  /// symmetry and Euler characteristic; the table only counts when it is
  /// not advisory
  bool consistent() const { return symmetry && euler && (table.advisory || table_match); }
};

struct HfkResult {
  CableInput input;
  ThinModel model;
  TypeDModule typeD;
  TypeAModule typeA{2};
  std::int64_t shift = 0;
  BigradedComplex complex;   // before the grading filter
  FilterReport filter;
  RankTable ranks;
  TauResult tau;
  HfkChecks checks;
};

/// HFK-hat of K_{p,pn+1} from (Delta_K, tau(K), p, n).
inline HfkResult compute_hfk(const CableInput& in, FilterMode mode = FilterMode::repair) {
  HfkResult r;
  r.input = in;
  r.model = build_model(in.delta, in.tau);
  r.typeD = build_typeD(r.model, in.n);
  r.typeA = build_typeA_minus(in.p);
  r.shift = shift_constant(r.model.params.l, in.p, in.n);
  r.complex = box_tensor(r.typeA, r.typeD);
  auto [filtered, report] = grading_filter(r.complex, mode);
  r.filter = std::move(report);
  r.ranks = reduce(filtered);
  r.tau = tau_cable(in.tau, in.p, in.n);

  r.checks.symmetry = check_symmetry(r.ranks);
  // thin knots have Delta(1) = +1 once the sign ambiguity is fixed
  const auto normalized = in.delta.at_one() * in.delta;
  r.checks.euler = euler_characteristic(r.ranks) == cable_alexander(normalized, in.p, in.q());
  r.checks.table = table_rank(in.tau, r.model.params.s, in.p, in.n);
  r.checks.table_match = r.checks.table.value == r.ranks.total();
  return r;
}

inline RankTable hfk_ranks(const LaurentPolynomial& delta, std::int64_t tau, std::int64_t p, std::int64_t n) {
  return compute_hfk(CableInput{delta, tau, p, n}).ranks;
}

}  // namespace cablefloer
