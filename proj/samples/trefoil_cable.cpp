// Prints HFK-hat of the (2,3)-cable of the right-handed trefoil as a grid,
// followed by tau and the check results.

#include <iostream>

#include "cablefloer.hpp"

int main() {
  using namespace cablefloer;
  const auto r = compute_hfk({parse_delta("1,-1,1"), 1, 2, 1});
  std::cout << to_ascii(r.ranks);
  std::cout << "total rank " << r.ranks.total() << ", tau " << r.tau.value << '\n';
  std::cout << "symmetry " << r.checks.symmetry << ", euler " << r.checks.euler << '\n';
  std::cout << "table " << r.checks.table.value << (r.checks.table.advisory ? " (advisory)" : "") << '\n';
}
