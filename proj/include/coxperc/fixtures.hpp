#pragma once

// Bundled Coxeter systems used by the CLI, tests, and documentation:
//   dodecahedron        right-angled compact dodecahedron (k = 12)
//   football            right-angled compact truncated icosahedron (k = 32)
//   lambert-cube        Lambert cube with three order-3 edges (k = 6)
//   ideal-dodecahedron  regular ideal dodecahedron, all orders 3 (k = 12)
//   infinite-dihedral   two generators, m = infinity (k = 2)
//   free-product-13     thirteen pairwise non-adjacent faces (k = 13)

#include <string>
#include <vector>

#include "coxperc/coxeter_matrix.hpp"

namespace coxperc {

CoxeterMatrix dodecahedron_fixture();
CoxeterMatrix football_fixture();
CoxeterMatrix lambert_cube_fixture();
CoxeterMatrix ideal_dodecahedron_fixture();
CoxeterMatrix infinite_dihedral_fixture();
CoxeterMatrix free_product_fixture(int k = 13);

// Lookup by CLI name; throws std::invalid_argument for unknown names.
CoxeterMatrix fixture_by_name(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace coxperc
