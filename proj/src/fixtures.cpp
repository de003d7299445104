#include "coxperc/fixtures.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace coxperc {
namespace {

constexpr int kInf = CoxeterMatrix::kInfinity;

// The icosahedron 1-skeleton on vertices 0..11: apex 0, upper band 1..5,
// lower band 6..10, apex 11; upper vertex u_i sits over lower vertices l_i
// and l_{i+1}.  This is the face-adjacency graph of the dodecahedron.
std::vector<std::pair<int, int>> icosahedron_edges() {
  std::vector<std::pair<int, int>> edges;
  const auto upper = [](int i) { return 1 + (i % 5); };
  const auto lower = [](int i) { return 6 + (i % 5); };
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(0, upper(i));
    edges.emplace_back(11, lower(i));
    edges.emplace_back(upper(i), upper(i + 1));
    edges.emplace_back(lower(i), lower(i + 1));
    edges.emplace_back(upper(i), lower(i));
    edges.emplace_back(upper(i), lower(i + 1));
  }
  return edges;
}

Eigen::MatrixXi orders_with_default(int k, int finite_order,
                                    const std::vector<std::pair<int, int>>& finite_pairs) {
  Eigen::MatrixXi m = Eigen::MatrixXi::Constant(k, k, kInf);
  for (int s = 0; s < k; ++s) m(s, s) = 1;
  for (const auto& [s, t] : finite_pairs) {
    m(s, t) = finite_order;
    m(t, s) = finite_order;
  }
  return m;
}

}  // namespace

CoxeterMatrix dodecahedron_fixture() {
  ClassFlags flags;
  flags.hyperbolic_polyhedral = true;
  flags.right_angled = true;
  flags.compact = true;
  return CoxeterMatrix(orders_with_default(12, 2, icosahedron_edges()), flags);
}

CoxeterMatrix ideal_dodecahedron_fixture() {
  ClassFlags flags;
  flags.hyperbolic_polyhedral = true;
  flags.right_angled = false;
  flags.compact = false;  // ideal vertices
  return CoxeterMatrix(orders_with_default(12, 3, icosahedron_edges()), flags);
}

CoxeterMatrix football_fixture() {
  // Faces of the right-angled truncated icosahedron: pentagons 0..11 are the
  // icosahedron's vertices, hexagons 12..31 its twenty triangles.  A pentagon
  // touches the three hexagons around its vertex; hexagons touch along the
  // icosahedron's triangle adjacencies; pentagons never touch each other.
  const auto edges = icosahedron_edges();
  std::vector<char> adj(12 * 12, 0);
  for (const auto& [a, b] : edges) adj[a * 12 + b] = adj[b * 12 + a] = 1;

  std::vector<std::array<int, 3>> triangles;
  for (int a = 0; a < 12; ++a)
    for (int b = a + 1; b < 12; ++b)
      for (int c = b + 1; c < 12; ++c)
        if (adj[a * 12 + b] && adj[a * 12 + c] && adj[b * 12 + c])
          triangles.push_back({a, b, c});

  std::vector<std::pair<int, int>> finite_pairs;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const int hex = 12 + static_cast<int>(i);
    for (int v : triangles[i]) finite_pairs.emplace_back(v, hex);
    // Two hexagons are adjacent when their triangles share an edge.
    for (std::size_t j = i + 1; j < triangles.size(); ++j) {
      int shared = 0;
      for (int v : triangles[i])
        for (int w : triangles[j])
          if (v == w) ++shared;
      if (shared == 2) finite_pairs.emplace_back(hex, 12 + static_cast<int>(j));
    }
  }

  ClassFlags flags;
  flags.hyperbolic_polyhedral = true;
  flags.right_angled = true;
  flags.compact = true;
  return CoxeterMatrix(orders_with_default(32, 2, finite_pairs), flags);
}

CoxeterMatrix lambert_cube_fixture() {
  // Cube faces +x,-x,+y,-y,+z,-z as 0..5.  Opposite faces never meet; three
  // pairwise disjoint edges carry dihedral angle pi/3 and the other nine
  // adjacent pairs are right angles.
  Eigen::MatrixXi m = Eigen::MatrixXi::Constant(6, 6, 2);
  for (int s = 0; s < 6; ++s) m(s, s) = 1;
  const auto set = [&m](int s, int t, int order) { m(s, t) = m(t, s) = order; };
  set(0, 1, kInf);  // +x / -x
  set(2, 3, kInf);  // +y / -y
  set(4, 5, kInf);  // +z / -z
  set(0, 2, 3);     // +x / +y
  set(3, 4, 3);     // -y / +z
  set(1, 5, 3);     // -x / -z
  ClassFlags flags;
  flags.hyperbolic_polyhedral = true;
  flags.right_angled = false;
  flags.compact = true;
  return CoxeterMatrix(m, flags);
}

CoxeterMatrix infinite_dihedral_fixture() {
  Eigen::MatrixXi m(2, 2);
  m << 1, kInf, kInf, 1;
  return CoxeterMatrix(m, ClassFlags{});
}

CoxeterMatrix free_product_fixture(int k) {
  if (k < 2) throw std::invalid_argument("free_product_fixture: need k >= 2");
  Eigen::MatrixXi m = Eigen::MatrixXi::Constant(k, k, kInf);
  for (int s = 0; s < k; ++s) m(s, s) = 1;
  ClassFlags flags;
  flags.hyperbolic_polyhedral = true;  // k pairwise disjoint reflection planes
  flags.right_angled = false;
  flags.compact = false;
  return CoxeterMatrix(m, flags);
}

CoxeterMatrix fixture_by_name(const std::string& name) {
  if (name == "dodecahedron") return dodecahedron_fixture();
  if (name == "football") return football_fixture();
  if (name == "lambert-cube") return lambert_cube_fixture();
  if (name == "ideal-dodecahedron") return ideal_dodecahedron_fixture();
  if (name == "infinite-dihedral") return infinite_dihedral_fixture();
  if (name == "free-product-13") return free_product_fixture(13);
  throw std::invalid_argument("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
  return {"dodecahedron", "football",          "lambert-cube",
          "ideal-dodecahedron", "infinite-dihedral", "free-product-13"};
}

}  // namespace coxperc
