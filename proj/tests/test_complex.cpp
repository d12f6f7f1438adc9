#include <functional>

#include "doctest.h"
#include "pltop/complex.hpp"

using namespace pltop;

TEST_SUITE_BEGIN("complex");

TEST_CASE("boundary_sphere") {
  const auto s0 = boundary_sphere(0);
  CHECK(s0.vertex_count == 2);
  CHECK(s0.facets.size() == 2);
  CHECK(s0.dim() == 0);

  const auto s1 = boundary_sphere(1);
  CHECK(s1.vertex_count == 3);
  CHECK(s1.facets.size() == 3);
  CHECK(f_vector(s1) == std::vector<size_t>{3, 3});

  const auto s2 = boundary_sphere(2);
  CHECK(s2.vertex_count == 4);
  CHECK(s2.facets.size() == 4);
  CHECK(euler_characteristic(s2) == 2);
}

TEST_CASE("make_complex drops dominated facets and validates") {
  const auto k = make_complex(3, {{0, 1}, {1, 0}, {0}, {0, 1, 2}});
  CHECK(k.facets.size() == 1);
  CHECK_THROWS_AS(make_complex(2, {{0, 5}}), input_error);
  CHECK_THROWS_AS(make_complex(2, {{0, 0}}), input_error);
}

TEST_CASE("staircase_product") {
  const auto edge = make_complex(2, {{0, 1}});
  const auto sq = staircase_product(edge, edge);
  CHECK(sq.vertex_count == 4);
  CHECK(sq.facets.size() == 2);  // square split along its diagonal

  // S^1 x S^1: 9 vertices, 27 edges, 18 triangles, chi = 0
  const auto c3 = boundary_sphere(1);
  const auto torus = staircase_product(c3, c3);
  CHECK(torus.vertex_count == 9);
  CHECK(f_vector(torus) == std::vector<size_t>{9, 27, 18});
  CHECK(euler_characteristic(torus) == 0);

  // A x point = A
  const auto point = make_complex(1, {{0}});
  const auto same = staircase_product(c3, point);
  CHECK(same.vertex_count == 3);
  CHECK(same.facets == c3.facets);
}

TEST_CASE("staircase facet counts multiply binomially and chi multiplies") {
  const auto tri = make_complex(3, {{0, 1, 2}});
  const auto edge = make_complex(2, {{0, 1}});
  CHECK(staircase_product(tri, edge).facets.size() == 3);  // C(3,1)
  CHECK(staircase_product(tri, tri).facets.size() == 6);   // C(4,2)
  const auto s1 = boundary_sphere(1);
  const auto s2 = boundary_sphere(2);
  CHECK(euler_characteristic(staircase_product(s2, s1)) ==
        euler_characteristic(s2) * euler_characteristic(s1));
}

TEST_CASE("torus_gadget") {
  const auto t1 = torus_gadget(1);
  CHECK(t1.dim() == 2);
  CHECK(t1.vertex_count == 9);
  CHECK(f_vector(t1) == std::vector<size_t>{9, 27, 18});
  CHECK(euler_characteristic(t1) == 0);
  REQUIRE(t1.marks.count("m") == 1);
  REQUIRE(t1.marks.count("p") == 1);
  CHECK(is_boundary_sphere_copy(t1.marks.at("m"), 1));
  CHECK(is_boundary_sphere_copy(t1.marks.at("p"), 1));
  // meridian and parallel meet in the single vertex (v0, v0)
  std::set<int> mv, pv;
  for (const auto& f : t1.marks.at("m")) mv.insert(f.begin(), f.end());
  for (const auto& f : t1.marks.at("p")) pv.insert(f.begin(), f.end());
  std::vector<int> common;
  std::set_intersection(mv.begin(), mv.end(), pv.begin(), pv.end(),
                        std::back_inserter(common));
  CHECK(common == std::vector<int>{0});

  const auto t2 = torus_gadget(2);
  CHECK(t2.dim() == 4);
  CHECK(t2.vertex_count == 16);
  CHECK(is_boundary_sphere_copy(t2.marks.at("m"), 2));
  CHECK(is_boundary_sphere_copy(t2.marks.at("p"), 2));

  CHECK_THROWS_AS(torus_gadget(0), input_error);
}

TEST_CASE("deleted_product of the triangle boundary") {
  const auto dp = deleted_product(boundary_sphere(1));
  const auto counts = dp.counts_by_bidim();
  CHECK(counts.at({0, 0}) == 6);
  CHECK(counts.at({0, 1}) == 3);
  CHECK(counts.at({1, 0}) == 3);
  CHECK(counts.size() == 3);
  CHECK(dp.involution_fixed_point_free());
  // underlying space is a single 6-cycle: each 0-cell lies in exactly two
  // 1-cells (as a face), and the cell graph is connected
  std::vector<ProductCell> zero, one;
  for (const auto& c : dp.cells)
    (c.left.size() + c.right.size() == 2 ? zero : one).push_back(c);
  auto is_face = [](const ProductCell& v, const ProductCell& e) {
    return detail::simplex_subset(v.left, e.left) && detail::simplex_subset(v.right, e.right);
  };
  for (const auto& v : zero) {
    int deg = 0;
    for (const auto& e : one)
      if (is_face(v, e)) ++deg;
    CHECK(deg == 2);
  }
  // connectivity via union-find over vertex cells
  std::vector<int> parent(zero.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<size_t>(x)] == x
               ? x
               : parent[static_cast<size_t>(x)] = find(parent[static_cast<size_t>(x)]);
  };
  for (const auto& e : one) {
    std::vector<int> ends;
    for (size_t i = 0; i < zero.size(); ++i)
      if (is_face(zero[i], e)) ends.push_back(static_cast<int>(i));
    REQUIRE(ends.size() == 2);
    parent[static_cast<size_t>(find(ends[0]))] = find(ends[1]);
  }
  std::set<int> roots;
  for (size_t i = 0; i < zero.size(); ++i) roots.insert(find(static_cast<int>(i)));
  CHECK(roots.size() == 1);
}

TEST_CASE("deleted_product of the tetrahedron boundary") {
  const auto dp = deleted_product(boundary_sphere(2));
  const auto counts = dp.counts_by_bidim();
  CHECK(counts.at({0, 0}) == 12);
  CHECK(counts.at({0, 1}) + counts.at({1, 0}) == 24);
  CHECK(counts.at({0, 2}) + counts.at({2, 0}) == 8);
  CHECK(counts.at({1, 1}) == 6);
  CHECK(counts.count({1, 2}) == 0);
  CHECK(counts.count({2, 2}) == 0);
  CHECK(dp.involution_fixed_point_free());
  // bidimension symmetry
  for (const auto& [bd, n] : counts) CHECK(counts.at({bd.second, bd.first}) == n);
}

TEST_CASE("deleted_product of a single edge") {
  const auto dp = deleted_product(make_complex(2, {{0, 1}}));
  CHECK(dp.cells.size() == 2);
  CHECK(dp.counts_by_bidim().at({0, 0}) == 2);
}

TEST_SUITE_END();
