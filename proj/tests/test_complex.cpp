#include <gtest/gtest.h>

#include <queue>
#include <set>

#include "fixtures.hpp"

using namespace polycup;
using namespace polycup::testing;

namespace {

ErrorKind build_error(const std::vector<std::vector<Index>>& faces, Index vertex_count,
                      const BuildOptions& options = {}) {
  try {
    build_complex(faces, vertex_count, std::nullopt, options);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected build_complex to fail";
  return ErrorKind::UnknownCell;
}

/// Brute force over every per-face flip: is there an assignment making all
/// interior edges coherent?
bool orientable_by_enumeration(const std::vector<std::vector<Index>>& faces) {
  const std::size_t n = faces.size();
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    std::map<std::pair<Index, Index>, int> directed;
    bool ok = true;
    for (std::size_t f = 0; f < n && ok; ++f) {
      auto face = faces[f];
      if (mask >> f & 1) std::reverse(face.begin(), face.end());
      for (std::size_t i = 0; i < face.size(); ++i)
        if (++directed[{face[i], face[(i + 1) % face.size()]}] > 1) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST(BuildComplex, SingleTriangle) {
  const auto c = build_complex({{0, 1, 2}}, 3);
  EXPECT_EQ(c.vertex_count(), 3u);
  EXPECT_EQ(c.edge_count(), 3u);
  EXPECT_EQ(c.face_count(), 1u);
  EXPECT_TRUE(c.has_boundary());
  EXPECT_EQ(c.edge(0), (Edge{0, 1}));
  EXPECT_EQ(c.edge(1), (Edge{0, 2}));
  EXPECT_EQ(c.edge(2), (Edge{1, 2}));
}

TEST(BuildComplex, TwoFaceDisk) {
  const auto c = two_face_disk();
  EXPECT_EQ(c.vertex_count(), 5u);
  EXPECT_EQ(c.edge_count(), 6u);
  EXPECT_EQ(c.face_count(), 2u);
  EXPECT_TRUE(c.has_boundary());
  // Incidences of f1 in the e0..e5 labels.
  const std::array<int, 6> expected{0, -1, 0, 1, 1, 1};
  for (Index label = 0; label < 6; ++label)
    EXPECT_EQ(c.incidence(1, kDiskEdgeOfLabel[label]), expected[label]) << "label e" << label;
}

TEST(BuildComplex, MobiusIsNonorientable) {
  ASSERT_FALSE(orientable_by_enumeration(mobius_faces()));
  EXPECT_EQ(build_error(mobius_faces(), 10), ErrorKind::Nonorientable);
  BuildOptions orient;
  orient.orient = true;
  EXPECT_EQ(build_error(mobius_faces(), 10, orient), ErrorKind::Nonorientable);
}

TEST(BuildComplex, TrianglesSharingOnlyAVertex) {
  const std::vector<std::vector<Index>> faces{{0, 1, 2}, {0, 3, 4}};
  // Oracle: faces adjacent iff they share two consecutive vertices.
  bool adjacent = false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::set<Index> a{faces[0][i], faces[0][(i + 1) % 3]}, b{faces[1][j], faces[1][(j + 1) % 3]};
      adjacent = adjacent || a == b;
    }
  ASSERT_FALSE(adjacent);
  EXPECT_EQ(build_error(faces, 5), ErrorKind::NotAPseudomanifold);
}

TEST(BuildComplex, RejectsDegenerateInput) {
  EXPECT_EQ(build_error({{0, 1}}, 2), ErrorKind::DegenerateFace);
  EXPECT_EQ(build_error({{0, 1, 1}}, 2), ErrorKind::DegenerateFace);
  EXPECT_EQ(build_error({{0, 1, 2, 0}}, 3), ErrorKind::DegenerateFace);
  EXPECT_EQ(build_error({{0, 1, 3}}, 3), ErrorKind::VertexOutOfRange);
  // Isolated vertex 3.
  EXPECT_EQ(build_error({{0, 1, 2}}, 4), ErrorKind::NotAPseudomanifold);
  // Three faces on the edge (0,1).
  EXPECT_EQ(build_error({{0, 1, 2}, {1, 0, 3}, {1, 0, 4}}, 5), ErrorKind::NotAPseudomanifold);
  EXPECT_EQ(build_error({}, 0), ErrorKind::NotAPseudomanifold);
}

TEST(BuildComplex, IncoherentInputIsReportedNotFixed) {
  const std::vector<std::vector<Index>> faces{{0, 1, 2}, {0, 1, 3}};
  EXPECT_EQ(build_error(faces, 4), ErrorKind::IncoherentOrientation);
  BuildOptions orient;
  orient.orient = true;
  const auto c = build_complex(faces, 4, std::nullopt, orient);
  EXPECT_EQ(c.face(0)[0], 0u);
  for (Index e = 0; e < c.edge_count(); ++e) {
    const auto inc = c.edge_faces(e);
    if (inc.size() == 2) {
      EXPECT_EQ(inc[0].sign + inc[1].sign, 0);
    }
  }
  EXPECT_EQ(coherently_orient(c), c);
}

TEST(BuildComplex, TwoTriangleSphereIsAccepted) {
  const auto c = build_complex({{0, 1, 2}, {0, 2, 1}}, 3);
  EXPECT_FALSE(c.has_boundary());
  EXPECT_EQ(c.edge_count(), 3u);
}

TEST(BuildComplex, DeterministicRebuild) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto c = gen_complex(seed, Profile::Mixed);
    const auto rebuilt = complex_from_mesh(parse_off(serialize_off(mesh_from_complex(c))));
    EXPECT_EQ(rebuilt.faces(), c.faces());
    EXPECT_EQ(rebuilt.edges(), c.edges());
    EXPECT_EQ(boundary_matrix(rebuilt, 1), boundary_matrix(c, 1));
    EXPECT_EQ(boundary_matrix(rebuilt, 2), boundary_matrix(c, 2));
    EXPECT_NE(rebuilt.id(), c.id());
  }
}

TEST(BoundaryMatrix, DiskColumnOfF1) {
  const auto c = two_face_disk();
  const auto d2 = boundary_matrix(c, 2);
  const std::array<int, 6> expected{0, -1, 0, 1, 1, 1};
  for (Index label = 0; label < 6; ++label) EXPECT_EQ(d2.at(kDiskEdgeOfLabel[label], 1), expected[label]);
}

TEST(BoundaryMatrix, SingleTriangle) {
  // Edge ids (0,1), (0,2), (1,2): traversal 0->1, 1->2, 2->0.
  const auto c = build_complex({{0, 1, 2}}, 3);
  const auto d2 = boundary_matrix(c, 2);
  EXPECT_EQ(d2.at(0, 0), 1);
  EXPECT_EQ(d2.at(1, 0), -1);
  EXPECT_EQ(d2.at(2, 0), 1);
  const auto d1 = boundary_matrix(c, 1);
  EXPECT_EQ(d1.at(0, 0), -1);
  EXPECT_EQ(d1.at(1, 0), 1);
  EXPECT_TRUE(multiply(d1, d2).empty());
  EXPECT_THROW(boundary_matrix(c, 3), Error);
}

TEST(BoundaryMatrix, ComposeToZeroOnGeneratedComplexes) {
  for (std::uint64_t seed = 0; seed < 30; ++seed)
    for (Profile p : kAllProfiles) {
      const auto c = gen_complex(seed, p);
      EXPECT_TRUE(multiply(boundary_matrix(c, 1), boundary_matrix(c, 2)).empty());
    }
}

TEST(BoundaryMatrix, IncidenceConditionFour) {
  // For every face and vertex, the two face edges at v contribute opposite
  // signs: [f:ea][ea:v] + [f:eb][eb:v] = 0.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto c = gen_complex(seed, Profile::Mixed);
    const auto d1 = boundary_matrix(c, 1);
    for (Index f = 0; f < c.face_count(); ++f) {
      std::map<Index, int> sum;
      for (const auto& slot : c.face_edges(f).slots)
        for (const auto& e : d1.column(slot.edge)) sum[e.row] += slot.sign * e.value;
      for (const auto& [v, s] : sum) EXPECT_EQ(s, 0);
    }
  }
}

TEST(ApplyBoundary, DiskUnitFace) {
  const auto c = two_face_disk();
  const auto boundary = apply_boundary(c, Chain::unit(c, 2, 1));
  EXPECT_EQ(boundary.degree, 1);
  const std::array<long long, 6> expected{0, -1, 0, 1, 1, 1};
  for (Index label = 0; label < 6; ++label)
    EXPECT_EQ(boundary.coefficients[kDiskEdgeOfLabel[label]], expected[label]);
  EXPECT_EQ(apply_boundary(c, -Chain::unit(c, 2, 1)), -boundary);
}

TEST(ApplyBoundary, ZeroAndSquare) {
  const auto c = gen_complex(3, Profile::Mixed);
  EXPECT_EQ(apply_boundary(c, Chain::zero(c, 2)), Chain::zero(c, 1));
  for (Index f = 0; f < c.face_count(); ++f)
    EXPECT_EQ(apply_boundary(c, apply_boundary(c, Chain::unit(c, 2, f))), Chain::zero(c, 0));
  try {
    apply_boundary(c, Chain::zero(c, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeOutOfRange);
  }
}

TEST(StarCells, TwoFaceDisk) {
  const auto c = two_face_disk();
  // Oracle: enumerate edges and faces containing vertex 1 from the face lists.
  std::set<CellRef> expected{{0, 1}};
  for (Index f = 0; f < c.face_count(); ++f) {
    const auto face = c.face(f);
    for (std::size_t i = 0; i < face.size(); ++i) {
      const Index u = face[i], v = face[(i + 1) % face.size()];
      if (u == 1 || v == 1) {
        expected.insert({1, c.find_edge(u, v)->edge});
        expected.insert({2, f});
      }
    }
  }
  EXPECT_EQ(star_cells(c, {0, 1}), expected);
  EXPECT_EQ(expected.size(), 1u + 3u + 2u);
  EXPECT_EQ(star_cells(c, {2, 1}), (std::set<CellRef>{{2, 1}}));
  // Boundary edge (0,1) lies only on f0.
  EXPECT_EQ(star_cells(c, {1, 0}), (std::set<CellRef>{{1, 0}, {2, 0}}));
  EXPECT_THROW(star_cells(c, {1, 6}), Error);
  EXPECT_THROW(star_cells(c, {3, 0}), Error);
}
