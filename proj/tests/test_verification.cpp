#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "spherepack/packing_io.hpp"
#include "spherepack/radius_search.hpp"
#include "spherepack/records.hpp"
#include "spherepack/verification.hpp"

using namespace spherepack;


TEST_CASE("verify_exact examples") {
  SUBCASE("two touching spheres spanning the container") {
    const std::vector<Point3> c{{-0.5, 0, 0}, {0.5, 0, 0}};
    const auto cert = verify_exact(c, 1.0, ContainerKind::Sphere);
    CHECK(cert.valid);
    CHECK(cert.worst_wall_margin == 0.0);
    CHECK(cert.worst_pair_margin == 0.0);
    CHECK(cert.violations.empty());
    CHECK_FALSE(cert.robust());
  }
  SUBCASE("centers 0.9 apart overlap by 0.1") {
    const std::vector<Point3> c{{-0.45, 0, 0}, {0.45, 0, 0}};
    const auto cert = verify_exact(c, 1.0, ContainerKind::Sphere);
    CHECK_FALSE(cert.valid);
    REQUIRE(cert.violations.size() == 1);
    CHECK(cert.violations[0].kind == ViolationKind::Pair);
    CHECK(cert.violations[0].indices == std::vector<std::size_t>{0, 1});
    CHECK(cert.violations[0].magnitude == doctest::Approx(0.1).epsilon(1e-12));
  }
  SUBCASE("eight spheres at the cube corners") {
    std::vector<Point3> c;
    for (int i = 0; i < 8; ++i) c.push_back({(i & 1) ? 0.5 : -0.5, (i & 2) ? 0.5 : -0.5, (i & 4) ? 0.5 : -0.5});
    CHECK(verify_exact(c, 1.0, ContainerKind::Cube).valid);
    const auto tight = verify_exact(c, 0.999, ContainerKind::Cube);
    CHECK_FALSE(tight.valid);
    CHECK(tight.violations.size() == 8);
    CHECK(tight.violations[0].kind == ViolationKind::Wall);
  }
  SUBCASE("a single sphere has no pair margin") {
    const std::vector<Point3> c{{0.1, 0, 0}};
    const auto cert = verify_exact(c, 1.0, ContainerKind::Sphere);
    CHECK(cert.valid);
    CHECK(std::isinf(cert.worst_pair_margin));
    CHECK(cert.worst_wall_margin == doctest::Approx(0.4));
    CHECK(cert.robust());
  }
  SUBCASE("the configuration radius is ignored") {
    const Configuration x({{-0.5, 0, 0}, {0.5, 0, 0}}, 0.3);
    CHECK(verify_exact(x, 1.0, ContainerKind::Sphere).valid);
  }
}

TEST_CASE("verify_fake examples") {
  const std::vector<Point3> touching{{-0.5, 0, 0}, {0.5, 0, 0}};
  const auto f = verify_fake(touching, 2.0, ContainerKind::Sphere);
  CHECK_FALSE(f.packed);
  // Each sphere sees a 1e-8 deformation of its neighbor; U = 2 * (1e-8)^2.
  CHECK(f.energy == doctest::Approx(2e-16).epsilon(1e-6));

  const std::vector<Point3> apart{{-0.51, 0, 0}, {0.51, 0, 0}};
  CHECK(verify_fake(apart, 1.02, ContainerKind::Sphere).packed);
  CHECK(verify_exact(apart, 1.02, ContainerKind::Sphere).valid);
}

TEST_CASE("fake-sphere verdict implies exact validity") {
  std::mt19937_64 rng(2024);
  int packed = 0, invalid = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto kind = trial % 2 ? ContainerKind::Cube : ContainerKind::Sphere;
    const auto [c, r0] = oracle::near_threshold(rng, kind);
    const auto fake = verify_fake(c, r0, kind);
    const auto cert = verify_exact(c, r0, kind);
    CHECK(cert.valid == oracle::naive_valid(c, r0, kind));
    if (fake.packed) {
      ++packed;
      CHECK(cert.valid);
    }
    if (!cert.valid) ++invalid;
  }
  // Both outcomes must actually occur for the implication to mean anything.
  CHECK(packed > 0);
  CHECK(invalid > 0);
}

TEST_CASE("compare_to_record") {
  const auto& table = bundled_records();
  CHECK(compare_to_record(table, 2, ContainerKind::Sphere, 0.5) == 0.0);
  CHECK(compare_to_record(table, 13, ContainerKind::Sphere, 0.33333332) == doctest::Approx(0.0).epsilon(1e-12));
  // 68 unit spheres fit in a radius-5 container once the ratio reaches 0.2.
  const double ref = table.at(68, ContainerKind::Sphere);
  CHECK(ref >= 0.2);
  CHECK(compare_to_record(table, 68, ContainerKind::Sphere, 0.2) <= 0.0);
  CHECK_THROWS_AS(compare_to_record(table, 100000, ContainerKind::Sphere, 0.1), NotInTable);

  SUBCASE("antisymmetric under swapping ratio and reference") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.1, 0.6);
    for (int k = 0; k < 100; ++k) {
      const double a = u(rng), b = u(rng);
      RecordTable ta, tb;
      ta.insert(5, ContainerKind::Cube, a);
      tb.insert(5, ContainerKind::Cube, b);
      CHECK(compare_to_record(ta, 5, ContainerKind::Cube, b) == -compare_to_record(tb, 5, ContainerKind::Cube, a));
    }
  }
}

TEST_CASE("certificates survive a file round trip") {
  for (auto kind : {ContainerKind::Sphere, ContainerKind::Cube}) {
    RunParameters p;
    p.n = 7;
    p.kind = kind;
    p.seed = 2;
    const auto out = solve_instance(p);
    CHECK(verify_fake(out.dense_packing, out.r0_min, kind).packed);
    CHECK(out.certificate.valid);
    std::stringstream file;
    write_packing(file, out.dense_packing.centers(), kind, out.r0_min);
    const auto back = parse_packing(file, "<memory>");
    const auto a = out.certificate;
    const auto b = verify_exact(back.centers, back.r0, back.kind);
    CHECK(b.valid == a.valid);
    CHECK(b.worst_wall_margin == a.worst_wall_margin);
    CHECK(b.worst_pair_margin == a.worst_pair_margin);
    CHECK(b.conservative_wall_margin == a.conservative_wall_margin);
    CHECK(b.conservative_pair_margin == a.conservative_pair_margin);
  }
}
