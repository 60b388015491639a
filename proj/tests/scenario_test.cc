#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "affsel/characterization.h"
#include "affsel/errors.h"
#include "affsel/instance_io.h"
#include "affsel/office_grid.h"
#include "affsel/schedule.h"
#include "affsel/synthetic.h"
#include "test_support.h"

namespace affsel {
namespace {

OfficeGridSpec Offices(std::size_t k) {
  OfficeGridSpec spec;
  spec.offices = k;
  return spec;
}

TEST(OfficeAffectance, ClampsInsideReach) {
  const OfficeGridSpec spec;
  EXPECT_EQ(OfficeAffectance(3.0, 0, spec), 1.0);
  EXPECT_EQ(OfficeAffectance(5.0, 0, spec), 1.0);
  EXPECT_DOUBLE_EQ(OfficeAffectance(10.0, 0, spec), 0.25);
}

TEST(OfficeAffectance, AdjacentOfficeThroughWall) {
  const OfficeGridSpec spec;
  EXPECT_DOUBLE_EQ(OfficeAffectance(1.0, 1, spec), 25.0 / 121.0);
  EXPECT_NEAR(OfficeAffectance(1.0, 1, spec), 0.2066, 1e-4);
}

TEST(OfficeAffectance, SparsityFloor) {
  const OfficeGridSpec spec;
  EXPECT_EQ(OfficeAffectance(1.0, 1000, spec), 0.0);
  EXPECT_GT(OfficeAffectance(1.0, 100, spec), kSparsityFloor);
}

TEST(OfficeAffectance, StrictlyDecreasingInWalls) {
  const OfficeGridSpec spec;
  for (std::size_t walls = 0; walls < 40; ++walls) {
    EXPECT_GT(OfficeAffectance(2.0 + 5.0 * walls, walls, spec),
              OfficeAffectance(2.0 + 5.0 * (walls + 1), walls + 1, spec));
  }
}

TEST(OfficeLayer, SizesAndLinks) {
  const OfficeLayer layer = GenerateOfficeLayer(Offices(2));
  EXPECT_EQ(Offices(2).n(), 6u);
  const LayerTopology& topo = layer.instance.topology();
  ASSERT_EQ(topo.size(), 6u);
  EXPECT_EQ(topo.link_count(), 18u);
  for (NodeIndex w = 0; w < 6; ++w) {
    ASSERT_EQ(topo.Senders(w).size(), 3u);
    for (NodeIndex v : topo.Senders(w)) EXPECT_EQ(layer.office_of[v], layer.office_of[w]);
  }
}

TEST(OfficeLayer, GridPositions) {
  const OfficeLayer layer = GenerateOfficeLayer(Offices(3));
  const double xs[] = {1.0, 2.5, 4.0};
  for (NodeIndex v = 0; v < 9; ++v) {
    EXPECT_DOUBLE_EQ(layer.transmitter_positions[v].x, 5.0 * (v / 3) + xs[v % 3]);
    EXPECT_DOUBLE_EQ(layer.transmitter_positions[v].y, 0.0);
    EXPECT_DOUBLE_EQ(layer.receiver_positions[v].x, 5.0 * (v / 3) + xs[v % 3]);
    EXPECT_DOUBLE_EQ(layer.receiver_positions[v].y, 1.0);
    EXPECT_EQ(layer.office_of[v], v / 3);
  }
}

TEST(OfficeLayer, AffectanceFollowsGeometry) {
  const OfficeGridSpec spec = Offices(5);
  const OfficeLayer layer = GenerateOfficeLayer(spec);
  const Instance& inst = layer.instance;
  for (const Link& link : inst.topology().links()) {
    for (NodeIndex u = 0; u < inst.size(); ++u) {
      double expected = 0.0;
      if (u != link.transmitter) {
        const double dx = layer.transmitter_positions[u].x - layer.receiver_positions[link.receiver].x;
        const double dy = layer.transmitter_positions[u].y - layer.receiver_positions[link.receiver].y;
        const double walls = std::abs(static_cast<double>(layer.office_of[u]) -
                                      static_cast<double>(layer.office_of[link.receiver]));
        expected = std::min(1.0, std::pow(5.0 / (std::hypot(dx, dy) + 10.0 * walls), 2.0));
        if (expected < 1e-6) expected = 0.0;
      }
      EXPECT_DOUBLE_EQ(inst.Affectance(u, link), expected);
    }
  }
}

TEST(OfficeLayer, InOfficeInterferenceIsTotal) {
  const Instance inst = GenerateOfficeLayer(Offices(2)).instance;
  EXPECT_EQ(inst.Affectance(1, {0, 2}), 1.0);
  EXPECT_EQ(inst.Affectance(2, {0, 0}), 1.0);
}

TEST(OfficeLayer, CrossOfficeDecreasesWithOfficeDistance) {
  const Instance inst = GenerateOfficeLayer(Offices(6)).instance;
  for (NodeIndex u = 0; u < 3; ++u) {
    for (std::size_t j = 0; j < 3; ++j) {
      double previous = inst.Affectance(u, {3 + j, 3 + j});
      for (std::size_t k = 2; k < 6; ++k) {
        const double a = inst.Affectance(u, {3 * k + j, 3 * k + j});
        if (previous > 0.0) {
          EXPECT_LT(a, previous);
        } else {
          EXPECT_EQ(a, 0.0);
        }
        previous = a;
      }
    }
  }
}

TEST(OfficeLayer, DirectionalAffectance) {
  const Instance inst = GenerateOfficeLayer(Offices(3)).instance;
  bool asymmetric = false;
  for (const Link& l1 : inst.topology().links()) {
    for (const Link& l2 : inst.topology().links()) {
      const NodeIndex u = l2.transmitter, v = l1.transmitter;
      if (u == v) continue;
      if (inst.Affectance(u, l1) != inst.Affectance(v, l2)) asymmetric = true;
    }
  }
  EXPECT_TRUE(asymmetric);
}

TEST(OfficeLayer, SixNodeCharacterizationFixture) {
  const Characterization ch = Characterize(GenerateOfficeLayer(Offices(2)).instance);
  EXPECT_NEAR(ch.c_min, 0.803669028161, 1e-11);
  EXPECT_NEAR(ch.abar, 2.41100708448, 1e-10);
  EXPECT_EQ(ch.m, 159u);
  EXPECT_EQ(ch.phases, 5u);
}

TEST(OfficeLayer, SweepConstantStaysBelowTen) {
  for (std::size_t k = 2; k <= 14; ++k) {
    const Instance inst = GenerateOfficeLayer(Offices(k)).instance;
    const Characterization ch = Characterize(inst, 10.0);
    EXPECT_LE(ch.c_min, 10.0);
    EXPECT_LT(ch.c_min, 1.05) << "offices " << k;
  }
}

TEST(OfficeLayer, SinrDefaults) {
  EXPECT_EQ(DefaultSinrDilution(OfficeGridSpec{}), 4u);
  EXPECT_EQ(DefaultSinrDensity(OfficeGridSpec{}), 3u);
  OfficeGridSpec wide;
  wide.office_width = 100;
  EXPECT_EQ(DefaultSinrDilution(wide), 1u);
}

TEST(OfficeGridSpec, ParseAndFormat) {
  const OfficeGridSpec spec =
      ParseOfficeGridSpec(R"({"offices": 4, "nodes_per_office": 2, "alpha": 3.0})");
  EXPECT_EQ(spec.offices, 4u);
  EXPECT_EQ(spec.nodes_per_office, 2u);
  EXPECT_EQ(spec.alpha, 3.0);
  EXPECT_EQ(spec.reach, OfficeGridSpec{}.reach);
  const OfficeGridSpec again = ParseOfficeGridSpec(FormatOfficeGridSpec(spec));
  EXPECT_EQ(FormatOfficeGridSpec(again), FormatOfficeGridSpec(spec));
}

TEST(OfficeGridSpec, Rejections) {
  EXPECT_THROW(ParseOfficeGridSpec(R"({"floors": 2})"), ParseError);
  EXPECT_THROW(ParseOfficeGridSpec(R"({"offices": 0})"), ParseError);
  EXPECT_THROW(ParseOfficeGridSpec(R"({"reach": 0.5})"), ParseError);
  EXPECT_THROW(ParseOfficeGridSpec("{"), ParseError);
}

TEST(RnGenerator, DegreeOneIsQuiet) {
  EXPECT_EQ(Characterize(GenerateRnInstance(7, 1, 3)).abar, 0.0);
}

TEST(RnGenerator, ReproducibleAndBounded) {
  EXPECT_EQ(FormatInstance(GenerateRnInstance(9, 4, 12)),
            FormatInstance(GenerateRnInstance(9, 4, 12)));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance inst = GenerateRnInstance(8, 5, seed);
    EXPECT_LE(Characterize(inst).abar, 4.0);
    for (NodeIndex w = 0; w < 8; ++w) {
      EXPECT_GE(inst.topology().Senders(w).size(), 1u);
      EXPECT_LE(inst.topology().Senders(w).size(), 5u);
    }
  }
  EXPECT_THROW(GenerateRnInstance(4, 5, 1), DomainError);
  EXPECT_THROW(GenerateRnInstance(4, 0, 1), DomainError);
}

TEST(RandomGenerator, ValuesInRange) {
  RandomInstanceSpec spec;
  spec.n = 10;
  spec.max_value = 0.6;
  spec.density = 0.9;
  const Instance inst = GenerateRandomInstance(spec, 8);
  EXPECT_GT(inst.affectance().nonzero_count(), 0u);
  for (const Link& link : inst.topology().links()) {
    for (NodeIndex u = 0; u < spec.n; ++u) {
      const double a = inst.Affectance(u, link);
      EXPECT_GE(a, 0.0);
      EXPECT_LE(a, 0.6);
      if (u == link.transmitter) EXPECT_EQ(a, 0.0);
    }
  }
}

TEST(InstanceIo, RoundTripOffice) {
  const Instance inst = GenerateOfficeLayer(Offices(2)).instance;
  EXPECT_EQ(ParseInstance(FormatInstance(inst)), inst);
  const auto path = std::filesystem::temp_directory_path() / "affsel_roundtrip.json";
  SaveInstance(inst, path.string());
  EXPECT_EQ(LoadInstance(path.string()), inst);
  std::filesystem::remove(path);
}

TEST(InstanceIo, RoundTripRandomValues) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = GenerateRandomInstance(RandomInstanceSpec{}, seed);
    EXPECT_EQ(ParseInstance(FormatInstance(inst)), inst);
  }
}

TEST(InstanceIo, MissingTripleIsZero) {
  const Instance inst = ParseInstance(
      R"({"n": 2, "links": [[1,1],[2,2]], "affectance": [[2,1,1,0.25]]})");
  EXPECT_EQ(inst.Affectance(1, {0, 0}), 0.25);
  EXPECT_EQ(inst.Affectance(0, {1, 1}), 0.0);
  EXPECT_EQ(ParseInstance(R"({"n": 1, "links": [[1,1]]})").affectance().nonzero_count(), 0u);
}

TEST(InstanceIo, Rejections) {
  auto rejects = [](const std::string& text, const std::string& fragment) {
    try {
      ParseInstance(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
  };
  rejects(R"({"n": 2, "links": [[1,1],[2,2]], "affectance": [[2,1,1,1.5]]})", "affectance[0]");
  rejects(R"({"n": 2, "links": [[1,1],[2,2]], "affectance": [[2,1,1,-0.1]]})", "affectance[0]");
  rejects(R"({"n": 2, "links": [[1,1],[2,2]], "affectance": [[1,1,1,0.5]]})", "affectance[0]");
  rejects(R"({"n": 2, "links": [[1,1],[2,2]], "affectance": [[1,2,1,0.5]]})", "affectance[0]");
  rejects(R"({"n": 2, "links": [[1,1]]})", "topology");
  rejects(R"({"n": 2, "links": [[1,1],[3,2]]})", "links[1]");
  rejects(R"({"n": 2, "links": [[1,1],[2,2]], "extra": 1})", "extra");
  rejects(R"({"n": 2, "links": [[1,1],[2,2]],)", "instance");
  rejects(R"({"n": 2, "links": [[1,1],[2,2]], "affectance": [[2,1,1,0.5],[2,1,1,0.5]]})",
          "duplicate");
  EXPECT_THROW(LoadInstance("/nonexistent/affsel.json"), ParseError);
}

TEST(ScheduleIo, FormatAndParse) {
  const Schedule s(4, {TransmitterSet::Of(4, {0, 2}), TransmitterSet(4),
                       TransmitterSet::Of(4, {3})});
  const std::string text = FormatSchedule(s);
  EXPECT_EQ(text, "slots=3 n=4\n1 3\n\n4\n");
  EXPECT_EQ(ParseSchedule(text), s);
}

TEST(ScheduleIo, Rejections) {
  EXPECT_THROW(ParseSchedule("slots=1 n=2\n3\n"), ParseError);
  EXPECT_THROW(ParseSchedule("slots=2 n=2\n1\n"), ParseError);
  EXPECT_THROW(ParseSchedule("n=2\n1\n"), ParseError);
  EXPECT_THROW(ParseSchedule("slots=1 n=2\nx\n"), ParseError);
}

}  // namespace
}  // namespace affsel
