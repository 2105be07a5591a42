#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>

#include "pprev/bench.hpp"
#include "pprev/errors.hpp"

using namespace pprev;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = PPREV_FIXTURE_DIR;

}  // namespace

TEST(generator_spec, parsing) {
  EXPECT_EQ(parse_generator_spec("rd:5"), 5u);
  EXPECT_EQ(parse_generator_spec("rd:20"), 20u);
  EXPECT_FALSE(parse_generator_spec("rd:"));
  EXPECT_FALSE(parse_generator_spec("rd:x"));
  EXPECT_FALSE(parse_generator_spec("rd5"));
  EXPECT_FALSE(parse_generator_spec("file.pla"));
}

TEST(load_source, generator_and_file) {
  const auto rd = load_source("rd:5");
  EXPECT_EQ(rd.name, "rd53");
  EXPECT_EQ(rd.table.num_inputs(), 5u);
  const auto ha = load_source(kFixtures + "/half_adder.pla");
  EXPECT_EQ(ha.name, "half_adder.pla");
  EXPECT_EQ(ha.table.num_outputs(), 2u);
  EXPECT_THROW(load_source(kFixtures + "/missing.pla"), Error);
  EXPECT_THROW(load_source("rd:30"), TooLarge);
}

TEST(run_suite, rd_family_small) {
  const std::vector<std::string> sources{"rd:5", "rd:7", "rd:8"};
  const auto records = run_suite(sources);
  ASSERT_EQ(records.size(), 3u);
  const unsigned expected[3][2] = {{5, 3}, {7, 3}, {8, 4}};
  for (std::size_t i = 0; i < 3; ++i) {
    ASSERT_TRUE(records[i].ok()) << *records[i].error;
    EXPECT_EQ(records[i].report.garbage, expected[i][0]);
    EXPECT_EQ(records[i].report.ancilla, expected[i][1]);
    EXPECT_GE(records[i].report.runtime_ms, 0.0);
  }
  EXPECT_EQ(records[0].report.name, "rd53");
}

TEST(run_suite, rd_family_large) {
  const std::vector<std::string> sources{"rd:10", "rd:20"};
  const auto records = run_suite(sources, {.jobs = 2});
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].report.garbage, 9u);
  EXPECT_EQ(records[0].report.ancilla, 3u);
  EXPECT_EQ(records[1].report.name, "rd20_5");
  EXPECT_EQ(records[1].report.garbage, 19u);
  EXPECT_EQ(records[1].report.ancilla, 4u);
}

TEST(run_suite, empty_and_failures) {
  EXPECT_TRUE(run_suite({}).empty());
  const std::vector<std::string> sources{kFixtures + "/conflict.pla", "rd:3", kFixtures + "/nope.pla"};
  const auto records = run_suite(sources);
  ASSERT_EQ(records.size(), 3u);
  EXPECT_FALSE(records[0].ok());
  EXPECT_TRUE(records[1].ok());
  EXPECT_FALSE(records[2].ok());
  EXPECT_EQ(records[0].source, sources[0]);
}

TEST(run_suite, deterministic_apart_from_runtime) {
  const std::vector<std::string> sources{"rd:6", kFixtures + "/full_adder.pla", kFixtures + "/fredkin.pla", "rd:9"};
  const auto a = run_suite(sources, {.jobs = 1});
  const auto b = run_suite(sources, {.jobs = 4});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].source, b[i].source);
    EXPECT_EQ(a[i].report.name, b[i].report.name);
    EXPECT_EQ(a[i].report.garbage, b[i].report.garbage);
    EXPECT_EQ(a[i].report.ancilla, b[i].report.ancilla);
    EXPECT_EQ(a[i].report.bound, b[i].report.bound);
    const auto& r = a[i].report;
    EXPECT_EQ(r.inputs + r.ancilla, r.outputs + r.garbage);
  }
  EXPECT_EQ(a[2].report.garbage, 0u);
  EXPECT_TRUE(a[2].report.parity_preserving);
}

TEST(expand_sources, directories_sorted_and_specs_passed_through) {
  const std::vector<std::string> args{kFixtures, "rd:4"};
  const auto sources = expand_sources(args);
  ASSERT_GE(sources.size(), 3u);
  EXPECT_EQ(sources.back(), "rd:4");
  EXPECT_TRUE(std::is_sorted(sources.begin(), sources.end() - 1));
  for (std::size_t i = 0; i + 1 < sources.size(); ++i) EXPECT_EQ(fs::path(sources[i]).extension(), ".pla");
  const std::vector<std::string> empty_dir{kFixtures + "/benchmarks"};
  for (const auto& s : expand_sources(empty_dir)) EXPECT_EQ(fs::path(s).extension(), ".pla");
}

TEST(scaling_check, doubles_per_input) {
  const auto points = scaling_check(11, 10);
  ASSERT_EQ(points.size(), 2u);
  const double ratio = points[1].runtime_ms / points[0].runtime_ms;
  EXPECT_GE(ratio, 1.5);
  EXPECT_LE(ratio, 3.0);
  EXPECT_EQ(scaling_check(10).size(), 1u);
  EXPECT_THROW(scaling_check(23), TooLarge);
}

TEST(scaling_check, rd20_finishes_quickly) {
  const auto points = scaling_check(20, 20);
  ASSERT_EQ(points.size(), 1u);
  EXPECT_LT(points[0].runtime_ms, 5000.0);
}

TEST(growth_ratio, geometric_mean) {
  const std::vector<ScalingPoint> pts{{1, 1.0}, {2, 2.0}, {3, 8.0}};
  EXPECT_NEAR(growth_ratio(pts), std::sqrt(8.0), 1e-12);
  EXPECT_EQ(growth_ratio(std::vector<ScalingPoint>{{1, 3.0}}), 1.0);
}

// Optional checks against externally supplied benchmark files.
namespace {

void expect_benchmark(const std::string& file, unsigned garbage, unsigned ancilla) {
  const auto path = kFixtures + "/benchmarks/" + file;
  if (!fs::exists(path)) GTEST_SKIP() << file << " not supplied";
  const std::vector<std::string> sources{path};
  const auto records = run_suite(sources);
  ASSERT_TRUE(records[0].ok()) << *records[0].error;
  EXPECT_EQ(records[0].report.garbage, garbage);
  EXPECT_EQ(records[0].report.ancilla, ancilla);
}

}  // namespace

TEST(benchmark_files, ham7) { expect_benchmark("ham7_29.pla", 1, 1); }
TEST(benchmark_files, ham8) { expect_benchmark("ham8_64.pla", 1, 1); }
TEST(benchmark_files, squar5) { expect_benchmark("squar5.pla", 1, 4); }
