#pragma once

#include "paramodular/hilbert.hpp"
#include "paramodular/report.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace paramodular {

// Named property suites behind `verify`.  Each returns one verdict per checked property;
// a failing verdict carries the first counterexample in enumeration order.

std::vector<SuiteVerdict> suite_psi_image(std::uint64_t seed, int samples = 500);
std::vector<SuiteVerdict> suite_quadric_diagram(std::uint64_t seed, int samples = 100);
std::vector<SuiteVerdict> suite_lift_eigen(std::uint64_t seed, long bound = 8);
// bound defaults to 10 t per t.
std::vector<SuiteVerdict> suite_ramification_oracle(long max_t = 30, std::optional<long> bound = std::nullopt);
std::vector<SuiteVerdict> suite_brasch();
std::vector<SuiteVerdict> suite_hilbert(long t, Variant v, std::uint64_t seed, int samples = 100);
std::vector<SuiteVerdict> suite_hilbert_all(std::uint64_t seed, int samples = 100);

// A random point of the Siegel space with small Gaussian-rational coordinates.
SiegelPoint sample_siegel_point(std::uint64_t seed);

} // namespace paramodular
