#pragma once

#include <cstdint>
#include <filesystem>

#include "hermcheck/report.hpp"

namespace hermcheck {

/// Runs the expectations of every *.json manifest directly inside `dir`, in
/// file-name order. Each manifest yields one report whose checks compare the
/// expected status or value against the computed one. `seed` feeds the
/// randomized checks unless an expectation passes its own --seed.
ReportSet run_corpus(const std::filesystem::path& dir, std::uint64_t seed = 0);

}  // namespace hermcheck
