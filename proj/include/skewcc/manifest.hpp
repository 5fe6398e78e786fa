#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "skewcc/block_code.hpp"

namespace skewcc {

// One entry of the bundled reference-construction suite: a recipe, the
// expected outcome, and what the run found. Cases either rebuild a code and
// compare [n, k, d] (plus the published generator matrix when one exists) or
// replay an arithmetic identity.
struct CaseResult {
    std::string name;
    std::string kind;          // factorization | identity | witness | phi | eta | psi
    std::string construction;  // human-readable recipe
    bool has_params = false;
    std::array<std::uint32_t, 3> expected{0, 0, 0};
    std::array<std::uint32_t, 3> computed{0, 0, 0};
    bool matrix_checked = false;
    bool matrix_match = false;
    std::string note;
    bool pass = false;
};

struct ManifestOptions {
    std::uint64_t budget = kDefaultWalkBudget;
    std::uint32_t workers = 1;
};

// Runs every case in a fixed order; deterministic output independent of the
// worker count.
std::vector<CaseResult> run_manifest(const ManifestOptions& opts = {});

}  // namespace skewcc
