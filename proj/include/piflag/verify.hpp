#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "piflag/bwb.hpp"
#include "piflag/solver.hpp"

namespace piflag {

// Batch verification front door: run the classification checks for one flag
// type and grade the results against the predicted values.
struct VerifyConfig {
    FlagType flag;
    std::optional<int> degree;        // ansatz degree override for the field solver
    std::vector<std::string> checks;  // empty = every applicable check
    bool with_timestamp = true;

    static const std::vector<std::string>& known_checks();
};

struct Report {
    nlohmann::ordered_json json;
    bool ok = false;
    int exit_code = 2;

    std::string text() const;
};

// Executes the selected checks in fixed order. Exit code 0 when every check
// matches the predicted value, 1 on a mismatch, 2 on configuration errors.
Report run(const VerifyConfig& config);

// Expected outcome table: graded dimensions of the global field algebra and
// whether the flag is the exceptional super-Grassmannian.
struct Prediction {
    int even_dim = 0;
    int odd_dim = 0;
    bool exceptional = false;
};
Prediction predict(const FlagType& flag);

// Deterministic chart/transition dump of the whole atlas.
nlohmann::ordered_json atlas_dump(const Atlas& atlas);

}  // namespace piflag
