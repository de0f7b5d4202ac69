#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cellatlas::exc {

struct ExceptionalCell {
    std::string subgroup;        // "1", "Z/2", "S2", "S3", "S4", "S5", "S2xS2", "S3xS2", "Dyh8"
    std::optional<long> count;   // empty when the source prints no multiplicity
};

struct ExceptionalRecord {
    std::string group;  // G2, F4, E6, E7, E8
    std::string orbit;  // Bala-Carter label
    std::string abar;   // Z/2, S3, S4, S5
    bool exceptional_cell;
    std::vector<ExceptionalCell> cells;

    // "(S4/S4)^3 ⊔ (S4/S3)^3 ⊔ ..." or "unknown" when any count is missing.
    std::string y_prime() const;
};

// All transcribed records, in source order. Verifies the embedded data
// checksum on first use.
const std::vector<ExceptionalRecord>& exceptional_table();

const ExceptionalRecord& lookup(const std::string& group, const std::string& orbit);

// Orbit labels carried by the table, optionally filtered by Abar name.
std::vector<std::string> list_orbits(const std::string& group, const std::string& abar_filter = "");

bool is_exceptional_group(const std::string& group);

long subgroup_order(const std::string& name);

}  // namespace cellatlas::exc
