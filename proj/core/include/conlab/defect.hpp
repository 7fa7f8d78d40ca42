#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conlab/germ.hpp"

namespace conlab {

// Everything the engine can say about one singular point. type_defect is the
// primary degeneracy measure (it vanishes exactly for Gorenstein germs);
// conductor_gap_defect is the conductor-window overcount reported alongside.
struct LocalDefectReport {
    std::string germ_name;
    long delta = 0;
    long conductor_colength = 0;
    bool gorenstein = false;
    long cm_type = 0;
    long type_defect = 0;          // cm_type - 1
    long conductor_gap_defect = 0; // colength - delta = polar window minus regular polar space
    std::optional<long> paper_claim;
    std::optional<bool> agrees_with_paper;
};

LocalDefectReport local_defect(const CurveGerm& g);

struct GlobalDefectReport {
    std::vector<LocalDefectReport> locals;
    long total_defect = 0; // sum of local type defects
    long codim_delta = 0;  // equals total_defect

    bool in_stratum(long k) const { return total_defect >= k; }
};

GlobalDefectReport global_defect(std::vector<LocalDefectReport> locals);

enum class GorensteinClass { gorenstein, non_gorenstein };

// The three independent witnesses must agree; a mismatch is an engine bug and
// raises InternalInconsistency.
struct Classification {
    GorensteinClass label;
    bool colength_is_two_delta;
    bool cm_type_is_one;
    bool type_defect_is_zero;
};

Classification classify(const CurveGerm& g);

const char* to_string(GorensteinClass c);

} // namespace conlab
