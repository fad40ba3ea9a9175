// Found-curve records and their JSONL form.
#pragma once

#include "ninefields/tate.hpp"

#include <nlohmann/json_fwd.hpp>

namespace ninefields {

struct CurveRecord {
    int d = 0;
    std::array<QuadInt, 5> ainvs{};
    std::vector<std::pair<PrimeElement, int>> conductor; // (prime, exponent)
    Int conductor_norm{1};
    QuadInt disc_min;
    std::vector<long> disc_valuations; // aligned with conductor entries
    std::vector<std::string> kodaira;  // aligned with conductor entries
    std::string family;
    std::string torsion;
    std::string label; // optional annotation
    bool supersingular_at_2 = false;
};

// assemble a record from a model and its conductor data
CurveRecord make_record(const WeierstrassModel& E, const ConductorData& cd,
                        const std::string& family, const std::string& torsion,
                        const std::string& label = "");

std::string record_to_jsonl(const CurveRecord& r);

// deterministic sort for output files
bool record_less(const CurveRecord& a, const CurveRecord& b);
// identical curve (same field, same minimal invariants up to unit scaling)
bool same_curve(const CurveRecord& a, const CurveRecord& b);

// attach the standard label when the curve is a recognized one
std::string known_label(int d, const QuadInt& disc_min, const Int& cond_norm);

} // namespace ninefields
