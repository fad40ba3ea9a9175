#include "ninefields/records.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace ninefields {

CurveRecord make_record(const WeierstrassModel& E, const ConductorData& cd,
                        const std::string& family, const std::string& torsion,
                        const std::string& label) {
    CurveRecord r;
    r.d = E.F->d;
    WeierstrassModel M = global_minimal_model(E, cd);
    r.ainvs = M.a;
    for (const auto& ld : cd.bad) {
        r.conductor.push_back({ld.prime, ld.f});
        r.disc_valuations.push_back(ld.v_min_disc);
        r.kodaira.push_back(ld.kodaira);
    }
    r.conductor_norm = cd.conductor_norm;
    r.disc_min = cd.disc_min;
    r.family = family;
    r.torsion = torsion;
    r.label = label.empty() ? known_label(r.d, r.disc_min, r.conductor_norm) : label;
    return r;
}

std::string record_to_jsonl(const CurveRecord& r) {
    nlohmann::ordered_json j;
    j["field_d"] = r.d;
    auto pair_of = [](const QuadInt& z) {
        return nlohmann::ordered_json::array({z.x.get_str(), z.y.get_str()});
    };
    nlohmann::ordered_json ai = nlohmann::ordered_json::array();
    for (const auto& a : r.ainvs) ai.push_back(pair_of(a));
    j["ainvs"] = ai;
    nlohmann::ordered_json cond;
    cond["norm"] = r.conductor_norm.get_str();
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    nlohmann::ordered_json exps = nlohmann::ordered_json::array();
    for (const auto& [P, f] : r.conductor) {
        gens.push_back(to_string(P.gen));
        exps.push_back(f);
    }
    cond["gens"] = gens;
    cond["exponents"] = exps;
    j["conductor"] = cond;
    j["disc_min"] = pair_of(r.disc_min);
    j["disc_valuations"] = r.disc_valuations;
    j["kodaira"] = r.kodaira;
    j["family"] = r.family;
    j["torsion_structure"] = r.torsion;
    if (!r.label.empty()) j["label"] = r.label;
    if (r.supersingular_at_2) j["supersingular_at_2"] = true;
    return j.dump();
}

bool record_less(const CurveRecord& a, const CurveRecord& b) {
    if (a.conductor_norm != b.conductor_norm) return a.conductor_norm < b.conductor_norm;
    Int na = norm(a.disc_min), nb = norm(b.disc_min);
    if (na != nb) return na < nb;
    for (size_t i = 0; i < a.ainvs.size(); ++i) {
        if (a.ainvs[i] != b.ainvs[i]) return quad_less(a.ainvs[i], b.ainvs[i]);
    }
    return false;
}

bool same_curve(const CurveRecord& a, const CurveRecord& b) {
    if (a.d != b.d || a.conductor_norm != b.conductor_norm) return false;
    // minimal discriminants agree exactly and the minimal models have the
    // same invariants up to unit scaling
    if (a.disc_min != b.disc_min) return false;
    WeierstrassModel Ma(a.ainvs[0], a.ainvs[1], a.ainvs[2], a.ainvs[3], a.ainvs[4]);
    WeierstrassModel Mb(b.ainvs[0], b.ainvs[1], b.ainvs[2], b.ainvs[3], b.ainvs[4]);
    Invariants Ia = invariants(Ma), Ib = invariants(Mb);
    for (const auto& u : FieldCtx::get(a.d).units) {
        if (pow(u, 4) * Ia.c4 == Ib.c4 && pow(u, 6) * Ia.c6 == Ib.c6) return true;
    }
    return false;
}

std::string known_label(int d, const QuadInt& disc_min, const Int& cond_norm) {
    // base changes of a few standard rational curves, recognized by the exact
    // minimal discriminant when it is rational
    struct Known {
        long disc;
        long cond;
        const char* label;
    };
    static const Known table[] = {
        {-11, 11, "11a3"},     {-11, 121, "11a3"},   {-19, 19, "19a3"},    {-19, 361, "19a3"},
        {37, 37, "37b3"},      {-17, 17, "17a"},     {-7 * 7 * 7, 49, "49a1"},
    };
    if (disc_min.y == 0 && disc_min.x.fits_slong_p() && cond_norm.fits_slong_p()) {
        long dm = disc_min.x.get_si(), cn = cond_norm.get_si();
        for (const auto& k : table)
            if (k.disc == dm && k.cond == cn) return k.label;
    }
    (void)d;
    return "";
}

} // namespace ninefields
