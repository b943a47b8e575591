#include "cuspcensus/report.hpp"

#include <istream>
#include <sstream>

#include "cuspcensus/poly_io.hpp"

namespace cuspcensus {

namespace {

ordered_json verdicts_json(const GenericityReport& g) {
    ordered_json j;
    j["gradTransversal"] = to_string(g.gradTransversal);
    j["gradDisjointAtInfinity"] = to_string(g.gradDisjointAtInfinity);
    j["jTransversalInfinity"] = to_string(g.jTransversalInfinity);
    j["jJ11DisjointInfinity"] = to_string(g.jJ11DisjointInfinity);
    j["noMixedVanishing"] = to_string(g.noMixedVanishing);
    j["gradDisjointJ12"] = to_string(g.gradDisjointJ12);
    j["jJ11Transversal"] = to_string(g.jJ11Transversal);
    j["infinityNonvanishing"] = to_string(g.infinityNonvanishing);
    j["rowCondition"] = to_string(g.rowCondition);
    j["shear"] = g.shear;
    j["paperGenericEffective"] = g.paperGenericEffective;
    return j;
}

Verdict verdict_from(const std::string& s) {
    if (s == "pass") return Verdict::pass;
    if (s == "fail") return Verdict::fail;
    return Verdict::budget;
}

}  // namespace

ordered_json census_to_json(const CensusReport& r, const PlaneMap& F) {
    ordered_json j;
    j["d1"] = r.d1;
    j["d2"] = r.d2;
    j["map"] = ordered_json{{"f", to_string(F.f)}, {"g", to_string(F.g)}};
    j["formulas"] = ordered_json{{"cusps", r.cuspFormula},
                                 {"nodes", r.nodeFormula},
                                 {"genus", r.criticalGenus},
                                 {"punctures", r.pointsAtInfinity},
                                 {"discDegree", r.discriminantDegree},
                                 {"deltaInfinity", r.deltaInfinity}};
    ordered_json comp;
    if (r.computed.count)
        comp["cusps"] = *r.computed.count;
    else
        comp["cusps"] = "n/a";
    comp["dimGrad"] = r.computed.dimGrad ? ordered_json(*r.computed.dimGrad) : ordered_json("n/a");
    comp["dimJJ11"] = r.computed.dimJJ11 ? ordered_json(*r.computed.dimJJ11) : ordered_json("n/a");
    comp["certified"] = r.computed.certified;
    if (!r.computed.diagnosis.empty()) comp["diagnosis"] = r.computed.diagnosis;
    j["computed"] = comp;
    j["genericity"] = verdicts_json(r.genericity);
    j["serreResidual"] = r.serreResidual;
    j["seed"] = r.seed;
    j["flags"] = r.flags;
    return j;
}

std::pair<CensusReport, PlaneMap> census_from_json(const ordered_json& j) {
    CensusReport r;
    r.d1 = j.at("d1").get<long>();
    r.d2 = j.at("d2").get<long>();
    Poly f = parse_poly(j.at("map").at("f").get<std::string>());
    Poly g = parse_poly(j.at("map").at("g").get<std::string>());
    PlaneMap F(f, g, int(r.d1), int(r.d2));
    const auto& fo = j.at("formulas");
    r.cuspFormula = fo.at("cusps").get<long>();
    r.nodeFormula = fo.at("nodes").get<long>();
    r.criticalGenus = fo.at("genus").get<long>();
    r.pointsAtInfinity = fo.at("punctures").get<long>();
    r.discriminantDegree = fo.at("discDegree").get<long>();
    r.deltaInfinity = fo.at("deltaInfinity").get<long>();
    r.D = std::max(r.d1, r.d2) + std::min(r.d1, r.d2) - 2;
    r.gcdDeg = std::gcd(r.d1, r.d2);
    const auto& co = j.at("computed");
    if (co.at("cusps").is_number()) r.computed.count = co.at("cusps").get<long>();
    if (co.at("dimGrad").is_number()) r.computed.dimGrad = co.at("dimGrad").get<long>();
    if (co.at("dimJJ11").is_number()) r.computed.dimJJ11 = co.at("dimJJ11").get<long>();
    r.computed.certified = co.at("certified").get<bool>();
    if (co.contains("diagnosis")) r.computed.diagnosis = co.at("diagnosis").get<std::string>();
    const auto& ge = j.at("genericity");
    r.genericity.gradTransversal = verdict_from(ge.at("gradTransversal"));
    r.genericity.gradDisjointAtInfinity = verdict_from(ge.at("gradDisjointAtInfinity"));
    r.genericity.jTransversalInfinity = verdict_from(ge.at("jTransversalInfinity"));
    r.genericity.jJ11DisjointInfinity = verdict_from(ge.at("jJ11DisjointInfinity"));
    r.genericity.noMixedVanishing = verdict_from(ge.at("noMixedVanishing"));
    r.genericity.gradDisjointJ12 = verdict_from(ge.at("gradDisjointJ12"));
    r.genericity.jJ11Transversal = verdict_from(ge.at("jJ11Transversal"));
    r.genericity.infinityNonvanishing = verdict_from(ge.at("infinityNonvanishing"));
    r.genericity.rowCondition = verdict_from(ge.at("rowCondition"));
    r.genericity.shear = ge.at("shear").get<long>();
    r.genericity.paperGenericEffective = ge.at("paperGenericEffective").get<bool>();
    r.serreResidual = j.at("serreResidual").get<long>();
    r.seed = j.at("seed").get<uint64_t>();
    r.flags = j.at("flags").get<std::vector<std::string>>();
    return {r, F};
}

std::string census_to_text(const CensusReport& r, const PlaneMap& F) {
    std::ostringstream os;
    os << "map (d1=" << r.d1 << ", d2=" << r.d2 << ")\n";
    os << "  f = " << to_string(F.f) << "\n";
    os << "  g = " << to_string(F.g) << "\n";
    os << "formulas: cusps=" << r.cuspFormula << " nodes=" << r.nodeFormula
       << " genus=" << r.criticalGenus << " punctures=" << r.pointsAtInfinity
       << " discDegree=" << r.discriminantDegree << " deltaInfinity=" << r.deltaInfinity << "\n";
    os << "computed: cusps=";
    if (r.computed.count)
        os << *r.computed.count;
    else
        os << "n/a";
    os << " dimGrad=" << (r.computed.dimGrad ? std::to_string(*r.computed.dimGrad) : "n/a")
       << " dimJJ11=" << (r.computed.dimJJ11 ? std::to_string(*r.computed.dimJJ11) : "n/a")
       << (r.computed.certified ? " (certified)" : " (non-certified)") << "\n";
    if (!r.computed.diagnosis.empty()) os << "  diagnosis: " << r.computed.diagnosis << "\n";
    const GenericityReport& g = r.genericity;
    os << "genericity:"
       << " gradTransversal=" << to_string(g.gradTransversal)
       << " gradDisjointAtInfinity=" << to_string(g.gradDisjointAtInfinity)
       << " jTransversalInfinity=" << to_string(g.jTransversalInfinity)
       << " jJ11DisjointInfinity=" << to_string(g.jJ11DisjointInfinity) << "\n"
       << "           "
       << " noMixedVanishing=" << to_string(g.noMixedVanishing)
       << " gradDisjointJ12=" << to_string(g.gradDisjointJ12)
       << " jJ11Transversal=" << to_string(g.jJ11Transversal) << "\n"
       << "           "
       << " infinityNonvanishing=" << to_string(g.infinityNonvanishing)
       << " rowCondition=" << to_string(g.rowCondition) << " shear=" << g.shear
       << " generic(effective)=" << (g.paperGenericEffective ? "yes" : "no") << "\n";
    os << "serreResidual: " << r.serreResidual << "\n";
    os << "flags:";
    for (const auto& fl : r.flags) os << " " << fl;
    os << "\n";
    return os.str();
}

PlaneMap read_map_file(std::istream& in) {
    std::string line;
    std::optional<Poly> f, g;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos || (line[first] != 'f' && line[first] != 'g'))
            throw ParseError("expected 'f = <poly>' or 'g = <poly>'", lineno, first + 1);
        std::string rest = line.substr(eq + 1);
        try {
            Poly p = parse_poly(rest);
            if (line[first] == 'f')
                f = p;
            else
                g = p;
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno, eq + 1 + e.column);
        }
    }
    if (!f || !g) throw ParseError("map file must define both f and g", lineno, 1);
    return PlaneMap::of(*f, *g);
}

std::string write_map_file(const PlaneMap& F) {
    return "f = " + to_string(F.f) + "\ng = " + to_string(F.g) + "\n";
}

}  // namespace cuspcensus
