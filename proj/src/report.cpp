#include "genpolar/report.hpp"

#include <sstream>

namespace genpolar {

json envelope(const std::string& command, json inputs, json result,
              std::vector<std::string> warnings) {
    json env;
    env["schema_version"] = kSchemaVersion;
    env["tool_version"] = kToolVersion;
    env["command"] = command;
    env["inputs"] = std::move(inputs);
    env["result"] = std::move(result);
    env["warnings"] = warnings;
    validate_envelope(env);
    return env;
}

void validate_envelope(const json& env) {
    auto fail = [](const char* why) { throw std::logic_error(std::string("envelope: ") + why); };
    if (!env.is_object()) fail("not an object");
    for (const char* key : {"schema_version", "tool_version", "command", "inputs", "result",
                            "warnings"})
        if (!env.contains(key)) fail("missing required key");
    if (!env["schema_version"].is_string() || env["schema_version"] != kSchemaVersion)
        fail("bad schema_version");
    if (!env["tool_version"].is_string()) fail("bad tool_version");
    if (!env["command"].is_string()) fail("bad command");
    if (!env["inputs"].is_object()) fail("inputs must be an object");
    if (!env["warnings"].is_array()) fail("warnings must be an array");
    for (const auto& w : env["warnings"])
        if (!w.is_string()) fail("warnings must be strings");
}

json to_json(const LatticePoint& p) { return json::array({p.i, p.j}); }

json to_json(const CompactEdge& e) {
    json j;
    j["from"] = to_json(e.from);
    j["to"] = to_json(e.to);
    j["len1"] = e.len1;
    j["len2"] = e.len2;
    j["d"] = e.d;
    j["inclination"] = rat_to_string(e.inclination());
    return j;
}

json to_json(const NewtonPolygon& np) {
    json j;
    j["vertices"] = json::array();
    for (const LatticePoint& v : np.vertices) j["vertices"].push_back(to_json(v));
    j["edges"] = json::array();
    for (const CompactEdge& e : np.edges) j["edges"].push_back(to_json(e));
    return j;
}

json to_json(const NumericalSemigroup& s) {
    json j = json::array();
    for (const Int& g : s.gens) j.push_back(g.get_str());
    return j;
}

json to_json(const EquisingularityType& t) {
    json j;
    j["classes"] = json::array();
    for (std::size_t k = 0; k < t.classes.size(); ++k) {
        json c;
        c["count"] = t.classes[k].count.get_str();
        c["semigroup"] = to_json(t.classes[k].gens);
        c["smooth"] = t.classes[k].gens.smooth();
        if (t.classes[k].count > 1) c["pairwise_intersection"] = t.pairwise[k][k].get_str();
        j["classes"].push_back(std::move(c));
    }
    j["cross_intersections"] = json::array();
    for (std::size_t a = 0; a < t.classes.size(); ++a)
        for (std::size_t b = a + 1; b < t.classes.size(); ++b) {
            json c;
            c["classes"] = json::array({a, b});
            c["intersection"] = t.pairwise[a][b].get_str();
            j["cross_intersections"].push_back(std::move(c));
        }
    j["summary"] = t.str();
    return j;
}

json to_json(const ClassificationReport& rep) {
    json j;
    j["case"] = to_string(rep.case_tag);
    j["predicted_polygon"] = to_json(rep.predicted_polygon);
    if (rep.type) j["type"] = to_json(*rep.type);
    else j["type"] = "UNDECIDED";
    j["notes"] = rep.notes;
    return j;
}

json to_json(const PolarSample& s) {
    json j;
    j["direction"] = json::array({s.a, s.b});
    j["polygon"] = to_json(s.polygon);
    j["nondegenerate"] = s.nondegenerate;
    if (s.degenerate_edge) j["degenerate_edge"] = to_json(*s.degenerate_edge);
    j["trials"] = json::array();
    for (const TrialRecord& t : s.trials) {
        json r;
        r["direction"] = json::array({t.a, t.b});
        r["modal"] = t.modal;
        r["nondegenerate"] = t.nondegenerate;
        j["trials"].push_back(std::move(r));
    }
    return j;
}

json to_json(const PuiseuxBranchApprox& b) {
    json j;
    j["ramification"] = b.denominator;
    j["residual_norm"] = b.residual_norm;
    j["terms"] = json::array();
    for (const auto& [ex, co] : b.terms) {
        json t;
        t["exponent"] = rat_to_string(ex);
        std::ostringstream re, im;
        re.precision(12);
        im.precision(12);
        re << co.real();
        im << co.imag();
        t["coefficient"] = json::array({re.str(), im.str()});
        j["terms"].push_back(std::move(t));
    }
    return j;
}

}  // namespace genpolar
