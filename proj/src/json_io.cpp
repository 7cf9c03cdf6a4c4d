#include "davlab/json_io.hpp"

#include <stdexcept>

namespace davlab {

Json group_to_json(const FiniteGroup& g) {
    Json j;
    j["order"] = g.order();
    j["table"] = Json::array();
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) j["table"].push_back(g.mul(a, b));
    j["labels"] = g.labels();
    return j;
}

FiniteGroup group_from_json(const Json& j) {
    if (!j.contains("order") || !j.contains("table"))
        throw std::invalid_argument("group JSON needs 'order' and 'table'");
    int order = j.at("order").get<int>();
    std::vector<int> table = j.at("table").get<std::vector<int>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteGroup(order, std::move(table), std::move(labels));
}

Json params_to_json(const Index2Params& p) {
    Json j;
    j["name"] = p.name();
    j["s"] = p.s;
    j["m"] = p.m;
    j["r"] = p.r;
    j["ptype"] = to_string(p.ptype);
    j["order"] = p.order();
    j["n"] = p.n;
    j["n_plus"] = p.n_plus;
    j["n_minus"] = p.n_minus;
    j["m_plus"] = p.m_plus;
    j["m_minus"] = p.m_minus;
    j["rho"] = p.rho;
    j["sylow_kind"] = to_string(p.sylow_kind());
    j["abelian"] = p.is_abelian();
    return j;
}

Index2Params params_from_json(const Json& j) {
    for (const char* k : {"s", "m", "r", "ptype"})
        if (!j.contains(k))
            throw std::invalid_argument(std::string("params JSON needs '") + k + "'");
    return Index2Params::make(j.at("s").get<int>(), j.at("m").get<int>(),
                              j.at("r").get<int>(),
                              presentation_type_from_string(j.at("ptype").get<std::string>()));
}

Json sequence_to_json(const Sequence& s) {
    Json j = Json::array();
    for (int e : s.support())
        j.push_back(Json::array({s.group().label(e), s.multiplicity(e)}));
    return j;
}

Sequence sequence_from_json(const FiniteGroup& g, const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("sequence JSON must be an array");
    Sequence s(g);
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2)
            throw std::invalid_argument("sequence entries are [label, multiplicity]");
        int e;
        if (item[0].is_number_integer()) {
            e = item[0].get<int>();
            if (e < 0 || e >= g.order())
                throw std::invalid_argument("element index out of range");
        } else {
            auto found = g.element_by_label(item[0].get<std::string>());
            if (!found)
                throw std::invalid_argument("unknown element label " +
                                            item[0].get<std::string>());
            e = *found;
        }
        s.add(e, item[1].get<int>());
    }
    return s;
}

Json report_to_json(const DavenportReport& r) {
    Json j;
    j["group"] = params_to_json(r.params);
    j["d"] = r.d;
    j["D"] = r.dav;
    j["d_formula"] = r.d_formula;
    j["D_formula"] = r.dav_formula;
    j["match"] = r.match;
    j["witness_free"] = sequence_to_json(r.witness_free);
    j["witness_atom"] = sequence_to_json(r.witness_atom);
    j["stats"]["states"] = r.stats.states;
    j["stats"]["split_leaves"] = r.stats.split_leaves;
    j["stats"]["seconds"] = r.stats.seconds;
    return j;
}

Json witness_to_json(const WitnessRecord& w) {
    Json j;
    j["group"] = params_to_json(w.params);
    j["witness"] = sequence_to_json(w.witness);
    j["claimed_length"] = w.claimed_length;
    j["length_ok"] = w.length_ok;
    j["product_one"] = w.product_one;
    j["atom"] = w.atom;
    j["ok"] = w.all_ok();
    return j;
}

Json bounds_to_json(const BoundsReport& b) {
    Json j;
    j["all_ok"] = b.all_ok;
    j["checks"] = Json::array();
    for (const auto& c : b.checks) {
        Json e;
        e["check"] = c.description;
        e["lhs"] = c.lhs;
        e["rhs"] = c.rhs;
        e["ok"] = c.ok;
        j["checks"].push_back(e);
    }
    return j;
}

}  // namespace davlab
