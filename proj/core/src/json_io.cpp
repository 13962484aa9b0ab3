#include "fairshare/json_io.hpp"

#include <json.hpp>

namespace fairshare {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) {
    throw ValidationError(ValidationError::Code::ParseError, what);
}

json rational_to_json(const Rational& r) {
    if (r.is_integer()) {
        return r.numerator();
    }
    return r.str();
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer() || j.is_number_unsigned()) {
        return Rational(j.get<long long>());
    }
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_float()) {
        parse_fail("floating-point numbers are not accepted; use integers or \"p/q\" strings");
    }
    parse_fail("expected a rational (integer or \"p/q\" string)");
}

json parse_document(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) {
        parse_fail("malformed JSON document");
    }
    return j;
}

const json& require_key(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) {
        parse_fail(std::string("missing required key '") + key + "'");
    }
    return *it;
}

int int_from_json(const json& j, const char* what) {
    if (!j.is_number_integer() && !j.is_number_unsigned()) {
        parse_fail(std::string("expected an integer for ") + what);
    }
    return j.get<int>();
}

std::vector<std::pair<int, int>> edge_list_from_json(const json& j) {
    if (!j.is_array()) {
        parse_fail("expected an array of [u, v] edges");
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) {
            parse_fail("each edge must be a two-element array");
        }
        edges.emplace_back(int_from_json(e[0], "edge endpoint"),
                           int_from_json(e[1], "edge endpoint"));
    }
    return edges;
}

json matrix_to_json(const std::vector<std::vector<Rational>>& rows) {
    json result = json::array();
    for (const auto& row : rows) {
        json jrow = json::array();
        for (const auto& value : row) {
            jrow.push_back(rational_to_json(value));
        }
        result.push_back(std::move(jrow));
    }
    return result;
}

std::vector<std::vector<Rational>> matrix_from_json(const json& j, const char* what) {
    if (!j.is_array()) {
        parse_fail(std::string("expected a matrix for ") + what);
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& jrow : j) {
        if (!jrow.is_array()) {
            parse_fail(std::string("expected a matrix row for ") + what);
        }
        std::vector<Rational> row;
        for (const auto& cell : jrow) {
            row.push_back(rational_from_json(cell));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json instance_body(const Instance& inst) {
    json j;
    j["n"] = inst.n;
    j["m"] = inst.m;
    j["capacities"] = inst.capacities;
    j["values"] = matrix_to_json(inst.values);
    if (inst.profile.externality_graph.has_value()) {
        json edges = json::array();
        for (const auto& [u, v] : inst.profile.externality_graph->edges()) {
            edges.push_back(json::array({u, v}));
        }
        j["graph"] = json{{"edges", std::move(edges)}};
    } else {
        j["externalities"] = matrix_to_json(inst.externalities);
    }
    return j;
}

Instance instance_from_document(const json& j) {
    if (!j.is_object()) {
        parse_fail("instance document must be a JSON object");
    }
    InstanceData data;
    data.n = int_from_json(require_key(j, "n"), "n");
    data.m = int_from_json(require_key(j, "m"), "m");
    const json& caps = require_key(j, "capacities");
    if (!caps.is_array()) {
        parse_fail("capacities must be an array");
    }
    for (const auto& c : caps) {
        data.capacities.push_back(int_from_json(c, "capacity"));
    }
    data.values = matrix_from_json(require_key(j, "values"), "values");

    bool has_matrix = j.contains("externalities");
    bool has_graph = j.contains("graph");
    if (has_matrix == has_graph) {
        parse_fail("provide exactly one of 'externalities' and 'graph'");
    }
    if (has_matrix) {
        data.externalities = matrix_from_json(j["externalities"], "externalities");
    } else {
        if (data.n < 0) {
            parse_fail("negative agent count");
        }
        data.externalities.assign(data.n, std::vector<Rational>(data.n, Rational(0)));
        for (const auto& [u, v] : edge_list_from_json(require_key(j["graph"], "edges"))) {
            if (u < 0 || v < 0 || u >= data.n || v >= data.n || u == v) {
                parse_fail("graph edge out of range");
            }
            data.externalities[u][v] = Rational(1);
            data.externalities[v][u] = Rational(1);
        }
    }
    return validate_instance(data);
}

json assignment_body(const Assignment& x) {
    json groups = json::array();
    for (const auto& group : x.groups) {
        groups.push_back(group);
    }
    return json{{"assignment", std::move(groups)}};
}

Assignment assignment_from_document(const json& j) {
    const json& groups = require_key(j, "assignment");
    if (!groups.is_array()) {
        parse_fail("assignment must be an array of agent-index arrays");
    }
    Assignment x;
    for (const auto& jgroup : groups) {
        if (!jgroup.is_array()) {
            parse_fail("each assignment group must be an array");
        }
        std::vector<int> group;
        for (const auto& agent : jgroup) {
            group.push_back(int_from_json(agent, "agent index"));
        }
        x.groups.push_back(std::move(group));
    }
    x.canonicalize();
    return x;
}

json pair_assign_to_json(const SolveTrace::PairAssign& p) {
    return json{{"pair", json::array({p.first_agent, p.second_agent})}, {"dorm", p.dorm}};
}

SolveTrace::PairAssign pair_assign_from_json(const json& j) {
    SolveTrace::PairAssign p;
    const json& pair = require_key(j, "pair");
    p.first_agent = int_from_json(pair.at(0), "agent");
    p.second_agent = int_from_json(pair.at(1), "agent");
    p.dorm = int_from_json(require_key(j, "dorm"), "dorm");
    return p;
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
    return instance_body(inst).dump(2);
}

Instance instance_from_json(const std::string& text) {
    return instance_from_document(parse_document(text));
}

std::string assignment_to_json(const Assignment& x) {
    return assignment_body(x).dump(2);
}

Assignment assignment_from_json(const std::string& text) {
    return assignment_from_document(parse_document(text));
}

std::string graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) {
        edges.push_back(json::array({u, v}));
    }
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = std::move(edges);
    return j.dump(2);
}

Graph graph_from_json(const std::string& text) {
    json j = parse_document(text);
    int n = int_from_json(require_key(j, "n"), "n");
    Graph g(n);
    for (const auto& [u, v] : edge_list_from_json(require_key(j, "edges"))) {
        g.add_edge(u, v);
    }
    return g;
}

std::string report_to_json(const FairnessReport& report) {
    json j;
    json utilities = json::array();
    for (const auto& u : report.utilities) {
        utilities.push_back(json{{"internal", rational_to_json(u.internal)},
                                 {"external", rational_to_json(u.external)},
                                 {"total", rational_to_json(u.total)}});
    }
    j["utilities"] = std::move(utilities);
    if (report.has_violations) {
        json ef = json::array();
        for (const auto& [i, k] : report.ef_violations) {
            ef.push_back(json::array({i, k}));
        }
        json pef = json::array();
        for (const auto& [i, k] : report.pef_violations) {
            pef.push_back(json::array({i, k}));
        }
        j["ef_violations"] = std::move(ef);
        j["pef_violations"] = std::move(pef);
    }
    if (report.has_prop) {
        json prop = json::array();
        for (const auto& entry : report.prop) {
            json e;
            e["share"] = rational_to_json(entry.share);
            if (entry.ratio) {
                e["ratio"] = rational_to_json(*entry.ratio);
            }
            e["satisfied"] = entry.satisfied;
            prop.push_back(std::move(e));
        }
        j["prop"] = std::move(prop);
        if (report.min_prop_ratio) {
            j["min_prop_ratio"] = rational_to_json(*report.min_prop_ratio);
        }
    }
    return j.dump(2);
}

FairnessReport report_from_json(const std::string& text) {
    json j = parse_document(text);
    FairnessReport report;
    for (const auto& ju : require_key(j, "utilities")) {
        AgentUtility u;
        u.internal = rational_from_json(require_key(ju, "internal"));
        u.external = rational_from_json(require_key(ju, "external"));
        u.total = rational_from_json(require_key(ju, "total"));
        report.utilities.push_back(u);
    }
    if (j.contains("ef_violations")) {
        report.has_violations = true;
        for (const auto& [i, k] : edge_list_from_json(j["ef_violations"])) {
            report.ef_violations.emplace_back(i, k);
        }
        for (const auto& [i, k] : edge_list_from_json(require_key(j, "pef_violations"))) {
            report.pef_violations.emplace_back(i, k);
        }
    }
    if (j.contains("prop")) {
        report.has_prop = true;
        for (const auto& je : j["prop"]) {
            PropEntry entry;
            entry.share = rational_from_json(require_key(je, "share"));
            if (je.contains("ratio")) {
                entry.ratio = rational_from_json(je["ratio"]);
            }
            entry.satisfied = require_key(je, "satisfied").get<bool>();
            report.prop.push_back(entry);
        }
        if (j.contains("min_prop_ratio")) {
            report.min_prop_ratio = rational_from_json(j["min_prop_ratio"]);
        }
    }
    return report;
}

std::string trace_to_json(const SolveTrace& trace) {
    json j;
    j["tutte_set"] = trace.tutte_set;
    json matching = json::array();
    for (const auto& [u, v] : trace.matching) {
        matching.push_back(json::array({u, v}));
    }
    j["matching"] = std::move(matching);
    j["unmatched"] = trace.initial_unmatched;

    json step2 = json::array();
    for (const auto& p : trace.step2) {
        step2.push_back(pair_assign_to_json(p));
    }
    j["step2"] = std::move(step2);

    json step3 = json::array();
    for (const auto& record : trace.step3) {
        json jr;
        jr["component"] = record.component;
        jr["leftover"] = record.leftover;
        json pairs = json::array();
        for (const auto& p : record.pairs) {
            pairs.push_back(pair_assign_to_json(p));
        }
        jr["pairs"] = std::move(pairs);
        step3.push_back(std::move(jr));
    }
    j["step3"] = std::move(step3);

    json rounds = json::array();
    for (const auto& round : trace.rounds) {
        json jr;
        jr["round"] = round.index;
        jr["case"] = round.case_id;
        json pairs = json::array();
        for (const auto& p : round.pairs) {
            pairs.push_back(pair_assign_to_json(p));
        }
        jr["pairs"] = std::move(pairs);
        if (!round.witness.empty()) {
            jr["witness"] = round.witness;
        }
        if (round.designated) {
            jr["designated"] = *round.designated;
        }
        jr["remaining_a"] = round.remaining_a;
        jr["remaining_l"] = round.remaining_l;
        rounds.push_back(std::move(jr));
    }
    j["rounds"] = std::move(rounds);
    return j.dump(2);
}

SolveTrace trace_from_json(const std::string& text) {
    json j = parse_document(text);
    SolveTrace trace;
    for (const auto& v : require_key(j, "tutte_set")) {
        trace.tutte_set.push_back(int_from_json(v, "agent"));
    }
    trace.matching = edge_list_from_json(require_key(j, "matching"));
    for (const auto& v : require_key(j, "unmatched")) {
        trace.initial_unmatched.push_back(int_from_json(v, "agent"));
    }
    for (const auto& p : require_key(j, "step2")) {
        trace.step2.push_back(pair_assign_from_json(p));
    }
    for (const auto& jr : require_key(j, "step3")) {
        SolveTrace::OddComponentRecord record;
        for (const auto& v : require_key(jr, "component")) {
            record.component.push_back(int_from_json(v, "agent"));
        }
        record.leftover = int_from_json(require_key(jr, "leftover"), "agent");
        for (const auto& p : require_key(jr, "pairs")) {
            record.pairs.push_back(pair_assign_from_json(p));
        }
        trace.step3.push_back(std::move(record));
    }
    for (const auto& jr : require_key(j, "rounds")) {
        SolveTrace::Round round;
        round.index = int_from_json(require_key(jr, "round"), "round");
        round.case_id = int_from_json(require_key(jr, "case"), "case");
        for (const auto& p : require_key(jr, "pairs")) {
            round.pairs.push_back(pair_assign_from_json(p));
        }
        if (jr.contains("witness")) {
            for (const auto& v : jr["witness"]) {
                round.witness.push_back(int_from_json(v, "agent"));
            }
        }
        if (jr.contains("designated")) {
            round.designated = int_from_json(jr["designated"], "agent");
        }
        round.remaining_a = int_from_json(require_key(jr, "remaining_a"), "remaining_a");
        round.remaining_l = int_from_json(require_key(jr, "remaining_l"), "remaining_l");
        trace.rounds.push_back(std::move(round));
    }
    return trace;
}

std::string bundle_to_json(const Instance& inst, const std::optional<Assignment>& assignment,
                           const std::map<std::string, std::string>& meta) {
    json j = instance_body(inst);
    if (assignment) {
        j["assignment"] = assignment_body(*assignment)["assignment"];
    }
    if (!meta.empty()) {
        json jm;
        for (const auto& [key, value] : meta) {
            jm[key] = value;
        }
        j["meta"] = std::move(jm);
    }
    return j.dump(2);
}

std::optional<Assignment> embedded_assignment_from_json(const std::string& text) {
    json j = parse_document(text);
    if (!j.is_object() || !j.contains("assignment")) {
        return std::nullopt;
    }
    return assignment_from_document(j);
}

}  // namespace fairshare
