#include <kneser/witnesses.hpp>

#include <json.hpp>

#include <kneser/errors.hpp>

namespace kneser {

namespace {

using nlohmann::json;

json parse_object(const std::string& text, const char* what) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string(what) + ": bad JSON: " + e.what());
    }
    if (!j.is_object())
        throw InvalidInput(std::string(what) + ": expected a JSON object");
    return j;
}

json side_to_json(const std::vector<int>& side) {
    auto arr = json::array();
    for (int v : side) arr.push_back(v + 1);
    return arr;
}

std::vector<int> side_from_json(const json& j, const char* what) {
    if (!j.is_array())
        throw InvalidInput(std::string(what) + ": expected an array of vertices");
    std::vector<int> side;
    for (const auto& jv : j) {
        if (!jv.is_number_integer() || jv.get<int>() < 1)
            throw InvalidInput(std::string(what) +
                               ": vertices must be positive integers");
        side.push_back(jv.get<int>() - 1);
    }
    return side;
}

json state_to_json(const BipartiteState& s) {
    json j;
    j["a"] = side_to_json(s.a);
    j["b"] = side_to_json(s.b);
    return j;
}

BipartiteState state_from_json(const json& j, const char* what) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
        throw InvalidInput(std::string(what) +
                           ": expected {\"a\": [...], \"b\": [...]}");
    BipartiteState s;
    s.a = side_from_json(j["a"], what);
    s.b = side_from_json(j["b"], what);
    return s;
}

int int_field(const json& j, const char* key, const char* what) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw InvalidInput(std::string(what) + ": missing integer field \"" +
                           key + "\"");
    return j[key].get<int>();
}

std::size_t code_from_string(const json& jv, int n, const char* what) {
    if (!jv.is_string())
        throw InvalidInput(std::string(what) + ": sign vectors must be strings");
    SignVector x = SignVector::parse(jv.get<std::string>());
    if (x.n() != n)
        throw InvalidInput(std::string(what) +
                           ": sign vector has the wrong dimension");
    return sv_encode(x);
}

} // namespace

std::string to_json_string(const BipartiteState& s) {
    return state_to_json(s).dump();
}

BipartiteState bipartite_state_from_json(const std::string& text) {
    return state_from_json(parse_object(text, "bipartite state"),
                           "bipartite state");
}

std::string to_json_string(const PathWitness& w) {
    json j;
    j["t"] = w.t;
    auto arr = json::array();
    for (const BipartiteState& s : w.states) arr.push_back(state_to_json(s));
    j["states"] = arr;
    return j.dump();
}

PathWitness path_witness_from_json(const std::string& text) {
    json j = parse_object(text, "path witness");
    PathWitness w;
    w.t = int_field(j, "t", "path witness");
    if (!j.contains("states") || !j["states"].is_array())
        throw InvalidInput("path witness: missing \"states\" array");
    for (const auto& js : j["states"])
        w.states.push_back(state_from_json(js, "path witness"));
    return w;
}

std::string to_json_string(const KttStarWitness& w) {
    json j;
    j["t"] = w.t;
    j["a_side"] = side_to_json(w.a_side);
    j["b_side"] = side_to_json(w.b_side);
    return j.dump();
}

KttStarWitness ktt_star_from_json(const std::string& text) {
    json j = parse_object(text, "crossed witness");
    KttStarWitness w;
    w.t = int_field(j, "t", "crossed witness");
    if (!j.contains("a_side") || !j.contains("b_side"))
        throw InvalidInput("crossed witness: missing \"a_side\" or \"b_side\"");
    w.a_side = side_from_json(j["a_side"], "crossed witness");
    w.b_side = side_from_json(j["b_side"], "crossed witness");
    return w;
}

std::string to_json_string(const ChainPair& cp, int n) {
    json j;
    j["n"] = n;
    j["gamma"] = cp.gamma;
    j["z"] = sv_decode(cp.z, n).str();
    for (const char* key : {"xs", "ys"}) {
        auto arr = json::array();
        for (std::size_t c : key[0] == 'x' ? cp.xs : cp.ys)
            arr.push_back(sv_decode(c, n).str());
        j[key] = arr;
    }
    return j.dump();
}

std::pair<ChainPair, int> chain_pair_from_json(const std::string& text) {
    json j = parse_object(text, "chain pair");
    int n = int_field(j, "n", "chain pair");
    if (n < 1 || n > 40) throw InvalidInput("chain pair: bad dimension");
    ChainPair cp;
    cp.gamma = int_field(j, "gamma", "chain pair");
    if (!j.contains("z"))
        throw InvalidInput("chain pair: missing \"z\"");
    cp.z = code_from_string(j["z"], n, "chain pair");
    for (const char* key : {"xs", "ys"}) {
        if (!j.contains(key) || !j[key].is_array())
            throw InvalidInput(std::string("chain pair: missing \"") + key +
                               "\" array");
        auto& out = key[0] == 'x' ? cp.xs : cp.ys;
        for (const auto& jv : j[key])
            out.push_back(code_from_string(jv, n, "chain pair"));
    }
    return {cp, n};
}

std::string to_json_string(const FanLabeling& l) {
    json j;
    j["n"] = l.n;
    j["m"] = l.m;
    json labels = json::object();
    for (std::size_t c = 1; c < l.label.size(); ++c)
        labels[sv_decode(c, l.n).str()] = l.label[c];
    j["labels"] = labels;
    return j.dump();
}

FanLabeling fan_labeling_from_json(const std::string& text) {
    json j = parse_object(text, "labeling");
    FanLabeling l;
    l.n = int_field(j, "n", "labeling");
    l.m = int_field(j, "m", "labeling");
    if (l.n < 1 || l.n > 20 || l.m < 1)
        throw InvalidInput("labeling: bad dimensions");
    if (!j.contains("labels") || !j["labels"].is_object())
        throw InvalidInput("labeling: missing \"labels\" object");
    l.label.assign(pow3(l.n), 0);
    for (const auto& [key, jv] : j["labels"].items()) {
        SignVector x = SignVector::parse(key);
        if (x.n() != l.n)
            throw InvalidInput("labeling: key has the wrong dimension");
        if (x.is_zero())
            throw InvalidInput("labeling: the zero vector cannot be labeled");
        if (!jv.is_number_integer())
            throw InvalidInput("labeling: values must be integers");
        l.label[sv_encode(x)] = jv.get<int>();
    }
    return l;
}

std::string to_json_string(const VerifyReport& r) {
    json j;
    j["total"] = r.total;
    j["failures"] = r.failures;
    j["mode"] = r.sampled ? "sampled" : "exhaustive";
    if (r.sampled) j["seed"] = r.seed;
    j["failing"] = r.failing;
    return j.dump();
}

} // namespace kneser
