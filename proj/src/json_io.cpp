#include "polymut/json_io.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace polymut {

namespace {

const Int kInt64Min = std::numeric_limits<long long>::min();
const Int kInt64Max = std::numeric_limits<long long>::max();

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
    return j.at(name);
}

}  // namespace

json int_to_json(const Int& x) {
    if (x >= kInt64Min && x <= kInt64Max) return static_cast<long long>(x);
    return x.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        Rat r = parse_rat(j.get<std::string>());
        if (!is_integer(r)) bad("expected an integer, got " + j.get<std::string>());
        return rat_num(r);
    }
    bad("expected an integer");
}

json rat_to_json(const Rat& x) { return show_rat(x); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    bad("expected a rational \"p/q\" string");
}

json to_json(const IntVec& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(int_to_json(x));
    return out;
}

json to_json(const RatVec& v) {
    json out = json::array();
    for (const Rat& x : v) out.push_back(rat_to_json(x));
    return out;
}

json to_json(const IntMat& m) {
    json out = json::array();
    for (const IntVec& row : m) out.push_back(to_json(row));
    return out;
}

IntVec intvec_from_json(const json& j) {
    if (!j.is_array()) bad("expected an array of integers");
    IntVec v;
    for (const json& x : j) v.push_back(int_from_json(x));
    return v;
}

RatVec ratvec_from_json(const json& j) {
    if (!j.is_array()) bad("expected an array of rationals");
    RatVec v;
    for (const json& x : j) v.push_back(rat_from_json(x));
    return v;
}

IntMat intmat_from_json(const json& j) {
    if (!j.is_array()) bad("expected an array of integer rows");
    IntMat m;
    for (const json& row : j) m.push_back(intvec_from_json(row));
    return m;
}

json to_json(const RationalPolytope& p) {
    json out;
    out["dim"] = p.ambient_dim();
    json verts = json::array();
    for (const RatVec& v : p.vertices()) verts.push_back(to_json(v));
    out["vertices"] = std::move(verts);
    json hs = json::array();
    for (const Halfspace& h : p.halfspaces()) {
        json one;
        one["normal"] = to_json(h.normal);
        one["rhs"] = rat_to_json(h.rhs);
        hs.push_back(std::move(one));
    }
    out["halfspaces"] = std::move(hs);
    return out;
}

RationalPolytope polytope_from_json(const json& j) {
    size_t ambient = field(j, "dim").get<size_t>();
    RationalPolytope p = [&] {
        if (j.contains("vertices") && !j.at("vertices").empty()) {
            std::vector<RatVec> pts;
            for (const json& v : j.at("vertices")) pts.push_back(ratvec_from_json(v));
            return RationalPolytope::from_vertices(ambient, std::move(pts));
        }
        if (!j.contains("halfspaces") || j.at("halfspaces").empty())
            bad("polytope needs vertices or halfspaces");
        std::vector<Halfspace> hs;
        for (const json& h : j.at("halfspaces"))
            hs.push_back({intvec_from_json(field(h, "normal")), rat_from_json(field(h, "rhs"))});
        return RationalPolytope::from_halfspaces(ambient, std::move(hs));
    }();
    if (j.contains("vertices") && !j.at("vertices").empty() && j.contains("halfspaces") &&
        !j.at("halfspaces").empty()) {
        std::vector<Halfspace> hs;
        for (const json& h : j.at("halfspaces"))
            hs.push_back({intvec_from_json(field(h, "normal")), rat_from_json(field(h, "rhs"))});
        std::sort(hs.begin(), hs.end());
        if (hs != p.halfspaces()) bad("vertices and halfspaces describe different polytopes");
    }
    return p;
}

json datum_to_json(const MutationDatum& d, const std::optional<IntMat>& f) {
    json out;
    out["w"] = to_json(d.w);
    out["F"] = to_json(d.factor);
    out["f"] = f ? to_json(*f) : json(nullptr);
    return out;
}

ParsedDatum datum_from_json(const json& j) {
    MutationDatum d =
        make_datum(intvec_from_json(field(j, "w")), polytope_from_json(field(j, "F")));
    std::optional<IntMat> f;
    if (j.contains("f") && !j.at("f").is_null()) f = intmat_from_json(j.at("f"));
    return {std::move(d), std::move(f)};
}

json to_json(const MutationTrace& t) {
    json steps = json::array();
    for (const TraceStep& s : t.steps) {
        json one;
        one["side"] = "M";
        if (s.translate) one["translate"] = to_json(*s.translate);
        if (s.map) one["datum"] = datum_to_json(*s.map);
        steps.push_back(std::move(one));
    }
    json out;
    out["steps"] = std::move(steps);
    return out;
}

MutationTrace trace_from_json(const json& j) {
    MutationTrace t;
    for (const json& s : field(j, "steps")) {
        if (field(s, "side").get<std::string>() != "M") bad("only M-side traces are applied");
        TraceStep step;
        if (s.contains("translate")) step.translate = ratvec_from_json(s.at("translate"));
        if (s.contains("datum")) step.map = datum_from_json(s.at("datum")).datum;
        t.steps.push_back(std::move(step));
    }
    return t;
}

json to_json(const Seed& s) {
    json out;
    json jall = json::array(), juf = json::array();
    for (size_t k = 1; k <= s.vars(); ++k) jall.push_back(k);
    for (size_t k : s.unfrozen) juf.push_back(k + 1);
    out["J"] = std::move(jall);
    out["J_uf"] = std::move(juf);
    out["epsilon"] = to_json(s.eps);
    return out;
}

Seed seed_from_json(const json& j) {
    const json& jall = field(j, "J");
    for (size_t k = 0; k < jall.size(); ++k)
        if (!jall[k].is_number_integer() || jall[k].get<long long>() != (long long)k + 1)
            bad("J must list 1..m in order");
    std::vector<size_t> unfrozen;
    for (const json& x : field(j, "J_uf")) {
        long long k = x.get<long long>();
        if (k < 1 || (size_t)k > jall.size()) bad("J_uf entry outside J");
        unfrozen.push_back((size_t)k - 1);
    }
    IntMat eps = intmat_from_json(field(j, "epsilon"));
    for (const IntVec& row : eps)
        if (row.size() != jall.size()) bad("epsilon row length must equal |J|");
    return make_seed(std::move(eps), std::move(unfrozen));
}

json to_json(const MarkedPoset& mp) {
    json out;
    out["elements"] = mp.elements();
    json covers = json::array();
    for (auto [lo, hi] : mp.covers())
        covers.push_back(json::array({mp.elements()[lo], mp.elements()[hi]}));
    out["covers"] = std::move(covers);
    json marked = json::object();
    std::map<std::string, Int> sorted;
    for (size_t i = 0; i < mp.elements().size(); ++i)
        if (mp.is_marked(i)) sorted[mp.elements()[i]] = mp.marker(i);
    for (const auto& [label, value] : sorted) marked[label] = int_to_json(value);
    out["marked"] = std::move(marked);
    return out;
}

MarkedPoset poset_from_json(const json& j) {
    std::vector<std::string> elements;
    for (const json& e : field(j, "elements")) elements.push_back(e.get<std::string>());
    std::vector<std::pair<std::string, std::string>> covers;
    for (const json& c : field(j, "covers")) {
        if (!c.is_array() || c.size() != 2) bad("cover must be a [lower, upper] pair");
        covers.push_back({c[0].get<std::string>(), c[1].get<std::string>()});
    }
    std::map<std::string, Int> marking;
    for (const auto& [label, value] : field(j, "marked").items())
        marking[label] = int_from_json(value);
    return MarkedPoset::create(elements, covers, marking);
}

}  // namespace polymut
