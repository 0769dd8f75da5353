#include "fracture/io/json.hpp"

#include "fracture/core/errors.hpp"

#include <set>

namespace fracture::io {

namespace {

void only_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
    require(j.is_object(), ErrorCode::Input, std::string(what) + " must be an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [k, v] : j.items())
        require(ok.count(k) > 0, ErrorCode::Input, std::string(what) + ": unknown key '" + k + "'");
}

const Json& field(const Json& j, const char* key, const char* what) {
    require(j.contains(key), ErrorCode::Input, std::string(what) + ": missing key '" + key + "'");
    return j.at(key);
}

int parse_degree(const std::string& s) {
    try {
        std::size_t used = 0;
        int n = std::stoi(s, &used);
        if (used == s.size()) return n;
    } catch (const std::exception&) {
    }
    fail(ErrorCode::Input, "bad degree key '" + s + "'");
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
    require(j.is_string(), ErrorCode::Input, "matrix entries are strings or integers");
    return parse_rat(j.get<std::string>());
}

std::string kinds_string(const std::vector<Kind>& ks) {
    std::string s;
    for (Kind k : ks) s += kind_char(k);
    return s;
}

Json land_json(Land l) { return land_name(l); }

Land parse_land(const std::string& s) {
    for (Land l : {Land::Nub, Land::Family, Land::Splice})
        if (s == land_name(l)) return l;
    fail(ErrorCode::Input, "unknown land '" + s + "'");
}

Json witness_json(const PlacewiseMap& m) {
    Json a = Json::array();
    for (const auto& f : m.at) a.push_back(to_json(f)["maps"]);
    return a;
}

std::vector<std::map<int, QMatrix>> witness_from_json(const Json& j, const Placewise& src, const Placewise& dst) {
    require(j.is_array() && j.size() == dst.places(), ErrorCode::Input, "witness needs one entry per place");
    std::vector<std::map<int, QMatrix>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::map<int, QMatrix> m;
        require(j[i].is_object(), ErrorCode::Input, "witness component must be an object");
        for (const auto& [k, v] : j[i].items()) {
            int n = parse_degree(k);
            m[n] = matrix_from_json(v, dst.at[i].rank(n), src.at[i].rank(n));
        }
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace

std::string canonical(const Json& j) { return j.dump(); }

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(ErrorCode::Input, std::string("malformed JSON: ") + e.what());
    }
}

Json to_json(const Ring& r) {
    Json j{{"tag", tag_name(r.tag)}};
    if (r.tag == RingTag::PadicZ || r.tag == RingTag::PadicQ) j["p"] = r.p;
    if (r.tag == RingTag::ProfiniteNub || r.tag == RingTag::FiniteAdeles || r.tag == RingTag::ProfiniteFamily ||
        r.tag == RingTag::SIntegers)
        j["S"] = r.S;
    return j;
}

Json to_json(const QMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rat_string(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const ChainComplex& c) {
    Json gens = Json::object(), d = Json::object();
    for (const auto& [n, ks] : c.generators()) gens[std::to_string(n)] = kinds_string(ks);
    for (const auto& [n, m] : c.differentials()) d[std::to_string(n)] = to_json(m);
    return {{"ring", to_json(c.ring())}, {"generators", gens}, {"differentials", d}};
}

Json to_json(const ChainMap& f) {
    Json maps = Json::object();
    for (const auto& [n, m] : f.f)
        if (!m.is_zero()) maps[std::to_string(n)] = to_json(m);
    return {{"source", to_json(f.source)}, {"target", to_json(f.target)}, {"maps", maps}};
}

Json to_json(const Placewise& x) {
    Json comps = Json::array();
    for (const auto& c : x.at) comps.push_back(to_json(c));
    return {{"land", land_json(x.land)}, {"support", x.S}, {"components", comps}};
}

Json to_json(const CospanDiagram& d) {
    return {{"flavor", flavor_name(d.flavor)},
            {"support", d.S},
            {"vertex", to_json(d.vertex)},
            {"nub", to_json(d.nub)},
            {"splice", to_json(d.splice)},
            {"vertical", witness_json(d.vertical)},
            {"horizontal", witness_json(d.horizontal)}};
}

Json to_json(const LocalGroup& g) {
    Json j{{"free", g.free_rank}};
    Json t = Json::array();
    for (const Int& x : g.torsion) t.push_back(x.get_str());
    j["torsion"] = t;
    Json div = Json::object();
    for (const auto& [k, v] : g.divisible)
        if (v) div[std::string(1, kind_char(k))] = v;
    j["divisible"] = div;
    Json q = Json::object();
    for (const auto& [k, v] : g.quotients)
        if (v) q[std::string(1, kind_char(k.first)) + "/" + kind_char(k.second)] = v;
    j["quotients"] = q;
    return j;
}

Json to_json(const GradedGroup& g) {
    Json j = Json::object();
    for (const auto& [n, x] : g) j[std::to_string(n)] = to_json(x);
    return j;
}

Json to_json(const DiagramFlags& f) {
    return {{"qc", f.qc},           {"e", f.e},           {"ie", f.ie},          {"complete", f.complete},
            {"weak_qc", f.weak_qc}, {"weak_e", f.weak_e}, {"weak_ie", f.weak_ie}};
}

Json to_json(const PullbackReport& r) {
    Json v = Json::array();
    for (const auto& e : r.verdicts) v.push_back({{"place", e.place}, {"degree", e.degree}, {"exact", e.exact}});
    return {{"pullback", r.overall},
            {"verdicts", v},
            {"local_acyclic", r.local_acyclic},
            {"rational", r.rational},
            {"mod_p", r.mod_p}};
}

Ring ring_from_json(const Json& j) {
    only_keys(j, {"tag", "p", "S"}, "ring");
    Ring r;
    r.tag = parse_tag(field(j, "tag", "ring").get<std::string>());
    if (j.contains("p")) r.p = j.at("p").get<long>();
    if (j.contains("S")) r.S = j.at("S").get<Support>();
    r.validate();
    return r;
}

QMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
    require(j.is_array() && j.size() == rows, ErrorCode::Input,
            "matrix must have " + std::to_string(rows) + " rows");
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        require(j[i].is_array() && j[i].size() == cols, ErrorCode::Input,
                "matrix row must have " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = rat_from_json(j[i][k]);
    }
    return m;
}

ChainComplex complex_from_json(const Json& j) {
    only_keys(j, {"ring", "generators", "differentials"}, "complex");
    Ring r = j.contains("ring") ? ring_from_json(j.at("ring")) : Ring::integers();
    std::map<int, std::vector<Kind>> gens;
    for (const auto& [k, v] : field(j, "generators", "complex").items()) {
        std::vector<Kind> ks;
        for (char c : v.get<std::string>()) ks.push_back(parse_kind(std::string(1, c)));
        if (!ks.empty()) gens[parse_degree(k)] = ks;
    }
    auto rank = [&](int n) { return gens.count(n) ? gens.at(n).size() : std::size_t{0}; };
    std::map<int, QMatrix> d;
    if (j.contains("differentials"))
        for (const auto& [k, v] : j.at("differentials").items()) {
            int n = parse_degree(k);
            QMatrix m = matrix_from_json(v, rank(n - 1), rank(n));
            if (!m.is_zero()) d[n] = m;
        }
    return ChainComplex(r, std::move(gens), std::move(d));
}

Placewise placewise_from_json(const Json& j) {
    only_keys(j, {"land", "support", "components"}, "placewise");
    Placewise x;
    x.land = parse_land(field(j, "land", "placewise").get<std::string>());
    x.S = field(j, "support", "placewise").get<Support>();
    for (const auto& c : field(j, "components", "placewise")) x.at.push_back(complex_from_json(c));
    x.validate();
    return x;
}

CospanDiagram diagram_from_json(const Json& j) {
    only_keys(j, {"flavor", "support", "vertex", "nub", "splice", "vertical", "horizontal"}, "diagram");
    Flavor fl = parse_flavor(field(j, "flavor", "diagram").get<std::string>());
    Support S = field(j, "support", "diagram").get<Support>();
    ChainComplex v = complex_from_json(field(j, "vertex", "diagram"));
    Placewise n = placewise_from_json(field(j, "nub", "diagram"));
    Placewise q = placewise_from_json(field(j, "splice", "diagram"));
    require(v.ring().tag == RingTag::RationalsQ, ErrorCode::Input, "vertex must be over RationalsQ");
    Placewise jv = jstar(v, S);
    Placewise hn = lg(n);
    auto vert = witness_from_json(field(j, "vertical", "diagram"), jv, q);
    auto hor = witness_from_json(field(j, "horizontal", "diagram"), hn, q);
    return make_diagram(fl, S, v, n, q, vert, hor);
}

Json document(const std::string& type, const Json& payload) {
    return {{"schema", kSchema}, {"type", type}, {type, payload}};
}

} // namespace fracture::io
