#include "fracture/io/report.hpp"

#include "fracture/fracture/build.hpp"
#include "fracture/fracture/convert.hpp"
#include "fracture/fracture/demo.hpp"
#include "fracture/fracture/labels.hpp"

namespace fracture::io {

Json tables_json(const CospanDiagram& d) {
    CornerLabels l = labels(d);
    return {{"vertex", l.vertex}, {"nub", l.nub}, {"splice", l.splice}};
}

Json demo_report(const std::string& name, const Support& S, std::uint64_t seed) {
    ChainComplex x = demo_input(name, S, seed);
    CospanDiagram adelic = build_adelic(x, S);
    CospanDiagram separated = to_separated(adelic);
    CospanDiagram complete = to_complete(separated);
    Json tables, flg, ver;
    for (const CospanDiagram* d : {&adelic, &separated, &complete}) {
        const char* f = flavor_name(d->flavor);
        tables[f] = tables_json(*d);
        flg[f] = to_json(flags(*d));
        ver[f] = verify_pullback(*d, x).overall;
    }
    Json r{{"schema", kSchema}, {"demo", name}, {"support", adelic.S},
           {"tables", tables},  {"flags", flg}, {"verify", ver}};
    if (name == "random") r["seed"] = seed;
    return r;
}

Json golden_view(const Json& report) {
    return {{"schema", report.at("schema")}, {"demo", report.at("demo")}, {"tables", report.at("tables")}};
}

} // namespace fracture::io
