// fracture: batch front end for the fracture-square library.
#include "fracture/complexes/homology.hpp"
#include "fracture/core/errors.hpp"
#include "fracture/core/padic.hpp"
#include "fracture/curve/p1.hpp"
#include "fracture/fracture/build.hpp"
#include "fracture/fracture/convert.hpp"
#include "fracture/fracture/demo.hpp"
#include "fracture/fracture/labels.hpp"
#include "fracture/io/json.hpp"
#include "fracture/io/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace fracture;
using io::Json;

namespace {

struct Job {
    std::string command;
    std::string input, demo, support, to, functor, field, divisor, out;
    bool weak = false;
    long precision = kDefaultPrecision;
    std::optional<long> tail_bound;
    std::uint64_t seed = 0;
    std::set<std::string> given; // options present on the command line
};

const std::map<std::string, std::set<std::string>> kAllowed = {
    {"homology", {"input", "demo", "support", "precision", "seed", "out"}},
    {"build", {"input", "demo", "support", "to", "seed", "out"}},
    {"verify", {"input", "demo", "support", "to", "weak", "seed", "out"}},
    {"convert", {"input", "demo", "support", "to", "functor", "seed", "out"}},
    {"gamma", {"input", "demo", "support", "functor", "weak", "seed", "out"}},
    {"p1-cohomology", {"field", "divisor", "tail-bound", "out"}},
    {"demo", {"demo", "support", "seed", "out"}},
};

Support parse_support(const std::string& s) {
    Support S;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        require(!tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos, ErrorCode::Input,
                "support must be a comma-separated list of primes");
        long p = std::stol(tok);
        require(is_prime(p), ErrorCode::Input, tok + " is not prime");
        S.push_back(p);
    }
    return normalize_support(S);
}

Json read_input(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg.front() != '{' && arg.front() != '[') {
        std::ifstream in(arg);
        require(in.good(), ErrorCode::Input, "cannot read input file '" + arg + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return io::parse(text);
}

// The complex of --demo or --input; input documents may wrap it as {"complex": ...}.
ChainComplex input_complex(const Job& job, const Support& S) {
    require(!job.demo.empty() || !job.input.empty(), ErrorCode::Input, "need --demo or --input");
    require(job.demo.empty() || job.input.empty(), ErrorCode::Input, "--demo and --input are exclusive");
    if (!job.demo.empty()) return demo_input(job.demo, S, job.seed);
    Json j = read_input(job.input);
    if (j.contains("schema")) {
        require(j.at("schema") == io::kSchema, ErrorCode::Input, "unsupported schema");
        require(j.contains("complex"), ErrorCode::Input, "input document has no complex");
        return io::complex_from_json(j.at("complex"));
    }
    return io::complex_from_json(j);
}

// A diagram from --input, or the adelic diagram of a complex.
CospanDiagram input_diagram(const Job& job, const Support& S) {
    if (job.input.empty()) return build_adelic(input_complex(job, S), S);
    Json j = read_input(job.input);
    if (j.contains("diagram")) return io::diagram_from_json(j.at("diagram"));
    if (j.contains("flavor")) return io::diagram_from_json(j);
    return build_adelic(input_complex(job, S), S);
}

Json diagram_summary(const CospanDiagram& d) {
    Json nub = Json::array();
    for (const auto& atoms : ascii_components(d.nub)) nub.push_back(atoms);
    return {{"labels", io::tables_json(d)},
            {"flags", io::to_json(flags(d))},
            {"nub_components", nub},
            {"diagram", io::to_json(d)}};
}

Json homology_json(const ChainComplex& c, long precision) {
    Json j{{"homology", io::to_json(homology(c))}, {"complex", io::to_json(c)}};
    if (c.ring().tag == RingTag::IntegersZ) {
        Json z = Json::object();
        for (const auto& [n, g] : integral_homology(c)) z[std::to_string(n)] = g.to_string();
        j["integral"] = z;
    }
    if (c.ring().tag == RingTag::PadicZ || c.ring().tag == RingTag::PadicQ) {
        Json e = Json::object();
        for (const auto& [n, m] : c.differentials()) {
            Json rows = Json::array();
            for (std::size_t r = 0; r < m.rows(); ++r) {
                Json row = Json::array();
                for (std::size_t k = 0; k < m.cols(); ++k)
                    row.push_back(PadicApprox::from_rational(m(r, k), c.ring().p, precision).to_string());
                rows.push_back(row);
            }
            e[std::to_string(n)] = rows;
        }
        j["padic_differentials"] = e;
        j["precision"] = precision;
    }
    return j;
}

DivisorP1 parse_divisor(const std::string& text) {
    Json j = io::parse(text);
    require(j.is_array(), ErrorCode::Input, "divisor must be a list of [point, multiplicity] pairs");
    DivisorP1 d;
    for (const auto& e : j) {
        require(e.is_array() && e.size() == 2 && e[1].is_number_integer(), ErrorCode::Input,
                "divisor entries are [point, multiplicity]");
        std::string pt = e[0].is_string() ? e[0].get<std::string>() : e[0].dump();
        P1Point x = pt == "inf" ? P1Point::at_infinity() : P1Point::finite(parse_rat(pt));
        d.emplace_back(x, e[1].get<long>());
    }
    return d;
}

Json basis_json(const std::vector<RationalFunction>& b) {
    Json a = Json::array();
    for (const auto& f : b) a.push_back({{"num", f.num}, {"den", f.den}});
    return a;
}

// Returns the exit status; the report goes to `out`.
int run(const Job& job, Json& out) {
    const auto& allowed = kAllowed.at(job.command);
    for (const auto& o : job.given)
        require(allowed.count(o) > 0, ErrorCode::Input, "option --" + o + " does not apply to " + job.command);
    Support S = job.support.empty() ? Support{} : parse_support(job.support);
    out = {{"schema", io::kSchema}, {"command", job.command}};
    int status = 0;

    if (job.command == "homology") {
        ChainComplex c = input_complex(job, S);
        out.update(homology_json(c, job.precision));
    } else if (job.command == "build") {
        ChainComplex x = input_complex(job, S);
        CospanDiagram d = build_adelic(x, S);
        if (!job.to.empty()) d = convert(d, parse_flavor(job.to));
        out.update(diagram_summary(d));
    } else if (job.command == "verify") {
        ChainComplex x = input_complex(job, S);
        CospanDiagram d = build_adelic(x, S);
        if (!job.to.empty()) d = convert(d, parse_flavor(job.to));
        PullbackReport r = verify_pullback(d, x);
        out.update(io::to_json(r));
        out["flavor"] = flavor_name(d.flavor);
        out["support"] = d.S;
        bool ok = r.overall;
        if (job.weak) {
            bool w = quasi_isomorphic(reconstruct(d), x);
            out["weak"] = w;
            ok = ok || w;
        }
        if (!ok) status = exit_status(ErrorCode::VerificationFailure);
    } else if (job.command == "convert") {
        CospanDiagram d = input_diagram(job, S);
        require(job.to.empty() != job.functor.empty(), ErrorCode::Input, "convert takes exactly one of --to, --functor");
        CospanDiagram r = job.to.empty() ? qc_pushforward(parse_adjunction(job.functor), d) : convert(d, parse_flavor(job.to));
        out.update(diagram_summary(r));
    } else if (job.command == "gamma") {
        CospanDiagram d = input_diagram(job, S);
        const std::string f = job.functor.empty() ? "qce" : job.functor;
        GammaResult g = f == "qc"    ? gamma_qc(d)
                        : f == "e"   ? gamma_e(d)
                        : f == "qce" ? gamma_qce(d)
                        : f == "ie"  ? gamma_ie(d)
                                     : (fail(ErrorCode::Input, "unknown skeleton functor '" + f + "'"), GammaResult{});
        out.update(diagram_summary(g.diagram));
        out["functor"] = f;
        out["counit_iso"] = is_iso(g.counit);
        out["counit_strict"] = is_strict(g.counit);
    } else if (job.command == "p1-cohomology") {
        FieldDescriptor k = parse_field(job.field.empty() ? "Q" : job.field);
        DivisorP1 d = parse_divisor(job.divisor.empty() ? "[]" : job.divisor);
        CohomologyResult r = line_bundle_cohomology(k, d, job.tail_bound);
        CousinComparison c = cousin_vs_residue(k, d, job.tail_bound);
        out["field"] = k.name();
        out["degree"] = degree(d);
        out["h0"] = r.h0;
        out["h1"] = r.h1;
        out["tail_bound"] = r.tail_bound;
        out["h0_basis"] = basis_json(r.h0_basis);
        out["cousin"] = {{"h0", c.h0_cousin}, {"h1", c.h1_cousin}};
    } else if (job.command == "demo") {
        require(!job.demo.empty(), ErrorCode::Input, "demo needs --demo NAME");
        Json r = io::demo_report(job.demo, S.empty() ? default_demo_support() : S, job.seed);
        out.update(r);
        out["command"] = "demo";
        for (const auto& [flav, ok] : r.at("verify").items())
            if (!ok.get<bool>()) status = exit_status(ErrorCode::VerificationFailure);
    }
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arithmetic fracture squares: build, convert and verify adelic models"};
    Job job;
    app.add_option("command", job.command, "homology | build | verify | convert | gamma | p1-cohomology | demo")
        ->required()
        ->check(CLI::IsMember({"homology", "build", "verify", "convert", "gamma", "p1-cohomology", "demo"}));
    std::map<std::string, CLI::Option*> opts;
    opts["input"] = app.add_option("--input", job.input, "complex or diagram JSON (path or inline)");
    opts["demo"] = app.add_option("--demo", job.demo, "named demo input");
    opts["support"] = app.add_option("--support", job.support, "comma-separated primes, e.g. 2,3,5");
    opts["to"] = app.add_option("--to", job.to, "target flavor: adelic | separated | complete");
    opts["functor"] = app.add_option("--functor", job.functor, "qc | e | qce | ie (gamma); sigma | completion | identity (convert)");
    opts["weak"] = app.add_flag("--weak", job.weak, "accept quasi-isomorphisms");
    opts["precision"] = app.add_option("--precision", job.precision, "p-adic precision");
    opts["tail-bound"] = app.add_option("--tail-bound", job.tail_bound, "Laurent tail bound for P^1");
    opts["seed"] = app.add_option("--seed", job.seed, "seed for the random demo");
    opts["field"] = app.add_option("--field", job.field, "Q or Fq");
    opts["divisor"] = app.add_option("--divisor", job.divisor, "JSON list of [point, multiplicity]");
    opts["out"] = app.add_option("--out", job.out, "write the report here instead of stdout");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    for (const auto& [name, o] : opts)
        if (o->count() > 0) job.given.insert(name);
    if (!opts["precision"]->count())
        if (const char* env = std::getenv("FRACTURE_PRECISION")) {
            try {
                job.precision = std::stol(env);
            } catch (const std::exception&) {
                std::cerr << "fracture: ignoring malformed FRACTURE_PRECISION\n";
            }
        }

    Json report;
    int status = 0;
    try {
        require(job.precision > 0, ErrorCode::PrecisionExhausted, "p-adic precision must be positive");
        status = run(job, report);
    } catch (const Error& e) {
        report = {{"schema", io::kSchema},
                  {"command", job.command},
                  {"error", {{"code", code_name(e.code())}, {"message", e.what()}}}};
        std::cerr << "fracture: " << code_name(e.code()) << ": " << e.what() << "\n";
        status = exit_status(e.code());
    }
    const std::string text = io::canonical(report) + "\n";
    if (job.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(job.out);
        if (!f) {
            std::cerr << "fracture: cannot write " << job.out << "\n";
            return 2;
        }
        f << text;
    }
    return status;
}
