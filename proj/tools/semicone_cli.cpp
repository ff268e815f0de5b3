// Command-line front end. Parses inputs, calls the library, renders reports.
// All mathematics lives in the headers; this file is IO and dispatch.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "../vendor/CLI11.hpp"
#include "semicone/semicone.hpp"

namespace {

using semicone::AffineSemigroup;
using semicone::Integer;
using semicone::Json;
using semicone::Point;

std::string read_stream(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        throw semicone::InvalidInput(semicone::InvalidInput::Kind::Malformed,
                                     "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Integer parse_integer(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
    if (v.is_string()) {
        try {
            return Integer(v.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw semicone::InvalidInput(semicone::InvalidInput::Kind::Malformed,
                                 "expected an integer in " + where);
}

Point parse_point(const Json& v, const std::string& where) {
    if (!v.is_array())
        throw semicone::InvalidInput(semicone::InvalidInput::Kind::Malformed,
                                     "expected a list in " + where);
    Point p;
    for (const Json& c : v) p.push_back(parse_integer(c, where));
    return p;
}

Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw semicone::InvalidInput(semicone::InvalidInput::Kind::Malformed,
                                     std::string("json parse: ") + e.what());
    }
}

AffineSemigroup parse_semigroup(const Json& doc) {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("generators"))
        throw semicone::InvalidInput(semicone::InvalidInput::Kind::Malformed,
                                     "input needs fields dim and generators");
    if (!doc["dim"].is_number_integer())
        throw semicone::InvalidInput(semicone::InvalidInput::Kind::Malformed,
                                     "dim must be an integer");
    int dim = doc["dim"].get<int>();
    if (!doc["generators"].is_array())
        throw semicone::InvalidInput(semicone::InvalidInput::Kind::Malformed,
                                     "generators must be a list");
    std::vector<Point> gens;
    for (const Json& g : doc["generators"]) gens.push_back(parse_point(g, "generators"));
    return AffineSemigroup::create(dim, gens);
}

AffineSemigroup load_semigroup(const std::string& path) {
    return parse_semigroup(parse_document(read_stream(path)));
}

std::vector<Integer> parse_csv_integers(const std::string& text,
                                        const std::string& where) {
    std::vector<Integer> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(Integer(item));
        } catch (const std::exception&) {
            throw semicone::InvalidInput(semicone::InvalidInput::Kind::Malformed,
                                         "expected integers in " + where);
        }
    }
    if (out.empty())
        throw semicone::InvalidInput(semicone::InvalidInput::Kind::Malformed,
                                     where + " must not be empty");
    return out;
}

void emit(const Json& report, const std::string& format,
          const std::string& text_form) {
    if (format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text_form;
}

std::string simple_text(const Json& report) {
    // Small commands reuse the JSON layout with two-space text rendering.
    return report.dump(2) + "\n";
}

int dispatch(const std::string& command, const std::string& input_path,
             const std::string& format, int n_max,
             const std::string& degree_bound, const std::string& b_text,
             std::int64_t lambda, std::int64_t mu, const std::string& alpha_text,
             std::int64_t corpus_a, std::int64_t corpus_b, int corpus_r,
             const semicone::Limits& limits) {
    if (command == "analyze") {
        AffineSemigroup s = load_semigroup(input_path);
        semicone::AnalysisOptions opt;
        opt.n_max = n_max;
        if (!degree_bound.empty()) opt.degree_bound = Integer(degree_bound);
        semicone::AnalysisReport r = semicone::analyze(s, opt, limits);
        emit(semicone::report_to_json(r), format, semicone::report_to_text(r));
        return 0;
    }
    if (command == "apery") {
        AffineSemigroup s = load_semigroup(input_path);
        Json o;
        o["schema_version"] = 1;
        o["semigroup"] = semicone::json_semigroup(s);
        o["apery"] = semicone::json_apery(semicone::apery_set(s, limits));
        emit(o, format, simple_text(o));
        return 0;
    }
    if (command == "ideal") {
        AffineSemigroup s = load_semigroup(input_path);
        Json o;
        o["schema_version"] = 1;
        o["semigroup"] = semicone::json_semigroup(s);
        o["toric_ideal"] = semicone::json_binomials(semicone::toric_ideal(s, limits));
        semicone::TermOrder drl{semicone::OrderKind::DegRevLex, 0};
        o["groebner_basis"] =
            semicone::json_binomials(semicone::toric_groebner(s, drl, limits));
        emit(o, format, simple_text(o));
        return 0;
    }
    if (command == "stdbasis") {
        AffineSemigroup s = load_semigroup(input_path);
        Json o;
        o["schema_version"] = 1;
        o["semigroup"] = semicone::json_semigroup(s);
        o["standard_basis"] = semicone::json_standard_basis(
            semicone::standard_basis(semicone::toric_ideal(s, limits), limits));
        emit(o, format, simple_text(o));
        return 0;
    }
    if (command == "cm") {
        AffineSemigroup s = load_semigroup(input_path);
        semicone::StandardBasisResult sb =
            semicone::standard_basis(semicone::toric_ideal(s, limits), limits);
        semicone::CmCheck cm = semicone::cm_check(sb, s.dim());
        semicone::ReductionCertificate rc =
            semicone::verify_reduction(s, n_max, limits);
        Integer bound = degree_bound.empty()
                            ? semicone::default_obstruction_bound(s, limits)
                            : Integer(degree_bound);
        Json o;
        o["schema_version"] = 1;
        o["semigroup"] = semicone::json_semigroup(s);
        o["cm"] = semicone::json_cm(cm, rc);
        o["obstructions"] =
            semicone::json_obstructions(
                semicone::order_obstructions(s, bound, limits), bound);
        emit(o, format, simple_text(o));
        return 0;
    }
    if (command == "homogeneous") {
        AffineSemigroup s = load_semigroup(input_path);
        semicone::StandardBasisResult sb =
            semicone::standard_basis(semicone::toric_ideal(s, limits), limits);
        Json o;
        o["schema_version"] = 1;
        o["semigroup"] = semicone::json_semigroup(s);
        o["homogeneity"] = semicone::json_homogeneity(
            semicone::is_homogeneous_semigroup(s, limits),
            semicone::gb_support_witness(sb, s.dim()));
        emit(o, format, simple_text(o));
        return 0;
    }
    if (command == "betti") {
        AffineSemigroup s = load_semigroup(input_path);
        Json o;
        o["schema_version"] = 1;
        o["semigroup"] = semicone::json_semigroup(s);
        o["betti"] = semicone::json_betti_comparison(semicone::betti_compare(s, limits));
        emit(o, format, simple_text(o));
        return 0;
    }
    if (command == "extend") {
        AffineSemigroup s = load_semigroup(input_path);
        Point b = parse_csv_integers(b_text, "--b");
        std::vector<Integer> alpha_big = parse_csv_integers(alpha_text, "--alpha");
        std::vector<std::int64_t> alpha;
        for (const Integer& v : alpha_big)
            alpha.push_back(static_cast<std::int64_t>(v));
        semicone::NiceExtension e =
            semicone::nice_extension(s, b, lambda, mu, alpha, limits);
        semicone::ExtensionVerification v =
            semicone::verify_extension_theorems(e, limits);
        Json o;
        o["schema_version"] = 1;
        o["base"] = semicone::json_semigroup(e.base);
        Json ext;
        ext["b"] = semicone::json_point(e.b);
        ext["lambda"] = e.lambda;
        ext["mu"] = e.mu;
        Json al = Json::array();
        for (std::int64_t x : e.alpha) al.push_back(x);
        ext["alpha"] = al;
        ext["result"] = semicone::json_semigroup(e.result);
        ext["relation"] = semicone::json_binomial(e.relation);
        ext["ideal"] = semicone::json_binomials(e.ideal);
        o["extension"] = ext;
        Json ver;
        ver["relation_lead_is_pure_power"] = v.relation_lead_is_pure_power;
        ver["ideal_matches"] = v.ideal_matches;
        ver["base_graded_cm"] = v.base_graded_cm;
        ver["ext_graded_cm"] = v.ext_graded_cm;
        ver["cm_preserved"] = v.cm_preserved;
        ver["base_mu"] = v.base_mu;
        ver["ext_mu"] = v.ext_mu;
        ver["mu_recursion"] = v.mu_recursion;
        ver["base_homogeneous"] = v.base_homogeneous;
        Json bb = Json::array();
        for (std::int64_t x : v.base_betti) bb.push_back(x);
        ver["base_betti"] = bb;
        Json eb = Json::array();
        for (std::int64_t x : v.ext_betti) eb.push_back(x);
        ver["ext_betti"] = eb;
        ver["betti_recursion_fine"] = v.betti_recursion_fine;
        ver["betti_recursion_graded"] = v.betti_recursion_graded;
        o["verification"] = ver;
        emit(o, format, simple_text(o));
        return 0;
    }
    if (command == "sequence") {
        Json doc = parse_document(read_stream(input_path));
        if (!doc.is_object() || !doc.contains("dim") || !doc.contains("steps"))
            throw semicone::InvalidInput(semicone::InvalidInput::Kind::Malformed,
                                         "input needs fields dim and steps");
        int dim = doc["dim"].get<int>();
        std::vector<semicone::ExtensionStep> steps;
        for (const Json& st : doc["steps"]) {
            semicone::ExtensionStep step;
            step.b = parse_point(st.at("b"), "steps.b");
            step.lambda = st.at("lambda").get<std::int64_t>();
            step.mu = st.at("mu").get<std::int64_t>();
            for (const Json& a : st.at("alpha"))
                step.alpha.push_back(a.get<std::int64_t>());
            steps.push_back(std::move(step));
        }
        semicone::ExtensionSequence seq =
            semicone::extension_sequence(dim, steps, limits);
        Json o;
        o["schema_version"] = 1;
        o["result"] = semicone::json_semigroup(seq.result);
        Json certs = Json::array();
        for (const semicone::CICertificate& c : seq.step_certificates)
            certs.push_back(semicone::json_ci(c));
        o["step_certificates"] = certs;
        emit(o, format, simple_text(o));
        return 0;
    }
    if (command == "corpus") {
        semicone::GeometricMember m =
            semicone::geometric_semigroup(corpus_a, corpus_b, corpus_r, limits);
        Json o;
        o["schema_version"] = 1;
        o["a"] = m.a;
        o["b"] = m.b;
        o["r"] = m.r;
        o["semigroup"] = semicone::json_semigroup(m.semigroup);
        Json exp;
        exp["basis"] = semicone::json_binomials(m.expected_basis);
        Json betti = Json::array();
        for (std::int64_t x : m.expected_betti) betti.push_back(x);
        exp["betti_totals"] = betti;
        exp["gastinger_dimension"] =
            semicone::json_integer(m.expected_gastinger_dimension);
        o["expected"] = exp;
        std::vector<semicone::Binomial> toric =
            semicone::toric_ideal(m.semigroup, limits);
        semicone::StandardBasisResult sb = semicone::standard_basis(toric, limits);
        semicone::GastingerCheck gc =
            semicone::gastinger_check(toric, m.semigroup, 0, limits);
        semicone::FineBettiTable fine = semicone::betti_semigroup(m.semigroup, limits);
        Json comp;
        comp["toric_ideal"] = semicone::json_binomials(toric);
        Json lms = Json::array();
        for (const semicone::Exponents& e : sb.leading_monomials)
            lms.push_back(semicone::monomial_string(e));
        comp["standard_basis_leads"] = lms;
        comp["graded_ring_cm"] =
            semicone::cm_check(sb, m.semigroup.dim()).graded_ring_cm;
        Json ct = Json::array();
        for (std::int64_t x : fine.totals) ct.push_back(x);
        comp["betti_totals"] = ct;
        Json gcj;
        gcj["matches"] = gc.matches;
        if (gc.dimension) gcj["dimension"] = *gc.dimension;
        gcj["infinite_dimensional"] = gc.infinite_dimensional;
        gcj["expected"] = semicone::json_integer(gc.expected);
        comp["gastinger"] = gcj;
        o["computed"] = comp;
        emit(o, format, simple_text(o));
        return 0;
    }
    if (command == "closure") {
        AffineSemigroup s = load_semigroup(input_path);
        semicone::ProjectiveClosure pc = semicone::projective_closure(s, limits);
        Json o;
        o["schema_version"] = 1;
        o["semigroup"] = semicone::json_semigroup(s);
        Json cj;
        cj["closure_semigroup"] = semicone::json_semigroup(pc.closure);
        cj["homogenized_basis"] = semicone::json_binomials(pc.homogenized_basis);
        cj["minimal_generators"] = semicone::json_binomials(pc.minimal_generators);
        cj["ci"] = semicone::json_ci(pc.ci);
        if (pc.cm) cj["cm"] = *pc.cm;
        if (pc.gorenstein) cj["gorenstein"] = *pc.gorenstein;
        o["closure"] = cj;
        emit(o, format, simple_text(o));
        return 0;
    }
    throw semicone::InvalidInput(semicone::InvalidInput::Kind::Malformed,
                                 "unknown command " + command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of simplicial affine semigroups"};
    app.require_subcommand(1);

    std::string input_path = "-";
    std::string format = "text";
    int n_max = 8;
    std::string degree_bound;
    int char_p = 0;
    std::string b_text, alpha_text;
    std::int64_t lambda = 0, mu = 0;
    std::int64_t corpus_a = 0, corpus_b = 0;
    int corpus_r = 0;
    semicone::Limits limits;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"analyze", "full report: apery set, ideals, cm, betti numbers"},
        {"apery", "apery set with factorization length sets"},
        {"ideal", "minimal binomial generators of the toric ideal"},
        {"stdbasis", "standard basis for the local order"},
        {"cm", "cm check for the associated graded ring"},
        {"homogeneous", "homogeneity of the semigroup"},
        {"betti", "betti numbers by both engines, with comparison"},
        {"extend", "extension by one generator, with verification"},
        {"sequence", "iterated extensions from a description file"},
        {"corpus", "monomial curve family member and its certificates"},
        {"closure", "projective closure of a numerical semigroup"}};
    for (const auto& [name, blurb] : commands) {
        CLI::App* sub = app.add_subcommand(name, blurb);
        if (name != "corpus")
            sub->add_option("input", input_path, "input file, - for stdin");
        sub->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--n-max", n_max);
        sub->add_option("--degree-bound", degree_bound);
        sub->add_option("--char", char_p)->check(CLI::IsMember({0}));
        sub->add_option("--max-standard-monomials", limits.max_standard_monomials);
        sub->add_option("--max-basis-elements", limits.max_basis_elements);
        sub->add_option("--max-reduction-steps", limits.max_reduction_steps);
        sub->add_option("--max-enumeration", limits.max_enumeration);
        sub->add_option("--max-taylor-generators", limits.max_taylor_generators);
        if (name == "extend") {
            sub->add_option("--b", b_text)->required();
            sub->add_option("--lambda", lambda)->required();
            sub->add_option("--mu", mu)->required();
            sub->add_option("--alpha", alpha_text)->required();
        }
        if (name == "corpus") {
            sub->add_option("--a", corpus_a)->required();
            sub->add_option("--b", corpus_b)->required();
            sub->add_option("--r", corpus_r)->required();
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::string command = app.get_subcommands().front()->get_name();
        return dispatch(command, input_path, format, n_max, degree_bound, b_text,
                        lambda, mu, alpha_text, corpus_a, corpus_b, corpus_r,
                        limits);
    } catch (const semicone::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const semicone::NotSimplicial& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const semicone::ResourceBound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const semicone::Internal& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
}
