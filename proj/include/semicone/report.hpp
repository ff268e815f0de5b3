#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "../../vendor/json.hpp"
#include "apery.hpp"
#include "betti.hpp"
#include "extensions.hpp"
#include "mora.hpp"
#include "semigroup.hpp"
#include "toric.hpp"

namespace semicone {

// All reports use nlohmann's default object (keys sorted by std::map) and
// render unbounded integers as decimal strings, so identical inputs produce
// identical bytes.
using Json = nlohmann::json;

inline Json json_integer(const Integer& v) { return v.str(); }

inline Json json_point(const Point& p) {
    Json a = Json::array();
    for (const Integer& c : p) a.push_back(json_integer(c));
    return a;
}

inline Json json_points(const std::vector<Point>& ps) {
    Json a = Json::array();
    for (const Point& p : ps) a.push_back(json_point(p));
    return a;
}

inline Json json_exponents(const Exponents& e) {
    Json a = Json::array();
    for (std::int64_t x : e) a.push_back(x);
    return a;
}

inline Json json_binomial(const Binomial& f) {
    Json o;
    o["plus"] = json_exponents(f.plus);
    if (f.minus) o["minus"] = json_exponents(*f.minus);
    o["pretty"] = binomial_string(f);
    return o;
}

inline Json json_binomials(const std::vector<Binomial>& fs) {
    Json a = Json::array();
    for (const Binomial& f : fs) a.push_back(json_binomial(f));
    return a;
}

inline Json json_semigroup(const AffineSemigroup& s) {
    Json o;
    o["dim"] = s.dim();
    o["simplicial"] = true;  // construction rejects everything else
    o["generators"] = json_points(s.generators());
    o["extremal_rays"] = json_points(s.extremal_rays());
    return o;
}

inline Json json_apery(const AperySet& ap) {
    Json o;
    o["elements"] = json_points(ap.elements);
    Json ls = Json::array();
    for (const Point& p : ap.elements) {
        Json one = Json::array();
        for (std::int64_t v : ap.length_sets.at(p)) one.push_back(v);
        ls.push_back(one);
    }
    o["length_sets"] = ls;
    o["size"] = static_cast<std::int64_t>(ap.elements.size());
    return o;
}

inline Json json_homogeneity(const HomogeneityWitness& hw,
                             const GbSupportWitness& gw) {
    Json o;
    o["homogeneous"] = hw.homogeneous;
    if (hw.witness) {
        Json w;
        w["element"] = json_point(*hw.witness);
        Json lens = Json::array();
        for (std::int64_t v : hw.witness_lengths) lens.push_back(v);
        w["length_set"] = lens;
        o["counterexample"] = w;
    }
    o["basis_support_witnessed"] = gw.witnessed;
    if (gw.witness_variable >= 0) o["witness_variable"] = gw.witness_variable + 1;
    HomogeneityVerdict v = hw.homogeneous ? HomogeneityVerdict::Verified
                                          : HomogeneityVerdict::Refuted;
    if (gw.witnessed && !hw.homogeneous)
        throw Internal("support witness on a non-homogeneous semigroup");
    o["verdict"] = verdict_name(v);
    return o;
}

inline Json json_standard_basis(const StandardBasisResult& sb) {
    Json o;
    o["elements"] = json_binomials(sb.basis);
    Json lms = Json::array();
    for (const Exponents& m : sb.leading_monomials)
        lms.push_back(monomial_string(m));
    o["leading_monomials"] = lms;
    Json hom = Json::array();
    for (int i : sb.homogeneous) hom.push_back(i);
    o["homogeneous_elements"] = hom;
    o["tangent_cone"] = json_binomials(sb.tangent_cone);
    return o;
}

inline Json json_cm(const CmCheck& cm, const ReductionCertificate& rc) {
    Json o;
    o["graded_ring_cm"] = cm.graded_ring_cm;
    Json off = Json::array();
    for (const auto& [var, elt] : cm.offending) {
        Json one;
        one["variable"] = var + 1;
        one["element"] = elt;
        off.push_back(one);
    }
    o["offending"] = off;
    Json cert;
    cert["certified"] = rc.certified;
    if (rc.certified) cert["n"] = rc.n;
    cert["n_max"] = rc.n_max;
    o["reduction_certificate"] = cert;
    return o;
}

inline Json json_obstructions(const std::vector<ObstructionWitness>& ws,
                              const Integer& bound) {
    Json o;
    o["degree_bound"] = json_integer(bound);
    Json arr = Json::array();
    for (const ObstructionWitness& w : ws) {
        Json one;
        one["element"] = json_point(w.b);
        one["ray"] = w.ray_index + 1;
        one["order"] = json_integer(w.ord_b);
        one["order_plus_ray"] = json_integer(w.ord_b_plus);
        arr.push_back(one);
    }
    o["witnesses"] = arr;
    return o;
}

inline Json json_fine_betti(const FineBettiTable& t) {
    Json o;
    Json entries = Json::array();
    for (const auto& [key, rank] : t.entries) {
        Json one;
        one["i"] = key.first;
        one["degree"] = json_point(key.second);
        one["rank"] = rank;
        entries.push_back(one);
    }
    o["entries"] = entries;
    Json totals = Json::array();
    for (std::int64_t b : t.totals) totals.push_back(b);
    o["totals"] = totals;
    return o;
}

inline Json json_graded_betti(const GradedBettiTable& t) {
    Json o;
    Json entries = Json::array();
    for (const auto& [key, rank] : t.entries) {
        Json one;
        one["i"] = key.first;
        one["degree"] = key.second;
        one["rank"] = rank;
        entries.push_back(one);
    }
    o["entries"] = entries;
    Json totals = Json::array();
    for (std::int64_t b : t.totals) totals.push_back(b);
    o["totals"] = totals;
    return o;
}

inline Json json_betti_comparison(const BettiComparison& c) {
    Json o;
    o["semigroup"] = json_fine_betti(c.semigroup_table);
    o["graded"] = json_graded_betti(c.graded_table);
    o["cm_hypothesis"] = c.cm_hypothesis;
    o["support_hypothesis"] = c.support_hypothesis;
    o["hypotheses_hold"] = c.hypotheses_hold;
    o["totals_equal"] = c.totals_equal;
    return o;
}

inline Json json_ci(const CICertificate& c) {
    Json o;
    o["height"] = c.height;
    o["generator_count"] = c.generator_count;
    o["complete_intersection"] = c.is_ci;
    return o;
}

struct AnalysisOptions {
    int n_max = 8;  // reduction certification depth
    std::optional<Integer> degree_bound;  // obstruction search override
};

// Full pipeline on one semigroup. Every field is produced by a library
// operation; this struct only assembles them.
struct AnalysisReport {
    AffineSemigroup semigroup;
    AperySet apery;
    HomogeneityWitness homogeneity;
    GbSupportWitness support;
    std::vector<Binomial> toric;
    StandardBasisResult standard;
    CmCheck cm;
    ReductionCertificate reduction;
    Integer obstruction_bound;
    std::vector<ObstructionWitness> obstructions;
    BettiComparison betti;
};

inline AnalysisReport analyze(const AffineSemigroup& s,
                              const AnalysisOptions& opt = {},
                              const Limits& limits = {}) {
    AnalysisReport r{s,  apery_set(s, limits), {}, {}, {}, {}, {}, {}, 0, {}, {}};
    r.homogeneity = is_homogeneous_semigroup(s, limits);
    r.toric = toric_ideal(s, limits);
    r.standard = standard_basis(r.toric, limits);
    r.support = gb_support_witness(r.standard, s.dim());
    r.cm = cm_check(r.standard, s.dim());
    r.reduction = verify_reduction(s, opt.n_max, limits);
    r.obstruction_bound =
        opt.degree_bound ? *opt.degree_bound : default_obstruction_bound(s, limits);
    r.obstructions = order_obstructions(s, r.obstruction_bound, limits);
    r.betti = betti_compare(s, limits);
    return r;
}

inline Json report_to_json(const AnalysisReport& r) {
    Json o;
    o["schema_version"] = 1;
    o["semigroup"] = json_semigroup(r.semigroup);
    o["apery"] = json_apery(r.apery);
    o["homogeneity"] = json_homogeneity(r.homogeneity, r.support);
    o["toric_ideal"] = json_binomials(r.toric);
    o["standard_basis"] = json_standard_basis(r.standard);
    o["cm"] = json_cm(r.cm, r.reduction);
    o["obstructions"] = json_obstructions(r.obstructions, r.obstruction_bound);
    o["betti"] = json_betti_comparison(r.betti);
    return o;
}

inline std::string points_line(const std::vector<Point>& ps) {
    std::string out;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) out += ", ";
        out += AffineSemigroup::point_string(ps[i]);
    }
    return out;
}

inline std::string binomials_block(const std::vector<Binomial>& fs,
                                   const std::string& indent) {
    std::string out;
    for (const Binomial& f : fs) out += indent + binomial_string(f) + "\n";
    return out;
}

inline std::string report_to_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "semigroup (dim " << r.semigroup.dim() << ")\n";
    out << "  generators: " << points_line(r.semigroup.generators()) << "\n";
    out << "  extremal rays: " << points_line(r.semigroup.extremal_rays()) << "\n";
    out << "apery set (" << r.apery.elements.size() << " elements)\n";
    for (const Point& p : r.apery.elements) {
        out << "  " << AffineSemigroup::point_string(p) << "  lengths {";
        bool first = true;
        for (std::int64_t len : r.apery.length_sets.at(p)) {
            if (!first) out << ", ";
            first = false;
            out << len;
        }
        out << "}\n";
    }
    out << "homogeneous: " << (r.homogeneity.homogeneous ? "yes" : "no");
    out << "  (verdict "
        << verdict_name(r.homogeneity.homogeneous ? HomogeneityVerdict::Verified
                                                  : HomogeneityVerdict::Refuted)
        << ")\n";
    out << "toric ideal (" << r.toric.size() << " minimal generators)\n"
        << binomials_block(r.toric, "  ");
    out << "standard basis (" << r.standard.basis.size() << " elements)\n"
        << binomials_block(r.standard.basis, "  ");
    out << "leading monomials:";
    for (const Exponents& m : r.standard.leading_monomials)
        out << " " << monomial_string(m);
    out << "\n";
    out << "graded ring cm: " << (r.cm.graded_ring_cm ? "yes" : "no") << "\n";
    for (const auto& [var, elt] : r.cm.offending)
        out << "  z" << var + 1 << " divides lead of element " << elt << "\n";
    out << "reduction certificate: "
        << (r.reduction.certified ? "n = " + std::to_string(r.reduction.n)
                                  : "none up to n_max = " +
                                        std::to_string(r.reduction.n_max))
        << "\n";
    out << "order obstructions up to degree " << r.obstruction_bound << ": "
        << r.obstructions.size() << "\n";
    for (const ObstructionWitness& w : r.obstructions) {
        out << "  " << AffineSemigroup::point_string(w.b) << " ray " << w.ray_index + 1
            << " ord " << w.ord_b << " vs " << w.ord_b_plus << "\n";
    }
    out << "betti totals (semigroup):";
    for (std::int64_t b : r.betti.semigroup_table.totals) out << " " << b;
    out << "\nbetti totals (graded):";
    for (std::int64_t b : r.betti.graded_table.totals) out << " " << b;
    out << "\nbetti totals equal: " << (r.betti.totals_equal ? "yes" : "no")
        << "  (hypotheses " << (r.betti.hypotheses_hold ? "hold" : "open") << ")\n";
    return out.str();
}

}  // namespace semicone
