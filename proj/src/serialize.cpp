#include "sfl/serialize.hpp"

#include <sstream>

namespace sfl {

std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r).str();
    if (denominator(r) != 1) os << "/" << denominator(r).str();
    return os.str();
}

}  // namespace sfl

namespace sfl::serialize {

std::string rat_string(const Rat& r) { return sfl::to_string(r); }

json stats_json(const oracle::StatsRecord& rec) {
    json j;
    j["schema"] = "sfl/1";
    j["p"] = rec.p;
    j["q"] = rec.q;
    j["n"] = rec.n;
    if (rec.mu) j["mu"] = *rec.mu;
    if (rec.mu_star) j["mu_star"] = *rec.mu_star;
    if (rec.f) j["f"] = rec.f->str();
    if (rec.f_max) j["f_max"] = rec.f_max->str();
    if (rec.per_min) {
        json pm = json::object();
        for (auto& [m, c] : *rec.per_min) pm[std::to_string(m)] = c.str();
        j["per_min"] = pm;
    }
    j["elapsed_ms"] = rec.elapsed_ms;
    return j;
}

std::string stats_csv(const oracle::StatsRecord& rec) {
    std::ostringstream os;
    os << "p,q,n,mu,mu_star,f,f_max,elapsed_ms\n";
    os << rec.p << ',' << rec.q << ',' << rec.n << ',';
    os << (rec.mu ? std::to_string(*rec.mu) : "") << ',';
    os << (rec.mu_star ? std::to_string(*rec.mu_star) : "") << ',';
    os << (rec.f ? rec.f->str() : "") << ',';
    os << (rec.f_max ? rec.f_max->str() : "") << ',';
    os << rec.elapsed_ms << '\n';
    return os.str();
}

json triples_json(const PqEquation& eq, long long n, const std::vector<LTriple>& triples) {
    json j;
    j["schema"] = "sfl/1";
    j["p"] = eq.p;
    j["q"] = eq.q;
    j["n"] = n;
    json list = json::array();
    for (const auto& t : triples) list.push_back({t.v[0], t.v[1], t.v[2]});
    j["triples"] = list;
    j["count"] = triples.size();
    return j;
}

std::string triples_csv(const std::vector<LTriple>& triples) {
    std::ostringstream os;
    os << "x,y,z\n";
    for (const auto& t : triples) os << t.v[0] << ',' << t.v[1] << ',' << t.v[2] << '\n';
    return os.str();
}

json link_graph_json(const linkgraph::LinkGraph& g) {
    json j;
    j["vertices"] = g.vertices;
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    j["edges"] = edges;
    j["loops"] = std::vector<long long>(g.loops.begin(), g.loops.end());
    j["seed"] = g.seed;
    return j;
}

json msf2_json(const linkgraph::Msf2Construction& c) {
    json j;
    j["schema"] = "sfl/1";
    j["kind"] = "msf2";
    j["p"] = c.p;
    j["n"] = c.n;
    j["s"] = c.s;
    j["a"] = c.a;
    j["seed_set"] = {c.s, 2 * c.s};
    j["b_interval"] = {c.b_lo, c.b_hi};
    j["triangle_count"] = c.triangle_count;
    j["loop_candidates"] = c.loop_candidates;
    j["loops"] = c.loops;
    j["affected_triangles"] = c.affected_triangles;
    j["mis_count"] = c.mis_count.str();
    j["graph"] = link_graph_json(c.graph);
    j["triangles_ok"] = c.triangles_ok;
    j["loops_ok"] = c.loops_ok;
    j["mis_ok"] = c.mis_ok;
    return j;
}

json msf6_json(const linkgraph::MatchingConstruction& c) {
    json j;
    j["schema"] = "sfl/1";
    j["kind"] = "msf6";
    j["p"] = c.p;
    j["q"] = c.q;
    j["n"] = c.n;
    j["case"] = c.case_id;
    j["a"] = c.a;
    j["b"] = c.b;
    j["interval"] = c.interval;
    j["image"] = c.image;
    j["ell"] = rat_string(c.ell);
    j["conditions"] = {{"c1", c.cond1},
                       {"c2", c.cond2},
                       {"c3", c.cond3},
                       {"c3_required", c.cond3_required},
                       {"c4", c.cond4}};
    j["dropped"] = c.dropped;
    j["matching_edges"] = c.matching_edges;
    j["induced_ok"] = c.induced_ok;
    j["achieved_ok"] = c.achieved_ok;
    j["graph"] = link_graph_json(c.matching_subgraph);
    return j;
}

json bound_report_json(const bounds::BoundReport& rep) {
    json j;
    j["schema"] = "sfl/1";
    j["p"] = rep.p;
    j["q"] = rep.q;
    j["n"] = rep.n;
    j["mu_formula"] = rep.mu_formula_value;
    j["mu_star_formula"] = rep.mu_star_formula_value;
    j["log2_f_upper"] = rep.log2_f_upper ? json(*rep.log2_f_upper) : json();
    j["log2_fmax_uppers"] = {
        {"thm14", rep.fmax.thm14},
        {"thm15", rep.fmax.thm15 ? json(rat_string(*rep.fmax.thm15)) : json()},
        {"thm16", rep.fmax.thm16}};
    j["best"] = bounds::to_string(rep.best);
    j["lower_bounds"] = {
        {"interval", rep.lower_interval},
        {"msf2", rep.lower_msf2 ? json(*rep.lower_msf2) : json()},
        {"msf6", rep.lower_msf6 ? json(rat_string(*rep.lower_msf6)) : json()}};
    return j;
}

std::string bound_report_csv_header() {
    return "p,q,n,mu_formula,mu_star_formula,log2_f_upper,thm14,thm15,thm16,best,"
           "lower_interval,lower_msf2,lower_msf6\n";
}

std::string bound_report_csv_row(const bounds::BoundReport& rep) {
    std::ostringstream os;
    os << rep.p << ',' << rep.q << ',' << rep.n << ',' << rep.mu_formula_value << ','
       << rep.mu_star_formula_value << ',';
    if (rep.log2_f_upper) os << *rep.log2_f_upper;
    os << ',' << rep.fmax.thm14 << ',';
    if (rep.fmax.thm15) os << rat_string(*rep.fmax.thm15);
    os << ',' << rep.fmax.thm16 << ',' << bounds::to_string(rep.best) << ','
       << rep.lower_interval << ',';
    if (rep.lower_msf2) os << *rep.lower_msf2;
    os << ',';
    if (rep.lower_msf6) os << rat_string(*rep.lower_msf6);
    os << '\n';
    return os.str();
}

}  // namespace sfl::serialize
