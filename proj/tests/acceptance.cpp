// Acceptance suite: one check per criterion, each printed as a single
// pass/fail line. Exits non-zero if any criterion fails.
#include "sfl/bounds.hpp"
#include "sfl/linkgraph.hpp"
#include "sfl/oracle.hpp"
#include "sfl/pathgraph.hpp"
#include "sfl/verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace sfl;
namespace vf = sfl::verify;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, bool pass, const std::string& what, double secs) {
    std::printf("criterion %02d: %s  %s  (%.2fs)\n", criterion, pass ? "PASS" : "FAIL",
                what.c_str(), secs);
    std::fflush(stdout);
    if (!pass) ++failures;
}

long long column(const vf::Report& rep, const std::string& name) {
    for (std::size_t i = 0; i < rep.columns.size(); ++i)
        if (rep.columns[i] == name) return static_cast<long long>(i);
    return -1;
}

}  // namespace

int main() {
    oracle::Budget budget;  // defaults; no wall clock so results are exact

    // 1. exact oracle golden values
    {
        Timer t;
        PqEquation e21(2, 1), e22(2, 2);
        bool ok = oracle::count_solution_free(e21, 4) == 11 &&
                  oracle::count_maximal(e21, 4) == 3 && oracle::mu(e21, 6) == 4 &&
                  oracle::mu_star(e22, 10) == 3;
        report(1, ok, "golden values f(4)=11, f_max(4)=3, mu(6)=4, mu*(10)=3", t.seconds());
    }

    // 2. oracle mu equals n - floor(n/(p+q)) from a threshold n0 <= 10 up to 40
    {
        Timer t;
        vf::Grid g;
        g.n_hi = 40;
        g.jobs = 2;
        auto rep = vf::run_campaign("mu-formula", g, budget);
        report(2, rep.all_pass, "mu formula on {(2,1),(3,1),(2,2),(3,2),(4,2)}, n <= 40",
               t.seconds());
    }

    // 3 + 4. G_m component census for n <= 200 and independent-set counts for n <= 24
    {
        Timer t;
        vf::Grid g;
        g.jobs = 2;
        auto rep = vf::run_campaign("fact32", g, budget);
        long long census_col = column(rep, "census_ok");
        long long cons_col = column(rep, "conservation_ok");
        long long total_col = column(rep, "is_total_ok");
        long long cont_col = column(rep, "is_containing_ok");
        long long census_bad = 0, is_bad = 0, is_checked = 0;
        for (const auto& row : rep.rows) {
            if (row.values[static_cast<std::size_t>(census_col)] != "true" ||
                row.values[static_cast<std::size_t>(cons_col)] != "true")
                ++census_bad;
            if (row.values[static_cast<std::size_t>(total_col)] != "-") {
                ++is_checked;
                if (row.values[static_cast<std::size_t>(total_col)] != "true" ||
                    row.values[static_cast<std::size_t>(cont_col)] != "true")
                    ++is_bad;
            }
        }
        double secs = t.seconds();
        report(3, census_bad == 0, "Fact 3.2 census, p in [2,5], q in [1,p], n <= 200, all m",
               secs);
        report(4, is_bad == 0 && is_checked > 0,
               "Fibonacci product counts vs direct enumeration, n <= 24", secs);
    }

    // 5. sandwich: oracle max with min m <= max IS(G_m) <= structure bound
    {
        Timer t;
        vf::Grid g;
        g.jobs = 2;
        auto rep = vf::run_campaign("structure", g, budget);
        report(5, rep.all_pass,
               "oracle max with min m <= max IS(G_m) <= structure bound, n <= 30", t.seconds());
    }

    // 6. five-case bound on f(n, L, m), first case exact
    {
        Timer t;
        vf::Grid g;
        g.jobs = 2;
        auto rep = vf::run_campaign("nsf2", g, budget);
        report(6, rep.all_pass, "f(n,L,m) within the five-case bound, n <= 30", t.seconds());
    }

    // 7. counting-constant window for (3,1), with trend table
    {
        Timer t;
        vf::Grid g;
        g.jobs = 2;
        auto rep = vf::run_campaign("nsf3", g, budget);
        std::printf("  n, f, ratio f/2^mu (limit %s):\n",
                    rep.rows.empty() ? "?" : rep.rows.back().values[6].c_str());
        for (const auto& row : rep.rows)
            if (std::stoll(row.values[2]) % 5 == 0)
                std::printf("    n=%s f=%s ratio=%s\n", row.values[2].c_str(),
                            row.values[3].c_str(), row.values[5].c_str());
        report(7, rep.all_pass, "f(n)/2^mu in [1, 3/2 + C + 1] for (3,1), n <= 30", t.seconds());
    }

    // 8. Moon-Moser / Hujter-Tuza on every enumerated graph, equality families
    {
        Timer t;
        vf::Grid g;
        auto rep = vf::run_campaign("moonmoser", g, budget);
        report(8, rep.all_pass, "MIS <= 3^(v/3), <= 2^(v/2) when triangle-free; tight families",
               t.seconds());
    }

    // 9. triangle-free link graphs when q^2 >= p+q
    {
        Timer t;
        vf::Grid g;
        auto rep = vf::run_campaign("lemma28", g, budget);
        report(9, rep.all_pass && rep.checked >= 200, "200 random link graphs triangle-free",
               t.seconds());
    }

    // 10. extension counts bounded by MIS of the link graph
    {
        Timer t;
        vf::Grid g;
        auto rep = vf::run_campaign("lemma26", g, budget);
        report(10, rep.all_pass && rep.checked >= 100, "100 random N(S,B) <= MIS(L_S[B])",
               t.seconds());
    }

    // 11. triangle-union construction
    {
        Timer t;
        auto c = linkgraph::msf2_construction(2, 110);
        bool flagship = c.triangle_count == 20 && c.triangles_ok && c.loops_ok && c.mis_ok &&
                        c.loops == std::vector<long long>{60};
        auto rep = vf::run_campaign("msf2", {}, budget);
        report(11, flagship && rep.all_pass,
               "msf2(2,110): 20 disjoint triangles, loops in {30,40,50,60}; 5 feasible n per p",
               t.seconds());
    }

    // 12. f_max sandwich for 2x+2y=z at desk scale
    {
        Timer t;
        vf::Grid g;
        g.jobs = 2;
        auto rep = vf::run_campaign("msf7-sandwich", g, budget);
        for (const auto& row : rep.rows)
            std::printf("    n=%s fmax=%s bounds=[2^%s, %s] log2(fmax)/n=%s\n",
                        row.values[2].c_str(), row.values[4].c_str(), row.values[3].c_str(),
                        row.values[5].c_str(), row.values[6].c_str());
        report(12, rep.all_pass,
               "2^ceil((n-12)/4) <= f_max <= f(floor((n-2)/2)), ratio window at n=28",
               t.seconds());
    }

    // 13. exact C_k inequality grid plus monotonicity
    {
        Timer t;
        vf::Grid g;
        g.jobs = 2;
        auto rep = vf::run_campaign("claim-a", g, budget);
        report(13, rep.all_pass && t.seconds() < 10.0,
               "claim A exact for q in [2,10], p in [q,100], k in [6,40]; C_k monotone",
               t.seconds());
    }

    // 14. multi-variable statements (merging, normalized mu, f_max certificate)
    {
        Timer t;
        vf::Grid g;
        auto rep = vf::run_campaign("section6", g, budget);
        report(14, rep.all_pass, "20 merge checks, mu5ai equalities, msf8 inequalities",
               t.seconds());
    }

    if (failures) {
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("acceptance: all 14 criteria passed\n");
    return 0;
}
