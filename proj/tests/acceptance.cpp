// Acceptance harness: runs every verification criterion at its stated scope
// and tolerance, printing one PASS/FAIL line per criterion. Exit status is
// the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "blockfuse/verify.hpp"

using namespace blockfuse;

namespace {

struct Criterion {
    int number;
    std::string title;
    long cases = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    double wall_ms = 0;
    double limit_ms = 0;  // 0 = no limit

    bool passed() const { return failures.empty() && (limit_ms == 0 || wall_ms <= limit_ms); }
};

void print(const Criterion& c) {
    std::printf("criterion %2d: %s — %s (%ld cases, %.0f ms)\n", c.number,
                c.passed() ? "PASS" : "FAIL", c.title.c_str(), c.cases, c.wall_ms);
    int shown = 0;
    for (const auto& f : c.failures) {
        std::printf("              ! %s\n", f.c_str());
        if (++shown == 5 && c.failures.size() > 5) {
            std::printf("              ! ... and %zu more\n", c.failures.size() - 5);
            break;
        }
    }
    if (c.limit_ms > 0 && c.wall_ms > c.limit_ms)
        std::printf("              ! runtime %.0f ms exceeds the %.0f ms budget\n", c.wall_ms, c.limit_ms);
    for (const auto& nline : c.notes) std::printf("              * %s\n", nline.c_str());
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

int main() {
    VerifyOptions opt;  // default scopes are the acceptance scopes
    std::vector<Criterion> criteria;

    // 1 + 2: block axioms with the exhaustive cross-check, and the golden case
    {
        SuiteResult blocks = verify_blocks_suite(opt);
        Criterion c1{1, "block axioms and exhaustive e^2=e agreement, n <= 6, p in {2,3,5}"};
        Criterion c2{2, "GF(2)S_3 golden case"};
        c1.limit_ms = 5 * 60 * 1000;
        c1.wall_ms = blocks.wall_ms;
        c1.cases = blocks.cases;
        for (const auto& f : blocks.failures)
            (contains(f, "golden") ? c2 : c1).failures.push_back(f);

        // the golden case alone must run in under a second
        auto t0 = std::chrono::steady_clock::now();
        {
            BlockSession s3(PermGroup::symmetric(3), 2, opt.session);
            s3.run([&] {
                c2.cases = static_cast<long>(s3.blocks_with_defect().size());
                return 0;
            });
        }
        auto t1 = std::chrono::steady_clock::now();
        c2.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        c2.limit_ms = 1000;
        criteria.push_back(std::move(c1));
        criteria.push_back(std::move(c2));
    }

    // 3 + 4: the coefficient formula and the zero-witness refinement
    {
        SuiteResult ec = verify_expcoef_suite(opt);
        Criterion c3{3, "coefficient formula = structure-constant oracle, n <= 5, p in {2,3}"};
        Criterion c4{4, "zero-witness classes vanish in every (sum C)^q"};
        c3.limit_ms = 2 * 60 * 1000;
        c3.wall_ms = ec.wall_ms;
        for (const auto& f : ec.failures)
            (contains(f, "witness-bearing") ? c4 : c3).failures.push_back(f);
        c3.cases = ec.cases;
        c4.cases = ec.cases;
        criteria.push_back(std::move(c3));
        criteria.push_back(std::move(c4));
    }

    // 5: criterion-based vanishing in block idempotents up to degree 7
    {
        SuiteResult v = verify_vanishing_suite(opt);
        Criterion c5{5, "cycle-type criterion forces coefficient 0 in every block, n <= 7, p in {2,3}"};
        c5.limit_ms = 10 * 60 * 1000;
        c5.wall_ms = v.wall_ms;
        c5.cases = v.cases;
        c5.failures = v.failures;
        criteria.push_back(std::move(c5));
    }

    // 6: defect groups are moved-set Sylow subgroups and match the
    // centralizer cross-check
    {
        SuiteResult d = verify_defect_suite(opt);
        Criterion c6{6, "defect groups: Sylow over the moved set + centralizer cross-check, n <= 6"};
        c6.wall_ms = d.wall_ms;
        c6.cases = d.cases;
        c6.failures = d.failures;
        criteria.push_back(std::move(c6));
    }

    // 7 + 8: centric structure and Brauer pair counts
    {
        SuiteResult bp = verify_brauer_pairs_suite(opt);
        Criterion c7{7, "centric subgroups of fully-moved Sylow groups: no fixed points, p-group centralizer"};
        Criterion c8{8, "pair counts at centric subgroups: 1 for S_n; constant 1 or 2 with parity swaps for A_n"};
        c7.wall_ms = bp.wall_ms;
        c8.wall_ms = bp.wall_ms;
        for (const auto& f : bp.failures)
            (contains(f, "Sylow(") ? c7 : c8).failures.push_back(f);
        c7.cases = bp.cases;
        c8.cases = bp.cases;
        c8.notes = bp.notes;
        bool saw_two_pair = false;
        for (const auto& note : bp.notes)
            if (contains(note, "two-pair")) saw_two_pair = true;
        if (!saw_two_pair)
            c8.notes.push_back("no two-pair case found in the scanned range (recorded outcome)");
        criteria.push_back(std::move(c7));
        criteria.push_back(std::move(c8));
    }

    // 9: fusion-system verdicts
    {
        SuiteResult f = verify_fusion_suite(opt);
        Criterion c9{9, "fusion verdicts: S_M for S_n, A_M at p = 2, A_M/A_L at odd p, none falsified"};
        c9.limit_ms = 15 * 60 * 1000;
        c9.wall_ms = f.wall_ms;
        c9.cases = f.cases;
        c9.failures = f.failures;
        c9.notes = f.notes;
        criteria.push_back(std::move(c9));
    }

    // 10: seeded preliminary-lemma property suite
    {
        SuiteResult pr = verify_props_suite(opt);
        Criterion c10{10, "preliminary-lemma property suite, >= 1000 seeded cases"};
        c10.limit_ms = 60 * 1000;
        c10.wall_ms = pr.wall_ms;
        c10.cases = pr.cases;
        c10.failures = pr.failures;
        if (pr.cases < 1000)
            c10.failures.push_back("only " + std::to_string(pr.cases) + " cases ran; 1000 required");
        criteria.push_back(std::move(c10));
    }

    int failed = 0;
    for (const auto& c : criteria) {
        print(c);
        if (!c.passed()) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed;
}
