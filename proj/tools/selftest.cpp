#include "selftest.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qcb/concurrence.hpp"
#include "qcb/criteria.hpp"
#include "qcb/linalg.hpp"
#include "qcb/states.hpp"

namespace {

using namespace qcb;

struct Check {
    std::string name;
    double computed;
    double expected;
    double tol;
    bool pass() const { return std::abs(computed - expected) <= tol; }
};

double horodecki_realign_closed_form(double a) {
    return (19.0 + 2.0 * std::sqrt(3.0 * a * a - 15.0 * a + 19.0)) / 21.0;
}

double horodecki_pt_closed_form(double a) {
    if (a <= 4.0) return 1.0;
    return (2.0 + std::sqrt(4.0 * a * a - 20.0 * a + 41.0)) / 7.0;
}

double horodecki_bound_closed_form(double a) {
    return 2.0 * std::sqrt(3.0) * (std::sqrt(3.0 * a * a - 15.0 * a + 19.0) - 1.0) / 63.0;
}

std::vector<Check> build_checks() {
    std::vector<Check> checks;

    const BipartiteState tiles = tiles_upb();
    checks.push_back({"trace_norm of tiles state (PSD)", trace_norm(tiles.matrix()), 1.0, 1e-9});
    const CriteriaScores ts = criteria_scores(tiles);
    const ConcurrenceBound tb = concurrence_lower_bound(ts, 3, 3);
    checks.push_back({"tiles ppt_norm", ts.ppt_norm, 1.0, 1e-9});
    checks.push_back({"tiles realignment_norm", ts.realignment_norm, 1.087, 5e-3});
    checks.push_back({"tiles concurrence bound", tb.value, 0.05, 3e-3});

    const CriteriaScores ps = criteria_scores(pyramid_upb());
    const ConcurrenceBound pb = concurrence_lower_bound(ps, 3, 3);
    checks.push_back({"pyramid ppt_norm", ps.ppt_norm, 1.0, 1e-9});
    checks.push_back({"pyramid realignment_norm", ps.realignment_norm, 1.098, 5e-3});
    checks.push_back({"pyramid concurrence bound", pb.value, 0.056, 3e-3});

    // Isotropic family: both norms equal dF above the separability boundary
    // and the bound reproduces the exact concurrence.
    double norm_dev = 0.0, bound_dev = 0.0;
    for (std::size_t d = 2; d <= 5; ++d) {
        for (int k = 1; k <= 21; ++k) {
            const double f = 1.0 / d + k * (1.0 - 1.0 / d) / 21.0;
            const CriteriaScores s = criteria_scores(isotropic(d, f));
            norm_dev = std::max(norm_dev, std::abs(s.ppt_norm - d * f));
            norm_dev = std::max(norm_dev, std::abs(s.realignment_norm - d * f));
            const ConcurrenceBound b = concurrence_lower_bound(s, d, d);
            bound_dev = std::max(bound_dev, std::abs(b.value - isotropic_exact_concurrence(d, f)));
        }
    }
    checks.push_back({"isotropic norms vs dF (max dev, d=2..5)", norm_dev, 0.0, 1e-8});
    checks.push_back({"isotropic bound exactness (max dev)", bound_dev, 0.0, 1e-8});

    const CriteriaScores boundary = criteria_scores(isotropic(3, 1.0 / 3.0));
    checks.push_back({"isotropic boundary negativity (d=3, F=1/3)", boundary.negativity, 0.0, 1e-8});
    checks.push_back({"isotropic boundary ccnr_violation", boundary.ccnr_violation, 0.0, 1e-8});

    double h_realign_dev = 0.0, h_pt_dev = 0.0, h_bound_dev = 0.0;
    for (int k = 0; k <= 30; ++k) {
        const double a = 2.0 + 0.1 * k;
        const CriteriaScores s = criteria_scores(horodecki_3x3(a));
        h_realign_dev =
            std::max(h_realign_dev, std::abs(s.realignment_norm - horodecki_realign_closed_form(a)));
        h_pt_dev = std::max(h_pt_dev, std::abs(s.ppt_norm - horodecki_pt_closed_form(a)));
        if (a > 3.0) {
            const ConcurrenceBound b = concurrence_lower_bound(s, 3, 3);
            h_bound_dev = std::max(h_bound_dev, std::abs(b.value - horodecki_bound_closed_form(a)));
        }
    }
    checks.push_back({"horodecki realignment curve (max dev)", h_realign_dev, 0.0, 1e-8});
    checks.push_back({"horodecki partial-transpose curve (max dev)", h_pt_dev, 0.0, 1e-8});
    checks.push_back({"horodecki bound curve, alpha > 3 (max dev)", h_bound_dev, 0.0, 1e-8});

    double mes_dev = 0.0;
    for (std::size_t d = 2; d <= 6; ++d) {
        const double expected = std::sqrt(2.0 * (d - 1.0) / d);
        mes_dev = std::max(mes_dev, std::abs(pure_concurrence(maximally_entangled(d)) - expected));
    }
    checks.push_back({"maximally entangled pure concurrence (max dev)", mes_dev, 0.0, 1e-10});

    return checks;
}

}  // namespace

int run_selftest() {
    const std::vector<Check> checks = build_checks();
    int failures = 0;
    std::printf("%-46s %16s %12s %8s  %s\n", "check", "computed", "expected", "tol", "result");
    for (const Check& c : checks) {
        const bool ok = c.pass();
        failures += ok ? 0 : 1;
        std::printf("%-46s %16.10f %12.6g %8.0e  %s\n", c.name.c_str(), c.computed, c.expected,
                    c.tol, ok ? "PASS" : "FAIL");
    }
    std::printf("%d/%zu checks passed\n", static_cast<int>(checks.size()) - failures,
                checks.size());
    return failures == 0 ? 0 : 1;
}
