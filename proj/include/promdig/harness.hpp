#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "promdig/plabic.hpp"

namespace promdig {

enum class CheckStatus { pass, fail, conjecture_consistent, conjecture_violated };

std::string to_string(CheckStatus s);

/// Result of one executable verification suite. Theorem checks may only
/// report pass/fail; conjecture checks only the conjecture-* statuses, so
/// a conjecture "failure" reads as a finding rather than a bug signal.
struct CheckReport {
    std::string check_id;
    nlohmann::json parameters;
    long long instances_checked = 0;
    std::vector<nlohmann::json> failures;
    CheckStatus status = CheckStatus::pass;
    double wall_time_seconds = 0.0;

    bool is_theorem_failure() const { return status == CheckStatus::fail; }
    bool is_conjecture_violation() const { return status == CheckStatus::conjecture_violated; }
    nlohmann::json to_json() const;
};

/// Enumeration caps for the default suite; every cap is a CLI flag and may
/// also be overridden through PROMDIG_CAPS="name=value,...".
struct HarnessCaps {
    int syt_cells = 8;            // reconstruction / balance sweeps
    int rect_cells = 12;          // order / permutation sweeps on r x k
    int inc_q = 8;                // rectangular increasing reconstruction
    int two_row_q = 9;            // two-row noncrossing suites
    int two_row_c = 4;
    int conj3_c = 3;              // Conjecture 1.1 sweep
    int conj3_q = 9;
    int flamingo_n = 10;          // Conjecture 3.40 corpus
    int flamingo_interior = 7;
    int indegree_r = 3;
    int indegree_c = 3;
    int indegree_q = 8;

    static HarnessCaps from_environment();
    void apply_override(const std::string& name, int value);
};

CheckReport check_order_rect_standard(int r, int k);
CheckReport check_prom_perms(int r, int k);
CheckReport check_reconstruction_standard(int max_cells);
CheckReport check_reconstruction_rect_increasing(int two_row_q, int three_row_q);
CheckReport check_reconstruction_nonrect_collisions();
CheckReport check_conjecture_3row(int max_c, int max_q);
CheckReport check_trip_eq_prom_2row(int max_q, int max_c);
CheckReport check_conjecture_trip_eq_prom(const std::vector<PlabicGraph>& webs);
CheckReport check_indegree_suite(int max_r, int max_c, int max_q);

/// The flamingo corpus used by the default Conjecture 3.40 run: every web
/// from enumerate_flamingo up to the caps, plus the 10-boundary
/// hexagon-core web pinned in the acceptance suite.
std::vector<PlabicGraph> default_flamingo_corpus(int max_n, int max_interior);

/// The 10-boundary hexagon-core flamingo web (three outer whites, one of
/// degree 4; k = 3).
PlabicGraph hexagon_core_web();

std::vector<std::string> all_check_ids();
std::vector<CheckReport> run_checks(const std::vector<std::string>& ids, const HarnessCaps& caps);

}  // namespace promdig
