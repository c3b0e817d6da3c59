#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sml/instance.hpp"

namespace sml {

enum class Method { Rol, RevenueOrdered, BruteForce, PalmRol };

/// A solver outcome. `thresholds`, when present, holds one prefix length per
/// level (ascending level order) under the instance's canonical per-level
/// ordering; the assortment is exactly the union of those prefixes.
struct OptimizationResult {
    Assortment assortment;
    double revenue = 0.0;
    Method method = Method::BruteForce;
    std::optional<std::vector<std::size_t>> thresholds;
    std::uint64_t evaluations = 0;
    /// True only for palm_solve_rol on more than two levels, where
    /// revenue-ordered-by-level optimality is an open conjecture.
    bool heuristic = false;
};

/// First-gap diagnostic of an assortment. When a gap exists, `level` is the
/// smallest level with one, `gap` the excluded products whose revenues
/// interleave, `head`/`tail` the included products above/below the gap.
struct GapReport {
    bool has_gap = false;
    int level = 0;
    Assortment gap;
    Assortment head;
    Assortment tail;
};

/// One evaluated bound, lhs >= rhs with 1e-9 slack. Informational entries
/// (the per-product level-2 bound that only holds in aggregate) never affect
/// all_passed().
struct BoundCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool passed = false;
    bool informational = false;
};

struct BoundReport {
    double optimal_revenue = 0.0;
    std::optional<double> alpha_level1;
    std::optional<double> alpha_level2;
    double lambda_level1 = 0.0;
    std::vector<BoundCheck> checks;

    /// True when every mandatory (non-informational) check passed.
    bool all_passed() const;
};

/// All revenue-ordered-by-level candidates of a two-level instance: every
/// union of a level-1 canonical prefix and a level-2 canonical prefix,
/// exactly (m1+1)*(m2+1) distinct sets including the empty one.
std::vector<Assortment> rol_candidates(const Instance& instance);

/// Exact solver: best candidate among rol_candidates (optimal for the SML).
/// Ties broken by the lexicographically smallest (j1, j2).
OptimizationResult solve_rol(const Instance& instance);

/// Classic revenue-ordered baseline: one candidate per distinct revenue value
/// (all products with revenue >= the threshold, across both levels) plus the
/// empty set. Exact-revenue ties prefer the larger assortment.
OptimizationResult solve_revenue_ordered(const Instance& instance);

/// Independent oracle scoring every subset (any number of levels). Ties
/// broken by smallest cardinality, then lexicographic ids. Instances above
/// `max_products` raise ResourceLimitError.
OptimizationResult solve_brute_force(const Instance& instance, std::size_t max_products = 20);

/// Locate the first gap of an assortment (two-level instances). No gap
/// reported iff the assortment is revenue-ordered by level.
GapReport first_gap(const Instance& instance, const Assortment& assortment);

/// Evaluate the optimality bounds at a known optimum:
///   (a) alpha(S1*) >= R*                      when S1* is nonempty,
///   (b) alpha(S2*) >= R* / (1 - lambda(S1*,S*)) when S2* is nonempty,
///   (c) alpha(Z)  >= R* for nonempty Z within one level of S*
///       (all subsets while |S*| <= subset_cap, singletons only beyond),
///   (d) r(x) >= R* for every member of S*.
/// Per-product versions of (b) are reported informationally; they are known
/// not to hold in general.
BoundReport verify_optimality_bounds(const Instance& instance, const OptimizationResult& optimal,
                                     std::size_t subset_cap = 15);

/// Revenue-ordered-by-level enumeration for k-level (PALM) instances, scored
/// with the PALM expected revenue. Exact for <= 2 levels (identical to
/// solve_rol); flagged heuristic beyond that. Raises ResourceLimitError when
/// the candidate count, the product of (m_level + 1), exceeds the cap.
OptimizationResult palm_solve_rol(const Instance& instance,
                                  std::uint64_t max_candidates = 10'000'000);

} // namespace sml
