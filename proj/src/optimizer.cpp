#include "sml/optimizer.hpp"

#include <algorithm>
#include <limits>

#include "scoring.hpp"
#include "sml/choice_model.hpp"

namespace sml {

namespace {

constexpr double kSlack = 1e-9;

void require_two_level(const Instance& instance, const char* op) {
    if (!instance.two_level()) {
        throw UnsupportedModelError(std::string(op) +
                                    ": instance has levels beyond 2; use palm_solve_rol");
    }
}

void sort_by_rank(std::vector<std::size_t>& members, const std::vector<std::size_t>& ranks) {
    std::sort(members.begin(), members.end(),
              [&](std::size_t a, std::size_t b) { return ranks[a] < ranks[b]; });
}

/// Smaller cardinality first, then lexicographically smaller id sequence.
/// Both sides must already be in ascending-id order.
bool tie_prefers(const std::vector<std::size_t>& challenger, const std::vector<std::size_t>& best,
                 const std::vector<std::size_t>& ranks) {
    if (challenger.size() != best.size()) {
        return challenger.size() < best.size();
    }
    return std::lexicographical_compare(
        challenger.begin(), challenger.end(), best.begin(), best.end(),
        [&](std::size_t a, std::size_t b) { return ranks[a] < ranks[b]; });
}

double subset_alpha(const Instance& instance, const std::vector<std::size_t>& members) {
    if (members.size() == 1) {
        return instance[members.front()].revenue;
    }
    double weighted = 0.0, total = 0.0;
    for (std::size_t i : members) {
        weighted += instance[i].utility * instance[i].revenue;
        total += instance[i].utility;
    }
    return weighted / total;
}

} // namespace

bool BoundReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const BoundCheck& c) { return c.informational || c.passed; });
}

std::vector<Assortment> rol_candidates(const Instance& instance) {
    require_two_level(instance, "rol_candidates");
    const auto& level1 = instance.level_order(1);
    const auto& level2 = instance.level_order(2);
    std::vector<Assortment> candidates;
    candidates.reserve((level1.size() + 1) * (level2.size() + 1));
    for (std::size_t j1 = 0; j1 <= level1.size(); ++j1) {
        for (std::size_t j2 = 0; j2 <= level2.size(); ++j2) {
            std::vector<std::size_t> members(level1.begin(), level1.begin() + j1);
            members.insert(members.end(), level2.begin(), level2.begin() + j2);
            candidates.push_back(Assortment::from_indices(instance, members));
        }
    }
    return candidates;
}

OptimizationResult solve_rol(const Instance& instance) {
    require_two_level(instance, "solve_rol");
    const auto ranks = detail::id_ranks(instance);
    const auto& level1 = instance.level_order(1);
    const auto& level2 = instance.level_order(2);

    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::size_t> best_members;
    std::vector<std::size_t> best_j{0, 0};
    std::uint64_t evaluations = 0;
    std::vector<std::size_t> members;
    members.reserve(instance.size());

    // (j1, j2) ascending lexicographically; strict improvement only, so the
    // smallest pair wins among exact ties.
    for (std::size_t j1 = 0; j1 <= level1.size(); ++j1) {
        for (std::size_t j2 = 0; j2 <= level2.size(); ++j2) {
            members.assign(level1.begin(), level1.begin() + j1);
            members.insert(members.end(), level2.begin(), level2.begin() + j2);
            sort_by_rank(members, ranks);
            double revenue = detail::score_revenue(instance, members);
            ++evaluations;
            if (revenue > best) {
                best = revenue;
                best_members = members;
                best_j = {j1, j2};
            }
        }
    }

    OptimizationResult result;
    result.assortment = Assortment::from_indices(instance, best_members);
    result.revenue = best;
    result.method = Method::Rol;
    result.thresholds = best_j;
    result.evaluations = evaluations;
    return result;
}

OptimizationResult solve_revenue_ordered(const Instance& instance) {
    require_two_level(instance, "solve_revenue_ordered");
    const auto ranks = detail::id_ranks(instance);
    const auto& level1 = instance.level_order(1);
    const auto& level2 = instance.level_order(2);

    std::vector<double> thresholds;
    thresholds.reserve(instance.size());
    for (const Product& p : instance.products()) {
        thresholds.push_back(p.revenue);
    }
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    auto prefix_at = [](const std::vector<std::size_t>& order, const Instance& inst,
                        double threshold) {
        std::size_t j = 0;
        while (j < order.size() && inst[order[j]].revenue >= threshold) {
            ++j;
        }
        return j;
    };

    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::size_t> best_members;
    std::vector<std::size_t> best_j{0, 0};
    std::uint64_t evaluations = 0;
    std::vector<std::size_t> members;

    auto consider = [&](std::size_t j1, std::size_t j2) {
        members.assign(level1.begin(), level1.begin() + j1);
        members.insert(members.end(), level2.begin(), level2.begin() + j2);
        sort_by_rank(members, ranks);
        double revenue = detail::score_revenue(instance, members);
        ++evaluations;
        if (revenue > best) {
            best = revenue;
            best_members = members;
            best_j = {j1, j2};
        }
    };

    // Lowest threshold (largest set) first so exact revenue ties keep the
    // larger assortment; the empty set goes last.
    for (double threshold : thresholds) {
        consider(prefix_at(level1, instance, threshold), prefix_at(level2, instance, threshold));
    }
    consider(0, 0);

    OptimizationResult result;
    result.assortment = Assortment::from_indices(instance, best_members);
    result.revenue = best;
    result.method = Method::RevenueOrdered;
    result.thresholds = best_j;
    result.evaluations = evaluations;
    return result;
}

OptimizationResult solve_brute_force(const Instance& instance, std::size_t max_products) {
    if (instance.size() > max_products) {
        throw ResourceLimitError("brute force limited to " + std::to_string(max_products) +
                                 " products, instance has " + std::to_string(instance.size()));
    }
    const auto ranks = detail::id_ranks(instance);
    const auto& order = instance.id_order();
    const std::size_t n = instance.size();

    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::size_t> best_members;
    std::vector<std::size_t> members;
    members.reserve(n);

    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        members.clear();
        for (std::size_t bit = 0; bit < n; ++bit) {
            if (mask & (std::uint64_t{1} << bit)) {
                members.push_back(order[bit]); // ascending-id order by construction
            }
        }
        double revenue = detail::score_revenue(instance, members);
        if (revenue > best || (revenue == best && tie_prefers(members, best_members, ranks))) {
            best = revenue;
            best_members = members;
        }
    }

    OptimizationResult result;
    result.assortment = Assortment::from_indices(instance, best_members);
    result.revenue = best;
    result.method = Method::BruteForce;
    result.evaluations = total;
    return result;
}

GapReport first_gap(const Instance& instance, const Assortment& assortment) {
    require_two_level(instance, "first_gap");
    auto members = resolve_members(instance, assortment);
    std::vector<char> in_set(instance.size(), 0);
    for (std::size_t i : members) {
        in_set[i] = 1;
    }

    for (int level : {1, 2}) {
        const auto& order = instance.level_order(level);
        std::vector<std::size_t> inside, outside;
        for (std::size_t i : order) {
            (in_set[i] ? inside : outside).push_back(i);
        }
        if (inside.empty() || outside.empty()) {
            continue;
        }
        // canonical order is revenue-descending, so front/back carry max/min
        double r_hat = instance[outside.front()].revenue;
        double min_inside = instance[inside.back()].revenue;
        if (r_hat < min_inside) {
            continue; // no excluded product matches or beats an included one
        }

        double max_inside = instance[inside.front()].revenue;
        std::vector<std::size_t> gap;
        if (max_inside < r_hat) {
            // everything outside with revenue above the whole assortment slice
            for (std::size_t i : outside) {
                if (instance[i].revenue >= max_inside) {
                    gap.push_back(i);
                }
            }
        } else {
            double r_upper = std::numeric_limits<double>::infinity(); // min inside revenue >= r_hat
            double r_lower = -std::numeric_limits<double>::infinity(); // max inside revenue <= r_hat
            for (std::size_t i : inside) {
                double r = instance[i].revenue;
                if (r >= r_hat) {
                    r_upper = std::min(r_upper, r);
                }
                if (r <= r_hat) {
                    r_lower = std::max(r_lower, r);
                }
            }
            for (std::size_t i : outside) {
                double r = instance[i].revenue;
                if (r_lower <= r && r <= r_upper) {
                    gap.push_back(i);
                }
            }
        }

        double gap_max = instance[gap.front()].revenue;
        double gap_min = instance[gap.back()].revenue;
        std::vector<std::size_t> head, tail;
        for (std::size_t i : inside) {
            if (instance[i].revenue >= gap_max) {
                head.push_back(i);
            }
            if (instance[i].revenue <= gap_min) {
                tail.push_back(i);
            }
        }

        GapReport report;
        report.has_gap = true;
        report.level = level;
        report.gap = Assortment::from_indices(instance, gap);
        report.head = Assortment::from_indices(instance, head);
        report.tail = Assortment::from_indices(instance, tail);
        return report;
    }
    return {};
}

BoundReport verify_optimality_bounds(const Instance& instance, const OptimizationResult& optimal,
                                     std::size_t subset_cap) {
    require_two_level(instance, "verify_optimality_bounds");
    auto members = resolve_members(instance, optimal.assortment);
    const double optimum = detail::score_revenue(instance, members);

    std::vector<std::size_t> slice1, slice2;
    double utility1 = 0.0, utility_total = 0.0;
    for (std::size_t i : members) {
        utility_total += instance[i].utility;
        if (instance[i].level == 1) {
            slice1.push_back(i);
            utility1 += instance[i].utility;
        } else {
            slice2.push_back(i);
        }
    }
    double denom = utility_total + instance.outside_utility();
    double lambda1 = slice1.empty() ? 0.0 : utility1 / denom;

    BoundReport report;
    report.optimal_revenue = optimum;
    report.lambda_level1 = lambda1;

    auto add_check = [&](std::string name, double lhs, double rhs, bool informational = false) {
        report.checks.push_back({std::move(name), lhs, rhs, lhs >= rhs - kSlack, informational});
    };

    if (!slice1.empty()) {
        report.alpha_level1 = subset_alpha(instance, slice1);
        add_check("alpha(S1*) >= R*", *report.alpha_level1, optimum);
    }
    if (!slice2.empty()) {
        report.alpha_level2 = subset_alpha(instance, slice2);
        double bound = optimum / (1.0 - lambda1);
        add_check("alpha(S2*) >= R*/(1-lambda(S1*,S*))", *report.alpha_level2, bound);
        for (std::size_t i : slice2) {
            add_check("r(" + instance[i].id + ") >= R*/(1-lambda(S1*,S*))", instance[i].revenue,
                      bound, /*informational=*/true);
        }
    }

    // alpha(Z) >= R* for within-level subsets; exhaustive while |S*| is small,
    // singletons only beyond the cap (singleton alpha is just the revenue).
    bool exhaustive = members.size() <= subset_cap;
    for (int level : {1, 2}) {
        const auto& slice = level == 1 ? slice1 : slice2;
        if (slice.empty()) {
            continue;
        }
        double min_alpha = std::numeric_limits<double>::infinity();
        if (exhaustive) {
            std::vector<std::size_t> subset;
            const std::uint64_t total = std::uint64_t{1} << slice.size();
            for (std::uint64_t mask = 1; mask < total; ++mask) {
                subset.clear();
                for (std::size_t bit = 0; bit < slice.size(); ++bit) {
                    if (mask & (std::uint64_t{1} << bit)) {
                        subset.push_back(slice[bit]);
                    }
                }
                min_alpha = std::min(min_alpha, subset_alpha(instance, subset));
            }
        } else {
            for (std::size_t i : slice) {
                min_alpha = std::min(min_alpha, instance[i].revenue);
            }
        }
        add_check("min alpha(Z) over Z in S" + std::to_string(level) + "* >= R*", min_alpha,
                  optimum);
    }

    if (!members.empty()) {
        double min_revenue = std::numeric_limits<double>::infinity();
        for (std::size_t i : members) {
            min_revenue = std::min(min_revenue, instance[i].revenue);
        }
        add_check("min r(x) over S* >= R*", min_revenue, optimum);
    }
    return report;
}

OptimizationResult palm_solve_rol(const Instance& instance, std::uint64_t max_candidates) {
    const auto ranks = detail::id_ranks(instance);
    const auto& levels = instance.levels();

    unsigned __int128 count = 1;
    for (int level : levels) {
        count *= instance.level_count(level) + 1;
        if (count > max_candidates) {
            throw ResourceLimitError("palm_solve_rol: candidate count exceeds cap of " +
                                     std::to_string(max_candidates));
        }
    }

    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::size_t> best_members;
    std::vector<std::size_t> prefixes(levels.size(), 0);
    std::vector<std::size_t> best_prefixes = prefixes;
    std::uint64_t evaluations = 0;
    std::vector<std::size_t> members;
    members.reserve(instance.size());

    // Odometer over per-level prefix lengths, last level fastest: visits
    // tuples in ascending lexicographic order, so strict improvement keeps
    // the smallest tuple among exact ties (matches solve_rol on two levels).
    while (true) {
        members.clear();
        for (std::size_t li = 0; li < levels.size(); ++li) {
            const auto& order = instance.level_order(levels[li]);
            members.insert(members.end(), order.begin(), order.begin() + prefixes[li]);
        }
        sort_by_rank(members, ranks);
        double revenue = detail::score_revenue(instance, members);
        ++evaluations;
        if (revenue > best) {
            best = revenue;
            best_members = members;
            best_prefixes = prefixes;
        }

        bool advanced = false;
        for (std::size_t li = levels.size(); li-- > 0;) {
            if (prefixes[li] < instance.level_count(levels[li])) {
                ++prefixes[li];
                std::fill(prefixes.begin() + li + 1, prefixes.end(), 0);
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            break;
        }
    }

    OptimizationResult result;
    result.assortment = Assortment::from_indices(instance, best_members);
    result.revenue = best;
    result.method = Method::PalmRol;
    result.thresholds = best_prefixes;
    result.evaluations = evaluations;
    result.heuristic = levels.size() > 2;
    return result;
}

} // namespace sml
