#include "sml/choice_model.hpp"

#include <algorithm>

#include "scoring.hpp"

namespace sml {

namespace detail {

ChoiceTerms choice_terms(const Instance& instance, std::span<const std::size_t> members) {
    ChoiceTerms terms;
    double total = 0.0;
    for (std::size_t i : members) {
        const Product& p = instance[i];
        total += p.utility;
        auto it = std::lower_bound(terms.levels.begin(), terms.levels.end(), p.level);
        std::size_t pos = static_cast<std::size_t>(it - terms.levels.begin());
        if (it == terms.levels.end() || *it != p.level) {
            terms.levels.insert(it, p.level);
            terms.level_utility.insert(terms.level_utility.begin() + pos, p.utility);
        } else {
            terms.level_utility[pos] += p.utility;
        }
    }
    terms.denom = total + instance.outside_utility();
    terms.survival.resize(terms.levels.size());
    double survive = 1.0;
    for (std::size_t i = 0; i < terms.levels.size(); ++i) {
        terms.survival[i] = survive;
        survive *= 1.0 - terms.level_utility[i] / terms.denom;
    }
    terms.survival_all = survive;
    return terms;
}

double score_revenue(const Instance& instance, std::span<const std::size_t> members) {
    if (members.empty()) {
        return 0.0;
    }
    ChoiceTerms terms = choice_terms(instance, members);
    double revenue = 0.0;
    for (std::size_t i : members) {
        const Product& p = instance[i];
        revenue += p.revenue * (terms.survival_before(p.level) * (p.utility / terms.denom));
    }
    return revenue;
}

double member_probability_sum(const Instance& instance, std::span<const std::size_t> members) {
    ChoiceTerms terms = choice_terms(instance, members);
    double sum = 0.0;
    for (std::size_t i : members) {
        const Product& p = instance[i];
        sum += terms.survival_before(p.level) * (p.utility / terms.denom);
    }
    return sum;
}

std::vector<std::size_t> id_ranks(const Instance& instance) {
    std::vector<std::size_t> ranks(instance.size());
    const auto& order = instance.id_order();
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        ranks[order[pos]] = pos;
    }
    return ranks;
}

} // namespace detail

namespace {

/// Utility accumulation order is not observable in sums of positive doubles
/// at the tolerances used, but keep it fixed (ascending id) anyway.
double utility_sum(const Instance& instance, const std::vector<std::size_t>& members) {
    double total = 0.0;
    for (std::size_t i : members) {
        total += instance[i].utility;
    }
    return total;
}

void require_two_level(const Instance& instance, const char* op) {
    if (!instance.two_level()) {
        throw UnsupportedModelError(std::string(op) +
                                    ": instance has levels beyond 2; use the palm_* operations");
    }
}

std::size_t require_member(const Instance& instance, const Assortment& assortment,
                           const ProductId& product_id) {
    if (!assortment.contains(product_id)) {
        throw DomainError("product '" + product_id + "' is not a member of the assortment");
    }
    return instance.index_of(product_id);
}

} // namespace

std::vector<std::size_t> resolve_members(const Instance& instance, const Assortment& subset) {
    std::vector<std::size_t> members;
    members.reserve(subset.size());
    for (const ProductId& id : subset.ids()) {
        members.push_back(instance.index_of(id));
    }
    return members;
}

double total_utility(const Instance& instance, const Assortment& subset) {
    return utility_sum(instance, resolve_members(instance, subset));
}

double utility_weighted_revenue(const Instance& instance, const Assortment& subset) {
    auto members = resolve_members(instance, subset);
    if (members.empty()) {
        throw DomainError("utility_weighted_revenue is undefined for the empty subset");
    }
    if (members.size() == 1) {
        return instance[members.front()].revenue; // alpha({x}) = r(x), exactly
    }
    double weighted = 0.0;
    double total = 0.0;
    for (std::size_t i : members) {
        weighted += instance[i].utility * instance[i].revenue;
        total += instance[i].utility;
    }
    return weighted / total;
}

double utility_share(const Instance& instance, const Assortment& z, const Assortment& s) {
    auto z_members = resolve_members(instance, z);
    auto s_members = resolve_members(instance, s);
    if (!z.subset_of(s)) {
        throw DomainError("utility_share requires Z to be a subset of S");
    }
    if (z_members.empty()) {
        return 0.0;
    }
    return utility_sum(instance, z_members) /
           (utility_sum(instance, s_members) + instance.outside_utility());
}

Probability choice_probability(const Instance& instance, const Assortment& assortment,
                               const ProductId& product_id) {
    require_two_level(instance, "choice_probability");
    auto members = resolve_members(instance, assortment);
    std::size_t index = require_member(instance, assortment, product_id);
    detail::ChoiceTerms terms = detail::choice_terms(instance, members);
    const Product& p = instance[index];
    return Probability(terms.survival_before(p.level) * (p.utility / terms.denom));
}

Probability no_choice_probability(const Instance& instance, const Assortment& assortment) {
    require_two_level(instance, "no_choice_probability");
    auto members = resolve_members(instance, assortment);
    if (members.empty()) {
        return Probability(1.0);
    }
    return Probability(1.0 - detail::member_probability_sum(instance, members));
}

double expected_revenue(const Instance& instance, const Assortment& assortment) {
    require_two_level(instance, "expected_revenue");
    return detail::score_revenue(instance, resolve_members(instance, assortment));
}

double expected_revenue_by_level(const Instance& instance, const Assortment& assortment) {
    require_two_level(instance, "expected_revenue_by_level");
    auto members = resolve_members(instance, assortment);
    if (members.empty()) {
        return 0.0;
    }
    double weighted1 = 0.0, weighted2 = 0.0, utility1 = 0.0, total = 0.0;
    for (std::size_t i : members) {
        const Product& p = instance[i];
        total += p.utility;
        if (p.level == 1) {
            weighted1 += p.utility * p.revenue;
            utility1 += p.utility;
        } else {
            weighted2 += p.utility * p.revenue;
        }
    }
    double denom = total + instance.outside_utility();
    return weighted1 / denom + (weighted2 / denom) * (1.0 - utility1 / denom);
}

Probability palm_choice_probability(const Instance& instance, const Assortment& assortment,
                                    const ProductId& product_id) {
    auto members = resolve_members(instance, assortment);
    std::size_t index = require_member(instance, assortment, product_id);
    detail::ChoiceTerms terms = detail::choice_terms(instance, members);
    const Product& p = instance[index];
    return Probability(terms.survival_before(p.level) * (p.utility / terms.denom));
}

Probability palm_no_choice_probability(const Instance& instance, const Assortment& assortment) {
    auto members = resolve_members(instance, assortment);
    if (members.empty()) {
        return Probability(1.0); // empty product over classes
    }
    return Probability(detail::choice_terms(instance, members).survival_all);
}

double palm_expected_revenue(const Instance& instance, const Assortment& assortment) {
    return detail::score_revenue(instance, resolve_members(instance, assortment));
}

} // namespace sml
