#include "sml/phenomena.hpp"

#include <algorithm>
#include <bit>

#include "sml/choice_model.hpp"

namespace sml {

namespace {

// Probabilities are evaluated with the general PALM forms; on two-level
// instances these are the SML formulas verbatim.

void require_strict_subset(const Assortment& smaller, const Assortment& larger) {
    if (!smaller.subset_of(larger) || smaller.size() == larger.size()) {
        throw DomainError("smaller_set must be a strict subset of larger_set");
    }
}

bool witness_order(const EffectWitness& a, const EffectWitness& b) {
    if (a.larger_set.ids() != b.larger_set.ids()) {
        return a.larger_set.ids() < b.larger_set.ids();
    }
    if (a.smaller_set.ids() != b.smaller_set.ids()) {
        return a.smaller_set.ids() < b.smaller_set.ids();
    }
    if (a.effect != b.effect) {
        return a.effect < b.effect;
    }
    return a.focal_product < b.focal_product;
}

} // namespace

std::optional<EffectWitness> check_regularity_violation(const Instance& instance,
                                                        const Assortment& smaller,
                                                        const Assortment& larger,
                                                        const ProductId& product_id,
                                                        double margin) {
    require_strict_subset(smaller, larger);
    if (!smaller.contains(product_id)) {
        throw DomainError("focal product '" + product_id + "' is not in the smaller set");
    }
    double before = palm_choice_probability(instance, smaller, product_id);
    double after = palm_choice_probability(instance, larger, product_id);
    if (after - before <= margin) {
        return std::nullopt;
    }
    return EffectWitness{Effect::RegularityViolation, smaller, larger, product_id, before, after};
}

std::optional<EffectWitness> check_choice_overload(const Instance& instance,
                                                   const Assortment& smaller,
                                                   const Assortment& larger, double margin) {
    require_strict_subset(smaller, larger);
    double before = palm_no_choice_probability(instance, smaller);
    double after = palm_no_choice_probability(instance, larger);
    if (after - before <= margin) {
        return std::nullopt;
    }
    return EffectWitness{Effect::ChoiceOverload, smaller, larger, std::nullopt, before, after};
}

std::vector<EffectWitness> scan_for_effects(const Instance& instance, std::size_t max_size,
                                            double margin, std::size_t max_products) {
    if (instance.size() > max_products) {
        throw ResourceLimitError("effect scan limited to " + std::to_string(max_products) +
                                 " products, instance has " + std::to_string(instance.size()));
    }
    const auto& order = instance.id_order();
    const std::size_t n = instance.size();
    std::vector<EffectWitness> witnesses;

    auto to_assortment = [&](std::uint64_t mask) {
        std::vector<ProductId> ids;
        for (std::size_t bit = 0; bit < n; ++bit) {
            if (mask & (std::uint64_t{1} << bit)) {
                ids.push_back(instance[order[bit]].id);
            }
        }
        return Assortment(std::move(ids));
    };

    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t large = 1; large < total; ++large) {
        if (static_cast<std::size_t>(std::popcount(large)) > max_size) {
            continue;
        }
        Assortment larger = to_assortment(large);
        // proper submasks, including the empty set
        for (std::uint64_t small = (large - 1) & large;; small = (small - 1) & large) {
            Assortment smaller = to_assortment(small);
            for (const ProductId& focal : smaller.ids()) {
                if (auto w = check_regularity_violation(instance, smaller, larger, focal, margin)) {
                    witnesses.push_back(std::move(*w));
                }
            }
            if (auto w = check_choice_overload(instance, smaller, larger, margin)) {
                witnesses.push_back(std::move(*w));
            }
            if (small == 0) {
                break;
            }
        }
    }
    std::sort(witnesses.begin(), witnesses.end(), witness_order);
    return witnesses;
}

} // namespace sml
