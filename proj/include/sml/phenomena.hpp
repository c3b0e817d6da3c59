#pragma once

#include <optional>
#include <vector>

#include "sml/instance.hpp"

namespace sml {

enum class Effect { RegularityViolation, ChoiceOverload };

/// Certificate that enlarging smaller_set to larger_set strictly increases a
/// probability: a member's choice probability (regularity violation) or the
/// no-purchase probability (choice overload). The increase is certified
/// beyond the strictness margin, so a witness always re-verifies.
struct EffectWitness {
    Effect effect = Effect::RegularityViolation;
    Assortment smaller_set;
    Assortment larger_set;
    std::optional<ProductId> focal_product;
    double prob_before = 0.0;
    double prob_after = 0.0;
};

/// Margin separating genuine effects from floating-point noise.
inline constexpr double kEffectMargin = 1e-12;

/// Witness iff rho(product, smaller) < rho(product, larger) beyond the
/// margin. Requires smaller to be a strict subset of larger and the product a
/// member of smaller (DomainError otherwise).
std::optional<EffectWitness> check_regularity_violation(const Instance& instance,
                                                        const Assortment& smaller,
                                                        const Assortment& larger,
                                                        const ProductId& product_id,
                                                        double margin = kEffectMargin);

/// Witness iff the no-purchase probability strictly increases from smaller to
/// larger (the paradox of choice). Requires smaller to be a strict subset.
std::optional<EffectWitness> check_choice_overload(const Instance& instance,
                                                   const Assortment& smaller,
                                                   const Assortment& larger,
                                                   double margin = kEffectMargin);

/// Exhaustive search over all pairs smaller strict-subset-of larger with
/// |larger| <= max_size, checking every focal member and the overload
/// inequality. Results are sorted canonically (larger ids, smaller ids,
/// effect, focal). Instances above max_products raise ResourceLimitError.
std::vector<EffectWitness> scan_for_effects(const Instance& instance, std::size_t max_size,
                                            double margin = kEffectMargin,
                                            std::size_t max_products = 20);

} // namespace sml
