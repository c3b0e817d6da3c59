#pragma once

#include <vector>

#include "sml/instance.hpp"

namespace sml {

// Sequential multinomial logit (SML) choice probabilities and expected
// revenue, plus the auxiliary quantities U(S), alpha(S), lambda(Z,S) the
// optimality analysis is built on. All functions are pure; two-level
// operations reject instances with deeper levels (use the palm_* variants
// there).

/// Resolve an assortment against an instance: member indices in ascending-id
/// order. Throws InvalidAssortmentError on unknown ids.
std::vector<std::size_t> resolve_members(const Instance& instance, const Assortment& subset);

/// U(S): total utility of the members; 0 for the empty subset.
double total_utility(const Instance& instance, const Assortment& subset);

/// alpha(S): utility-weighted average revenue, sum(u*r)/sum(u).
/// Singletons return the product's revenue exactly. Empty subset -> DomainError.
double utility_weighted_revenue(const Instance& instance, const Assortment& subset);

/// lambda(Z,S) = U(Z) / (U(S) + u0), the utility share of Z within S plus the
/// outside option. Requires Z subset of S (DomainError otherwise); 0 for Z = {}.
double utility_share(const Instance& instance, const Assortment& z, const Assortment& s);

/// SML probability of choosing `product_id` when `assortment` is offered:
///   level 1:  u(x) / (U(S) + u0)
///   level 2:  [1 - U(S_1)/(U(S)+u0)] * u(x) / (U(S) + u0)
/// The product must be a member (DomainError) and the instance two-level
/// (UnsupportedModelError -> use palm_choice_probability).
Probability choice_probability(const Instance& instance, const Assortment& assortment,
                               const ProductId& product_id);

/// SML no-purchase probability, 1 - sum of member choice probabilities.
Probability no_choice_probability(const Instance& instance, const Assortment& assortment);

/// Expected revenue R(S) = sum over members of rho(x,S) * r(x); 0 for the
/// empty assortment.
double expected_revenue(const Instance& instance, const Assortment& assortment);

/// R(S) through the by-level decomposition
///   R(S) = [sum(u r | S1) + sum(u r | S2) * (1 - U(S1)/(U(S)+u0))] / (U(S)+u0),
/// an independent arithmetic route that must agree with expected_revenue.
double expected_revenue_by_level(const Instance& instance, const Assortment& assortment);

/// General k-level (PALM) choice probability:
///   rho(x,S) = mu(x,S) * prod over classes perceived before x of (1 - mu(class,S)),
/// with mu(y,S) = u(y)/(U(S)+u0). Lower level = perceived first. Restricted to
/// two levels this equals choice_probability exactly.
Probability palm_choice_probability(const Instance& instance, const Assortment& assortment,
                                    const ProductId& product_id);

/// PALM no-purchase probability in product form:
///   rho(x0,S) = prod over classes of (1 - mu(class,S));  1 for the empty set.
Probability palm_no_choice_probability(const Instance& instance, const Assortment& assortment);

/// PALM expected revenue, sum of palm_choice_probability(x) * r(x). Equals
/// expected_revenue on two-level instances.
double palm_expected_revenue(const Instance& instance, const Assortment& assortment);

} // namespace sml
