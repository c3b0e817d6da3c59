#pragma once

// Library-internal evaluation core shared by choice_model and optimizer.
//
// Everything here accumulates in the caller-supplied member order. Public
// operations and the solvers all pass members in ascending-id order, so the
// same set always produces the same floating-point result regardless of the
// route that built it (direct call, ROL/RO scan, brute-force scan). The
// optimality-gap nonnegativity guarantee rests on this.

#include <span>
#include <vector>

#include "sml/instance.hpp"

namespace sml::detail {

/// Per-class Luce terms for one member set: the shared denominator U(S)+u0,
/// the per-level utility mass, and the survival probability accumulated over
/// classes in ascending level order. survival[i] is the probability of not
/// having chosen anything in the classes strictly below levels[i].
struct ChoiceTerms {
    double denom = 0.0;
    std::vector<int> levels;           // ascending, only levels present in S
    std::vector<double> level_utility; // aligned with levels
    std::vector<double> survival;      // aligned with levels
    double survival_all = 1.0;         // over every class present

    /// Survival factor for a product at `level`: 1 when nothing lower is offered.
    double survival_before(int level) const {
        for (std::size_t i = 0; i < levels.size(); ++i) {
            if (levels[i] >= level) {
                return survival[i];
            }
        }
        return survival_all;
    }
};

ChoiceTerms choice_terms(const Instance& instance, std::span<const std::size_t> members);

/// Expected revenue of a member set (general PALM form; exact SML on two
/// levels): sum over members of r(x) * survival(level(x)) * (u(x)/denom).
double score_revenue(const Instance& instance, std::span<const std::size_t> members);

/// Sum of member choice probabilities, accumulated in member order.
double member_probability_sum(const Instance& instance, std::span<const std::size_t> members);

/// rank[product index] = position in ascending-id order; used to put scan
/// candidates into the same member order the public operations use.
std::vector<std::size_t> id_ranks(const Instance& instance);

} // namespace sml::detail
