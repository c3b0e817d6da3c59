#include "sml/instance.hpp"

#include <algorithm>
#include <cmath>

namespace sml {

namespace {

constexpr double kProbabilitySlack = 1e-9;

void validate_product(const Product& p) {
    if (p.id.empty()) {
        throw DomainError("product id must be nonempty");
    }
    if (p.level < 1) {
        throw DomainError("product '" + p.id + "': level must be >= 1");
    }
    if (!(p.revenue >= 0.0) || !std::isfinite(p.revenue)) {
        throw DomainError("product '" + p.id + "': revenue must be finite and >= 0");
    }
    if (!(p.utility > 0.0) || !std::isfinite(p.utility)) {
        throw DomainError("product '" + p.id + "': utility must be finite and > 0");
    }
}

} // namespace

Probability::Probability(double value) : value_(value) {
    if (value_ < 0.0) {
        if (value_ < -kProbabilitySlack) {
            throw DomainError("probability out of range: " + std::to_string(value_));
        }
        value_ = 0.0;
    } else if (value_ > 1.0) {
        if (value_ > 1.0 + kProbabilitySlack) {
            throw DomainError("probability out of range: " + std::to_string(value_));
        }
        value_ = 1.0;
    }
}

Instance::Instance(std::vector<Product> products, double outside_utility)
    : products_(std::move(products)), outside_utility_(outside_utility) {
    if (!(outside_utility_ >= 0.0) || !std::isfinite(outside_utility_)) {
        throw DomainError("outside-option utility must be finite and >= 0");
    }
    by_id_.reserve(products_.size());
    for (std::size_t i = 0; i < products_.size(); ++i) {
        validate_product(products_[i]);
        if (!by_id_.emplace(products_[i].id, i).second) {
            throw DomainError("duplicate product id '" + products_[i].id + "'");
        }
        level_orders_[products_[i].level].push_back(i);
        id_order_.push_back(i);
    }
    for (auto& [level, order] : level_orders_) {
        levels_.push_back(level);
        // canonical per-level order: revenue descending, then ascending id
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (products_[a].revenue != products_[b].revenue) {
                return products_[a].revenue > products_[b].revenue;
            }
            return products_[a].id < products_[b].id;
        });
    }
    std::sort(levels_.begin(), levels_.end());
    std::sort(id_order_.begin(), id_order_.end(),
              [&](std::size_t a, std::size_t b) { return products_[a].id < products_[b].id; });
}

bool Instance::contains(const ProductId& id) const { return by_id_.count(id) != 0; }

std::size_t Instance::index_of(const ProductId& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) {
        throw InvalidAssortmentError("unknown product id '" + id + "'");
    }
    return it->second;
}

const std::vector<std::size_t>& Instance::level_order(int level) const {
    static const std::vector<std::size_t> empty;
    auto it = level_orders_.find(level);
    return it == level_orders_.end() ? empty : it->second;
}

Assortment::Assortment(std::vector<ProductId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

Assortment::Assortment(std::initializer_list<ProductId> ids)
    : Assortment(std::vector<ProductId>(ids)) {}

bool Assortment::contains(const ProductId& id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool Assortment::subset_of(const Assortment& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

Assortment Assortment::from_indices(const Instance& instance,
                                    const std::vector<std::size_t>& indices) {
    std::vector<ProductId> ids;
    ids.reserve(indices.size());
    for (std::size_t i : indices) {
        ids.push_back(instance[i].id);
    }
    return Assortment(std::move(ids));
}

} // namespace sml
