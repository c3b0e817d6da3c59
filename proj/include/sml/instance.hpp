#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <vector>

#include "sml/errors.hpp"

namespace sml {

using ProductId = std::string;

/// One sellable item. Level 1 is perceived before level 2 (and so on for
/// k-level instances); utility must be strictly positive, revenue nonnegative.
struct Product {
    ProductId id;
    int level = 1;
    double revenue = 0.0;
    double utility = 1.0;

    bool operator==(const Product&) const = default;
};

/// A probability value, clamped to [0,1]. Construction tolerates tiny
/// floating-point excursions (|overshoot| <= 1e-9) and rejects anything worse.
class Probability {
  public:
    explicit Probability(double value);

    double value() const { return value_; }
    operator double() const { return value_; }

  private:
    double value_ = 0.0;
};

/// Full problem input: a product universe partitioned into levels plus the
/// outside-option utility u0. Immutable after construction and safe to share
/// across threads.
///
/// Within each level a canonical order is maintained: revenue descending,
/// ties broken by ascending id. Revenue-ordered enumeration and threshold
/// reporting are defined against this order.
class Instance {
  public:
    Instance() = default;
    Instance(std::vector<Product> products, double outside_utility);

    const std::vector<Product>& products() const { return products_; }
    double outside_utility() const { return outside_utility_; }
    std::size_t size() const { return products_.size(); }
    bool empty() const { return products_.empty(); }

    bool contains(const ProductId& id) const;
    /// Index into products(); throws InvalidAssortmentError on unknown id.
    std::size_t index_of(const ProductId& id) const;
    const Product& product(const ProductId& id) const { return products_[index_of(id)]; }
    const Product& operator[](std::size_t index) const { return products_[index]; }

    /// Distinct levels present, ascending.
    const std::vector<int>& levels() const { return levels_; }
    int max_level() const { return levels_.empty() ? 0 : levels_.back(); }
    /// True when every product sits in level 1 or 2 (the SML case).
    bool two_level() const { return max_level() <= 2; }

    /// Canonical order of one level: indices into products(), revenue
    /// descending, ties by ascending id. Empty for absent levels.
    const std::vector<std::size_t>& level_order(int level) const;
    std::size_t level_count(int level) const { return level_order(level).size(); }

    /// All product indices ordered by ascending id.
    const std::vector<std::size_t>& id_order() const { return id_order_; }

    bool operator==(const Instance& other) const {
        return products_ == other.products_ && outside_utility_ == other.outside_utility_;
    }

  private:
    std::vector<Product> products_;
    double outside_utility_ = 0.0;
    std::unordered_map<ProductId, std::size_t> by_id_;
    std::vector<int> levels_;
    std::unordered_map<int, std::vector<std::size_t>> level_orders_;
    std::vector<std::size_t> id_order_;
};

/// A subset of an instance's product ids. Ids are kept sorted ascending and
/// deduplicated; validation against an instance happens in the operations
/// that take one.
class Assortment {
  public:
    Assortment() = default;
    explicit Assortment(std::vector<ProductId> ids);
    Assortment(std::initializer_list<ProductId> ids);

    /// Member ids, ascending.
    const std::vector<ProductId>& ids() const { return ids_; }
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    bool contains(const ProductId& id) const;
    bool subset_of(const Assortment& other) const;

    /// Build from product indices of an instance.
    static Assortment from_indices(const Instance& instance,
                                   const std::vector<std::size_t>& indices);

    bool operator==(const Assortment&) const = default;

  private:
    std::vector<ProductId> ids_;
};

} // namespace sml
