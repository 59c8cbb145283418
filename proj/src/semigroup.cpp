#include "tsemi/semigroup.hpp"

#include <algorithm>
#include <unordered_set>

#include "tsemi/error.hpp"

namespace tsemi {

  std::optional<std::size_t>
  TransformationSemigroup::index_of(Transformation const& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t TransformationSemigroup::product(std::size_t i, std::size_t j) const {
    return index_.at(compose(elements_.at(i), elements_.at(j)));
  }

  void TransformationSemigroup::build_index() {
    std::sort(elements_.begin(), elements_.end());
    index_.clear();
    index_.reserve(elements_.size());
    identity_.reset();
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      index_.emplace(elements_[i], i);
      if (elements_[i].is_identity()) {
        identity_ = i;
      }
    }
    right_.assign(elements_.size(), std::vector<std::size_t>(generators_.size()));
    left_.assign(elements_.size(), std::vector<std::size_t>(generators_.size()));
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (std::size_t g = 0; g < generators_.size(); ++g) {
        right_[i][g] = index_.at(compose(elements_[i], generators_[g]));
        left_[i][g]  = index_.at(compose(generators_[g], elements_[i]));
      }
    }
  }

  TransformationSemigroup enumerate(std::size_t                 n,
                                    std::vector<Transformation> gens,
                                    std::size_t                 max_elements) {
    if (gens.empty()) {
      throw DomainError("enumerate: no generators");
    }
    for (auto const& g : gens) {
      if (g.degree() != n) {
        throw DomainError("enumerate: generator " + to_string(g) + " is not on "
                          + std::to_string(n) + " states");
      }
    }
    TransformationSemigroup             result;
    std::unordered_set<Transformation>  seen;
    std::vector<Transformation>         order;
    auto                                discover = [&](Transformation t) {
      if (seen.insert(t).second) {
        if (order.size() == max_elements) {
          throw ResourceLimitError("enumerate: more than " + std::to_string(max_elements)
                                   + " elements");
        }
        order.push_back(std::move(t));
      }
    };
    for (auto const& g : gens) {
      discover(g);
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (auto const& g : gens) {
        discover(compose(order[i], g));
      }
    }
    result.degree_     = n;
    result.generators_ = std::move(gens);
    result.elements_   = std::move(order);
    result.build_index();
    return result;
  }

  TransformationSemigroup adjoin_identity(TransformationSemigroup const& s) {
    if (s.has_identity()) {
      return s;
    }
    auto gens = s.generators();
    gens.push_back(Transformation::identity(s.degree()));
    return enumerate(s.degree(), std::move(gens), s.size() + 1);
  }

}  // namespace tsemi
