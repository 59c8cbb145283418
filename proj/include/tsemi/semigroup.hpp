#ifndef TSEMI_SEMIGROUP_HPP
#define TSEMI_SEMIGROUP_HPP

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "transformation.hpp"

namespace tsemi {

  inline constexpr std::size_t default_max_elements = 1'000'000;

  // A finite transformation semigroup (X, S) given by generators.
  //
  // Elements are kept in canonical (lexicographic) order; the position of an
  // element in elements() is its canonical number.
  class TransformationSemigroup {
   public:
    TransformationSemigroup() = default;

    std::size_t degree() const noexcept {
      return degree_;
    }
    std::vector<Transformation> const& generators() const noexcept {
      return generators_;
    }
    std::vector<Transformation> const& elements() const noexcept {
      return elements_;
    }
    Transformation const& element(std::size_t i) const {
      return elements_.at(i);
    }
    std::size_t size() const noexcept {
      return elements_.size();
    }
    bool has_identity() const noexcept {
      return identity_.has_value();
    }
    // Canonical number of the identity, if it is an element.
    std::optional<std::size_t> identity_index() const noexcept {
      return identity_;
    }

    std::optional<std::size_t> index_of(Transformation const& t) const;
    bool contains(Transformation const& t) const {
      return index_of(t).has_value();
    }

    // Canonical number of elements[i] * elements[j].
    std::size_t product(std::size_t i, std::size_t j) const;

    // right(i)[g] = index of elements[i] * generators[g];
    // left(i)[g]  = index of generators[g] * elements[i].
    std::vector<std::size_t> const& right_cayley(std::size_t i) const {
      return right_.at(i);
    }
    std::vector<std::size_t> const& left_cayley(std::size_t i) const {
      return left_.at(i);
    }

    friend TransformationSemigroup enumerate(std::size_t,
                                             std::vector<Transformation>,
                                             std::size_t);

   private:
    void build_index();

    std::size_t                                        degree_ = 0;
    std::vector<Transformation>                        generators_;
    std::vector<Transformation>                        elements_;
    std::unordered_map<Transformation, std::size_t>    index_;
    std::optional<std::size_t>                         identity_;
    std::vector<std::vector<std::size_t>>              right_;
    std::vector<std::vector<std::size_t>>              left_;
  };

  // Smallest composition-closed set containing gens.
  //
  // Discovery is breadth-first: elements are visited in the order found and
  // each is multiplied on the right by every generator in turn. The result is
  // then renumbered canonically. Throws DomainError on an empty or mixed-degree
  // generator list and ResourceLimitError once more than max_elements have
  // been found.
  TransformationSemigroup enumerate(std::size_t                 n,
                                    std::vector<Transformation> gens,
                                    std::size_t max_elements = default_max_elements);

  // S^1: S itself if the identity is already an element, otherwise S with
  // the identity appended to the generators and adjoined to the elements.
  TransformationSemigroup adjoin_identity(TransformationSemigroup const& s);

}  // namespace tsemi

#endif  // TSEMI_SEMIGROUP_HPP
