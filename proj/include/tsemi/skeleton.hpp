#ifndef TSEMI_SKELETON_HPP
#define TSEMI_SKELETON_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "order.hpp"
#include "semigroup.hpp"

namespace tsemi {

  // The image set I(X) = { im(s) : s in S^1 }, or the extended image set
  // I+(X) which also contains every singleton.
  //
  // Subsets are sorted by mask. witness[i] is the canonical number in S^1 of
  // the first element whose image is subsets[i]; singletons that only enter
  // through extension have no witness.
  struct ImageSet {
    std::size_t                             degree = 0;
    std::vector<StateSubset>                subsets;
    std::vector<std::optional<std::size_t>> witness;

    std::size_t size() const noexcept {
      return subsets.size();
    }
    bool adjoined(std::size_t i) const {
      return !witness.at(i).has_value();
    }
    std::optional<std::size_t> index_of(StateSubset const& p) const;
  };

  ImageSet image_set(TransformationSemigroup const& s);
  ImageSet extended_image_set(TransformationSemigroup const& s);

  // An element s of S^1 with P contained in Q^s.
  struct SubductionWitness {
    Transformation s;
  };

  // Searches the identity first and then S^1 in canonical order.
  std::optional<SubductionWitness>
  subduction_leq(StateSubset const& p, StateSubset const& q, TransformationSemigroup const& s);

  // Subduction restricted to a fixed monoid (already S^1), with Q^s memoized.
  class Subduction {
   public:
    explicit Subduction(TransformationSemigroup const& monoid);

    // Canonical number (in the monoid) of the first witness, identity first.
    std::optional<std::size_t> witness(StateSubset const& p, StateSubset const& q) const;

    bool leq(StateSubset const& p, StateSubset const& q) const {
      return witness(p, q).has_value();
    }

    // The subduction preorder on the members of images.
    Preorder preorder(ImageSet const& images) const;

    TransformationSemigroup const& monoid() const noexcept {
      return *monoid_;
    }

   private:
    TransformationSemigroup const* monoid_;
  };

  struct Skeleton {
    ImageSet   images;
    Preorder   subduction;
    ClassPoset poset;
  };

  Skeleton skeleton(TransformationSemigroup const& s, bool extended = false);

  // The skeleton order: subduction classes of I(X) (or I+(X)) with their
  // induced partial order.
  ClassPoset skeleton_poset(TransformationSemigroup const& s, bool extended = false);

}  // namespace tsemi

#endif  // TSEMI_SKELETON_HPP
