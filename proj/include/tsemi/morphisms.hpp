#ifndef TSEMI_MORPHISMS_HPP
#define TSEMI_MORPHISMS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "order.hpp"
#include "semigroup.hpp"

namespace tsemi {

  // A surjective morphism (X, S) ->> (Y, T): a state map X ->> Y and an
  // element map S ->> T with phi(x^s) = phi(x)^phi(s).
  //
  // elem_map is indexed by the canonical numbers of source.elements() and
  // holds canonical numbers of target.elements().
  struct TsMorphism {
    TransformationSemigroup  source;
    TransformationSemigroup  target;
    std::vector<std::size_t> state_map;
    std::vector<std::size_t> elem_map;

    StateSubset map_subset(StateSubset const& p) const;
    Transformation const& map_element(std::size_t s) const {
      return target.element(elem_map.at(s));
    }
  };

  struct MorphismValidation {
    bool                       valid = true;
    std::string                reason;   // empty when valid
    std::optional<std::size_t> state;    // offending state, when relevant
    std::optional<std::size_t> element;  // offending source element

    explicit operator bool() const noexcept {
      return valid;
    }
  };

  // Checked in this order: map shapes, surjectivity of both maps, the
  // identity condition, action compatibility (elements in canonical order,
  // states innermost), then the homomorphism law.
  MorphismValidation validate(TsMorphism const& m);

  TsMorphism identity_morphism(TransformationSemigroup const& s);

  // second after first. Throws PreconditionError if first.target and
  // second.source differ.
  TsMorphism compose(TsMorphism const& first, TsMorphism const& second);

  // A partition of the states whose blocks every element maps block-into-block.
  // Blocks are numbered by first occurrence (restricted growth string).
  struct AdmissiblePartition {
    std::vector<std::size_t> block_of;
    std::size_t              block_count = 0;

    std::vector<std::vector<std::size_t>> blocks() const;
    bool operator==(AdmissiblePartition const&) const = default;
  };

  bool is_admissible(TransformationSemigroup const& s, std::vector<std::size_t> const& block_of);

  inline constexpr std::size_t max_partition_states = 8;

  // All admissible partitions in restricted-growth-string order, from the
  // one-block partition to the discrete one. Throws ResourceLimitError when
  // the degree exceeds max_states.
  std::vector<AdmissiblePartition>
  admissible_partitions(TransformationSemigroup const& s,
                        bool                           include_discrete = true,
                        std::size_t                    max_states = max_partition_states);

  // The quotient (Y, T) with Y the blocks of p and T the induced block maps,
  // together with the morphism onto it. Throws PreconditionError if p is not
  // admissible.
  std::pair<TransformationSemigroup, TsMorphism>
  quotient_ts(TransformationSemigroup const& s, AdmissiblePartition const& p);

  struct FunctorialityReport {
    // (a) phi on S^1 ->> T^1 respects <=_L and <=_J and is onto both orders
    //     and their class posets.
    bool green_maps = true;
    // (b) P -> phi(P) sends I(X) onto I(Y).
    bool image_sets = true;
    // (c) P subduction-below Q implies phi(P) subduction-below phi(Q); with
    //     witness s, phi(P) is inside phi(Q)^phi(s).
    bool subduction = true;
    // (d) the induced node maps commute with all six diagram arrows.
    bool commutes = true;

    bool skeleton_order_preserving = true;
    bool skeleton_surjective       = true;

    std::vector<std::size_t> j_class_map;         // S^1/J -> T^1/J
    std::vector<std::size_t> l_class_map;         // S^1/L -> T^1/L
    std::vector<std::size_t> image_map;           // I(X) -> I(Y)
    std::vector<std::size_t> skeleton_class_map;  // skeleton -> skeleton

    std::vector<std::string> failures;

    bool passed() const noexcept {
      return green_maps && image_sets && subduction && commutes
             && skeleton_order_preserving && skeleton_surjective;
    }
  };

  // Throws PreconditionError if validate(m) fails.
  FunctorialityReport functoriality_check(TsMorphism const& m);

}  // namespace tsemi

#endif  // TSEMI_MORPHISMS_HPP
