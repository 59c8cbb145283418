#ifndef TSEMI_REGREP_HPP
#define TSEMI_REGREP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "semigroup.hpp"

namespace tsemi {

  // The right regular representation (S^1, S): S acting on the set S^1 by
  // right multiplication.
  //
  // States are the elements of S^1, identity first and then the rest in
  // canonical order. The representing map of s sends state(a) to state(a s).
  struct RegRep {
    TransformationSemigroup  base;
    TransformationSemigroup  monoid;            // S^1 of base
    std::vector<std::size_t> state_of;          // monoid index -> state
    std::vector<std::size_t> element_at_state;  // state -> monoid index
    TransformationSemigroup  rep;               // on monoid.size() states

    // Right multiplication by monoid element a, as a map on the states.
    Transformation representation(std::size_t a) const;
  };

  RegRep right_regular(TransformationSemigroup const& s,
                       std::size_t max_elements = default_max_elements);

  // The two isomorphisms that hold for a right regular representation.
  struct CorollaryReport {
    // (1) J-class order of S^1 versus the skeleton of the representation.
    // j_witness[c] is im-bar_S of the representation applied to J-class c,
    // transported back along a -> representation(a).
    std::vector<std::size_t>                j_witness;
    bool                                    j_witness_is_isomorphism = false;
    std::optional<std::vector<std::size_t>> j_search;  // poset_isomorphic result

    // (2) L-class order of S^1 versus inclusion on the image sets.
    std::vector<std::size_t>                l_witness;
    bool                                    l_witness_is_isomorphism = false;
    std::optional<std::vector<std::size_t>> l_search;

    bool holds() const noexcept {
      return j_witness_is_isomorphism && j_search && l_witness_is_isomorphism && l_search;
    }
  };

  CorollaryReport corollary_check(TransformationSemigroup const& s);
  CorollaryReport corollary_check(RegRep const& r);

}  // namespace tsemi

#endif  // TSEMI_REGREP_HPP
