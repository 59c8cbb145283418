#ifndef TSEMI_MAPS_HPP
#define TSEMI_MAPS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "green.hpp"
#include "order.hpp"
#include "skeleton.hpp"

namespace tsemi {

  // Green structure, image set and skeleton of one semigroup, plus the item
  // level map im : S^1 -> I(X) between them.
  struct DiagramData {
    explicit DiagramData(TransformationSemigroup const& s);

    GreenStructure           green;
    Skeleton                 skeleton;   // over I(X), never extended
    Preorder                 inclusion;  // inclusion order on I(X)
    std::vector<std::size_t> im;         // S^1 index -> I(X) index
  };

  struct ImRespectsReport {
    // a <=_L b  ==>  im(a) is a subset of im(b)
    bool                                             l_to_inclusion = true;
    std::optional<std::pair<std::size_t, std::size_t>> l_counterexample;
    // a <=_J b  ==>  im(a) subduction-below im(b)
    bool                                             j_to_subduction = true;
    std::optional<std::pair<std::size_t, std::size_t>> j_counterexample;
    // im maps S^1 onto I(X)
    bool surjective = true;

    bool holds() const noexcept {
      return l_to_inclusion && j_to_subduction && surjective;
    }
  };

  ImRespectsReport check_im_respects_orders(TransformationSemigroup const& s);
  ImRespectsReport check_im_respects_orders(DiagramData const& d);

  // im-bar_S : (S^1/J, <=_J) onto the skeleton. Throws PreconditionError if im
  // does not respect the orders and ConsistencyError if the result is not
  // surjective.
  InducedMap im_bar_S(TransformationSemigroup const& s);
  InducedMap im_bar_S(DiagramData const& d);

  // im-bar : (S^1/L, <=_L) onto (I(X), inclusion).
  InducedMap im_bar(TransformationSemigroup const& s);
  InducedMap im_bar(DiagramData const& d);

  struct ArrowVerdict {
    std::string name;
    std::string from;
    std::string to;
    bool        well_defined     = true;
    bool        order_preserving = true;
    bool        surjective       = true;

    bool ok() const noexcept {
      return well_defined && order_preserving && surjective;
    }
  };

  struct NamedVerdict {
    std::string name;
    bool        holds = true;
  };

  // Verdicts for every node, arrow and face of the diagram
  //
  //   (S^1, <=_L) ------------ im -------------+
  //        | /L                                v
  //   (S^1/L, <=_L) ------- im_bar -------> (I(X), subset)
  //        | /J                                | /=_S
  //        v                                   v
  //   (S^1/J, <=_J) ------ im_bar_S ------> (I(X)/=_S, <=_S)
  struct DiagramReport {
    std::vector<std::string>  nodes;
    std::vector<ArrowVerdict> arrows;
    std::vector<NamedVerdict> commutes;
    std::vector<NamedVerdict> preimages;

    bool all_passed() const noexcept;
    std::string to_text() const;
  };

  DiagramReport verify_diagram(TransformationSemigroup const& s);
  DiagramReport verify_diagram(DiagramData const& d);

}  // namespace tsemi

#endif  // TSEMI_MAPS_HPP
