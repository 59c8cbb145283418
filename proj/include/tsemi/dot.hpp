#ifndef TSEMI_DOT_HPP
#define TSEMI_DOT_HPP

#include <optional>
#include <string>
#include <string_view>

#include "analysis.hpp"
#include "error.hpp"

namespace tsemi {

  // The bundle lacks an analysis the requested output needs.
  class DependencyError : public Error {
   public:
    using Error::Error;
  };

  enum class DotKind { jposet, lposet, skeleton, eggbox, collapse };

  std::string_view       name(DotKind kind) noexcept;
  std::optional<DotKind> parse_dot_kind(std::string_view text);

  // Tasks a bundle needs before emit_dot can render kind.
  std::set<Task> required_tasks(DotKind kind);

  // Graphviz source for one view of the bundle. Hasse diagrams are drawn
  // bottom-to-top. Output depends only on the bundle, byte for byte.
  //
  //   jposet, lposet  J- or L-class Hasse diagram
  //   skeleton        one box per subduction class listing its subsets
  //   eggbox          one table per D-class: image above each L-column,
  //                   idempotent H-cells shaded, J-order edges between boxes
  //   collapse        J-class Hasse diagram with a filled cluster around every
  //                   im-bar_S fiber of two or more classes
  std::string emit_dot(AnalysisBundle const& bundle, DotKind kind);

}  // namespace tsemi

#endif  // TSEMI_DOT_HPP
