#ifndef TSEMI_GREEN_HPP
#define TSEMI_GREEN_HPP

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "order.hpp"
#include "semigroup.hpp"

namespace tsemi {

  enum class GreenKind { R, L, J, H };

  std::string_view name(GreenKind kind) noexcept;

  // Green's preorders on S^1, computed from explicit principal ideals.
  //
  // Items are the elements of monoid() = S^1 in canonical order. For element
  // t the left ideal is S^1 t, the right ideal t S^1 and the two-sided ideal
  // S^1 t S^1; t <=_K s holds iff the K-ideal of t is contained in that of s.
  // <=_H is the intersection of <=_L and <=_R.
  class GreenStructure {
   public:
    explicit GreenStructure(TransformationSemigroup const& s);

    TransformationSemigroup const& monoid() const noexcept {
      return monoid_;
    }

    IndexSet const& left_ideal(std::size_t t) const {
      return left_.at(t);
    }
    IndexSet const& right_ideal(std::size_t t) const {
      return right_.at(t);
    }
    IndexSet const& two_sided_ideal(std::size_t t) const {
      return two_sided_.at(t);
    }

    Preorder const& preorder(GreenKind kind) const {
      return preorders_[index(kind)];
    }
    ClassPoset const& classes(GreenKind kind) const {
      return posets_[index(kind)];
    }

   private:
    static std::size_t index(GreenKind kind) noexcept {
      return static_cast<std::size_t>(kind);
    }

    TransformationSemigroup   monoid_;
    std::vector<IndexSet>     left_;
    std::vector<IndexSet>     right_;
    std::vector<IndexSet>     two_sided_;
    std::array<Preorder, 4>   preorders_;
    std::array<ClassPoset, 4> posets_;
  };

  Preorder green_preorder(TransformationSemigroup const& s, GreenKind kind);

  // The D relation on S^1 as the composite of L and R, blocks ordered by least
  // member. Throws ConsistencyError if it differs from the J-partition.
  std::vector<std::vector<std::size_t>> d_partition(TransformationSemigroup const& s);
  std::vector<std::vector<std::size_t>> d_partition(GreenStructure const& g);

  struct HCell {
    std::vector<std::size_t> elements;  // S^1 indices, ascending; may be empty
    bool                     idempotent = false;
  };

  // Egg-box picture of one D-class: R-classes as rows, L-classes as columns.
  struct EggBox {
    std::vector<std::size_t>         elements;       // the D-class
    std::vector<std::size_t>         rows;           // R-class indices
    std::vector<std::size_t>         columns;        // L-class indices
    std::vector<StateSubset>         column_images;  // common image per column
    std::vector<std::vector<HCell>>  cells;          // cells[row][column]
  };

  // One box per D-class, in d_partition order. Rows and columns follow the
  // canonical numbering of their least member.
  std::vector<EggBox> eggbox(TransformationSemigroup const& s);
  std::vector<EggBox> eggbox(GreenStructure const& g);

}  // namespace tsemi

#endif  // TSEMI_GREEN_HPP
