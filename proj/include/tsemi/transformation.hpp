#ifndef TSEMI_TRANSFORMATION_HPP
#define TSEMI_TRANSFORMATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "index_set.hpp"

namespace tsemi {

  using state_type = std::uint32_t;

  // A total map on the states {0, ..., n-1}, stored as its image list.
  //
  // Maps act on the right: for a product st the state x goes first through s
  // and then through t. Ordering is lexicographic on the image list; that
  // order numbers elements canonically throughout the library.
  class Transformation {
   public:
    Transformation() = default;

    // From 0-based images. Throws DomainError on an out-of-range entry.
    explicit Transformation(std::vector<state_type> images);

    // From 1-based images, as printed in matrices and input files.
    static Transformation one_based(std::span<int const> images);
    static Transformation one_based(std::initializer_list<int> images) {
      return one_based(std::span<int const>(images.begin(), images.size()));
    }

    static Transformation identity(std::size_t n);

    std::size_t degree() const noexcept {
      return images_.size();
    }

    state_type operator[](std::size_t x) const noexcept {
      return images_[x];
    }

    std::vector<state_type> const& images() const noexcept {
      return images_;
    }

    std::vector<int> one_based_images() const;

    bool is_identity() const noexcept;

    bool operator==(Transformation const&) const = default;
    std::strong_ordering operator<=>(Transformation const&) const = default;

    std::size_t hash() const noexcept;

   private:
    std::vector<state_type> images_;
  };

  // x^(st) = (x^s)^t. Throws DomainError when the degrees differ.
  Transformation compose(Transformation const& s, Transformation const& t);

  // P^s = { x^s : x in P }.
  StateSubset apply_subset(StateSubset const& p, Transformation const& s);

  // im(s) = X^s.
  StateSubset image(Transformation const& s);

  // "[1,3,3]" style, 1-based.
  std::string to_string(Transformation const& s);

}  // namespace tsemi

template <>
struct std::hash<tsemi::Transformation> {
  std::size_t operator()(tsemi::Transformation const& t) const noexcept {
    return t.hash();
  }
};

#endif  // TSEMI_TRANSFORMATION_HPP
