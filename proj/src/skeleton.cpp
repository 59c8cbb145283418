#include "tsemi/skeleton.hpp"

#include <algorithm>
#include <map>

namespace tsemi {

  std::optional<std::size_t> ImageSet::index_of(StateSubset const& p) const {
    auto it = std::lower_bound(subsets.begin(), subsets.end(), p);
    if (it == subsets.end() || *it != p) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - subsets.begin());
  }

  namespace {

    ImageSet collect_images(TransformationSemigroup const& monoid, bool extended) {
      std::map<StateSubset, std::optional<std::size_t>> found;
      // The identity witnesses X.
      if (auto id = monoid.identity_index()) {
        found.emplace(image(monoid.element(*id)), *id);
      }
      for (std::size_t i = 0; i < monoid.size(); ++i) {
        found.emplace(image(monoid.element(i)), i);
      }
      if (extended) {
        for (std::size_t x = 0; x < monoid.degree(); ++x) {
          found.emplace(StateSubset(monoid.degree(), {x}), std::nullopt);
        }
      }
      ImageSet result;
      result.degree = monoid.degree();
      for (auto& [subset, witness] : found) {
        result.subsets.push_back(subset);
        result.witness.push_back(witness);
      }
      return result;
    }

  }  // namespace

  ImageSet image_set(TransformationSemigroup const& s) {
    return collect_images(adjoin_identity(s), false);
  }

  ImageSet extended_image_set(TransformationSemigroup const& s) {
    return collect_images(adjoin_identity(s), true);
  }

  Subduction::Subduction(TransformationSemigroup const& monoid) : monoid_(&monoid) {}

  std::optional<std::size_t> Subduction::witness(StateSubset const& p,
                                                 StateSubset const& q) const {
    if (p.size() > q.size()) {
      return std::nullopt;
    }
    auto const& m  = *monoid_;
    auto        id = m.identity_index();
    if (id && p.is_subset_of(q)) {
      return id;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (p.is_subset_of(apply_subset(q, m.element(i)))) {
        return i;
      }
    }
    return std::nullopt;
  }

  Preorder Subduction::preorder(ImageSet const& images) const {
    std::size_t const n = images.size();
    auto const&       m = *monoid_;
    Preorder          p(n);
    for (std::size_t qi = 0; qi < n; ++qi) {
      // Distinct images Q^s over the whole monoid.
      std::vector<StateSubset> orbit;
      for (auto const& s : m.elements()) {
        orbit.push_back(apply_subset(images.subsets[qi], s));
      }
      std::sort(orbit.begin(), orbit.end());
      orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
      for (std::size_t pi = 0; pi < n; ++pi) {
        auto const& sub = images.subsets[pi];
        if (sub.size() > images.subsets[qi].size()) {
          continue;
        }
        if (std::any_of(orbit.begin(), orbit.end(),
                        [&](StateSubset const& img) { return sub.is_subset_of(img); })) {
          p.set(pi, qi);
        }
      }
    }
    return p;
  }

  std::optional<SubductionWitness> subduction_leq(StateSubset const&             p,
                                                  StateSubset const&             q,
                                                  TransformationSemigroup const& s) {
    auto monoid = adjoin_identity(s);
    if (auto w = Subduction(monoid).witness(p, q)) {
      return SubductionWitness{monoid.element(*w)};
    }
    return std::nullopt;
  }

  Skeleton skeleton(TransformationSemigroup const& s, bool extended) {
    auto     monoid = adjoin_identity(s);
    Skeleton result;
    result.images     = collect_images(monoid, extended);
    result.subduction = Subduction(monoid).preorder(result.images);
    result.poset      = quotient(result.subduction);
    return result;
  }

  ClassPoset skeleton_poset(TransformationSemigroup const& s, bool extended) {
    return skeleton(s, extended).poset;
  }

}  // namespace tsemi
