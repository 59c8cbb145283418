#include "tsemi/green.hpp"

#include <algorithm>
#include <map>

#include "tsemi/error.hpp"

namespace tsemi {

  std::string_view name(GreenKind kind) noexcept {
    switch (kind) {
      case GreenKind::R:
        return "R";
      case GreenKind::L:
        return "L";
      case GreenKind::J:
        return "J";
      case GreenKind::H:
        return "H";
    }
    return "?";
  }

  namespace {

    // Orbit of t under repeated multiplication by generators on one side.
    template <typename Step>
    IndexSet orbit(std::size_t t, std::size_t universe, std::size_t ngens, Step&& step) {
      IndexSet                 seen(universe);
      std::vector<std::size_t> stack{t};
      seen.insert(t);
      while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t g = 0; g < ngens; ++g) {
          std::size_t y = step(x, g);
          if (!seen.contains(y)) {
            seen.insert(y);
            stack.push_back(y);
          }
        }
      }
      return seen;
    }

    Preorder containment(std::vector<IndexSet> const& ideals) {
      return Preorder::from_relation(ideals.size(), [&](std::size_t t, std::size_t s) {
        return ideals[t].is_subset_of(ideals[s]);
      });
    }

  }  // namespace

  GreenStructure::GreenStructure(TransformationSemigroup const& s)
      : monoid_(adjoin_identity(s)) {
    std::size_t const n     = monoid_.size();
    std::size_t const ngens = monoid_.generators().size();
    left_.reserve(n);
    right_.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
      left_.push_back(orbit(t, n, ngens, [&](std::size_t x, std::size_t g) {
        return monoid_.left_cayley(x)[g];
      }));
      right_.push_back(orbit(t, n, ngens, [&](std::size_t x, std::size_t g) {
        return monoid_.right_cayley(x)[g];
      }));
    }
    two_sided_.assign(n, IndexSet(n));
    for (std::size_t t = 0; t < n; ++t) {
      left_[t].for_each([&](std::size_t x) { two_sided_[t] |= right_[x]; });
    }

    preorders_[index(GreenKind::L)] = containment(left_);
    preorders_[index(GreenKind::R)] = containment(right_);
    preorders_[index(GreenKind::J)] = containment(two_sided_);
    std::vector<IndexSet> h_rows;
    h_rows.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
      h_rows.push_back(preorders_[index(GreenKind::L)].up_set(t)
                       & preorders_[index(GreenKind::R)].up_set(t));
    }
    preorders_[index(GreenKind::H)] = Preorder::from_rows(std::move(h_rows));

    for (auto kind : {GreenKind::R, GreenKind::L, GreenKind::J, GreenKind::H}) {
      posets_[index(kind)] = quotient(preorders_[index(kind)]);
    }
  }

  Preorder green_preorder(TransformationSemigroup const& s, GreenKind kind) {
    return GreenStructure(s).preorder(kind);
  }

  std::vector<std::vector<std::size_t>> d_partition(GreenStructure const& g) {
    auto const&       l = g.classes(GreenKind::L);
    auto const&       r = g.classes(GreenKind::R);
    std::size_t const n = g.monoid().size();

    // a D b iff some c has a L c and c R b.
    std::map<IndexSet, std::vector<std::size_t>> blocks;
    for (std::size_t a = 0; a < n; ++a) {
      IndexSet d(n);
      for (auto c : l.classes[l.class_of[a]]) {
        for (auto b : r.classes[r.class_of[c]]) {
          d.insert(b);
        }
      }
      blocks[d].push_back(a);
    }
    std::vector<std::vector<std::size_t>> result;
    for (auto& [key, members] : blocks) {
      if (key.members() != members) {
        throw ConsistencyError("d_partition: L and R do not commute");
      }
      result.push_back(std::move(members));
    }
    std::sort(result.begin(), result.end());

    auto const& j = g.classes(GreenKind::J);
    if (result != j.classes) {
      throw ConsistencyError("d_partition: D-classes differ from J-classes");
    }
    return result;
  }

  std::vector<std::vector<std::size_t>> d_partition(TransformationSemigroup const& s) {
    return d_partition(GreenStructure(s));
  }

  std::vector<EggBox> eggbox(GreenStructure const& g) {
    auto const& l = g.classes(GreenKind::L);
    auto const& r = g.classes(GreenKind::R);
    auto const& m = g.monoid();

    std::vector<EggBox> boxes;
    for (auto const& block : d_partition(g)) {
      EggBox box;
      box.elements = block;
      for (auto a : block) {
        if (std::find(box.rows.begin(), box.rows.end(), r.class_of[a]) == box.rows.end()) {
          box.rows.push_back(r.class_of[a]);
        }
        if (std::find(box.columns.begin(), box.columns.end(), l.class_of[a])
            == box.columns.end()) {
          box.columns.push_back(l.class_of[a]);
        }
      }
      std::sort(box.rows.begin(), box.rows.end());
      std::sort(box.columns.begin(), box.columns.end());

      for (auto c : box.columns) {
        auto const& members = l.classes[c];
        StateSubset img     = image(m.element(members.front()));
        for (auto a : members) {
          if (image(m.element(a)) != img) {
            throw ConsistencyError("eggbox: L-class with two different images");
          }
        }
        box.column_images.push_back(std::move(img));
      }

      box.cells.assign(box.rows.size(), std::vector<HCell>(box.columns.size()));
      for (auto a : block) {
        auto row = std::lower_bound(box.rows.begin(), box.rows.end(), r.class_of[a])
                   - box.rows.begin();
        auto col = std::lower_bound(box.columns.begin(), box.columns.end(), l.class_of[a])
                   - box.columns.begin();
        auto& cell = box.cells[row][col];
        cell.elements.push_back(a);
        if (m.product(a, a) == a) {
          cell.idempotent = true;
        }
      }
      boxes.push_back(std::move(box));
    }
    return boxes;
  }

  std::vector<EggBox> eggbox(TransformationSemigroup const& s) {
    return eggbox(GreenStructure(s));
  }

}  // namespace tsemi
