#include "tsemi/morphisms.hpp"

#include <algorithm>
#include <string>

#include "tsemi/error.hpp"
#include "tsemi/green.hpp"
#include "tsemi/maps.hpp"
#include "tsemi/skeleton.hpp"

namespace tsemi {

  StateSubset TsMorphism::map_subset(StateSubset const& p) const {
    StateSubset out(target.degree());
    p.for_each([&](std::size_t x) { out.insert(state_map.at(x)); });
    return out;
  }

  namespace {

    bool onto(std::vector<std::size_t> const& f, std::size_t target_size) {
      std::vector<bool> hit(target_size, false);
      for (auto y : f) {
        if (y < target_size) {
          hit[y] = true;
        }
      }
      return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }

    MorphismValidation failure(std::string                reason,
                               std::optional<std::size_t> state   = std::nullopt,
                               std::optional<std::size_t> element = std::nullopt) {
      return {false, std::move(reason), state, element};
    }

  }  // namespace

  MorphismValidation validate(TsMorphism const& m) {
    auto const& src = m.source;
    auto const& dst = m.target;
    if (m.state_map.size() != src.degree()
        || std::any_of(m.state_map.begin(), m.state_map.end(),
                       [&](std::size_t y) { return y >= dst.degree(); })) {
      return failure("state map is not a total map X -> Y");
    }
    if (m.elem_map.size() != src.size()
        || std::any_of(m.elem_map.begin(), m.elem_map.end(),
                       [&](std::size_t t) { return t >= dst.size(); })) {
      return failure("element map is not a total map S -> T");
    }
    if (!onto(m.state_map, dst.degree())) {
      return failure("state map is not surjective");
    }
    if (!onto(m.elem_map, dst.size())) {
      return failure("element map is not surjective");
    }
    if (auto id = src.identity_index(); id && !m.map_element(*id).is_identity()) {
      return failure("identity of S is not sent to the identity on Y", std::nullopt, id);
    }
    for (std::size_t s = 0; s < src.size(); ++s) {
      auto const& from = src.element(s);
      auto const& to   = m.map_element(s);
      for (std::size_t x = 0; x < src.degree(); ++x) {
        if (m.state_map[from[x]] != to[m.state_map[x]]) {
          return failure("action not compatible: phi(x^s) != phi(x)^phi(s)", x, s);
        }
      }
    }
    for (std::size_t s = 0; s < src.size(); ++s) {
      for (std::size_t t = 0; t < src.size(); ++t) {
        if (m.elem_map[src.product(s, t)] != dst.product(m.elem_map[s], m.elem_map[t])) {
          return failure("element map is not a homomorphism", std::nullopt, s);
        }
      }
    }
    return {};
  }

  TsMorphism identity_morphism(TransformationSemigroup const& s) {
    TsMorphism m{s, s, {}, {}};
    for (std::size_t x = 0; x < s.degree(); ++x) {
      m.state_map.push_back(x);
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      m.elem_map.push_back(i);
    }
    return m;
  }

  TsMorphism compose(TsMorphism const& first, TsMorphism const& second) {
    if (first.target.degree() != second.source.degree()
        || first.target.elements() != second.source.elements()) {
      throw PreconditionError("compose: target of the first morphism is not the source "
                              "of the second");
    }
    TsMorphism m{first.source, second.target, {}, {}};
    for (auto y : first.state_map) {
      m.state_map.push_back(second.state_map.at(y));
    }
    for (auto t : first.elem_map) {
      m.elem_map.push_back(second.elem_map.at(t));
    }
    return m;
  }

  std::vector<std::vector<std::size_t>> AdmissiblePartition::blocks() const {
    std::vector<std::vector<std::size_t>> out(block_count);
    for (std::size_t x = 0; x < block_of.size(); ++x) {
      out[block_of[x]].push_back(x);
    }
    return out;
  }

  bool is_admissible(TransformationSemigroup const& s, std::vector<std::size_t> const& block_of) {
    std::size_t const nblocks =
        block_of.empty() ? 0 : *std::max_element(block_of.begin(), block_of.end()) + 1;
    for (auto const& t : s.elements()) {
      std::vector<std::size_t> sent(nblocks, nblocks);
      for (std::size_t x = 0; x < block_of.size(); ++x) {
        std::size_t to = block_of[t[x]];
        if (sent[block_of[x]] == nblocks) {
          sent[block_of[x]] = to;
        } else if (sent[block_of[x]] != to) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<AdmissiblePartition> admissible_partitions(TransformationSemigroup const& s,
                                                         bool        include_discrete,
                                                         std::size_t max_states) {
    std::size_t const n = s.degree();
    if (n > max_states) {
      throw ResourceLimitError("admissible_partitions: " + std::to_string(n)
                               + " states exceeds the cap of " + std::to_string(max_states));
    }
    std::vector<AdmissiblePartition> out;
    if (n == 0) {
      return out;
    }
    // Restricted growth strings in lexicographic order.
    std::vector<std::size_t> rgs(n, 0);
    std::vector<std::size_t> prefix_max(n, 0);
    while (true) {
      std::size_t count = prefix_max[n - 1] + 1;
      if ((include_discrete || count != n) && is_admissible(s, rgs)) {
        out.push_back({rgs, count});
      }
      std::size_t i = n - 1;
      while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++rgs[i];
      prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
      for (std::size_t k = i + 1; k < n; ++k) {
        rgs[k]        = 0;
        prefix_max[k] = prefix_max[k - 1];
      }
    }
    return out;
  }

  std::pair<TransformationSemigroup, TsMorphism>
  quotient_ts(TransformationSemigroup const& s, AdmissiblePartition const& p) {
    if (p.block_of.size() != s.degree() || !is_admissible(s, p.block_of)) {
      throw PreconditionError("quotient_ts: partition is not admissible");
    }
    auto induced = [&](Transformation const& t) {
      std::vector<state_type> images(p.block_count);
      for (std::size_t x = 0; x < s.degree(); ++x) {
        images[p.block_of[x]] = static_cast<state_type>(p.block_of[t[x]]);
      }
      return Transformation(std::move(images));
    };
    std::vector<Transformation> gens;
    for (auto const& g : s.generators()) {
      gens.push_back(induced(g));
    }
    auto target = enumerate(p.block_count, std::move(gens), s.size());

    TsMorphism m{s, target, p.block_of, {}};
    for (auto const& t : s.elements()) {
      auto idx = target.index_of(induced(t));
      if (!idx) {
        throw ConsistencyError("quotient_ts: induced map missing from the quotient");
      }
      m.elem_map.push_back(*idx);
    }
    return {std::move(target), std::move(m)};
  }

  FunctorialityReport functoriality_check(TsMorphism const& m) {
    if (auto v = validate(m); !v) {
      throw PreconditionError("functoriality_check: invalid morphism: " + v.reason);
    }
    DiagramData src(m.source);
    DiagramData dst(m.target);
    auto const& sm = src.green.monoid();
    auto const& tm = dst.green.monoid();

    FunctorialityReport r;
    auto fail = [&](bool& flag, std::string what) {
      flag = false;
      r.failures.push_back(std::move(what));
    };

    // phi extended to S^1 -> T^1 with 1 -> 1.
    std::vector<std::size_t> phi(sm.size());
    for (std::size_t a = 0; a < sm.size(); ++a) {
      if (auto i = m.source.index_of(sm.element(a))) {
        phi[a] = tm.index_of(m.map_element(*i)).value();
      } else {
        phi[a] = tm.identity_index().value();
      }
    }

    // (a)
    for (auto kind : {GreenKind::L, GreenKind::J}) {
      auto const& sp = src.green.preorder(kind);
      auto const& tp = dst.green.preorder(kind);
      if (!check_preorder_morphism(phi, sp, tp)) {
        fail(r.green_maps, std::string("phi does not respect <=_") + std::string(name(kind)));
        continue;
      }
      auto induced = induce(phi, sp, tp);
      if (!induced.is_surjective()) {
        fail(r.green_maps, std::string("induced map on ") + std::string(name(kind))
                               + "-classes is not surjective");
      }
      (kind == GreenKind::L ? r.l_class_map : r.j_class_map) = induced.class_map;
    }
    if (!onto(phi, tm.size())) {
      fail(r.green_maps, "phi is not onto T^1");
    }

    // (b)
    auto const& simg = src.skeleton.images;
    auto const& timg = dst.skeleton.images;
    for (std::size_t p = 0; p < simg.size(); ++p) {
      auto q = timg.index_of(m.map_subset(simg.subsets[p]));
      if (!q) {
        fail(r.image_sets, "phi(" + to_string(simg.subsets[p]) + ") is not in I(Y)");
        break;
      }
      r.image_map.push_back(*q);
    }
    if (r.image_sets && !onto(r.image_map, timg.size())) {
      fail(r.image_sets, "image sets map is not onto I(Y)");
    }
    if (!r.image_sets || !r.green_maps) {
      r.subduction = r.commutes = false;
      r.skeleton_order_preserving = r.skeleton_surjective = false;
      return r;
    }

    // (c)
    Subduction sub(sm);
    for (std::size_t p = 0; p < simg.size() && r.subduction; ++p) {
      for (std::size_t q = 0; q < simg.size(); ++q) {
        if (!src.skeleton.subduction.leq(p, q)) {
          continue;
        }
        if (!dst.skeleton.subduction.leq(r.image_map[p], r.image_map[q])) {
          fail(r.subduction, "subduction " + to_string(simg.subsets[p]) + " <= "
                                 + to_string(simg.subsets[q]) + " not preserved");
          break;
        }
        auto w = sub.witness(simg.subsets[p], simg.subsets[q]).value();
        auto moved =
            apply_subset(m.map_subset(simg.subsets[q]), tm.element(phi[w]));
        if (!m.map_subset(simg.subsets[p]).is_subset_of(moved)) {
          fail(r.subduction, "witness for " + to_string(simg.subsets[p]) + " <= "
                                 + to_string(simg.subsets[q]) + " does not transport");
          break;
        }
      }
    }

    auto const& sskel = src.skeleton.poset;
    auto const& tskel = dst.skeleton.poset;
    if (check_preorder_morphism(r.image_map, src.skeleton.subduction,
                                dst.skeleton.subduction)) {
      auto induced           = induce(r.image_map, src.skeleton.subduction,
                                      dst.skeleton.subduction);
      r.skeleton_class_map   = induced.class_map;
      r.skeleton_surjective  = induced.is_surjective();
      if (!r.skeleton_surjective) {
        r.failures.push_back("skeleton map is not surjective");
      }
    } else {
      r.skeleton_order_preserving = false;
      r.skeleton_surjective       = false;
      r.commutes                  = false;
      r.failures.push_back("skeleton map is not order preserving");
      return r;
    }

    // (d)
    auto const& sl = src.green.classes(GreenKind::L);
    auto const& tl = dst.green.classes(GreenKind::L);
    auto const& sj = src.green.classes(GreenKind::J);
    auto const& tj = dst.green.classes(GreenKind::J);
    auto check = [&](bool ok, char const* arrow) {
      if (!ok && r.commutes) {
        fail(r.commutes, std::string("node maps do not commute with ") + arrow);
      }
    };
    for (std::size_t a = 0; a < sm.size(); ++a) {
      check(r.l_class_map[sl.class_of[a]] == tl.class_of[phi[a]], "/L");
      check(r.image_map[src.im[a]] == dst.im[phi[a]], "im");
    }
    for (std::size_t c = 0; c < sl.size(); ++c) {
      std::size_t a  = sl.representative(c);
      std::size_t tc = r.l_class_map[c];
      check(r.image_map[src.im[a]] == dst.im[tl.representative(tc)], "im_bar");
      check(r.j_class_map[sj.class_of[a]] == tj.class_of[tl.representative(tc)], "/J");
    }
    for (std::size_t p = 0; p < simg.size(); ++p) {
      check(r.skeleton_class_map[sskel.class_of[p]] == tskel.class_of[r.image_map[p]],
            "/=_S");
    }
    for (std::size_t c = 0; c < sj.size(); ++c) {
      std::size_t a  = sj.representative(c);
      std::size_t tc = r.j_class_map[c];
      check(r.skeleton_class_map[sskel.class_of[src.im[a]]]
                == tskel.class_of[dst.im[tj.representative(tc)]],
            "im_bar_S");
    }
    return r;
  }

}  // namespace tsemi
