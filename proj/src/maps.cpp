#include "tsemi/maps.hpp"

#include <algorithm>
#include <sstream>

#include "tsemi/error.hpp"

namespace tsemi {

  DiagramData::DiagramData(TransformationSemigroup const& s)
      : green(s), skeleton(tsemi::skeleton(green.monoid(), false)) {
    auto const& images = skeleton.images;
    inclusion = Preorder::from_relation(images.size(), [&](std::size_t p, std::size_t q) {
      return images.subsets[p].is_subset_of(images.subsets[q]);
    });
    auto const& m = green.monoid();
    im.reserve(m.size());
    for (auto const& t : m.elements()) {
      im.push_back(images.index_of(image(t)).value());
    }
  }

  ImRespectsReport check_im_respects_orders(DiagramData const& d) {
    ImRespectsReport report;
    auto const&      l = d.green.preorder(GreenKind::L);
    auto const&      j = d.green.preorder(GreenKind::J);
    auto const&      sub = d.skeleton.subduction;
    std::size_t const n  = d.im.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (report.l_to_inclusion && l.leq(a, b) && !d.inclusion.leq(d.im[a], d.im[b])) {
          report.l_to_inclusion   = false;
          report.l_counterexample = {a, b};
        }
        if (report.j_to_subduction && j.leq(a, b) && !sub.leq(d.im[a], d.im[b])) {
          report.j_to_subduction  = false;
          report.j_counterexample = {a, b};
        }
      }
    }
    std::vector<bool> hit(d.skeleton.images.size(), false);
    for (auto p : d.im) {
      hit[p] = true;
    }
    report.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    return report;
  }

  ImRespectsReport check_im_respects_orders(TransformationSemigroup const& s) {
    return check_im_respects_orders(DiagramData(s));
  }

  InducedMap im_bar_S(DiagramData const& d) {
    auto m = induce(d.im, d.green.preorder(GreenKind::J), d.skeleton.subduction);
    if (!m.is_surjective()) {
      throw ConsistencyError("im_bar_S: not surjective onto the skeleton");
    }
    return m;
  }

  InducedMap im_bar_S(TransformationSemigroup const& s) {
    return im_bar_S(DiagramData(s));
  }

  InducedMap im_bar(DiagramData const& d) {
    auto m = induce(d.im, d.green.preorder(GreenKind::L), d.inclusion);
    if (!m.is_surjective()) {
      throw ConsistencyError("im_bar: not surjective onto I(X)");
    }
    return m;
  }

  InducedMap im_bar(TransformationSemigroup const& s) {
    return im_bar(DiagramData(s));
  }

  namespace {

    bool all_hit(std::vector<std::size_t> const& f, std::size_t target_size) {
      std::vector<bool> hit(target_size, false);
      for (auto y : f) {
        hit[y] = true;
      }
      return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }

    // Arrow given on the representatives of source classes. well_defined
    // checks every member of each class against its representative.
    ArrowVerdict class_arrow(std::string name,
                             std::string from,
                             std::string to,
                             ClassPoset const& src,
                             Preorder const&   dst,
                             auto&&            item_value,
                             std::vector<std::size_t>& f) {
      ArrowVerdict v{std::move(name), std::move(from), std::move(to)};
      f.assign(src.size(), 0);
      for (std::size_t c = 0; c < src.size(); ++c) {
        f[c] = item_value(src.classes[c].front());
        for (auto a : src.classes[c]) {
          if (item_value(a) != f[c]) {
            v.well_defined = false;
          }
        }
      }
      v.order_preserving = static_cast<bool>(check_preorder_morphism(f, src.order(), dst));
      v.surjective       = all_hit(f, dst.size());
      return v;
    }

    ArrowVerdict item_arrow(std::string                     name,
                            std::string                     from,
                            std::string                     to,
                            std::vector<std::size_t> const& f,
                            Preorder const&                 src,
                            Preorder const&                 dst) {
      ArrowVerdict v{std::move(name), std::move(from), std::move(to)};
      v.order_preserving = static_cast<bool>(check_preorder_morphism(f, src, dst));
      v.surjective       = all_hit(f, dst.size());
      return v;
    }

    bool union_of_classes(std::vector<std::size_t> const& item_to_target,
                          ClassPoset const&               src) {
      for (auto const& cls : src.classes) {
        for (auto a : cls) {
          if (item_to_target[a] != item_to_target[cls.front()]) {
            return false;
          }
        }
      }
      return true;
    }

  }  // namespace

  bool DiagramReport::all_passed() const noexcept {
    return std::all_of(arrows.begin(), arrows.end(), [](auto const& a) { return a.ok(); })
           && std::all_of(commutes.begin(), commutes.end(), [](auto const& v) { return v.holds; })
           && std::all_of(preimages.begin(), preimages.end(), [](auto const& v) { return v.holds; });
  }

  std::string DiagramReport::to_text() const {
    std::ostringstream os;
    auto yn = [](bool b) { return b ? "yes" : "NO"; };
    os << "diagram nodes:\n";
    for (auto const& n : nodes) {
      os << "  " << n << '\n';
    }
    os << "arrows:\n";
    for (auto const& a : arrows) {
      os << "  " << a.name << " : " << a.from << " -> " << a.to
         << "  well-defined=" << yn(a.well_defined)
         << " order-preserving=" << yn(a.order_preserving)
         << " surjective=" << yn(a.surjective) << '\n';
    }
    os << "commuting faces:\n";
    for (auto const& v : commutes) {
      os << "  " << v.name << " : " << yn(v.holds) << '\n';
    }
    os << "preimages are unions of classes:\n";
    for (auto const& v : preimages) {
      os << "  " << v.name << " : " << yn(v.holds) << '\n';
    }
    os << "diagram verified: " << yn(all_passed()) << '\n';
    return os.str();
  }

  DiagramReport verify_diagram(DiagramData const& d) {
    auto const&       lpre  = d.green.preorder(GreenKind::L);
    auto const&       lcls  = d.green.classes(GreenKind::L);
    auto const&       jcls  = d.green.classes(GreenKind::J);
    auto const&       skel  = d.skeleton.poset;
    std::size_t const n     = d.im.size();

    DiagramReport r;
    r.nodes = {"(S^1, <=_L)",          "(S^1/L, <=_L)",     "(S^1/J, <=_J)",
               "(I(X), subset)",       "(I(X)/=_S, <=_S)",  "S^1 (shared carrier)"};

    std::vector<std::size_t> quot_l = lcls.class_of;
    r.arrows.push_back(item_arrow("/L", r.nodes[0], r.nodes[1], quot_l, lpre, lcls.order()));
    r.arrows.push_back(item_arrow("im", r.nodes[0], r.nodes[3], d.im, lpre, d.inclusion));

    std::vector<std::size_t> imbar;
    r.arrows.push_back(class_arrow("im_bar", r.nodes[1], r.nodes[3], lcls, d.inclusion,
                                   [&](std::size_t a) { return d.im[a]; }, imbar));

    std::vector<std::size_t> quot_j;
    r.arrows.push_back(class_arrow("/J", r.nodes[1], r.nodes[2], lcls, jcls.order(),
                                   [&](std::size_t a) { return jcls.class_of[a]; }, quot_j));

    std::vector<std::size_t> quot_s = skel.class_of;
    r.arrows.push_back(
        item_arrow("/=_S", r.nodes[3], r.nodes[4], quot_s, d.inclusion, skel.order()));

    std::vector<std::size_t> imbar_s;
    r.arrows.push_back(class_arrow("im_bar_S", r.nodes[2], r.nodes[4], jcls, skel.order(),
                                   [&](std::size_t a) { return skel.class_of[d.im[a]]; },
                                   imbar_s));

    bool triangle = true;
    bool square   = true;
    bool paths    = true;
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t lc = lcls.class_of[a];
      triangle       = triangle && imbar[lc] == d.im[a];
      square         = square && imbar_s[quot_j[lc]] == quot_s[imbar[lc]];
      paths          = paths && quot_s[d.im[a]] == imbar_s[jcls.class_of[a]];
    }
    r.commutes.push_back({"im = im_bar . /L", triangle});
    r.commutes.push_back({"im_bar_S . /J = /=_S . im_bar", square});
    r.commutes.push_back({"/=_S . im = im_bar_S . /J . /L on S^1", paths});

    // Pull back along the item maps S^1 -> I(X) and S^1 -> skeleton.
    std::vector<std::size_t> to_skeleton(n);
    for (std::size_t a = 0; a < n; ++a) {
      to_skeleton[a] = quot_s[d.im[a]];
    }
    r.preimages.push_back({"im_bar: preimage of each image set is a union of L-classes",
                           union_of_classes(d.im, lcls)});
    r.preimages.push_back(
        {"im_bar_S: preimage of each subduction class is a union of J-classes",
         union_of_classes(to_skeleton, jcls)});
    return r;
  }

  DiagramReport verify_diagram(TransformationSemigroup const& s) {
    return verify_diagram(DiagramData(s));
  }

}  // namespace tsemi
