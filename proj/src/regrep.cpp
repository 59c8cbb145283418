#include "tsemi/regrep.hpp"

#include "tsemi/error.hpp"
#include "tsemi/green.hpp"
#include "tsemi/maps.hpp"

namespace tsemi {

  Transformation RegRep::representation(std::size_t a) const {
    std::vector<state_type> images(monoid.size());
    for (std::size_t x = 0; x < monoid.size(); ++x) {
      images[state_of[x]] = static_cast<state_type>(state_of[monoid.product(x, a)]);
    }
    return Transformation(std::move(images));
  }

  RegRep right_regular(TransformationSemigroup const& s, std::size_t max_elements) {
    RegRep r;
    r.base   = s;
    r.monoid = adjoin_identity(s);
    std::size_t const n  = r.monoid.size();
    std::size_t const id = r.monoid.identity_index().value();

    r.element_at_state.push_back(id);
    for (std::size_t a = 0; a < n; ++a) {
      if (a != id) {
        r.element_at_state.push_back(a);
      }
    }
    r.state_of.resize(n);
    for (std::size_t st = 0; st < n; ++st) {
      r.state_of[r.element_at_state[st]] = st;
    }

    std::vector<Transformation> gens;
    for (auto const& g : s.generators()) {
      gens.push_back(r.representation(r.monoid.index_of(g).value()));
    }
    r.rep = enumerate(n, std::move(gens), max_elements);
    if (r.rep.size() != s.size()) {
      throw ConsistencyError("right_regular: representation is not faithful");
    }
    return r;
  }

  CorollaryReport corollary_check(RegRep const& r) {
    GreenStructure base_green(r.monoid);
    DiagramData    rep_data(r.rep);
    auto const&    rep_monoid = rep_data.green.monoid();

    // monoid index of the base -> monoid index of the representation
    std::vector<std::size_t> to_rep(r.monoid.size());
    for (std::size_t a = 0; a < r.monoid.size(); ++a) {
      auto idx = rep_monoid.index_of(r.representation(a));
      if (!idx) {
        throw ConsistencyError("corollary_check: representing map missing from S^1");
      }
      to_rep[a] = *idx;
    }

    CorollaryReport report;

    auto const& base_j = base_green.classes(GreenKind::J);
    auto        sk_map = im_bar_S(rep_data);
    auto const& rep_j  = rep_data.green.classes(GreenKind::J);
    report.j_witness.resize(base_j.size());
    for (std::size_t c = 0; c < base_j.size(); ++c) {
      report.j_witness[c] =
          sk_map.class_map[rep_j.class_of[to_rep[base_j.representative(c)]]];
    }
    report.j_witness_is_isomorphism =
        is_order_isomorphism(report.j_witness, base_j, rep_data.skeleton.poset);
    report.j_search = poset_isomorphic(base_j, rep_data.skeleton.poset);

    auto const& base_l  = base_green.classes(GreenKind::L);
    auto        inc_map = im_bar(rep_data);
    auto const& rep_l   = rep_data.green.classes(GreenKind::L);
    report.l_witness.resize(base_l.size());
    for (std::size_t c = 0; c < base_l.size(); ++c) {
      report.l_witness[c] =
          inc_map.class_map[rep_l.class_of[to_rep[base_l.representative(c)]]];
    }
    report.l_witness_is_isomorphism =
        is_order_isomorphism(report.l_witness, base_l, inc_map.target);
    report.l_search = poset_isomorphic(base_l, inc_map.target);
    return report;
  }

  CorollaryReport corollary_check(TransformationSemigroup const& s) {
    return corollary_check(right_regular(s));
  }

}  // namespace tsemi
