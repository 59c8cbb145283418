#include "tsemi/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "tsemi/error.hpp"

namespace tsemi {

  std::string_view name(Task task) noexcept {
    switch (task) {
      case Task::green:
        return "green";
      case Task::skeleton:
        return "skeleton";
      case Task::diagram:
        return "diagram";
      case Task::regrep:
        return "regrep";
      case Task::functorial:
        return "functorial";
    }
    return "?";
  }

  std::optional<Task> parse_task(std::string_view text) {
    for (auto t : {Task::green, Task::skeleton, Task::diagram, Task::regrep, Task::functorial}) {
      if (name(t) == text) {
        return t;
      }
    }
    return std::nullopt;
  }

  bool AnalysisBundle::verified() const {
    if (diagram && !diagram->all_passed()) {
      return false;
    }
    if (im_check && !im_check->holds()) {
      return false;
    }
    if (corollary && !corollary->holds()) {
      return false;
    }
    return std::all_of(functorial.begin(), functorial.end(),
                       [](auto const& p) { return p.passed(); });
  }

  namespace {

    template <typename F>
    auto stage(std::string_view which, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (ResourceLimitError const& e) {
        throw ResourceLimitError("stage " + std::string(which) + ": " + e.what());
      }
    }

  }  // namespace

  AnalysisBundle run(InputDocument const& doc, std::set<Task> tasks, std::size_t max_elements) {
    if (tasks.contains(Task::diagram)) {
      tasks.insert(Task::green);
      tasks.insert(Task::skeleton);
    }
    AnalysisBundle b;
    b.input     = doc;
    b.tasks     = tasks;
    b.semigroup = stage("enumerate", [&] { return to_semigroup(doc, max_elements); });
    auto const& s = b.semigroup;

    if (tasks.contains(Task::green)) {
      b.green     = GreenStructure(s);
      b.d_classes = d_partition(*b.green);
      b.eggboxes  = eggbox(*b.green);
    }
    if (tasks.contains(Task::skeleton)) {
      b.skeleton = skeleton(s, doc.extended);
    }
    if (tasks.contains(Task::diagram)) {
      b.diagram_data.emplace(s);
      b.diagram  = verify_diagram(*b.diagram_data);
      b.im_check = check_im_respects_orders(*b.diagram_data);
      b.im_bar_s = im_bar_S(*b.diagram_data);
    }
    if (tasks.contains(Task::regrep)) {
      b.regrep    = stage("regrep", [&] { return right_regular(s, max_elements); });
      b.corollary = corollary_check(*b.regrep);
    }
    if (tasks.contains(Task::functorial)) {
      auto partitions = stage("functorial", [&] { return admissible_partitions(s); });
      for (auto const& p : partitions) {
        auto [target, morphism] = quotient_ts(s, p);
        PartitionResult r;
        r.partition       = p;
        r.target_states   = target.degree();
        r.target_elements = target.size();
        r.validation      = validate(morphism);
        if (r.validation) {
          r.report = functoriality_check(morphism);
        }
        b.functorial.push_back(std::move(r));
      }
    }
    return b;
  }

  namespace {

    std::vector<std::string> labels(TransformationSemigroup const& m,
                                    std::vector<std::size_t> const& items) {
      std::vector<std::string> out;
      for (auto a : items) {
        out.push_back(to_string(m.element(a)));
      }
      return out;
    }

    nlohmann::json subset_json(StateSubset const& p) {
      auto json = nlohmann::json::array();
      p.for_each([&](std::size_t x) { json.push_back(x + 1); });
      return json;
    }

    nlohmann::json poset_json(ClassPoset const& p, auto&& item_label) {
      nlohmann::json j;
      j["classes"] = nlohmann::json::array();
      for (auto const& cls : p.classes) {
        auto members = nlohmann::json::array();
        for (auto a : cls) {
          members.push_back(item_label(a));
        }
        j["classes"].push_back(members);
      }
      j["covers"] = nlohmann::json::array();
      for (auto const& [lo, hi] : p.covers) {
        j["covers"].push_back({lo, hi});
      }
      j["height"]     = height(p);
      j["is_lattice"] = is_lattice(p);
      return j;
    }

    std::size_t idempotent_count(TransformationSemigroup const& m) {
      std::size_t count = 0;
      for (std::size_t a = 0; a < m.size(); ++a) {
        count += m.product(a, a) == a ? 1 : 0;
      }
      return count;
    }

  }  // namespace

  nlohmann::json json_report(AnalysisBundle const& b) {
    using nlohmann::json;
    json out;
    out["format"] = "tsemi-report/1";
    out["input"]  = {{"states", b.input.states},
                     {"generators", b.input.generators},
                     {"monoid", b.input.monoid},
                     {"extended", b.input.extended}};
    auto tasks = json::array();
    for (auto t : b.tasks) {
      tasks.push_back(std::string(name(t)));
    }
    out["tasks"] = tasks;

    json counts;
    counts["elements"] = b.semigroup.size();
    if (b.green) {
      auto const& g              = *b.green;
      counts["monoid_elements"]  = g.monoid().size();
      counts["r_classes"]        = g.classes(GreenKind::R).size();
      counts["l_classes"]        = g.classes(GreenKind::L).size();
      counts["h_classes"]        = g.classes(GreenKind::H).size();
      counts["j_classes"]        = g.classes(GreenKind::J).size();
      counts["d_classes"]        = b.d_classes.size();
      counts["idempotents"]      = idempotent_count(g.monoid());

      auto element_label = [&](std::size_t a) { return to_string(g.monoid().element(a)); };
      json green;
      green["elements"] = labels(g.monoid(), [&] {
        std::vector<std::size_t> all(g.monoid().size());
        for (std::size_t a = 0; a < all.size(); ++a) {
          all[a] = a;
        }
        return all;
      }());
      for (auto kind : {GreenKind::R, GreenKind::L, GreenKind::J, GreenKind::H}) {
        green[std::string(name(kind))] = poset_json(g.classes(kind), element_label);
      }
      auto boxes = json::array();
      for (auto const& box : b.eggboxes) {
        json jb;
        jb["elements"] = labels(g.monoid(), box.elements);
        auto images    = json::array();
        for (auto const& img : box.column_images) {
          images.push_back(subset_json(img));
        }
        jb["column_images"] = images;
        auto rows           = json::array();
        for (auto const& row : box.cells) {
          auto cells = json::array();
          for (auto const& cell : row) {
            cells.push_back({{"elements", labels(g.monoid(), cell.elements)},
                             {"idempotent", cell.idempotent}});
          }
          rows.push_back(cells);
        }
        jb["cells"] = rows;
        boxes.push_back(jb);
      }
      green["eggboxes"] = boxes;
      out["green"]      = green;
    }
    if (b.skeleton) {
      auto const& sk = *b.skeleton;
      std::size_t images = 0;
      for (std::size_t i = 0; i < sk.images.size(); ++i) {
        images += sk.images.adjoined(i) ? 0 : 1;
      }
      counts["image_sets"]       = images;
      counts["skeleton_classes"] = sk.poset.size();
      if (b.input.extended) {
        counts["extended_image_sets"] = sk.images.size();
      }
      json skel = poset_json(sk.poset, [&](std::size_t p) { return subset_json(sk.images.subsets[p]); });
      skel["extended"] = b.input.extended;
      auto adjoined    = json::array();
      for (std::size_t i = 0; i < sk.images.size(); ++i) {
        if (sk.images.adjoined(i)) {
          adjoined.push_back(subset_json(sk.images.subsets[i]));
        }
      }
      skel["adjoined_singletons"] = adjoined;
      out["skeleton"]             = skel;
    }
    if (b.diagram) {
      json d;
      auto arrows = json::array();
      for (auto const& a : b.diagram->arrows) {
        arrows.push_back({{"name", a.name},
                          {"from", a.from},
                          {"to", a.to},
                          {"well_defined", a.well_defined},
                          {"order_preserving", a.order_preserving},
                          {"surjective", a.surjective}});
      }
      d["nodes"]  = b.diagram->nodes;
      d["arrows"] = arrows;
      auto verdicts = [](std::vector<NamedVerdict> const& vs) {
        auto arr = json::array();
        for (auto const& v : vs) {
          arr.push_back({{"name", v.name}, {"holds", v.holds}});
        }
        return arr;
      };
      d["commutes"]  = verdicts(b.diagram->commutes);
      d["preimages"] = verdicts(b.diagram->preimages);
      d["im_respects_orders"] = {{"l_to_inclusion", b.im_check->l_to_inclusion},
                                 {"j_to_subduction", b.im_check->j_to_subduction},
                                 {"surjective", b.im_check->surjective}};
      auto fibers = json::array();
      for (std::size_t c = 0; c < b.im_bar_s->target.size(); ++c) {
        fibers.push_back(b.im_bar_s->fiber(c));
      }
      d["im_bar_S_fibers"] = fibers;
      d["passed"]          = b.diagram->all_passed() && b.im_check->holds();
      out["diagram"]       = d;
    }
    if (b.regrep) {
      json r;
      r["states"]   = b.regrep->rep.degree();
      r["elements"] = b.regrep->rep.size();
      auto gens     = json::array();
      for (auto const& g : b.regrep->rep.generators()) {
        gens.push_back(g.one_based_images());
      }
      r["generators"] = gens;
      auto state_labels = json::array();
      for (auto a : b.regrep->element_at_state) {
        state_labels.push_back(to_string(b.regrep->monoid.element(a)));
      }
      r["state_elements"] = state_labels;
      r["corollary"]      = {{"j_isomorphism", b.corollary->j_witness_is_isomorphism},
                             {"j_search_found", b.corollary->j_search.has_value()},
                             {"j_witness", b.corollary->j_witness},
                             {"l_isomorphism", b.corollary->l_witness_is_isomorphism},
                             {"l_search_found", b.corollary->l_search.has_value()},
                             {"l_witness", b.corollary->l_witness},
                             {"passed", b.corollary->holds()}};
      out["regrep"] = r;
    }
    if (b.tasks.contains(Task::functorial)) {
      auto parts = json::array();
      for (auto const& p : b.functorial) {
        auto blocks = json::array();
        for (auto const& blk : p.partition.blocks()) {
          auto one = json::array();
          for (auto x : blk) {
            one.push_back(x + 1);
          }
          blocks.push_back(one);
        }
        parts.push_back({{"blocks", blocks},
                         {"target_states", p.target_states},
                         {"target_elements", p.target_elements},
                         {"valid", p.validation.valid},
                         {"green_maps", p.report.green_maps},
                         {"image_sets", p.report.image_sets},
                         {"subduction", p.report.subduction},
                         {"commutes", p.report.commutes},
                         {"skeleton_order_preserving", p.report.skeleton_order_preserving},
                         {"skeleton_surjective", p.report.skeleton_surjective},
                         {"passed", p.passed()}});
      }
      out["functorial"] = {{"partitions", parts},
                           {"passed", std::all_of(b.functorial.begin(), b.functorial.end(),
                                                  [](auto const& p) { return p.passed(); })}};
    }
    out["counts"]   = counts;
    out["verified"] = b.verified();
    return out;
  }

  std::string text_report(AnalysisBundle const& b) {
    std::ostringstream os;
    auto yn = [](bool v) { return v ? "yes" : "NO"; };
    os << "states: " << b.input.states << '\n';
    os << "elements: " << b.semigroup.size()
       << (b.semigroup.has_identity() ? " (contains identity)" : "") << '\n';
    if (b.green) {
      auto const& g = *b.green;
      os << "S^1 elements: " << g.monoid().size() << '\n';
      os << "R-classes: " << g.classes(GreenKind::R).size() << '\n';
      os << "L-classes: " << g.classes(GreenKind::L).size() << '\n';
      os << "H-classes: " << g.classes(GreenKind::H).size() << '\n';
      os << "J-classes: " << g.classes(GreenKind::J).size() << '\n';
      os << "D-classes: " << b.d_classes.size() << " (equal to the J-partition)\n";
      os << "idempotents: " << idempotent_count(g.monoid()) << '\n';
      auto const& j = g.classes(GreenKind::J);
      os << "J-order (class representative: members):\n";
      for (std::size_t c = 0; c < j.size(); ++c) {
        os << "  J" << c << ":";
        for (auto a : j.classes[c]) {
          os << ' ' << to_string(g.monoid().element(a));
        }
        os << '\n';
      }
      os << "J-order covers:";
      for (auto const& [lo, hi] : j.covers) {
        os << " J" << lo << "<J" << hi;
      }
      os << '\n';
    }
    if (b.skeleton) {
      auto const& sk = *b.skeleton;
      std::size_t images = 0;
      for (std::size_t i = 0; i < sk.images.size(); ++i) {
        images += sk.images.adjoined(i) ? 0 : 1;
      }
      os << "image sets: " << images << '\n';
      if (b.input.extended) {
        os << "extended image sets: " << sk.images.size() << '\n';
      }
      os << "skeleton classes: " << sk.poset.size() << '\n';
      for (std::size_t c = 0; c < sk.poset.size(); ++c) {
        os << "  K" << c << ":";
        for (auto p : sk.poset.classes[c]) {
          os << ' ' << to_string(sk.images.subsets[p]);
          if (sk.images.adjoined(p)) {
            os << '+';
          }
        }
        os << '\n';
      }
      os << "skeleton covers:";
      for (auto const& [lo, hi] : sk.poset.covers) {
        os << " K" << lo << "<K" << hi;
      }
      os << '\n';
      os << "skeleton height: " << height(sk.poset) << '\n';
      os << "skeleton is a lattice: " << yn(is_lattice(sk.poset)) << '\n';
    }
    if (b.diagram) {
      os << "im respects <=_L / <=_J: " << yn(b.im_check->l_to_inclusion) << " / "
         << yn(b.im_check->j_to_subduction) << ", onto I(X): " << yn(b.im_check->surjective)
         << '\n';
      os << "im_bar_S fibers (J-classes per skeleton class):";
      for (std::size_t c = 0; c < b.im_bar_s->target.size(); ++c) {
        os << " K" << c << "={";
        auto fiber = b.im_bar_s->fiber(c);
        for (std::size_t k = 0; k < fiber.size(); ++k) {
          os << (k ? "," : "") << 'J' << fiber[k];
        }
        os << '}';
      }
      os << '\n';
      os << b.diagram->to_text();
    }
    if (b.regrep) {
      os << "right regular representation: " << b.regrep->rep.degree() << " states, "
         << b.regrep->rep.size() << " elements\n";
      for (auto const& g : b.regrep->rep.generators()) {
        os << "  " << to_string(g) << '\n';
      }
      os << "J-order isomorphic to skeleton of representation: "
         << yn(b.corollary->j_witness_is_isomorphism && b.corollary->j_search) << '\n';
      os << "L-order isomorphic to inclusion on image sets: "
         << yn(b.corollary->l_witness_is_isomorphism && b.corollary->l_search) << '\n';
    }
    if (b.tasks.contains(Task::functorial)) {
      os << "admissible partitions: " << b.functorial.size() << '\n';
      for (auto const& p : b.functorial) {
        os << "  {";
        auto blocks = p.partition.blocks();
        for (std::size_t k = 0; k < blocks.size(); ++k) {
          os << (k ? "," : "") << '{';
          for (std::size_t i = 0; i < blocks[k].size(); ++i) {
            os << (i ? "," : "") << blocks[k][i] + 1;
          }
          os << '}';
        }
        os << "} -> " << p.target_states << " states, " << p.target_elements
           << " elements: " << (p.passed() ? "ok" : "FAILED") << '\n';
        for (auto const& f : p.report.failures) {
          os << "    " << f << '\n';
        }
        if (!p.validation) {
          os << "    " << p.validation.reason << '\n';
        }
      }
    }
    os << "verified: " << yn(b.verified()) << '\n';
    return os.str();
  }

}  // namespace tsemi
