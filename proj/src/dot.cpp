#include "tsemi/dot.hpp"

#include <sstream>

namespace tsemi {

  std::string_view name(DotKind kind) noexcept {
    switch (kind) {
      case DotKind::jposet:
        return "jposet";
      case DotKind::lposet:
        return "lposet";
      case DotKind::skeleton:
        return "skeleton";
      case DotKind::eggbox:
        return "eggbox";
      case DotKind::collapse:
        return "collapse";
    }
    return "?";
  }

  std::optional<DotKind> parse_dot_kind(std::string_view text) {
    for (auto k : {DotKind::jposet, DotKind::lposet, DotKind::skeleton, DotKind::eggbox,
                   DotKind::collapse}) {
      if (name(k) == text) {
        return k;
      }
    }
    return std::nullopt;
  }

  std::set<Task> required_tasks(DotKind kind) {
    switch (kind) {
      case DotKind::skeleton:
        return {Task::skeleton};
      case DotKind::collapse:
        return {Task::diagram};
      default:
        return {Task::green};
    }
  }

  namespace {

    void header(std::ostringstream& os, std::string_view graph) {
      os << "digraph " << graph << " {\n";
      os << "  rankdir=BT;\n";
      os << "  node [fontname=\"Helvetica\"];\n";
    }

    // Canonical representative, with the class size when it is not 1.
    std::string class_label(ClassPoset const& p, TransformationSemigroup const& m, std::size_t c) {
      std::string out = to_string(m.element(p.representative(c)));
      if (p.classes[c].size() > 1) {
        out += " (" + std::to_string(p.classes[c].size()) + ")";
      }
      return out;
    }

    void class_nodes(std::ostringstream&            os,
                     char                           prefix,
                     ClassPoset const&              p,
                     TransformationSemigroup const& m) {
      for (std::size_t c = 0; c < p.size(); ++c) {
        os << "  " << prefix << c << " [label=\"" << class_label(p, m, c) << "\"];\n";
      }
    }

    void cover_edges(std::ostringstream& os, char prefix, ClassPoset const& p) {
      for (auto const& [lo, hi] : p.covers) {
        os << "  " << prefix << lo << " -> " << prefix << hi << " [arrowhead=none];\n";
      }
    }

    void require(bool ok, DotKind kind, std::string_view task) {
      if (!ok) {
        throw DependencyError("dot " + std::string(name(kind)) + " needs the "
                              + std::string(task) + " analysis");
      }
    }

    std::string subset_list(Skeleton const& sk, std::size_t c) {
      std::string out;
      for (auto p : sk.poset.classes[c]) {
        if (!out.empty()) {
          out += "\\n";
        }
        out += to_string(sk.images.subsets[p]);
        if (sk.images.adjoined(p)) {
          out += "+";
        }
      }
      return out;
    }

  }  // namespace

  std::string emit_dot(AnalysisBundle const& b, DotKind kind) {
    std::ostringstream os;
    switch (kind) {
      case DotKind::jposet:
      case DotKind::lposet: {
        require(b.green.has_value(), kind, "green");
        auto        k = kind == DotKind::jposet ? GreenKind::J : GreenKind::L;
        char        prefix = kind == DotKind::jposet ? 'J' : 'L';
        auto const& p = b.green->classes(k);
        header(os, kind == DotKind::jposet ? "jposet" : "lposet");
        class_nodes(os, prefix, p, b.green->monoid());
        cover_edges(os, prefix, p);
        break;
      }
      case DotKind::skeleton: {
        require(b.skeleton.has_value(), kind, "skeleton");
        auto const& sk = *b.skeleton;
        header(os, "skeleton");
        for (std::size_t c = 0; c < sk.poset.size(); ++c) {
          os << "  K" << c << " [shape=box, label=\"" << subset_list(sk, c) << "\"];\n";
        }
        cover_edges(os, 'K', sk.poset);
        break;
      }
      case DotKind::eggbox: {
        require(b.green.has_value(), kind, "green");
        auto const& m = b.green->monoid();
        auto const& j = b.green->classes(GreenKind::J);
        header(os, "eggbox");
        os << "  node [shape=plaintext];\n";
        for (std::size_t d = 0; d < b.eggboxes.size(); ++d) {
          auto const& box = b.eggboxes[d];
          os << "  J" << j.class_of[box.elements.front()]
             << " [label=<<table border=\"0\" cellborder=\"1\" cellspacing=\"0\">";
          os << "<tr>";
          for (auto const& img : box.column_images) {
            os << "<td border=\"0\">" << to_string(img) << "</td>";
          }
          os << "</tr>";
          for (auto const& row : box.cells) {
            os << "<tr>";
            for (auto const& cell : row) {
              os << "<td" << (cell.idempotent ? " bgcolor=\"grey\"" : "") << ">";
              for (std::size_t i = 0; i < cell.elements.size(); ++i) {
                os << (i ? "<br/>" : "") << to_string(m.element(cell.elements[i]));
              }
              os << "</td>";
            }
            os << "</tr>";
          }
          os << "</table>>];\n";
        }
        cover_edges(os, 'J', j);
        break;
      }
      case DotKind::collapse: {
        require(b.im_bar_s.has_value() && b.green.has_value(), kind, "diagram");
        auto const& j   = b.green->classes(GreenKind::J);
        auto const& map = *b.im_bar_s;
        header(os, "collapse");
        std::vector<bool> clustered(j.size(), false);
        for (std::size_t k = 0; k < map.target.size(); ++k) {
          auto fiber = map.fiber(k);
          if (fiber.size() < 2) {
            continue;
          }
          os << "  subgraph cluster_K" << k << " {\n";
          os << "    style=filled;\n    color=lightgrey;\n";
          for (auto c : fiber) {
            os << "    J" << c << " [label=\"" << class_label(j, b.green->monoid(), c)
               << "\"];\n";
            clustered[c] = true;
          }
          os << "  }\n";
        }
        for (std::size_t c = 0; c < j.size(); ++c) {
          if (!clustered[c]) {
            os << "  J" << c << " [label=\"" << class_label(j, b.green->monoid(), c)
               << "\"];\n";
          }
        }
        cover_edges(os, 'J', j);
        break;
      }
    }
    os << "}\n";
    return os.str();
  }

}  // namespace tsemi
