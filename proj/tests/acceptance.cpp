// Acceptance checks. Prints one PASS/FAIL line per criterion; exit status is
// the number of failures. argv[1] is the path of the tsemi executable.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "support.hpp"
#include "tsemi/green.hpp"
#include "tsemi/maps.hpp"
#include "tsemi/morphisms.hpp"
#include "tsemi/regrep.hpp"
#include "tsemi/skeleton.hpp"

using namespace tsemi;
using namespace tsemi::test;
namespace fs = std::filesystem;

namespace {

  // Collects failure notes for one criterion.
  struct Check {
    std::vector<std::string> notes;

    void expect(bool ok, std::string const& what) {
      if (!ok) {
        notes.push_back(what);
      }
    }
  };

  std::size_t idx(TransformationSemigroup const& m, Transformation const& t) {
    return *m.index_of(t);
  }

  void chain_example(Check& c) {
    GreenStructure g(example1());
    auto const&    m  = g.monoid();
    auto const&    j  = g.classes(GreenKind::J);
    auto           id = idx(m, Transformation::identity(3));
    auto           t1 = idx(m, T({1, 3, 3}));
    auto           t2 = idx(m, T({3, 1, 3}));
    auto           t3 = idx(m, T({3, 3, 3}));
    c.expect(m.size() == 4 && j.size() == 4, "J-poset has 4 classes");
    for (auto const& cls : j.classes) {
      c.expect(cls.size() == 1, "J-classes are singletons");
    }
    auto J = [&](std::size_t e) { return j.class_of[e]; };
    c.expect(j.covers.size() == 3 && j.less(J(t3), J(t2)) && j.less(J(t2), J(t1))
                 && j.less(J(t1), J(id)),
             "t3 < t2 < t1 < 1");

    auto im = image_set(m);
    c.expect(im.subsets
                 == std::vector<StateSubset>{subset(3, {3}), subset(3, {1, 3}), subset(3, {1, 2, 3})},
             "I(X) = {{1,2,3},{1,3},{3}}");
    auto k = skeleton_poset(m);
    c.expect(k.size() == 3 && height(k) == 3, "skeleton is a 3-chain");

    auto bar = im_bar_S(m);
    std::vector<std::vector<std::size_t>> merged;
    for (std::size_t q = 0; q < bar.target.size(); ++q) {
      if (bar.fiber(q).size() > 1) {
        merged.push_back(bar.fiber(q));
      }
    }
    std::vector<std::size_t> expect{std::min(J(t1), J(t2)), std::max(J(t1), J(t2))};
    c.expect(merged.size() == 1 && merged[0] == expect, "im-bar_S merges exactly t1 and t2");
  }

  void regrep_example(Check& c) {
    auto m = example2();
    c.expect(m.size() == 5 && m.degree() == 3, "|M| = 5 on 3 points");
    std::vector<Transformation> listed{Transformation::identity(3), T({1, 1, 3}), T({3, 2, 3}),
                                       T({3, 1, 3}), T({3, 3, 3})};
    std::set<Map> prime{to_map(T({1, 2, 3, 4, 5})), to_map(T({2, 2, 4, 4, 5})),
                        to_map(T({3, 5, 3, 5, 5})), to_map(T({4, 5, 4, 5, 5})),
                        to_map(T({5, 5, 5, 5, 5}))};
    auto r = right_regular(m);
    std::vector<std::size_t> relabel(5);
    for (std::size_t k = 0; k < 5; ++k) {
      auto const& e = r.monoid.element(r.element_at_state[k]);
      relabel[k]    = std::find(listed.begin(), listed.end(), e) - listed.begin();
    }
    std::set<Map> got;
    for (std::size_t a = 0; a < r.monoid.size(); ++a) {
      auto t = r.representation(a);
      Map  u(5);
      for (std::size_t k = 0; k < 5; ++k) {
        u[relabel[k]] = static_cast<int>(relabel[t[k]]);
      }
      got.insert(u);
    }
    c.expect(got == prime, "right_regular(M) matches M' after relabeling");
    GreenStructure g(m);
    c.expect(poset_isomorphic(g.classes(GreenKind::J), skeleton_poset(adjoin_identity(r.rep)))
                 .has_value(),
             "J-poset of M isomorphic to skeleton of M'");
  }

  void new_relation_example(Check& c) {
    auto s    = example3();
    auto j    = green_preorder(s, GreenKind::J);
    auto m    = adjoin_identity(s);
    auto a    = idx(m, example3_a());
    auto b    = idx(m, example3_b());
    c.expect(!j.leq(a, b) && !j.leq(b, a), "a, b J-incomparable");

    auto maps = brute_monoid(s);
    auto ma = to_map(example3_a());
    auto mb = to_map(example3_b());
    bool solved = false;
    for (auto const& u : maps) {
      for (auto const& v : maps) {
        solved = solved || then(then(u, ma), v) == mb || then(then(u, mb), v) == ma;
      }
    }
    c.expect(!solved, "no b = s a t and no a = s b t");
    c.expect(subduction_leq(image(example3_a()), image(example3_b()), s).has_value(),
             "im(a) subduction-below im(b)");
    c.expect(!subduction_leq(image(example3_b()), image(example3_a()), s).has_value(),
             "im(b) not subduction-below im(a)");

    auto bar = im_bar_S(s);
    auto ja  = bar.source.class_of[a];
    auto jb  = bar.source.class_of[b];
    c.expect(bar.target.less(bar.class_map[ja], bar.class_map[jb]),
             "skeleton relates the images of incomparable J-classes");
  }

  std::size_t brute_join_count(ClassPoset const& p, std::size_t x, std::size_t y) {
    std::vector<std::size_t> ub;
    for (std::size_t u = 0; u < p.size(); ++u) {
      if (p.leq(x, u) && p.leq(y, u)) {
        ub.push_back(u);
      }
    }
    std::size_t n = 0;
    for (auto u : ub) {
      n += std::all_of(ub.begin(), ub.end(), [&](std::size_t v) { return p.leq(u, v); }) ? 1 : 0;
    }
    return n;
  }

  void non_lattice_example(Check& c) {
    auto m = example4();
    c.expect(m.size() == 31, "|M| = 31");
    GreenStructure g(m);
    auto k = skeleton(m);
    c.expect(k.images.size() == 16, "|I(X)| = 16");
    auto d = d_partition(g);
    c.expect(d.size() == 13, "13 D-classes");
    c.expect(d == g.classes(GreenKind::J).classes, "D-partition equals J-partition");
    c.expect(k.poset.size() == 9, "9 skeleton classes");
    bool multi = false;
    for (auto const& cls : k.poset.classes) {
      multi = multi || cls.size() > 1;
    }
    c.expect(multi, "some skeleton class holds several subsets");
    bool missing = false;
    for (std::size_t x = 0; x < k.poset.size(); ++x) {
      for (std::size_t y = 0; y < k.poset.size(); ++y) {
        missing = missing || brute_join_count(k.poset, x, y) != 1;
      }
    }
    c.expect(missing && !is_lattice(k.poset), "skeleton is not a lattice");
  }

  void law_suite(Check& c) {
    auto all = fixtures();
    for (auto& s : random_semigroups(200, 60, 2024)) {
      all.push_back(std::move(s));
    }
    for (std::size_t n = 0; n < all.size(); ++n) {
      auto const& s   = all[n];
      auto        tag = "instance " + std::to_string(n) + ": ";
      DiagramData d(s);
      auto const& m   = d.green.monoid();
      auto const& sub = d.skeleton.subduction;
      auto const& ims = d.skeleton.images.subsets;
      c.expect(sub.is_reflexive() && sub.is_transitive(), tag + "subduction is a preorder");
      for (std::size_t p = 0; p < ims.size(); ++p) {
        for (std::size_t q = 0; q < ims.size(); ++q) {
          if (sub.equivalent(p, q)) {
            c.expect(ims[p].size() == ims[q].size(), tag + "mutual subduction keeps size");
          }
        }
      }
      auto const& L = d.green.preorder(GreenKind::L);
      auto const& J = d.green.preorder(GreenKind::J);
      for (std::size_t a = 0; a < m.size(); ++a) {
        for (std::size_t b = 0; b < m.size(); ++b) {
          auto ia = image(m.element(a));
          auto ib = image(m.element(b));
          if (L.leq(a, b)) {
            c.expect(ia.is_subset_of(ib), tag + "a <=_L b gives im(a) in im(b)");
          }
          if (J.leq(a, b)) {
            c.expect(subduction_leq(ia, ib, m).has_value(), tag + "a <=_J b gives subduction");
          }
        }
      }
      auto r = verify_diagram(d);
      for (auto const& arrow : r.arrows) {
        c.expect(arrow.ok(), tag + "arrow " + arrow.name);
      }
      for (auto const& v : r.commutes) {
        c.expect(v.holds, tag + "face " + v.name);
      }
      for (auto const& v : r.preimages) {
        c.expect(v.holds, tag + "preimage " + v.name);
      }
    }
  }

  void corollary_suite(Check& c) {
    auto all = random_semigroups(50, 30, 77);
    for (std::size_t n = 0; n < all.size(); ++n) {
      auto tag = "instance " + std::to_string(n) + ": ";
      auto r   = right_regular(all[n]);
      auto rep = corollary_check(r);
      c.expect(rep.j_search.has_value() && rep.j_witness_is_isomorphism, tag + "J vs skeleton");
      c.expect(rep.l_search.has_value() && rep.l_witness_is_isomorphism, tag + "L vs inclusion");

      GreenStructure g(all[n]);
      auto const&    J   = g.classes(GreenKind::J);
      auto           rm  = adjoin_identity(r.rep);
      auto           bar = im_bar_S(rm);
      for (std::size_t cls = 0; cls < J.size(); ++cls) {
        auto t = *rm.index_of(r.representation(J.representative(cls)));
        c.expect(rep.j_witness[cls] == bar.class_map[bar.source.class_of[t]],
                 tag + "witness equals im-bar_S of the representation");
      }
    }
  }

  void functoriality_suite(Check& c) {
    std::size_t n = 0;
    for (auto const& s : fixtures()) {
      if (s.degree() > 5) {
        continue;
      }
      for (auto const& p : admissible_partitions(s)) {
        auto tag    = "fixture " + std::to_string(n) + ": ";
        auto [t, m] = quotient_ts(s, p);
        c.expect(validate(m).valid, tag + "quotient morphism valid");
        auto r = functoriality_check(m);
        c.expect(r.green_maps, tag + "green maps");
        c.expect(r.image_sets, tag + "image sets");
        c.expect(r.subduction, tag + "subduction");
        c.expect(r.commutes, tag + "commutes");
      }
      ++n;
    }
  }

  std::string slurp(fs::path const& p) {
    std::ifstream      in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  void determinism(Check& c, std::string const& exe) {
    if (exe.empty()) {
      c.expect(false, "no CLI path given");
      return;
    }
    auto tmp = fs::temp_directory_path() / ("tsemi-accept-" + std::to_string(::getpid()));
    fs::create_directories(tmp);
    fs::path fixtures_dir = TSEMI_FIXTURES_DIR;
    for (auto const* f : {"example1.txt", "example2.txt", "example3.txt", "example4.txt",
                          "trivial.txt"}) {
      auto input = (fixtures_dir / f).string();
      std::vector<std::string> cmds{"analyze"};
      for (auto const* k : {"jposet", "lposet", "skeleton", "eggbox", "collapse"}) {
        cmds.push_back(std::string("dot --which ") + k);
      }
      for (std::size_t i = 0; i < cmds.size(); ++i) {
        std::string outs[2];
        for (int run = 0; run < 2; ++run) {
          auto out = tmp / (std::string(f) + "." + std::to_string(i) + "." + std::to_string(run));
          auto cmd = "\"" + exe + "\" " + cmds[i] + " --input \"" + input + "\" --out \""
                     + out.string() + "\" > /dev/null";
          c.expect(std::system(cmd.c_str()) == 0, std::string(f) + ": " + cmds[i] + " exit");
          outs[run] = slurp(out);
        }
        c.expect(!outs[0].empty() && outs[0] == outs[1], std::string(f) + ": " + cmds[i] + " bytes");
      }
    }
    fs::remove_all(tmp);
  }

}  // namespace

int main(int argc, char** argv) {
  std::string exe = argc > 1 ? argv[1] : "";
  std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"1 chain example", chain_example},
      {"2 regular representation example", regrep_example},
      {"3 new subduction relation", new_relation_example},
      {"4 non-lattice skeleton", non_lattice_example},
      {"5 law suite", law_suite},
      {"6 corollary suite", corollary_suite},
      {"7 functoriality suite", functoriality_suite},
      {"8 determinism", [&](Check& c) { determinism(c, exe); }},
  };
  int failures = 0;
  for (auto const& [label, fn] : criteria) {
    Check c;
    try {
      fn(c);
    } catch (std::exception const& e) {
      c.notes.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (c.notes.empty() ? "PASS " : "FAIL ") << label;
    if (!c.notes.empty()) {
      std::cout << " (" << c.notes.size() << " problems, first: " << c.notes.front() << ")";
      ++failures;
    }
    std::cout << '\n';
  }
  return failures;
}
