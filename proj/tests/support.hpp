#ifndef TSEMI_TESTS_SUPPORT_HPP
#define TSEMI_TESTS_SUPPORT_HPP

// Fixtures and brute-force oracles shared by the test binaries. The oracles
// work on plain vectors and std::set and never call into the library, so they
// stay independent of the code paths they check.

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <vector>

#include "tsemi/semigroup.hpp"
#include "tsemi/transformation.hpp"

namespace tsemi::test {

  using Map = std::vector<int>;  // 0-based image list

  inline Transformation T(std::initializer_list<int> one_based) {
    return Transformation::one_based(one_based);
  }

  inline TransformationSemigroup semigroup(std::size_t n, std::vector<Transformation> gens) {
    return enumerate(n, std::move(gens));
  }

  inline TransformationSemigroup monoid(std::size_t n, std::vector<Transformation> gens) {
    return adjoin_identity(enumerate(n, std::move(gens)));
  }

  // (X, M) of the collapsing-chain example: t1, t2 on 3 points.
  inline TransformationSemigroup example1() {
    return monoid(3, {T({1, 3, 3}), T({3, 1, 3})});
  }

  // The 5-element collapse-motif monoid on 3 points.
  inline TransformationSemigroup example2() {
    return monoid(3, {T({1, 1, 3}), T({3, 2, 3}), T({3, 1, 3}), T({3, 3, 3})});
  }

  inline Transformation example3_a() {
    return T({2, 1, 1, 1, 4});
  }
  inline Transformation example3_b() {
    return T({1, 2, 2, 3, 4});
  }
  inline TransformationSemigroup example3() {
    return monoid(5, {example3_a(), example3_b()});
  }

  inline std::vector<Transformation> example4_generators() {
    return {T({2, 2, 1, 2, 4}), T({3, 5, 2, 3, 2}), T({3, 5, 4, 5, 4})};
  }
  inline TransformationSemigroup example4() {
    return monoid(5, example4_generators());
  }

  inline TransformationSemigroup trivial_monoid(std::size_t n = 1) {
    return monoid(n, {Transformation::identity(n)});
  }

  inline TransformationSemigroup full_transformation_monoid(std::size_t n) {
    std::vector<Transformation> gens;
    std::vector<state_type>     images(n, 0);
    while (true) {
      gens.emplace_back(images);
      std::size_t k = 0;
      while (k < n && ++images[k] == n) {
        images[k++] = 0;
      }
      if (k == n) {
        break;
      }
    }
    return enumerate(n, std::move(gens));
  }

  inline std::vector<TransformationSemigroup> fixtures() {
    return {example1(), example2(), example3(), example4(), trivial_monoid(1),
            trivial_monoid(2)};
  }

  // Random generator sets: n in [1, max_n], 1..max_gens generators, kept only
  // if |S^1| <= max_monoid. Deterministic for a given seed.
  inline std::vector<TransformationSemigroup> random_semigroups(std::size_t count,
                                                                std::size_t max_monoid,
                                                                unsigned    seed,
                                                                std::size_t max_n    = 4,
                                                                std::size_t max_gens = 3) {
    std::mt19937                          rng(seed);
    std::vector<TransformationSemigroup>  out;
    while (out.size() < count) {
      std::size_t n     = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
      std::size_t ngens = std::uniform_int_distribution<std::size_t>(1, max_gens)(rng);
      std::uniform_int_distribution<state_type> state(0, static_cast<state_type>(n - 1));
      std::vector<Transformation>               gens;
      for (std::size_t g = 0; g < ngens; ++g) {
        std::vector<state_type> images(n);
        for (auto& y : images) {
          y = state(rng);
        }
        gens.emplace_back(std::move(images));
      }
      auto s = enumerate(n, std::move(gens));
      if (adjoin_identity(s).size() <= max_monoid) {
        out.push_back(std::move(s));
      }
    }
    return out;
  }

  // ---- oracles -------------------------------------------------------------

  inline Map to_map(Transformation const& t) {
    return Map(t.images().begin(), t.images().end());
  }

  inline Map then(Map const& s, Map const& t) {
    Map u(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
      u[x] = t[s[x]];
    }
    return u;
  }

  // Closure under pairwise products, iterated to a fixpoint.
  inline std::set<Map> brute_closure(std::vector<Map> const& gens) {
    std::set<Map> s(gens.begin(), gens.end());
    while (true) {
      std::set<Map> next = s;
      for (auto const& a : s) {
        for (auto const& b : s) {
          next.insert(then(a, b));
        }
      }
      if (next.size() == s.size()) {
        return s;
      }
      s = std::move(next);
    }
  }

  inline std::vector<Map> brute_monoid(TransformationSemigroup const& s) {
    std::vector<Map> gens;
    for (auto const& g : s.generators()) {
      gens.push_back(to_map(g));
    }
    auto  closed = brute_closure(gens);
    Map   id(s.degree());
    for (std::size_t x = 0; x < id.size(); ++x) {
      id[x] = static_cast<int>(x);
    }
    closed.insert(id);
    return {closed.begin(), closed.end()};
  }

  enum class Ideal { left, right, two_sided };

  inline std::set<Map> brute_ideal(std::vector<Map> const& m, Map const& t, Ideal kind) {
    std::set<Map> out;
    for (auto const& u : m) {
      switch (kind) {
        case Ideal::left:
          out.insert(then(u, t));
          break;
        case Ideal::right:
          out.insert(then(t, u));
          break;
        case Ideal::two_sided:
          for (auto const& v : m) {
            out.insert(then(then(u, t), v));
          }
          break;
      }
    }
    return out;
  }

  inline bool includes(std::set<Map> const& big, std::set<Map> const& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  }

  inline std::set<int> brute_image(Map const& s) {
    return {s.begin(), s.end()};
  }

  // P inside Q^s for some s in the monoid.
  inline bool brute_subduces(std::set<int> const& p, std::set<int> const& q,
                             std::vector<Map> const& m) {
    for (auto const& s : m) {
      std::set<int> moved;
      for (int x : q) {
        moved.insert(s[x]);
      }
      if (std::includes(moved.begin(), moved.end(), p.begin(), p.end())) {
        return true;
      }
    }
    return false;
  }

  inline std::set<std::set<int>> brute_images(std::vector<Map> const& m) {
    std::set<std::set<int>> out;
    for (auto const& s : m) {
      out.insert(brute_image(s));
    }
    return out;
  }

  // Number of mutual-subduction classes of the image set.
  inline std::size_t brute_skeleton_size(std::vector<Map> const& m) {
    auto                                  images = brute_images(m);
    std::vector<std::set<int>>            items(images.begin(), images.end());
    std::vector<std::vector<std::set<int>>> classes;
    for (auto const& p : items) {
      bool placed = false;
      for (auto& c : classes) {
        if (brute_subduces(p, c.front(), m) && brute_subduces(c.front(), p, m)) {
          c.push_back(p);
          placed = true;
          break;
        }
      }
      if (!placed) {
        classes.push_back({p});
      }
    }
    return classes.size();
  }

  inline StateSubset subset(std::size_t n, std::initializer_list<std::size_t> one_based) {
    StateSubset p(n);
    for (auto x : one_based) {
      p.insert(x - 1);
    }
    return p;
  }

}  // namespace tsemi::test

#endif  // TSEMI_TESTS_SUPPORT_HPP
