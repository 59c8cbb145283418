#include "tsemi/order.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tsemi/error.hpp"

namespace tsemi {

  Preorder::Preorder(std::size_t n) : up_(n, IndexSet(n)) {
    for (std::size_t a = 0; a < n; ++a) {
      up_[a].insert(a);
    }
  }

  Preorder Preorder::from_rows(std::vector<IndexSet> up_sets) {
    for (auto const& row : up_sets) {
      if (row.universe() != up_sets.size()) {
        throw DomainError("preorder row has universe " + std::to_string(row.universe())
                          + ", expected " + std::to_string(up_sets.size()));
      }
    }
    Preorder p;
    p.up_ = std::move(up_sets);
    return p;
  }

  bool Preorder::is_reflexive() const {
    for (std::size_t a = 0; a < size(); ++a) {
      if (!leq(a, a)) {
        return false;
      }
    }
    return true;
  }

  bool Preorder::is_transitive() const {
    for (std::size_t a = 0; a < size(); ++a) {
      bool ok = true;
      up_[a].for_each([&](std::size_t b) { ok = ok && up_[b].is_subset_of(up_[a]); });
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  Preorder Preorder::closure() const {
    Preorder p = *this;
    std::size_t const n = size();
    for (std::size_t a = 0; a < n; ++a) {
      p.up_[a].insert(a);
    }
    // Warshall on bit rows.
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t a = 0; a < n; ++a) {
        if (p.up_[a].contains(k)) {
          p.up_[a] |= p.up_[k];
        }
      }
    }
    return p;
  }

  namespace {

    // Kosaraju over the relation digraph a -> b iff a <= b.
    std::vector<std::size_t> strongly_connected_components(Preorder const& p,
                                                           std::size_t& count) {
      std::size_t const n = p.size();
      std::vector<IndexSet> down(n, IndexSet(n));
      for (std::size_t a = 0; a < n; ++a) {
        p.up_set(a).for_each([&](std::size_t b) { down[b].insert(a); });
      }

      std::vector<bool>        visited(n, false);
      std::vector<std::size_t> finish;
      finish.reserve(n);
      for (std::size_t root = 0; root < n; ++root) {
        if (visited[root]) {
          continue;
        }
        std::vector<std::pair<std::size_t, std::vector<std::size_t>>> stack;
        visited[root] = true;
        stack.emplace_back(root, p.up_set(root).members());
        std::reverse(stack.back().second.begin(), stack.back().second.end());
        while (!stack.empty()) {
          auto& [v, todo] = stack.back();
          if (todo.empty()) {
            finish.push_back(v);
            stack.pop_back();
            continue;
          }
          std::size_t w = todo.back();
          todo.pop_back();
          if (!visited[w]) {
            visited[w] = true;
            auto next  = p.up_set(w).members();
            std::reverse(next.begin(), next.end());
            stack.emplace_back(w, std::move(next));
          }
        }
      }

      std::vector<std::size_t> comp(n, n);
      count = 0;
      for (std::size_t k = n; k-- > 0;) {
        std::size_t root = finish[k];
        if (comp[root] != n) {
          continue;
        }
        std::vector<std::size_t> stack{root};
        comp[root] = count;
        while (!stack.empty()) {
          std::size_t v = stack.back();
          stack.pop_back();
          down[v].for_each([&](std::size_t w) {
            if (comp[w] == n) {
              comp[w] = count;
              stack.push_back(w);
            }
          });
        }
        ++count;
      }
      return comp;
    }

  }  // namespace

  ClassPoset quotient(Preorder const& p) {
    if (!p.is_reflexive()) {
      throw MalformedPreorderError("quotient: relation is not reflexive");
    }
    if (!p.is_transitive()) {
      throw MalformedPreorderError("quotient: relation is not transitive");
    }
    std::size_t count = 0;
    auto        comp  = strongly_connected_components(p, count);

    // Renumber components by least member.
    std::vector<std::size_t> rename(count, count);
    std::size_t              next = 0;
    for (std::size_t a = 0; a < p.size(); ++a) {
      if (rename[comp[a]] == count) {
        rename[comp[a]] = next++;
      }
    }

    ClassPoset q;
    q.classes.resize(count);
    q.class_of.resize(p.size());
    for (std::size_t a = 0; a < p.size(); ++a) {
      q.class_of[a] = rename[comp[a]];
      q.classes[q.class_of[a]].push_back(a);
    }
    q.up.assign(count, IndexSet(count));
    for (std::size_t c = 0; c < count; ++c) {
      p.up_set(q.classes[c].front()).for_each(
          [&](std::size_t b) { q.up[c].insert(q.class_of[b]); });
    }
    q.covers = hasse(q);
    return q;
  }

  std::vector<std::pair<std::size_t, std::size_t>> hasse(ClassPoset const& p) {
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t c = 0; c < p.size(); ++c) {
      IndexSet strict = p.up[c];
      strict.erase(c);
      IndexSet above_strict(p.size());
      strict.for_each([&](std::size_t d) {
        IndexSet s = p.up[d];
        s.erase(d);
        above_strict |= s;
      });
      strict.for_each([&](std::size_t d) {
        if (!above_strict.contains(d)) {
          covers.emplace_back(c, d);
        }
      });
    }
    return covers;
  }

  MorphismCheck check_preorder_morphism(std::span<std::size_t const> f,
                                        Preorder const&              src,
                                        Preorder const&              dst) {
    if (f.size() != src.size()) {
      throw DomainError("preorder map defined on " + std::to_string(f.size())
                        + " items, source has " + std::to_string(src.size()));
    }
    for (auto y : f) {
      if (y >= dst.size()) {
        throw DomainError("preorder map value " + std::to_string(y)
                          + " outside target of size " + std::to_string(dst.size()));
      }
    }
    for (std::size_t a = 0; a < src.size(); ++a) {
      MorphismCheck result;
      src.up_set(a).for_each([&](std::size_t b) {
        if (result.holds && !dst.leq(f[a], f[b])) {
          result = {false, a, b};
        }
      });
      if (!result) {
        return result;
      }
    }
    return {};
  }

  bool InducedMap::is_surjective() const {
    std::vector<bool> hit(target.size(), false);
    for (auto d : class_map) {
      hit[d] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  std::vector<std::size_t> InducedMap::fiber(std::size_t d) const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < class_map.size(); ++c) {
      if (class_map[c] == d) {
        out.push_back(c);
      }
    }
    return out;
  }

  std::vector<std::size_t> InducedMap::item_preimage(std::size_t d) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < item_map.size(); ++a) {
      if (target.class_of[item_map[a]] == d) {
        out.push_back(a);
      }
    }
    return out;
  }

  InducedMap induce(std::span<std::size_t const> f,
                    Preorder const&              src,
                    Preorder const&              dst) {
    if (auto check = check_preorder_morphism(f, src, dst); !check) {
      throw PreconditionError("induce: map does not respect the preorder at items "
                              + std::to_string(check.a) + " <= "
                              + std::to_string(check.b));
    }
    InducedMap m;
    m.source = quotient(src);
    m.target = quotient(dst);
    m.item_map.assign(f.begin(), f.end());
    m.class_map.resize(m.source.size());
    for (std::size_t c = 0; c < m.source.size(); ++c) {
      auto const& members = m.source.classes[c];
      m.class_map[c]      = m.target.class_of[f[members.front()]];
      for (auto a : members) {
        if (m.target.class_of[f[a]] != m.class_map[c]) {
          throw ConsistencyError("induce: class " + std::to_string(c)
                                 + " is split by the map");
        }
      }
    }
    for (std::size_t c = 0; c < m.source.size(); ++c) {
      m.source.up[c].for_each([&](std::size_t d) {
        if (!m.target.leq(m.class_map[c], m.class_map[d])) {
          throw ConsistencyError("induce: induced map is not order preserving");
        }
      });
    }
    // Square: class_map . class_of_src == class_of_dst . f
    for (std::size_t a = 0; a < f.size(); ++a) {
      if (m.class_map[m.source.class_of[a]] != m.target.class_of[f[a]]) {
        throw ConsistencyError("induce: square does not commute at item "
                               + std::to_string(a));
      }
    }
    // Each item preimage is a union of whole source classes.
    for (std::size_t d = 0; d < m.target.size(); ++d) {
      IndexSet pre(f.size());
      for (auto a : m.item_preimage(d)) {
        pre.insert(a);
      }
      for (auto a : pre.members()) {
        for (auto b : m.source.classes[m.source.class_of[a]]) {
          if (!pre.contains(b)) {
            throw ConsistencyError("induce: preimage of class " + std::to_string(d)
                                   + " is not a union of source classes");
          }
        }
      }
    }
    return m;
  }

  bool is_order_isomorphism(std::span<std::size_t const> map,
                            ClassPoset const&            p,
                            ClassPoset const&            q) {
    if (map.size() != p.size() || p.size() != q.size()) {
      return false;
    }
    std::vector<bool> used(q.size(), false);
    for (auto d : map) {
      if (d >= q.size() || used[d]) {
        return false;
      }
      used[d] = true;
    }
    for (std::size_t c = 0; c < p.size(); ++c) {
      for (std::size_t d = 0; d < p.size(); ++d) {
        if (p.leq(c, d) != q.leq(map[c], map[d])) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::size_t> rank_levels(ClassPoset const& p) {
    // Process classes by number of elements strictly below: a linear extension.
    std::size_t const        n = p.size();
    std::vector<std::size_t> below(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
      p.up[c].for_each([&](std::size_t d) {
        if (d != c) {
          ++below[d];
        }
      });
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](auto x, auto y) { return below[x] < below[y]; });
    std::vector<std::size_t> level(n, 0);
    for (auto c : order) {
      for (auto const& [lo, hi] : p.covers) {
        if (hi == c) {
          level[c] = std::max(level[c], level[lo] + 1);
        }
      }
    }
    return level;
  }

  std::size_t height(ClassPoset const& p) {
    if (p.size() == 0) {
      return 0;
    }
    auto level = rank_levels(p);
    return *std::max_element(level.begin(), level.end()) + 1;
  }

  namespace {

    struct Signature {
      std::size_t level;
      std::size_t up_degree;
      std::size_t down_degree;
      bool        operator==(Signature const&) const = default;
    };

    std::vector<Signature> signatures(ClassPoset const& p) {
      auto                   level = rank_levels(p);
      std::vector<Signature> sig(p.size());
      for (std::size_t c = 0; c < p.size(); ++c) {
        sig[c].level = level[c];
      }
      for (auto const& [lo, hi] : p.covers) {
        ++sig[lo].up_degree;
        ++sig[hi].down_degree;
      }
      return sig;
    }

  }  // namespace

  std::optional<std::vector<std::size_t>> poset_isomorphic(ClassPoset const& p,
                                                           ClassPoset const& q) {
    std::size_t const n = p.size();
    if (n != q.size() || p.covers.size() != q.covers.size()) {
      return std::nullopt;
    }
    auto sp = signatures(p);
    auto sq = signatures(q);

    // Assign p's classes bottom-up so that comparabilities constrain early.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](auto x, auto y) { return sp[x].level < sp[y].level; });

    std::vector<std::size_t> map(n, n);
    std::vector<bool>        used(n, false);

    auto consistent = [&](std::size_t k, std::size_t d) {
      std::size_t c = order[k];
      for (std::size_t j = 0; j < k; ++j) {
        std::size_t e = order[j];
        if (p.leq(c, e) != q.leq(d, map[e]) || p.leq(e, c) != q.leq(map[e], d)) {
          return false;
        }
      }
      return true;
    };

    // Iterative backtracking; next[k] is the next candidate to try at depth k.
    std::vector<std::size_t> next(n + 1, 0);
    std::size_t              k = 0;
    while (true) {
      if (k == n) {
        return map;
      }
      std::size_t c     = order[k];
      bool        found = false;
      for (std::size_t d = next[k]; d < n; ++d) {
        if (!used[d] && sp[c] == sq[d] && consistent(k, d)) {
          map[c]  = d;
          used[d] = true;
          next[k] = d + 1;
          found   = true;
          break;
        }
      }
      if (found) {
        ++k;
        next[k] = 0;
        continue;
      }
      if (k == 0) {
        return std::nullopt;
      }
      --k;
      used[map[order[k]]] = false;
      map[order[k]]       = n;
    }
  }

  namespace {

    std::vector<IndexSet> down_sets(ClassPoset const& p) {
      std::vector<IndexSet> down(p.size(), IndexSet(p.size()));
      for (std::size_t c = 0; c < p.size(); ++c) {
        p.up[c].for_each([&](std::size_t d) { down[d].insert(c); });
      }
      return down;
    }

    std::optional<std::size_t> least_of(IndexSet const& bounds,
                                        std::vector<IndexSet> const& up) {
      std::optional<std::size_t> result;
      bounds.for_each([&](std::size_t u) {
        if (!result && bounds.is_subset_of(up[u])) {
          result = u;
        }
      });
      return result;
    }

  }  // namespace

  std::optional<std::size_t> join(ClassPoset const& p, std::size_t c, std::size_t d) {
    return least_of(p.up[c] & p.up[d], p.up);
  }

  std::optional<std::size_t> meet(ClassPoset const& p, std::size_t c, std::size_t d) {
    auto down = down_sets(p);
    return least_of(down[c] & down[d], down);
  }

  bool is_lattice(ClassPoset const& p) {
    if (p.size() == 0) {
      return false;
    }
    auto down = down_sets(p);
    for (std::size_t c = 0; c < p.size(); ++c) {
      for (std::size_t d = c + 1; d < p.size(); ++d) {
        if (!least_of(p.up[c] & p.up[d], p.up) || !least_of(down[c] & down[d], down)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace tsemi
