#ifndef TSEMI_ORDER_HPP
#define TSEMI_ORDER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "index_set.hpp"

namespace tsemi {

  // A reflexive, transitive relation on items {0, ..., size()-1}.
  //
  // Stored densely: row a is the up-set { b : a <= b }. Items are opaque
  // indices; callers keep their own labels (elements, subsets) in the same
  // order.
  class Preorder {
   public:
    Preorder() = default;

    // The discrete order (equality) on n items.
    explicit Preorder(std::size_t n);

    // leq(a, b) = pred(a, b), taken as given. Use closure() to complete it.
    template <typename Pred>
    static Preorder from_relation(std::size_t n, Pred&& pred) {
      Preorder p(n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (pred(a, b)) {
            p.up_[a].insert(b);
          }
        }
      }
      return p;
    }

    static Preorder from_rows(std::vector<IndexSet> up_sets);

    std::size_t size() const noexcept {
      return up_.size();
    }
    bool leq(std::size_t a, std::size_t b) const {
      return up_[a].contains(b);
    }
    bool equivalent(std::size_t a, std::size_t b) const {
      return leq(a, b) && leq(b, a);
    }
    bool less(std::size_t a, std::size_t b) const {
      return leq(a, b) && !leq(b, a);
    }
    void set(std::size_t a, std::size_t b) {
      up_[a].insert(b);
    }
    IndexSet const& up_set(std::size_t a) const {
      return up_[a];
    }
    std::vector<IndexSet> const& rows() const noexcept {
      return up_;
    }

    bool is_reflexive() const;
    bool is_transitive() const;

    // Smallest reflexive, transitive relation containing this one.
    Preorder closure() const;

    bool operator==(Preorder const&) const = default;

   private:
    std::vector<IndexSet> up_;
  };

  // Preorder quotient: equivalence classes under mutual <= with the induced
  // partial order and its Hasse covers.
  //
  // Classes are numbered by their least member, and members are listed in
  // increasing order, so class c is named by classes[c].front().
  struct ClassPoset {
    std::vector<std::vector<std::size_t>>        classes;
    std::vector<std::size_t>                     class_of;
    std::vector<IndexSet>                        up;  // up[c] = { d : c <= d }
    std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)

    std::size_t size() const noexcept {
      return classes.size();
    }
    bool leq(std::size_t c, std::size_t d) const {
      return up[c].contains(d);
    }
    bool less(std::size_t c, std::size_t d) const {
      return c != d && leq(c, d);
    }
    std::size_t representative(std::size_t c) const {
      return classes[c].front();
    }
    // The partial order on classes as a Preorder.
    Preorder order() const {
      return Preorder::from_rows(up);
    }
  };

  // Throws MalformedPreorderError if p is not reflexive and transitive.
  ClassPoset quotient(Preorder const& p);

  // Transitive reduction of the strict order: (c, d) with c < d and nothing
  // strictly between. Sorted.
  std::vector<std::pair<std::size_t, std::size_t>> hasse(ClassPoset const& p);

  struct MorphismCheck {
    bool        holds = true;
    // When !holds: src.leq(a, b) but not dst.leq(f(a), f(b)).
    std::size_t a = 0;
    std::size_t b = 0;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // Does a <= b imply f(a) <= f(b)? Throws DomainError if f is not a total
  // map from src's carrier into dst's.
  MorphismCheck check_preorder_morphism(std::span<std::size_t const> f,
                                        Preorder const&              src,
                                        Preorder const&              dst);

  // The map on quotients induced by a preorder morphism.
  struct InducedMap {
    ClassPoset               source;
    ClassPoset               target;
    std::vector<std::size_t> class_map;  // source class -> target class
    std::vector<std::size_t> item_map;   // the underlying f

    bool is_surjective() const;
    // Source classes mapped to target class d, ascending.
    std::vector<std::size_t> fiber(std::size_t d) const;
    // Source items whose image lies in target class d, ascending.
    std::vector<std::size_t> item_preimage(std::size_t d) const;
  };

  // Builds f-bar on the quotients and checks that it is well defined, order
  // preserving, that class_map(class_of_src(a)) == class_of_dst(f(a)) for
  // every a, and that each target class pulls back to a union of source
  // classes. Throws PreconditionError if f is not a preorder morphism and
  // ConsistencyError if a post-check fails.
  InducedMap induce(std::span<std::size_t const> f,
                    Preorder const&              src,
                    Preorder const&              dst);

  // Is map a bijection with c <= d iff map[c] <= map[d]?
  bool is_order_isomorphism(std::span<std::size_t const> map,
                            ClassPoset const&            p,
                            ClassPoset const&            q);

  // An order isomorphism p -> q, if one exists. Exact backtracking, pruned
  // by rank level and Hasse up/down degree; the first isomorphism found in
  // increasing candidate order is returned.
  std::optional<std::vector<std::size_t>> poset_isomorphic(ClassPoset const& p,
                                                           ClassPoset const& q);

  // Least upper bound of c and d, if unique.
  std::optional<std::size_t> join(ClassPoset const& p, std::size_t c, std::size_t d);
  // Greatest lower bound of c and d, if unique.
  std::optional<std::size_t> meet(ClassPoset const& p, std::size_t c, std::size_t d);

  // Every pair has a join and a meet. The empty poset is not a lattice.
  bool is_lattice(ClassPoset const& p);

  // Number of classes in a longest chain.
  std::size_t height(ClassPoset const& p);

  // Length (in covers) of the longest chain ending at each class.
  std::vector<std::size_t> rank_levels(ClassPoset const& p);

}  // namespace tsemi

#endif  // TSEMI_ORDER_HPP
