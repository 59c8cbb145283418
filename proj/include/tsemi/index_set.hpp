#ifndef TSEMI_INDEX_SET_HPP
#define TSEMI_INDEX_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace tsemi {

  // A subset of {0, ..., universe-1} stored as a packed bit mask.
  //
  // Word 0 holds indices 0..63, so a universe of at most 64 fits in a single
  // machine word; larger universes widen to more words. Used both for state
  // subsets and for sets of semigroup elements (ideals).
  class IndexSet {
   public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    IndexSet() = default;
    explicit IndexSet(std::size_t universe)
        : universe_(universe), words_((universe + word_bits - 1) / word_bits, 0) {}
    IndexSet(std::size_t universe, std::initializer_list<std::size_t> members)
        : IndexSet(universe) {
      for (auto m : members) {
        insert(m);
      }
    }

    static IndexSet full(std::size_t universe) {
      IndexSet s(universe);
      for (std::size_t i = 0; i < universe; ++i) {
        s.insert(i);
      }
      return s;
    }

    std::size_t universe() const noexcept {
      return universe_;
    }

    bool contains(std::size_t i) const noexcept {
      return i < universe_ && ((words_[i / word_bits] >> (i % word_bits)) & 1U);
    }

    void insert(std::size_t i) {
      words_[i / word_bits] |= word_type{1} << (i % word_bits);
    }

    void erase(std::size_t i) {
      words_[i / word_bits] &= ~(word_type{1} << (i % word_bits));
    }

    std::size_t size() const noexcept {
      std::size_t c = 0;
      for (auto w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
      }
      return c;
    }

    bool empty() const noexcept {
      for (auto w : words_) {
        if (w != 0) {
          return false;
        }
      }
      return true;
    }

    bool is_subset_of(IndexSet const& other) const noexcept {
      for (std::size_t k = 0; k < words_.size(); ++k) {
        word_type o = k < other.words_.size() ? other.words_[k] : 0;
        if ((words_[k] & ~o) != 0) {
          return false;
        }
      }
      return true;
    }

    IndexSet& operator|=(IndexSet const& other) {
      for (std::size_t k = 0; k < words_.size() && k < other.words_.size(); ++k) {
        words_[k] |= other.words_[k];
      }
      return *this;
    }

    IndexSet& operator&=(IndexSet const& other) {
      for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] &= k < other.words_.size() ? other.words_[k] : 0;
      }
      return *this;
    }

    friend IndexSet operator|(IndexSet a, IndexSet const& b) {
      return a |= b;
    }
    friend IndexSet operator&(IndexSet a, IndexSet const& b) {
      return a &= b;
    }

    // Members in increasing order.
    std::vector<std::size_t> members() const {
      std::vector<std::size_t> out;
      for (std::size_t k = 0; k < words_.size(); ++k) {
        word_type w = words_[k];
        while (w != 0) {
          out.push_back(k * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
          w &= w - 1;
        }
      }
      return out;
    }

    template <typename F>
    void for_each(F&& f) const {
      for (std::size_t k = 0; k < words_.size(); ++k) {
        word_type w = words_[k];
        while (w != 0) {
          f(k * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
          w &= w - 1;
        }
      }
    }

    std::vector<word_type> const& words() const noexcept {
      return words_;
    }

    bool operator==(IndexSet const& other) const = default;

    // Masks compared as unsigned integers (most significant word first), so
    // for universes up to 64 this is plain numeric order on the mask.
    std::strong_ordering operator<=>(IndexSet const& other) const noexcept {
      if (auto c = universe_ <=> other.universe_; c != 0) {
        return c;
      }
      for (std::size_t k = words_.size(); k-- > 0;) {
        if (auto c = words_[k] <=> other.words_[k]; c != 0) {
          return c;
        }
      }
      return std::strong_ordering::equal;
    }

    std::size_t hash() const noexcept {
      std::size_t h = universe_;
      for (auto w : words_) {
        h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }

   private:
    std::size_t            universe_ = 0;
    std::vector<word_type> words_;
  };

  // A subset of the state set. Internally 0-based; printed 1-based.
  using StateSubset = IndexSet;

  // "{1,3}" style, 1-based.
  std::string to_string(StateSubset const& p);

}  // namespace tsemi

template <>
struct std::hash<tsemi::IndexSet> {
  std::size_t operator()(tsemi::IndexSet const& s) const noexcept {
    return s.hash();
  }
};

#endif  // TSEMI_INDEX_SET_HPP
