#include "tsemi/transformation.hpp"

#include <algorithm>

#include "tsemi/error.hpp"

namespace tsemi {

  Transformation::Transformation(std::vector<state_type> images)
      : images_(std::move(images)) {
    for (auto y : images_) {
      if (y >= images_.size()) {
        throw DomainError("transformation image " + std::to_string(y + 1)
                          + " outside 1.." + std::to_string(images_.size()));
      }
    }
  }

  Transformation Transformation::one_based(std::span<int const> images) {
    std::vector<state_type> zero;
    zero.reserve(images.size());
    for (int y : images) {
      if (y < 1 || static_cast<std::size_t>(y) > images.size()) {
        throw DomainError("transformation image " + std::to_string(y)
                          + " outside 1.." + std::to_string(images.size()));
      }
      zero.push_back(static_cast<state_type>(y - 1));
    }
    return Transformation(std::move(zero));
  }

  Transformation Transformation::identity(std::size_t n) {
    std::vector<state_type> images(n);
    for (std::size_t x = 0; x < n; ++x) {
      images[x] = static_cast<state_type>(x);
    }
    return Transformation(std::move(images));
  }

  std::vector<int> Transformation::one_based_images() const {
    std::vector<int> out;
    out.reserve(images_.size());
    for (auto y : images_) {
      out.push_back(static_cast<int>(y) + 1);
    }
    return out;
  }

  bool Transformation::is_identity() const noexcept {
    for (std::size_t x = 0; x < images_.size(); ++x) {
      if (images_[x] != x) {
        return false;
      }
    }
    return true;
  }

  std::size_t Transformation::hash() const noexcept {
    std::size_t h = images_.size();
    for (auto y : images_) {
      h = h * 1000003U ^ (y + 0x9e3779b9U + (h << 6) + (h >> 2));
    }
    return h;
  }

  Transformation compose(Transformation const& s, Transformation const& t) {
    if (s.degree() != t.degree()) {
      throw DomainError("compose: degrees " + std::to_string(s.degree()) + " and "
                        + std::to_string(t.degree()) + " differ");
    }
    std::vector<state_type> out(s.degree());
    for (std::size_t x = 0; x < s.degree(); ++x) {
      out[x] = t[s[x]];
    }
    return Transformation(std::move(out));
  }

  StateSubset apply_subset(StateSubset const& p, Transformation const& s) {
    StateSubset out(s.degree());
    p.for_each([&](std::size_t x) { out.insert(s[x]); });
    return out;
  }

  StateSubset image(Transformation const& s) {
    StateSubset out(s.degree());
    for (auto y : s.images()) {
      out.insert(y);
    }
    return out;
  }

  std::string to_string(Transformation const& s) {
    std::string out = "[";
    for (std::size_t x = 0; x < s.degree(); ++x) {
      if (x != 0) {
        out += ',';
      }
      out += std::to_string(s[x] + 1);
    }
    return out + "]";
  }

  std::string to_string(StateSubset const& p) {
    std::string out = "{";
    bool        first = true;
    p.for_each([&](std::size_t x) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += std::to_string(x + 1);
    });
    return out + "}";
  }

}  // namespace tsemi
