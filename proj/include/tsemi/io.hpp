#ifndef TSEMI_IO_HPP
#define TSEMI_IO_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "semigroup.hpp"

namespace tsemi {

  // A parsed input file.
  //
  //   # comment (also allowed after content)
  //   states: 3
  //   gen: 1 3 3
  //   gen: 3 1 3
  //   monoid: true      # optional, default true: adjoin the identity
  //   extended: false   # optional, default false: skeleton over I+(X)
  //
  // The states line must come first. Images are 1-based.
  struct InputDocument {
    std::size_t                   states = 0;
    std::vector<std::vector<int>> generators;
    bool                          monoid   = true;
    bool                          extended = false;

    bool operator==(InputDocument const&) const = default;
  };

  // Throws ParseError for malformed lines and ValidationError for entries
  // out of range or with the wrong arity. LF and CRLF are both accepted.
  InputDocument parse(std::string_view text);

  // Reads and parses a file. A missing file is reported as a ParseError on
  // line 0.
  InputDocument parse_file(std::filesystem::path const& path);

  std::string serialize(InputDocument const& doc);

  // Enumerates the generated semigroup, adjoining the identity if doc.monoid.
  TransformationSemigroup to_semigroup(InputDocument const& doc,
                                       std::size_t max_elements = default_max_elements);

}  // namespace tsemi

#endif  // TSEMI_IO_HPP
