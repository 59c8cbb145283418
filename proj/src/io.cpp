#include "tsemi/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "tsemi/error.hpp"

namespace tsemi {

  namespace {

    std::string_view trim(std::string_view s) {
      auto const ws    = " \t\r\n";
      auto       first = s.find_first_not_of(ws);
      if (first == std::string_view::npos) {
        return {};
      }
      auto last = s.find_last_not_of(ws);
      return s.substr(first, last - first + 1);
    }

    bool parse_bool(std::string_view value, std::size_t line) {
      if (value == "true") {
        return true;
      }
      if (value == "false") {
        return false;
      }
      throw ParseError(line, "expected true or false, got '" + std::string(value) + "'");
    }

    long parse_int(std::string_view token, std::size_t line) {
      long value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
      }
      return value;
    }

    std::vector<std::string_view> split_ws(std::string_view s) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
          ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
          ++j;
        }
        if (j > i) {
          out.push_back(s.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    std::vector<std::string_view> split_lines(std::string_view text) {
      std::vector<std::string_view> lines;
      std::size_t                   start = 0;
      while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
      }
      return lines;
    }

  }  // namespace

  InputDocument parse(std::string_view text) {
    InputDocument doc;
    bool          have_states = false;
    std::size_t   line_no     = 0;
    for (auto raw : split_lines(text)) {
      ++line_no;
      auto line = raw;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (line.empty()) {
        continue;
      }
      auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(line_no, "expected 'key: value'");
      }
      auto key   = trim(line.substr(0, colon));
      auto value = trim(line.substr(colon + 1));

      if (!have_states && key != "states") {
        throw ParseError(line_no, "the first line must be 'states: <n>'");
      }
      if (key == "states") {
        if (have_states) {
          throw ParseError(line_no, "duplicate 'states' line");
        }
        long n = parse_int(value, line_no);
        if (n < 1) {
          throw ValidationError(line_no, "state count must be positive");
        }
        doc.states  = static_cast<std::size_t>(n);
        have_states = true;
      } else if (key == "gen") {
        std::vector<int> images;
        for (auto token : split_ws(value)) {
          long y = parse_int(token, line_no);
          if (y < 1 || static_cast<std::size_t>(y) > doc.states) {
            throw ValidationError(line_no, "image " + std::string(token) + " outside 1.."
                                               + std::to_string(doc.states));
          }
          images.push_back(static_cast<int>(y));
        }
        if (images.size() != doc.states) {
          throw ValidationError(line_no, "generator has " + std::to_string(images.size())
                                             + " entries, expected "
                                             + std::to_string(doc.states));
        }
        doc.generators.push_back(std::move(images));
      } else if (key == "monoid") {
        doc.monoid = parse_bool(value, line_no);
      } else if (key == "extended") {
        doc.extended = parse_bool(value, line_no);
      } else {
        throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
      }
    }
    if (!have_states) {
      throw ParseError(line_no, "missing 'states: <n>' line");
    }
    if (doc.generators.empty()) {
      throw ValidationError(line_no, "no generators given");
    }
    return doc;
  }

  InputDocument parse_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError(0, "cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
  }

  std::string serialize(InputDocument const& doc) {
    std::ostringstream os;
    os << "states: " << doc.states << '\n';
    for (auto const& g : doc.generators) {
      os << "gen:";
      for (int y : g) {
        os << ' ' << y;
      }
      os << '\n';
    }
    os << "monoid: " << (doc.monoid ? "true" : "false") << '\n';
    os << "extended: " << (doc.extended ? "true" : "false") << '\n';
    return os.str();
  }

  TransformationSemigroup to_semigroup(InputDocument const& doc, std::size_t max_elements) {
    std::vector<Transformation> gens;
    for (auto const& g : doc.generators) {
      gens.push_back(Transformation::one_based(std::span<int const>(g)));
    }
    auto s = enumerate(doc.states, std::move(gens), max_elements);
    return doc.monoid ? adjoin_identity(s) : s;
  }

}  // namespace tsemi
