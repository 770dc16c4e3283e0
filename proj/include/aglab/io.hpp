#pragma once

// Text formats. A table is its order n followed by n*n one-based entries
// in row-major order, whitespace separated; '#' starts a comment running to
// the end of the line. A stream holds several tables separated by lines
// consisting of "---".

#include <charconv>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aglab/table.hpp"

namespace aglab {

  class parse_error : public std::runtime_error {
   public:
    enum class kind {
      empty_input,
      malformed_token,
      order_out_of_range,
      entry_out_of_range,
      wrong_entry_count,
    };

    parse_error(kind k, std::size_t line, std::size_t column,
                std::string const& detail)
        : std::runtime_error("line " + std::to_string(line) + ", column "
                             + std::to_string(column) + ": " + detail),
          kind_(k),
          line_(line),
          column_(column) {}

    [[nodiscard]] kind        error_kind() const noexcept { return kind_; }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

   private:
    kind        kind_;
    std::size_t line_;
    std::size_t column_;
  };

  namespace detail {

    struct token {
      std::string_view text;
      std::size_t      line;
      std::size_t      column;
    };

    // Splits on whitespace, dropping comments. Positions are one-based and
    // offset by first_line.
    inline std::vector<token> tokenize(std::string_view text,
                                       std::size_t      first_line) {
      std::vector<token> out;
      std::size_t        line = first_line;
      std::size_t        col  = 1;
      std::size_t        i    = 0;
      while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
          ++line;
          col = 1;
          ++i;
        } else if (c == '#') {
          while (i < text.size() && text[i] != '\n') {
            ++i;
          }
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f'
                   || c == '\v') {
          ++col;
          ++i;
        } else {
          std::size_t start = i;
          std::size_t scol  = col;
          while (i < text.size() && text[i] != '\n' && text[i] != '#'
                 && text[i] != ' ' && text[i] != '\t' && text[i] != '\r'
                 && text[i] != '\f' && text[i] != '\v') {
            ++i;
            ++col;
          }
          out.push_back({text.substr(start, i - start), line, scol});
        }
      }
      return out;
    }

    inline long to_number(token const& tok) {
      long value = 0;
      auto const* first = tok.text.data();
      auto const* last  = first + tok.text.size();
      auto [ptr, ec]    = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last) {
        throw parse_error(parse_error::kind::malformed_token, tok.line,
                          tok.column,
                          "malformed token '" + std::string(tok.text) + "'");
      }
      return value;
    }

    inline std::pair<std::size_t, std::size_t>
    end_position(std::string_view text, std::size_t first_line) {
      std::size_t line = first_line;
      std::size_t col  = 1;
      for (char c : text) {
        if (c == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      return {line, col};
    }

    inline cayley_table parse_table_at(std::string_view text,
                                       std::size_t      first_line) {
      auto tokens = tokenize(text, first_line);
      if (tokens.empty()) {
        auto [l, c] = end_position(text, first_line);
        throw parse_error(parse_error::kind::empty_input, l, c,
                          "no table found");
      }
      long n = to_number(tokens.front());
      if (n < 1 || n > static_cast<long>(max_order)) {
        throw parse_error(parse_error::kind::order_out_of_range,
                          tokens.front().line, tokens.front().column,
                          "order " + std::to_string(n)
                              + " out of range [1, 8]");
      }
      std::size_t const    cells = static_cast<std::size_t>(n * n);
      std::vector<element> entries;
      entries.reserve(cells);
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto const& tok = tokens[i];
        if (entries.size() == cells) {
          throw parse_error(parse_error::kind::wrong_entry_count, tok.line,
                            tok.column,
                            "expected " + std::to_string(cells)
                                + " entries, found extra token '"
                                + std::string(tok.text) + "'");
        }
        long v = to_number(tok);
        if (v < 1 || v > n) {
          throw parse_error(parse_error::kind::entry_out_of_range, tok.line,
                            tok.column,
                            "entry " + std::to_string(v) + " out of range [1, "
                                + std::to_string(n) + "]");
        }
        entries.push_back(static_cast<element>(v - 1));
      }
      if (entries.size() != cells) {
        auto [l, c] = end_position(text, first_line);
        throw parse_error(parse_error::kind::wrong_entry_count, l, c,
                          "expected " + std::to_string(cells)
                              + " entries, found "
                              + std::to_string(entries.size()));
      }
      return cayley_table(static_cast<std::size_t>(n), entries);
    }

    inline bool is_separator(std::string_view line) {
      while (!line.empty()
             && (line.back() == '\r' || line.back() == ' '
                 || line.back() == '\t')) {
        line.remove_suffix(1);
      }
      return line == "---";
    }

    inline bool only_blank_or_comments(std::string_view text) {
      return tokenize(text, 1).empty();
    }

  }  // namespace detail

  /// Parses one table; entries are converted to zero-based indices.
  inline cayley_table parse_table(std::string_view text) {
    return detail::parse_table_at(text, 1);
  }

  /// Parses a multi-table stream. Chunks holding only blanks or comments
  /// are skipped.
  inline std::vector<cayley_table> parse_stream(std::string_view text) {
    std::vector<cayley_table> out;
    std::size_t               chunk_start = 0;
    std::size_t               chunk_line  = 1;
    std::size_t               line_no     = 1;
    std::size_t               pos         = 0;
    auto flush = [&](std::size_t end) {
      auto chunk = text.substr(chunk_start, end - chunk_start);
      if (!detail::only_blank_or_comments(chunk)) {
        out.push_back(detail::parse_table_at(chunk, chunk_line));
      }
    };
    while (pos <= text.size()) {
      std::size_t eol  = text.find('\n', pos);
      std::size_t stop = eol == std::string_view::npos ? text.size() : eol;
      if (detail::is_separator(text.substr(pos, stop - pos))) {
        flush(pos);
        chunk_start = stop + 1;
        chunk_line  = line_no + 1;
      }
      if (eol == std::string_view::npos) {
        break;
      }
      pos = eol + 1;
      ++line_no;
    }
    if (chunk_start <= text.size()) {
      flush(text.size());
    }
    if (out.empty()) {
      throw parse_error(parse_error::kind::empty_input, 1, 1,
                        "no table found");
    }
    return out;
  }

  /// One-based text; byte-compatible with parse_table.
  inline std::string format_table(cayley_table const& t) {
    std::ostringstream os;
    std::size_t        n = t.order();
    os << n << '\n';
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        os << (b == 0 ? "" : " ") << t(a, b) + 1;
      }
      os << '\n';
    }
    return os.str();
  }

  inline std::string format_stream(std::vector<cayley_table> const& tables) {
    std::string out;
    for (std::size_t i = 0; i < tables.size(); ++i) {
      if (i != 0) {
        out += "---\n";
      }
      out += format_table(tables[i]);
    }
    return out;
  }

  /// "{1,2,4}" style, one-based.
  inline std::string format_subset(element_subset const& s) {
    std::string out = "{";
    bool        first = true;
    for (element a : s.members()) {
      out += (first ? "" : ",") + std::to_string(a + 1);
      first = false;
    }
    return out + "}";
  }

  /// Parses "1,2,3" (one-based, whitespace tolerated) into a subset.
  inline element_subset parse_subset(std::string_view text, std::size_t n) {
    element_subset s(n);
    std::size_t    pos = 0;
    while (pos < text.size()) {
      std::size_t comma = text.find(',', pos);
      std::size_t stop  = comma == std::string_view::npos ? text.size() : comma;
      auto        item  = text.substr(pos, stop - pos);
      while (!item.empty() && item.front() == ' ') {
        item.remove_prefix(1);
      }
      while (!item.empty() && item.back() == ' ') {
        item.remove_suffix(1);
      }
      if (!item.empty()) {
        long v = detail::to_number({item, 1, pos + 1});
        if (v < 1 || v > static_cast<long>(n)) {
          throw parse_error(parse_error::kind::entry_out_of_range, 1, pos + 1,
                            "element " + std::to_string(v)
                                + " out of range [1, " + std::to_string(n)
                                + "]");
        }
        s.insert(static_cast<element>(v - 1));
      }
      pos = stop + 1;
    }
    return s;
  }

}  // namespace aglab
