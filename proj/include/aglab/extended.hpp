#pragma once

// Extended-table tests for left and right commutativity.
//
// LC: for each fixed x build the table of a o b = (ab)x. The table is LC
// iff every such table is symmetric about its main diagonal.
//
// RC: for each fixed x build a <> b = a(xb) (the x-row of the table used
// as an index row) and a <3 b = a(bx) (the x-column used as an index
// row). The table is RC iff the two coincide for every x.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "aglab/table.hpp"

namespace aglab {

  struct lc_block {
    element      x = 0;
    cayley_table derived;  // derived(a, b) = (ab)x
    bool         symmetric = true;
  };

  struct rc_block {
    element      x = 0;
    cayley_table diamond;  // diamond(a, b) = a(xb)
    cayley_table heart;    // heart(a, b) = a(bx)
    bool         matches = true;
  };

  struct lc_extended_report {
    cayley_table          source;
    std::vector<lc_block> blocks;
    bool                  verdict = true;
  };

  struct rc_extended_report {
    cayley_table          source;
    std::vector<rc_block> blocks;
    bool                  verdict = true;
  };

  inline lc_extended_report lc_extended_test(cayley_table const& t) {
    std::size_t const  n = t.order();
    lc_extended_report r{t, {}, true};
    for (element x = 0; x < n; ++x) {
      lc_block blk{x, cayley_table(n), true};
      for (element a = 0; a < n; ++a) {
        for (element b = 0; b < n; ++b) {
          blk.derived.set(a, b, t(t(a, b), x));
        }
      }
      for (element a = 0; a < n; ++a) {
        for (element b = a + 1; b < n; ++b) {
          if (blk.derived(a, b) != blk.derived(b, a)) {
            blk.symmetric = false;
          }
        }
      }
      r.verdict = r.verdict && blk.symmetric;
      r.blocks.push_back(std::move(blk));
    }
    return r;
  }

  inline rc_extended_report rc_extended_test(cayley_table const& t) {
    std::size_t const  n = t.order();
    rc_extended_report r{t, {}, true};
    for (element x = 0; x < n; ++x) {
      rc_block blk{x, cayley_table(n), cayley_table(n), true};
      for (element a = 0; a < n; ++a) {
        for (element b = 0; b < n; ++b) {
          blk.diamond.set(a, b, t(a, t(x, b)));
          blk.heart.set(a, b, t(a, t(b, x)));
        }
      }
      blk.matches = blk.diamond == blk.heart;
      r.verdict   = r.verdict && blk.matches;
      r.blocks.push_back(std::move(blk));
    }
    return r;
  }

  namespace detail {

    inline std::string grid_row(cayley_table const& t, element a) {
      std::string out;
      for (element b = 0; b < t.order(); ++b) {
        if (b != 0) {
          out += ' ';
        }
        out += std::to_string(t(a, b) + 1);
      }
      return out;
    }

    inline std::string pad(std::string s, std::size_t width) {
      if (s.size() < width) {
        s.append(width - s.size(), ' ');
      }
      return s;
    }

    inline std::string rstrip(std::string s) {
      while (!s.empty() && s.back() == ' ') {
        s.pop_back();
      }
      return s;
    }

    inline std::string header_cells(std::size_t n) {
      std::string out;
      for (std::size_t b = 0; b < n; ++b) {
        out += (b == 0 ? "" : " ") + std::to_string(b + 1);
      }
      return out;
    }

  }  // namespace detail

  /// Source table on the left, one derived block per x on the right, all
  /// labels one-based.
  inline std::string render(lc_extended_report const& r) {
    std::size_t const n     = r.source.order();
    std::size_t const width = std::max<std::size_t>(2 * n - 1, 3);
    std::ostringstream os;
    std::string        line = ". | " + detail::header_cells(n) + " ||";
    for (auto const& blk : r.blocks) {
      line += (blk.x == 0 ? " " : " | ")
              + detail::pad("x=" + std::to_string(blk.x + 1), width);
    }
    os << detail::rstrip(line) << '\n';
    for (element a = 0; a < n; ++a) {
      line = std::to_string(a + 1) + " | " + detail::grid_row(r.source, a)
             + " ||";
      for (auto const& blk : r.blocks) {
        line += (blk.x == 0 ? " " : " | ")
                + detail::pad(detail::grid_row(blk.derived, a), width);
      }
      os << detail::rstrip(line) << '\n';
    }
    return os.str();
  }

  /// Source table on the left; the diamond blocks to its right, each
  /// headed by its index row (the x-row of the source); the heart blocks
  /// below them.
  inline std::string render(rc_extended_report const& r) {
    std::size_t const  n = r.source.order();
    std::ostringstream os;
    std::string        line = ". | " + detail::header_cells(n) + " ||";
    for (auto const& blk : r.blocks) {
      line += (blk.x == 0 ? " " : " | ") + detail::grid_row(r.source, blk.x);
    }
    os << detail::rstrip(line) << '\n';
    for (element a = 0; a < n; ++a) {
      line = std::to_string(a + 1) + " | " + detail::grid_row(r.source, a)
             + " ||";
      for (auto const& blk : r.blocks) {
        line += (blk.x == 0 ? " " : " | ") + detail::grid_row(blk.diamond, a);
      }
      os << detail::rstrip(line) << '\n';
    }
    std::string const indent(4 + 2 * n - 1, ' ');
    for (element a = 0; a < n; ++a) {
      line = indent + " ||";
      for (auto const& blk : r.blocks) {
        line += (blk.x == 0 ? " " : " | ") + detail::grid_row(blk.heart, a);
      }
      os << detail::rstrip(line) << '\n';
    }
    return os.str();
  }

  /// First difference between two rendered grids, compared field by field
  /// ignoring spacing, e.g. "line 4, field 4: rendered 2, printed 1".
  inline std::optional<std::string>
  first_grid_difference(std::string_view rendered, std::string_view printed) {
    auto split_lines = [](std::string_view s) {
      std::vector<std::vector<std::string>> lines;
      std::istringstream                    in{std::string(s)};
      std::string                           line;
      while (std::getline(in, line)) {
        std::istringstream       ls(line);
        std::vector<std::string> fields;
        std::string              f;
        while (ls >> f) {
          if (f != "|" && f != "||") {
            fields.push_back(f);
          }
        }
        lines.push_back(std::move(fields));
      }
      while (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
      }
      return lines;
    };
    auto const x = split_lines(rendered);
    auto const y = split_lines(printed);
    for (std::size_t i = 0; i < std::max(x.size(), y.size()); ++i) {
      if (i >= x.size() || i >= y.size()) {
        return "line " + std::to_string(i + 1) + ": present in only one grid";
      }
      for (std::size_t j = 0; j < std::max(x[i].size(), y[i].size()); ++j) {
        std::string const u = j < x[i].size() ? x[i][j] : "<none>";
        std::string const v = j < y[i].size() ? y[i][j] : "<none>";
        if (u != v) {
          return "line " + std::to_string(i + 1) + ", field "
                 + std::to_string(j + 1) + ": rendered " + u + ", printed "
                 + v;
        }
      }
    }
    return std::nullopt;
  }

}  // namespace aglab
