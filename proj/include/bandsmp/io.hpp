// Text and JSON formats for bands, SMP instances and words.
//
// Band:      m, then m rows of m 1-based entries; '#' starts a comment.
//            JSON {"order": m, "table": [[...], ...]}.
// Instance:  "n k", k generator tuples, the target tuple, all 1-based. A
//            line may also hold parenthesized tuples "(2 1),(3 4)", and
//            "n=", "k=" and "target" are accepted as decoration. JSON
//            {"n": n, "generators": [[...], ...], "target": [...]}.
// Word:      tokens separated by spaces; an integer j is x_j, Gn/Hn/In is
//            the catalog word, and a leading '~' takes the dual.

#ifndef BANDSMP_IO_HPP_
#define BANDSMP_IO_HPP_

#include <cctype>     // for isspace, isdigit
#include <cstddef>    // for size_t
#include <sstream>    // for istringstream, ostringstream
#include <string>     // for string
#include <vector>     // for vector

#include "json.hpp"

#include "band.hpp"
#include "error.hpp"
#include "power.hpp"
#include "words.hpp"

namespace bandsmp::io {

  using json = nlohmann::json;

  namespace detail {
    inline bool looks_like_json(std::string const& text) {
      for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
          return c == '{';
        }
      }
      return false;
    }

    inline std::string strip_comment(std::string line) {
      if (auto pos = line.find('#'); pos != std::string::npos) {
        line.erase(pos);
      }
      return line;
    }

    inline std::size_t to_size(std::string const& tok, std::string const& what) {
      std::size_t pos = 0;
      long long   v   = -1;
      try {
        v = std::stoll(tok, &pos);
      } catch (std::exception const&) {
        pos = 0;
      }
      if (pos == 0 || pos != tok.size() || v < 0) {
        throw Error(ErrorCode::MalformedTable,
                    what + ": expected a nonnegative integer, found '" + tok + "'");
      }
      return static_cast<std::size_t>(v);
    }

    inline std::vector<std::size_t> numbers(std::string const& line,
                                            std::string const& what) {
      std::istringstream       in(line);
      std::vector<std::size_t> out;
      for (std::string tok; in >> tok;) {
        out.push_back(to_size(tok, what));
      }
      return out;
    }

    inline json parse_json(std::string const& text, char const* what) {
      try {
        return json::parse(text);
      } catch (json::exception const& e) {
        throw Error(ErrorCode::MalformedTable, std::string(what) + ": " + e.what());
      }
    }

    // 1-based labels to 0-based elements; label 0 or > m is OutOfRange.
    inline Tuple to_tuple(std::vector<std::size_t> const& labels, std::size_t m) {
      Tuple t;
      for (auto a : labels) {
        if (a == 0 || a > m) {
          throw Error(ErrorCode::OutOfRange,
                      "element " + std::to_string(a) + " not in 1.."
                          + std::to_string(m));
        }
        t.push_back(static_cast<element_type>(a - 1));
      }
      return t;
    }
  }  // namespace detail

  inline Band parse_band(std::string const& text, std::string name = "") {
    std::vector<std::vector<std::size_t>> rows;
    if (detail::looks_like_json(text)) {
      json const j = detail::parse_json(text, "band");
      try {
        std::size_t const m = j.at("order").get<std::size_t>();
        rows                = j.at("table").get<std::vector<std::vector<std::size_t>>>();
        if (rows.size() != m) {
          throw Error(ErrorCode::MalformedTable,
                      "order " + std::to_string(m) + " but "
                          + std::to_string(rows.size()) + " rows");
        }
      } catch (json::exception const& e) {
        throw Error(ErrorCode::MalformedTable, std::string("band: ") + e.what());
      }
    } else {
      std::istringstream       in(text);
      std::vector<std::string> lines;
      for (std::string line; std::getline(in, line);) {
        line = detail::strip_comment(line);
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
          lines.push_back(line);
        }
      }
      if (lines.empty()) {
        throw Error(ErrorCode::MalformedTable, "empty band description");
      }
      auto const header = detail::numbers(lines[0], "band order");
      if (header.size() != 1 || header[0] == 0) {
        throw Error(ErrorCode::MalformedTable, "first line must be the order m >= 1");
      }
      std::size_t const m = header[0];
      if (lines.size() != m + 1) {
        throw Error(ErrorCode::MalformedTable,
                    "order " + std::to_string(m) + " but "
                        + std::to_string(lines.size() - 1) + " rows");
      }
      for (std::size_t i = 1; i <= m; ++i) {
        rows.push_back(detail::numbers(lines[i], "row " + std::to_string(i)));
      }
    }
    return Band::from_labels(rows, std::move(name));
  }

  inline std::string format_band(Band const& band) {
    std::ostringstream out;
    out << band.order() << '\n';
    for (std::size_t a = 0; a < band.order(); ++a) {
      for (std::size_t b = 0; b < band.order(); ++b) {
        out << (b == 0 ? "" : " ") << band(a, b) + 1;
      }
      out << '\n';
    }
    return out.str();
  }

  inline json band_to_json(Band const& band) {
    json table = json::array();
    for (std::size_t a = 0; a < band.order(); ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < band.order(); ++b) {
        row.push_back(band(a, b) + 1);
      }
      table.push_back(row);
    }
    return {{"name", band.name()}, {"order", band.order()}, {"table", table}};
  }

  inline json tuple_to_json(Tuple const& t) {
    json out = json::array();
    for (auto a : t) {
      out.push_back(a + 1);
    }
    return out;
  }

  inline std::string format_tuple(Tuple const& t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
      out += (i == 0 ? "" : " ") + std::to_string(t[i] + 1);
    }
    return out;
  }

  //! Parses an instance over band. In the text format ';' also separates
  //! lines, so an instance fits on one command-line argument.
  inline SmpInstance parse_instance(Band const& band, std::string const& text) {
    std::size_t const m = band.order();
    if (detail::looks_like_json(text)) {
      json const j = detail::parse_json(text, "instance");
      try {
        std::size_t const  n = j.at("n").get<std::size_t>();
        std::vector<Tuple> gens;
        for (auto const& g : j.at("generators")) {
          gens.push_back(detail::to_tuple(g.get<std::vector<std::size_t>>(), m));
        }
        Tuple target = detail::to_tuple(j.at("target").get<std::vector<std::size_t>>(), m);
        return make_instance(band, n, std::move(gens), std::move(target));
      } catch (json::exception const& e) {
        throw Error(ErrorCode::MalformedTable, std::string("instance: ") + e.what());
      }
    }
    // Split into logical lines; each parenthesized group is its own line,
    // so "()" gives an empty tuple.
    std::vector<std::string> lines;
    std::string              flat = text;
    for (char& c : flat) {
      if (c == ';') {
        c = '\n';
      }
    }
    std::istringstream in(flat);
    for (std::string line; std::getline(in, line);) {
      line = detail::strip_comment(line);
      for (std::string const word : {"target", "n=", "k="}) {
        for (auto pos = line.find(word); pos != std::string::npos;
             pos      = line.find(word)) {
          line.replace(pos, word.size(), " ");
        }
      }
      if (line.find('(') == std::string::npos) {
        for (char& c : line) {
          c = c == ',' ? ' ' : c;
        }
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
          lines.push_back(line);
        }
        continue;
      }
      std::size_t pos = 0;
      while ((pos = line.find('(', pos)) != std::string::npos) {
        auto const close = line.find(')', pos);
        if (close == std::string::npos) {
          throw Error(ErrorCode::MalformedTable, "unbalanced '(' in instance");
        }
        std::string group = line.substr(pos + 1, close - pos - 1);
        for (char& c : group) {
          c = c == ',' ? ' ' : c;
        }
        lines.push_back(group);
        pos = close + 1;
      }
    }
    if (lines.empty()) {
      throw Error(ErrorCode::MalformedTable, "empty instance");
    }
    auto const header = detail::numbers(lines[0], "instance header");
    if (header.size() != 2) {
      throw Error(ErrorCode::MalformedTable, "first line must be 'n k'");
    }
    std::size_t const n = header[0], k = header[1];
    std::vector<Tuple> tuples;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      tuples.push_back(detail::to_tuple(detail::numbers(lines[i], "tuple"), m));
    }
    if (n == 0 && tuples.empty()) {
      tuples.assign(k + 1, Tuple{});
    }
    if (tuples.size() != k + 1) {
      throw Error(ErrorCode::MalformedTable,
                  "expected " + std::to_string(k) + " generators and a target, found "
                      + std::to_string(tuples.size()) + " tuples");
    }
    Tuple target = std::move(tuples.back());
    tuples.pop_back();
    return make_instance(band, n, std::move(tuples), std::move(target));
  }

  inline std::string format_instance(SmpInstance const& inst) {
    std::ostringstream out;
    out << inst.generators.arity << ' ' << inst.generators.size() << '\n';
    for (auto const& t : inst.generators.members) {
      out << format_tuple(t) << '\n';
    }
    out << format_tuple(inst.target) << '\n';
    return out.str();
  }

  inline json instance_to_json(SmpInstance const& inst) {
    json gens = json::array();
    for (auto const& t : inst.generators.members) {
      gens.push_back(tuple_to_json(t));
    }
    return {{"n", inst.generators.arity},
            {"generators", gens},
            {"target", tuple_to_json(inst.target)}};
  }

  //! "3 1 2", "G4", "~G3 G3", ...
  inline Word parse_word(std::string const& text) {
    std::istringstream in(text);
    Word               out;
    for (std::string tok; in >> tok;) {
      bool const rev = tok[0] == '~';
      std::string body = rev ? tok.substr(1) : tok;
      Word        piece;
      if (!body.empty() && (body[0] == 'G' || body[0] == 'H' || body[0] == 'I')) {
        WordFamily const family = body[0] == 'G'   ? WordFamily::G
                                  : body[0] == 'H' ? WordFamily::H
                                                   : WordFamily::I;
        std::size_t pos = 0;
        std::size_t n   = 0;
        try {
          n = std::stoul(body.substr(1), &pos);
        } catch (std::exception const&) {
          pos = 0;
        }
        if (pos == 0 || pos + 1 != body.size()) {
          throw Error(ErrorCode::SyntaxError, "bad word token '" + tok + "'");
        }
        piece = ghi_word(family, n);
      } else {
        std::size_t pos = 0;
        std::size_t j   = 0;
        try {
          j = std::stoul(body, &pos);
        } catch (std::exception const&) {
          pos = 0;
        }
        if (pos == 0 || pos != body.size() || j == 0
            || !std::isdigit(static_cast<unsigned char>(body[0]))) {
          throw Error(ErrorCode::SyntaxError, "bad word token '" + tok + "'");
        }
        piece = {j};
      }
      out = concat(std::move(out), rev ? dual_word(piece) : piece);
    }
    return out;
  }

  inline std::string format_word(Word const& w) {
    if (w.empty()) {
      return "()";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      out += (i == 0 ? "" : " ") + std::to_string(w[i]);
    }
    return out;
  }

  inline json word_to_json(Word const& w) {
    return json(w);
  }

}  // namespace bandsmp::io

#endif  // BANDSMP_IO_HPP_
