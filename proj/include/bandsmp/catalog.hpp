// Named example bands.

#ifndef BANDSMP_CATALOG_HPP_
#define BANDSMP_CATALOG_HPP_

#include <algorithm>  // for max
#include <cstddef>  // for size_t
#include <regex>    // for regex, smatch, regex_match
#include <string>   // for string, stoul
#include <vector>   // for vector

#include "band.hpp"
#include "error.hpp"
#include "forbidden.hpp"

namespace bandsmp {

  namespace catalog {

    inline Band s9() {
      return Band::from_labels({{1, 2, 3, 4, 5, 6, 7, 8, 9},
                                {2, 2, 4, 4, 5, 6, 7, 8, 9},
                                {3, 3, 3, 3, 3, 6, 7, 8, 9},
                                {4, 4, 4, 4, 4, 6, 7, 8, 9},
                                {5, 5, 5, 5, 5, 6, 7, 8, 9},
                                {6, 7, 8, 9, 8, 6, 7, 8, 9},
                                {7, 7, 9, 9, 8, 6, 7, 8, 9},
                                {8, 8, 8, 8, 8, 6, 7, 8, 9},
                                {9, 9, 9, 9, 9, 6, 7, 8, 9}},
                               "S9");
    }

    inline Band s10() {
      return Band::from_labels({{1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
                                {2, 2, 4, 4, 5, 6, 7, 8, 9, 10},
                                {3, 3, 3, 3, 3, 6, 7, 8, 9, 10},
                                {4, 4, 4, 4, 4, 6, 7, 8, 9, 10},
                                {5, 5, 5, 5, 5, 6, 7, 8, 9, 10},
                                {6, 7, 8, 9, 10, 6, 7, 8, 9, 10},
                                {7, 7, 9, 9, 10, 6, 7, 8, 9, 10},
                                {8, 8, 8, 8, 8, 6, 7, 8, 9, 10},
                                {9, 9, 9, 9, 9, 6, 7, 8, 9, 10},
                                {10, 10, 10, 10, 10, 6, 7, 8, 9, 10}},
                               "S10");
    }

    inline void check_size(std::size_t m, char const* family) {
      if (m == 0 || m > 1024) {
        throw Error(ErrorCode::UnknownName,
                    std::string(family) + " needs a size in 1..1024");
      }
    }

    //! xy = x
    inline Band left_zero(std::size_t m) {
      check_size(m, "LZ");
      std::vector<std::vector<std::size_t>> rows(m, std::vector<std::size_t>(m));
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          rows[a][b] = a;
        }
      }
      return Band::from_rows(rows, "LZ(" + std::to_string(m) + ")");
    }

    //! xy = y
    inline Band right_zero(std::size_t m) {
      check_size(m, "RZ");
      std::vector<std::vector<std::size_t>> rows(m, std::vector<std::size_t>(m));
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          rows[a][b] = b;
        }
      }
      return Band::from_rows(rows, "RZ(" + std::to_string(m) + ")");
    }

    //! The chain 1 > 2 > ... > m, i.e. a*b = max(a, b) on labels; 1 is the
    //! identity.
    inline Band chain_semilattice(std::size_t m) {
      check_size(m, "SL-chain");
      std::vector<std::vector<std::size_t>> rows(m, std::vector<std::size_t>(m));
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          rows[a][b] = std::max(a, b);
        }
      }
      return Band::from_rows(rows, "SL-chain(" + std::to_string(m) + ")");
    }

    //! p x q rectangular band; element (r, c) has index r*q + c and
    //! (r, c)(r', c') = (r, c').
    inline Band rectangular(std::size_t p, std::size_t q) {
      check_size(p * q, "Rect");
      std::size_t const                     m = p * q;
      std::vector<std::vector<std::size_t>> rows(m, std::vector<std::size_t>(m));
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          rows[a][b] = (a / q) * q + (b % q);
        }
      }
      return Band::from_rows(
          rows, "Rect(" + std::to_string(p) + "," + std::to_string(q) + ")");
    }

    inline Band forbidden(ForbiddenCase which) {
      return construct_forbidden_band(which);
    }

    //! Names understood by by_name, with example parameters for families.
    inline std::vector<std::string> names() {
      return {"S9",
              "S10",
              "T9",
              "T13a",
              "T13b",
              "T17",
              "LZ(m)",
              "RZ(m)",
              "SL-chain(m)",
              "Rect(p,q)"};
    }

    //! Looks up a band by name; "dual(NAME)" and "NAME^1" are also accepted.
    inline Band by_name(std::string const& name) {
      static std::regex const family1(R"((LZ|RZ|SL-chain)\((\d{1,4})\))");
      static std::regex const rect(R"(Rect\((\d{1,4}),(\d{1,4})\))");
      std::smatch             match;
      if (name.starts_with("dual(") && name.ends_with(")")) {
        return dual(by_name(name.substr(5, name.size() - 6)));
      }
      if (name.ends_with("^1") && name.size() > 2) {
        return adjoin_identity(by_name(name.substr(0, name.size() - 2)));
      }
      if (name == "S9") {
        return s9();
      } else if (name == "S10") {
        return s10();
      } else if (name == "T9") {
        return forbidden(ForbiddenCase::T9);
      } else if (name == "T13a") {
        return forbidden(ForbiddenCase::T13a);
      } else if (name == "T13b") {
        return forbidden(ForbiddenCase::T13b);
      } else if (name == "T17") {
        return forbidden(ForbiddenCase::T17);
      } else if (std::regex_match(name, match, family1)) {
        std::size_t const m = std::stoul(match[2].str());
        if (match[1] == "LZ") {
          return left_zero(m);
        } else if (match[1] == "RZ") {
          return right_zero(m);
        }
        return chain_semilattice(m);
      } else if (std::regex_match(name, match, rect)) {
        return rectangular(std::stoul(match[1].str()),
                           std::stoul(match[2].str()));
      }
      throw Error(ErrorCode::UnknownName, "no catalog band named '" + name + "'");
    }

  }  // namespace catalog

  inline Band catalog_band(std::string const& name) {
    return catalog::by_name(name);
  }

}  // namespace bandsmp

#endif  // BANDSMP_CATALOG_HPP_
