// Finite bands given by multiplication tables, with their Green preorders.
//
// Elements are 0-indexed internally. Everything that is printed (error
// messages, text formats) uses 1-based labels.

#ifndef BANDSMP_BAND_HPP_
#define BANDSMP_BAND_HPP_

#include <algorithm>  // for max, sort
#include <cstddef>    // for size_t
#include <cstdint>    // for uint16_t, uint8_t
#include <initializer_list>  // for initializer_list
#include <limits>     // for numeric_limits
#include <span>       // for span
#include <string>     // for string, to_string
#include <utility>    // for move
#include <vector>     // for vector

#include "error.hpp"

namespace bandsmp {

  using element_type = std::uint16_t;

  //! The Green preorders used by the algorithms. For a band:
  //! a <=_L b iff ab = a, a <=_R b iff ba = a, a <=_J b iff aba = a.
  enum class Relation { L, R, J };

  namespace detail {
    inline std::string label(std::size_t a) {
      return std::to_string(a + 1);
    }
  }  // namespace detail

  class Band {
   public:
    static constexpr std::size_t max_order
        = std::numeric_limits<element_type>::max();

    //! Validates a 0-based table (rows[a][b] = a*b) and computes the Green
    //! structure. Throws Error with MalformedTable, OutOfRange,
    //! NotIdempotent or NotAssociative.
    static Band from_rows(std::vector<std::vector<std::size_t>> const& rows,
                          std::string name = {}) {
      std::size_t const m = rows.size();
      if (m == 0) {
        throw Error(ErrorCode::MalformedTable, "a band has at least one element");
      }
      if (m > max_order) {
        throw Error(ErrorCode::MalformedTable,
                    "order " + std::to_string(m) + " is too large");
      }
      std::vector<element_type> table;
      table.reserve(m * m);
      for (std::size_t a = 0; a < m; ++a) {
        if (rows[a].size() != m) {
          throw Error(ErrorCode::MalformedTable,
                      "row " + detail::label(a) + " has "
                          + std::to_string(rows[a].size())
                          + " entries, expected " + std::to_string(m));
        }
        for (std::size_t b = 0; b < m; ++b) {
          if (rows[a][b] >= m) {
            throw Error(ErrorCode::OutOfRange,
                        "entry " + detail::label(a) + "*" + detail::label(b)
                            + " = " + std::to_string(rows[a][b] + 1)
                            + " is not in 1.." + std::to_string(m));
          }
          table.push_back(static_cast<element_type>(rows[a][b]));
        }
      }
      return Band(m, std::move(table), std::move(name));
    }

    //! Same as from_rows but with 1-based entries, as printed in tables.
    static Band from_labels(std::vector<std::vector<std::size_t>> const& rows,
                            std::string name = {}) {
      std::vector<std::vector<std::size_t>> shifted(rows);
      for (std::size_t a = 0; a < shifted.size(); ++a) {
        for (std::size_t b = 0; b < shifted[a].size(); ++b) {
          if (shifted[a][b] == 0) {
            throw Error(ErrorCode::OutOfRange,
                        "entry " + detail::label(a) + "*" + detail::label(b)
                            + " = 0, labels start at 1");
          }
          shifted[a][b] -= 1;
        }
      }
      return from_rows(shifted, std::move(name));
    }

    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }

    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }

    void set_name(std::string name) {
      _name = std::move(name);
    }

    [[nodiscard]] element_type product(std::size_t a,
                                       std::size_t b) const noexcept {
      return _table[a * _order + b];
    }

    [[nodiscard]] element_type operator()(std::size_t a,
                                          std::size_t b) const noexcept {
      return product(a, b);
    }

    [[nodiscard]] std::span<element_type const> row(std::size_t a) const {
      return {_table.data() + a * _order, _order};
    }

    [[nodiscard]] std::vector<std::vector<std::size_t>> rows() const {
      std::vector<std::vector<std::size_t>> out(_order);
      for (std::size_t a = 0; a < _order; ++a) {
        out[a].assign(row(a).begin(), row(a).end());
      }
      return out;
    }

    //! Cached Green preorder, no range check.
    [[nodiscard]] bool leq(Relation rel,
                           std::size_t a,
                           std::size_t b) const noexcept {
      return _leq[static_cast<std::size_t>(rel) * _order * _order
                  + a * _order + b]
             != 0;
    }

    //! Range-checked Green preorder.
    [[nodiscard]] bool preorder(Relation rel, std::size_t a, std::size_t b) const {
      check_element(a);
      check_element(b);
      return leq(rel, a, b);
    }

    [[nodiscard]] bool equivalent(Relation rel,
                                  std::size_t a,
                                  std::size_t b) const noexcept {
      return leq(rel, a, b) && leq(rel, b, a);
    }

    [[nodiscard]] std::size_t j_class(std::size_t a) const noexcept {
      return _j_class[a];
    }

    [[nodiscard]] std::size_t number_of_j_classes() const noexcept {
      return _j_classes.size();
    }

    [[nodiscard]] std::vector<std::size_t> const&
    j_class_members(std::size_t cls) const {
      return _j_classes.at(cls);
    }

    //! Number of J-classes in a longest chain of S/J.
    [[nodiscard]] std::size_t height() const noexcept {
      return _height;
    }

    void check_element(std::size_t a) const {
      if (a >= _order) {
        throw Error(ErrorCode::OutOfRange,
                    "element " + std::to_string(a + 1) + " is not in 1.."
                        + std::to_string(_order));
      }
    }

    friend bool operator==(Band const& lhs, Band const& rhs) noexcept {
      return lhs._order == rhs._order && lhs._table == rhs._table;
    }

   private:
    Band(std::size_t m, std::vector<element_type> table, std::string name)
        : _order(m), _table(std::move(table)), _name(std::move(name)) {
      validate();
      compute_green();
    }

    void validate() const {
      std::size_t const m = _order;
      for (std::size_t a = 0; a < m; ++a) {
        if (product(a, a) != a) {
          throw Error(ErrorCode::NotIdempotent,
                      detail::label(a) + "*" + detail::label(a) + " = "
                          + detail::label(product(a, a)));
        }
      }
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          std::size_t const ab = product(a, b);
          for (std::size_t c = 0; c < m; ++c) {
            if (product(ab, c) != product(a, product(b, c))) {
              throw Error(ErrorCode::NotAssociative,
                          "(" + detail::label(a) + "*" + detail::label(b)
                              + ")*" + detail::label(c) + " = "
                              + detail::label(product(ab, c)) + " but "
                              + detail::label(a) + "*(" + detail::label(b)
                              + "*" + detail::label(c)
                              + ") = " + detail::label(product(a, product(b, c))));
            }
          }
        }
      }
    }

    void compute_green() {
      std::size_t const m  = _order;
      std::size_t const mm = m * m;
      _leq.assign(3 * mm, 0);
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          _leq[a * m + b]          = product(a, b) == a;
          _leq[mm + a * m + b]     = product(b, a) == a;
          _leq[2 * mm + a * m + b] = product(product(a, b), a) == a;
        }
      }

      constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
      _j_class.assign(m, unset);
      for (std::size_t a = 0; a < m; ++a) {
        if (_j_class[a] != unset) {
          continue;
        }
        std::size_t const cls = _j_classes.size();
        _j_classes.emplace_back();
        for (std::size_t b = a; b < m; ++b) {
          if (equivalent(Relation::J, a, b)) {
            _j_class[b] = cls;
            _j_classes.back().push_back(b);
          }
        }
      }

      // Longest chain in S/J, by memoised recursion over the strict order.
      std::size_t const       k = _j_classes.size();
      std::vector<std::size_t> chain(k, 0);
      auto longest = [&](auto&& self, std::size_t c) -> std::size_t {
        if (chain[c] != 0) {
          return chain[c];
        }
        std::size_t best = 0;
        std::size_t rep  = _j_classes[c][0];
        for (std::size_t d = 0; d < k; ++d) {
          std::size_t other = _j_classes[d][0];
          if (d != c && leq(Relation::J, other, rep)) {
            best = std::max(best, self(self, d));
          }
        }
        return chain[c] = best + 1;
      };
      _height = 0;
      for (std::size_t c = 0; c < k; ++c) {
        _height = std::max(_height, longest(longest, c));
      }
    }

    std::size_t                           _order;
    std::vector<element_type>             _table;
    std::string                           _name;
    std::vector<std::uint8_t>             _leq;
    std::vector<std::size_t>              _j_class;
    std::vector<std::vector<std::size_t>> _j_classes;
    std::size_t                           _height = 1;
  };

  //! The dual semigroup: same carrier, x*y := y.x.
  inline Band dual(Band const& band) {
    std::size_t const                     m = band.order();
    std::vector<std::vector<std::size_t>> rows(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        rows[a][b] = band(b, a);
      }
    }
    std::string name = band.name();
    if (name.starts_with("dual(") && name.ends_with(")")) {
      name = name.substr(5, name.size() - 6);
    } else if (!name.empty()) {
      name = "dual(" + name + ")";
    }
    return Band::from_rows(rows, std::move(name));
  }

  //! S^1: a new element (the last one, index m) acting as two-sided identity.
  inline Band adjoin_identity(Band const& band) {
    std::size_t const                     m = band.order();
    std::vector<std::vector<std::size_t>> rows(m + 1,
                                               std::vector<std::size_t>(m + 1));
    for (std::size_t a = 0; a <= m; ++a) {
      for (std::size_t b = 0; b <= m; ++b) {
        if (a == m) {
          rows[a][b] = b;
        } else if (b == m) {
          rows[a][b] = a;
        } else {
          rows[a][b] = band(a, b);
        }
      }
    }
    return Band::from_rows(rows, band.name().empty() ? "" : band.name() + "^1");
  }

  //! The subsemigroup generated by gens, sorted ascending. The empty set
  //! generates the empty set.
  inline std::vector<std::size_t>
  subsemigroup(Band const& band, std::span<std::size_t const> gens) {
    std::vector<std::uint8_t> seen(band.order(), 0);
    std::vector<std::size_t>  queue;
    std::vector<std::size_t>  unique_gens;
    for (std::size_t g : gens) {
      band.check_element(g);
      if (!seen[g]) {
        seen[g] = 1;
        queue.push_back(g);
        unique_gens.push_back(g);
      }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::size_t const a = queue[i];
      for (std::size_t g : unique_gens) {
        std::size_t const ag = band(a, g);
        if (!seen[ag]) {
          seen[ag] = 1;
          queue.push_back(ag);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
  }

  inline std::vector<std::size_t>
  subsemigroup(Band const& band, std::initializer_list<std::size_t> gens) {
    return subsemigroup(band,
                        std::span<std::size_t const>(gens.begin(), gens.size()));
  }

  inline std::size_t height_of_j_quotient(Band const& band) noexcept {
    return band.height();
  }

  //! The multiplication table of a subset that is closed under products,
  //! relabelled 0..|subset|-1 in the order given.
  inline Band restrict_to(Band const&                  band,
                          std::span<std::size_t const> subset,
                          std::string                  name = {}) {
    std::vector<std::size_t> index(band.order(), band.order());
    for (std::size_t i = 0; i < subset.size(); ++i) {
      band.check_element(subset[i]);
      index[subset[i]] = i;
    }
    std::vector<std::vector<std::size_t>> rows(
        subset.size(), std::vector<std::size_t>(subset.size()));
    for (std::size_t i = 0; i < subset.size(); ++i) {
      for (std::size_t j = 0; j < subset.size(); ++j) {
        std::size_t const p = index[band(subset[i], subset[j])];
        if (p == band.order()) {
          throw Error(ErrorCode::MalformedTable,
                      "subset is not closed under multiplication");
        }
        rows[i][j] = p;
      }
    }
    return Band::from_rows(rows, std::move(name));
  }

}  // namespace bandsmp

#endif  // BANDSMP_BAND_HPP_
