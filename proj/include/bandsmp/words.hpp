// Words over the variables x1, x2, ... and identities between them.
//
// A Word is a sequence of 1-based variable indices; the empty sequence is
// the empty word of F(X)^1.

#ifndef BANDSMP_WORDS_HPP_
#define BANDSMP_WORDS_HPP_

#include <algorithm>  // for reverse, sort, unique, max_element
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <initializer_list>  // for initializer_list
#include <limits>     // for numeric_limits
#include <span>       // for span
#include <string>     // for string, to_string
#include <utility>    // for move
#include <vector>     // for vector

#include "band.hpp"
#include "error.hpp"

namespace bandsmp {

  using Word = std::vector<std::size_t>;

  struct Identity {
    Word lhs;
    Word rhs;
  };

  //! Sorted set of variables occurring in w.
  inline std::vector<std::size_t> content(Word const& w) {
    std::vector<std::size_t> c(w);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
  }

  namespace detail {
    // Position of the first occurrence of the variable that occurs first
    // last, i.e. of sigma(w). Requires w nonempty.
    inline std::size_t last_new_position(Word const& w) {
      std::vector<std::size_t> seen;
      std::size_t              pos = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (std::find(seen.begin(), seen.end(), w[i]) == seen.end()) {
          seen.push_back(w[i]);
          pos = i;
        }
      }
      return pos;
    }
  }  // namespace detail

  //! s(w): the longest prefix missing exactly one variable of w.
  inline Word left_cut_s(Word const& w) {
    if (w.empty()) {
      return {};
    }
    return Word(w.begin(), w.begin() + detail::last_new_position(w));
  }

  //! sigma(w): the last variable of w in order of first occurrence.
  inline Word sigma(Word const& w) {
    if (w.empty()) {
      return {};
    }
    return {w[detail::last_new_position(w)]};
  }

  inline Word dual_word(Word const& w) {
    return {w.rbegin(), w.rend()};
  }

  inline Word concat(Word lhs, Word const& rhs) {
    lhs.insert(lhs.end(), rhs.begin(), rhs.end());
    return lhs;
  }

  //! h_2(w) is the first variable of w; for n >= 3,
  //! h_n(w) = h_n(s(w)) sigma(w) dual(h_{n-1}(dual(w))).
  inline Word h_n(std::size_t n, Word const& w) {
    if (n < 2) {
      throw Error(ErrorCode::UnsupportedIndex,
                  "h_n is defined for n >= 2, got " + std::to_string(n));
    }
    if (w.empty()) {
      return {};
    }
    if (n == 2) {
      return {w.front()};
    }
    Word out = h_n(n, left_cut_s(w));
    out.push_back(w[detail::last_new_position(w)]);
    return concat(std::move(out), dual_word(h_n(n - 1, dual_word(w))));
  }

  //! p_2(k) = 1 and p_{n+1}(k) = k (1 + p_n(k)); saturates at the maximum
  //! of uint64_t.
  inline std::uint64_t length_bound_p(std::size_t n, std::uint64_t k) {
    if (n < 2) {
      throw Error(ErrorCode::UnsupportedIndex,
                  "p_n is defined for n >= 2, got " + std::to_string(n));
    }
    constexpr std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t           p   = 1;
    for (std::size_t i = 2; i < n; ++i) {
      if (p == top || (k != 0 && p + 1 > top / k)) {
        p = top;
      } else {
        p = k * (1 + p);
      }
    }
    return p;
  }

  enum class WordFamily { G, H, I };

  //! The words G_n, H_n, I_n for n = 2, 3, 4.
  inline Word ghi_word(WordFamily family, std::size_t n) {
    static std::vector<std::vector<Word>> const table = {
        // G
        {{2, 1}, {3, 1, 2}, {4, 2, 1, 3}},
        // H
        {{2}, {3, 1, 2, 3, 2}, {4, 2, 1, 3, 4, 2, 3, 2, 1, 3}},
        // I
        {{2, 1, 2},
         {3, 1, 2, 3, 2, 1, 2},
         {4, 2, 1, 3, 4, 2, 1, 2, 3, 2, 1, 3}},
    };
    if (n < 2 || n > 4) {
      throw Error(ErrorCode::UnsupportedIndex,
                  "G/H/I words are available for n = 2..4, got "
                      + std::to_string(n));
    }
    return table[static_cast<std::size_t>(family)][n - 2];
  }

  //! The value of the term function of w at the point assignment, where
  //! assignment[i - 1] is the value of x_i.
  inline element_type eval_word(Band const&                   band,
                                Word const&                   w,
                                std::span<element_type const> assignment) {
    if (w.empty()) {
      throw Error(ErrorCode::EmptyWord, "cannot evaluate the empty word");
    }
    auto value = [&](std::size_t var) -> element_type {
      if (var == 0 || var > assignment.size()) {
        throw Error(ErrorCode::UnboundVariable,
                    "x" + std::to_string(var) + " has no value");
      }
      band.check_element(assignment[var - 1]);
      return assignment[var - 1];
    };
    element_type acc = value(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
      acc = band(acc, value(w[i]));
    }
    return acc;
  }

  inline element_type eval_word(Band const&                         band,
                                Word const&                         w,
                                std::initializer_list<element_type> at) {
    return eval_word(band, w, std::span<element_type const>(at.begin(), at.size()));
  }

  //! Default maximum number of assignments satisfies_identity may scan.
  inline constexpr std::uint64_t default_identity_budget = 1ULL << 26;

  struct IdentityCheck {
    bool holds = true;
    //! First failing point in odometer order; entry i - 1 is the value of
    //! x_i, variables not occurring in the identity are 0.
    std::vector<element_type> counterexample;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  //! Exhaustive check of S |= lhs ~ rhs over all assignments to the
  //! variables of both sides, with the smallest variable most significant.
  inline IdentityCheck
  satisfies_identity(Band const&   band,
                     Identity const& id,
                     std::uint64_t budget = default_identity_budget) {
    if (id.lhs.empty() || id.rhs.empty()) {
      throw Error(ErrorCode::EmptyWord, "both sides of an identity must be nonempty");
    }
    auto const vars = content(concat(id.lhs, id.rhs));
    if (vars.front() == 0) {
      throw Error(ErrorCode::UnboundVariable, "variables are numbered from 1");
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (total > budget / band.order()) {
        throw Error(ErrorCode::ArityTooLarge,
                    std::to_string(band.order()) + "^"
                        + std::to_string(vars.size())
                        + " assignments exceed the budget of "
                        + std::to_string(budget));
      }
      total *= band.order();
    }
    std::vector<element_type> point(vars.back(), 0);
    std::size_t const         m = band.order();
    while (true) {
      if (eval_word(band, id.lhs, point) != eval_word(band, id.rhs, point)) {
        return {false, point};
      }
      // Advance the odometer; the last variable turns fastest.
      std::size_t i = vars.size();
      while (i > 0) {
        auto& digit = point[vars[i - 1] - 1];
        if (++digit < m) {
          break;
        }
        digit = 0;
        --i;
      }
      if (i == 0) {
        return {true, {}};
      }
    }
  }

}  // namespace bandsmp

#endif  // BANDSMP_WORDS_HPP_
