// The quasiidentities lambda and its dual, their witnesses, the forbidden
// bands, and the P / NP-complete classification of finite bands.
//
// lambda:  dxye = de, hx = x, he = e, d <=_J e <=_J x, y   ==>  dxe = de
// dual:    eyxd = ed, xh = x, eh = e, d <=_J e <=_J x, y   ==>  exd = ed
//
// The dual quasiidentity holds in S exactly when lambda holds in dual(S),
// and that is how it is checked.

#ifndef BANDSMP_QUASI_HPP_
#define BANDSMP_QUASI_HPP_

#include <array>      // for array
#include <cstddef>    // for size_t
#include <optional>   // for optional, nullopt
#include <ostream>    // for ostream
#include <stdexcept>  // for logic_error
#include <string>     // for string, to_string
#include <vector>     // for vector

#include "band.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "forbidden.hpp"

namespace bandsmp {

  //! Default largest band order for which the O(m^5) scan is run.
  inline constexpr std::size_t default_lambda_bound = 64;

  //! A quintuple (d, e, x, y, h) of 0-based elements.
  struct Witness {
    std::size_t d = 0;
    std::size_t e = 0;
    std::size_t x = 0;
    std::size_t y = 0;
    std::size_t h = 0;

    friend bool operator==(Witness const&, Witness const&) = default;
  };

  //! 1-based, "d=6 e=3 x=2 y=5 h=1".
  inline std::string to_string(Witness const& w) {
    return "d=" + std::to_string(w.d + 1) + " e=" + std::to_string(w.e + 1)
           + " x=" + std::to_string(w.x + 1) + " y=" + std::to_string(w.y + 1)
           + " h=" + std::to_string(w.h + 1);
  }

  inline std::ostream& operator<<(std::ostream& os, Witness const& w) {
    return os << to_string(w);
  }

  //! True iff the quintuple satisfies the premise of lambda but not its
  //! conclusion.
  inline bool is_lambda_witness(Band const& S, Witness const& w) {
    for (auto a : {w.d, w.e, w.x, w.y, w.h}) {
      S.check_element(a);
    }
    auto const [d, e, x, y, h] = w;
    std::size_t const de       = S(d, e);
    return S(S(S(d, x), y), e) == de && S(h, x) == x && S(h, e) == e
           && S.leq(Relation::J, d, e) && S.leq(Relation::J, e, x)
           && S.leq(Relation::J, e, y) && S(S(d, x), e) != de;
  }

  //! d <_J e <_J x <_J h, each step strict.
  inline bool is_strict_chain(Band const& S, Witness const& w) {
    auto strictly_below = [&](std::size_t a, std::size_t b) {
      return S.leq(Relation::J, a, b) && !S.leq(Relation::J, b, a);
    };
    return strictly_below(w.d, w.e) && strictly_below(w.e, w.x)
           && strictly_below(w.x, w.h);
  }

  struct QuasiCheck {
    bool                   holds = true;
    std::optional<Witness> witness;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  //! Exhaustive scan of S^5 in lexicographic order of (d, e, x, y, h); the
  //! first witness found is returned. Throws BudgetExceeded above bound.
  inline QuasiCheck satisfies_lambda(Band const& S,
                                     std::size_t bound = default_lambda_bound) {
    std::size_t const m = S.order();
    if (m > bound) {
      throw Error(ErrorCode::BudgetExceeded,
                  "order " + std::to_string(m)
                      + " exceeds the quasiidentity scan bound "
                      + std::to_string(bound));
    }
    for (std::size_t d = 0; d < m; ++d) {
      for (std::size_t e = 0; e < m; ++e) {
        bool const d_below_e = S.leq(Relation::J, d, e);
        if (d_below_e != (S(S(d, e), d) == d)) {
          throw std::logic_error("cached J-preorder disagrees with ded = d");
        }
        if (!d_below_e) {
          continue;
        }
        std::size_t const de = S(d, e);
        for (std::size_t x = 0; x < m; ++x) {
          bool const e_below_x = S.leq(Relation::J, e, x);
          if (e_below_x != (S(S(e, x), e) == e)) {
            throw std::logic_error("cached J-preorder disagrees with exe = e");
          }
          if (!e_below_x) {
            continue;
          }
          std::size_t const dx = S(d, x);
          if (S(dx, e) == de) {
            continue;  // conclusion holds for every y, h
          }
          for (std::size_t y = 0; y < m; ++y) {
            if (!S.leq(Relation::J, e, y) || S(S(dx, y), e) != de) {
              continue;
            }
            for (std::size_t h = 0; h < m; ++h) {
              if (S(h, x) == x && S(h, e) == e) {
                return {false, Witness{d, e, x, y, h}};
              }
            }
          }
        }
      }
    }
    return {true, std::nullopt};
  }

  //! The dual quasiidentity, checked as lambda in dual(S). A witness is a
  //! lambda-witness of dual(S), in the same element labels.
  inline QuasiCheck
  satisfies_lambda_dual(Band const& S, std::size_t bound = default_lambda_bound) {
    return satisfies_lambda(dual(S), bound);
  }

  enum class Verdict { Tractable, NpComplete };

  struct Classification {
    Verdict                verdict = Verdict::Tractable;
    std::optional<Witness> lambda_witness;
    std::optional<Witness> lambda_dual_witness;

    [[nodiscard]] bool tractable() const noexcept {
      return verdict == Verdict::Tractable;
    }
  };

  inline char const* to_string(Verdict v) noexcept {
    return v == Verdict::Tractable ? "TRACTABLE" : "NP-COMPLETE";
  }

  //! smp(S) is in P iff S satisfies lambda and its dual; NP-complete
  //! otherwise.
  inline Classification classify(Band const& S,
                                 std::size_t bound = default_lambda_bound) {
    Classification out;
    out.lambda_witness      = satisfies_lambda(S, bound).witness;
    out.lambda_dual_witness = satisfies_lambda_dual(S, bound).witness;
    out.verdict = (out.lambda_witness || out.lambda_dual_witness)
                      ? Verdict::NpComplete
                      : Verdict::Tractable;
    return out;
  }

  //! Applies d := exhdh, e := exh, x := xh, y := xyexh, h := h to a witness.
  //! The result is again a witness, h is an identity on it, and it satisfies
  //! the partial multiplication table checked by has_forbidden_table.
  inline Witness normalize_witness(Band const& S, Witness const& w) {
    if (!is_lambda_witness(S, w)) {
      throw Error(ErrorCode::NotAWitness,
                  "(" + to_string(w) + ") does not witness failure of lambda");
    }
    auto const [d, e, x, y, h] = w;
    std::size_t const xh       = S(x, h);
    std::size_t const exh      = S(e, xh);
    return Witness{S(S(exh, d), h), exh, xh, S(S(S(x, y), e), xh), h};
  }

  //! h is a two-sided identity on d, e, x, y and the partial table
  //!
  //!        x    e    xe   y    d
  //!   x    x    xe   xe   y    xd
  //!   e    e    e    e    e    d
  //!   xe   xe   xe   xe   xe   xd
  //!   y    y    y    y    y    yd
  //!   d    dx   de   dxe  de   d
  //!
  //! holds, with x, e, xe, y, d distinct.
  inline bool has_forbidden_table(Band const& S, Witness const& w) {
    auto const [d, e, x, y, h] = w;
    for (auto a : {d, e, x, y}) {
      if (S(h, a) != a || S(a, h) != a) {
        return false;
      }
    }
    std::size_t const xe = S(x, e), xd = S(x, d), yd = S(y, d);
    std::size_t const dx = S(d, x), de = S(d, e), dxe = S(dx, e);
    std::array<std::size_t, 5> const                keys = {x, e, xe, y, d};
    std::array<std::array<std::size_t, 5>, 5> const expected
        = {{{x, xe, xe, y, xd},
            {e, e, e, e, d},
            {xe, xe, xe, xe, xd},
            {y, y, y, y, yd},
            {dx, de, dxe, de, d}}};
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        if (S(keys[i], keys[j]) != expected[i][j]) {
          return false;
        }
        if (i != j && keys[i] == keys[j]) {
          return false;
        }
      }
    }
    return true;
  }

  //! T = <d, e, x, y, h> for a normalized witness. Its order is always 9,
  //! 13 or 17; anything else throws UnexpectedSize.
  inline std::vector<std::size_t> generated_T(Band const& S, Witness const& w) {
    auto T = subsemigroup(S, {w.d, w.e, w.x, w.y, w.h});
    if (T.size() != 9 && T.size() != 13 && T.size() != 17) {
      throw Error(ErrorCode::UnexpectedSize,
                  "<d,e,x,y,h> has " + std::to_string(T.size())
                      + " elements, expected 9, 13 or 17");
    }
    return T;
  }

  //! Which of the four bands <d, e, x, y, h> is, read off from the left
  //! ideal {d, xd, yd} of a normalized witness.
  inline ForbiddenCase forbidden_case_of(Band const& S, Witness const& w) {
    std::size_t const xd = S(w.x, w.d), yd = S(w.y, w.d);
    if (xd == w.d && yd == w.d) {
      return ForbiddenCase::T9;
    } else if (xd == w.d) {
      return ForbiddenCase::T13a;
    } else if (xd == yd) {
      return ForbiddenCase::T13b;
    }
    return ForbiddenCase::T17;
  }

  //! The canonical witness (d, e, x, y, h) of a synthesized forbidden band.
  inline constexpr Witness canonical_forbidden_witness{ForbiddenLayout::d,
                                                       ForbiddenLayout::e,
                                                       ForbiddenLayout::x,
                                                       ForbiddenLayout::y,
                                                       ForbiddenLayout::h};

  struct ForbiddenEmbedding {
    ForbiddenCase                           which;
    bool                                    into_dual;
    std::optional<std::vector<std::size_t>> map;
  };

  struct ForbiddenReport {
    std::vector<ForbiddenEmbedding> entries;

    [[nodiscard]] bool any(bool into_dual) const {
      for (auto const& entry : entries) {
        if (entry.into_dual == into_dual && entry.map) {
          return true;
        }
      }
      return false;
    }

    [[nodiscard]] bool any() const {
      return any(false) || any(true);
    }
  };

  //! For each forbidden band and each of S, dual(S): an embedding or none.
  inline ForbiddenReport embeds_forbidden(Band const& S) {
    ForbiddenReport report;
    Band const      dual_S = dual(S);
    for (bool into_dual : {false, true}) {
      for (ForbiddenCase which : all_forbidden_cases) {
        Band const T = construct_forbidden_band(which);
        report.entries.push_back(
            {which, into_dual, find_embedding(T, into_dual ? dual_S : S)});
      }
    }
    return report;
  }

}  // namespace bandsmp

#endif  // BANDSMP_QUASI_HPP_
