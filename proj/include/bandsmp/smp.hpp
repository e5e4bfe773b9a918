// Polynomial-time subpower membership for bands satisfying lambda and its
// dual, built from two intermediate problems:
//
//   cp-infix:  given c J d, d <=_J e and A with e <=_J a for all a in A,
//              find y in <A> with d y e = c.
//   cp-suffix: given A and b, find x in <A> with x L b.
//
// b is in <A> iff there are x, y in <A> with b L x and b R y; then b = y x.
// The R-side is cp-suffix in the dual band, with the same tuples.

#ifndef BANDSMP_SMP_HPP_
#define BANDSMP_SMP_HPP_

#include <algorithm>  // for max
#include <cstddef>    // for size_t
#include <optional>   // for optional, nullopt
#include <stdexcept>  // for logic_error
#include <string>     // for string
#include <utility>    // for move
#include <vector>     // for vector

#include "band.hpp"
#include "error.hpp"
#include "power.hpp"
#include "quasi.hpp"

namespace bandsmp {

  struct SmpOptions {
    //! Run the polynomial algorithms even if the band fails lambda (or its
    //! dual). Returned solutions are still verified; negative answers become
    //! Answer::Unknown.
    bool        force        = false;
    std::size_t lambda_bound = default_lambda_bound;
  };

  //! Loop counters. The per-run maxima are the quantities bounded by
  //! n (h - 1), h the height of S/J.
  struct SmpStats {
    std::size_t infix_calls      = 0;
    std::size_t infix_outer      = 0;  // a0 candidates tried
    std::size_t infix_inner      = 0;  // executions of y := y a2 a3, total
    std::size_t infix_inner_max  = 0;  // ... the maximum for a single a0
    std::size_t suffix_calls     = 0;
    std::size_t suffix_loops     = 0;  // while-loop iterations, total
    std::size_t suffix_loops_max = 0;  // ... the maximum for a single call

    void merge(SmpStats const& other) noexcept {
      infix_calls += other.infix_calls;
      infix_outer += other.infix_outer;
      infix_inner += other.infix_inner;
      infix_inner_max = std::max(infix_inner_max, other.infix_inner_max);
      suffix_calls += other.suffix_calls;
      suffix_loops += other.suffix_loops;
      suffix_loops_max = std::max(suffix_loops_max, other.suffix_loops_max);
    }
  };

  struct CpInfixInstance {
    Tuple  c;
    Tuple  d;
    Tuple  e;
    GenSet generators;
  };

  enum class Answer { Yes, No, Unknown };

  inline char const* to_string(Answer a) noexcept {
    switch (a) {
      case Answer::Yes: return "MEMBER";
      case Answer::No: return "NON-MEMBER";
      case Answer::Unknown: return "UNKNOWN";
    }
    return "?";
  }

  //! n (h - 1): the bound on both loop counters for arity n.
  inline std::size_t loop_bound(Band const& band, std::size_t arity) noexcept {
    return arity * (band.height() - 1);
  }

  //! cp-infix and cp-suffix over one band. Lambda is checked once, on first
  //! use.
  class CpSolver {
   public:
    explicit CpSolver(Band band, SmpOptions options = {})
        : _band(std::move(band)), _options(options) {}

    [[nodiscard]] Band const& band() const noexcept {
      return _band;
    }

    //! Whether the band satisfies lambda; false (not thrown) if the scan
    //! would exceed the bound and force is set.
    bool lambda_holds() {
      if (!_lambda) {
        if (_options.force && _band.order() > _options.lambda_bound) {
          _lambda = false;
        } else {
          _lambda = satisfies_lambda(_band, _options.lambda_bound).holds;
        }
      }
      return *_lambda;
    }

    //! Some y in <A> with d y e = c, or nullopt.
    std::optional<Tuple> cp_infix(CpInfixInstance const& inst,
                                  SmpStats*              stats = nullptr) {
      require_lambda();
      check_infix(inst);
      SmpStats local;
      local.infix_calls = 1;
      auto result       = run_infix(inst, local);
      if (stats != nullptr) {
        stats->merge(local);
      }
      return result;
    }

    //! Some x in <A> with x L b, or nullopt.
    std::optional<Tuple> cp_suffix(GenSet const& A,
                                   Tuple const&  b,
                                   SmpStats*     stats = nullptr) {
      require_lambda();
      detail::check_tuple(_band, b, A.arity);
      SmpStats local;
      auto     result = run_suffix(A, b, local);
      if (stats != nullptr) {
        stats->merge(local);
      }
      return result;
    }

   private:
    void require_lambda() {
      if (!_options.force && !lambda_holds()) {
        throw Error(ErrorCode::LambdaNotSatisfied,
                    "band " + _band.name()
                        + " does not satisfy lambda; use force to run anyway");
      }
    }

    bool leq(Relation rel, Tuple const& a, Tuple const& b) const noexcept {
      return detail::leq_unchecked(_band, rel, a, b);
    }

    Tuple mul(Tuple const& a, Tuple const& b) const {
      Tuple out(a.size());
      detail::mul_into(_band, a, b, out);
      return out;
    }

    void check_infix(CpInfixInstance const& inst) const {
      std::size_t const n = inst.generators.arity;
      detail::check_tuple(_band, inst.c, n);
      detail::check_tuple(_band, inst.d, n);
      detail::check_tuple(_band, inst.e, n);
      if (!leq(Relation::J, inst.c, inst.d) || !leq(Relation::J, inst.d, inst.c)) {
        throw Error(ErrorCode::PreconditionViolated, "c J d does not hold");
      }
      if (!leq(Relation::J, inst.d, inst.e)) {
        throw Error(ErrorCode::PreconditionViolated, "d <=_J e does not hold");
      }
      for (auto const& a : inst.generators.members) {
        detail::check_tuple(_band, a, n);
        if (!leq(Relation::J, inst.e, a)) {
          throw Error(ErrorCode::PreconditionViolated,
                      "e <=_J a does not hold for some generator a");
        }
      }
    }

    std::optional<Tuple> run_infix(CpInfixInstance const& inst,
                                   SmpStats&              stats) const {
      Band const&       S = _band;
      auto const&       A = inst.generators.members;
      auto const&       c = inst.c;
      auto const&       d = inst.d;
      auto const&       e = inst.e;
      std::size_t const n = inst.generators.arity;
      std::size_t const m = S.order();

      for (auto const& a0 : A) {
        // s with e <=_J s and d a0 s e = c, found coordinatewise.
        Tuple s(n);
        bool  has_s = true;
        for (std::size_t i = 0; i < n && has_s; ++i) {
          std::size_t const da0 = S(d[i], a0[i]);
          has_s                 = false;
          for (std::size_t t = 0; t < m; ++t) {
            if (S.leq(Relation::J, e[i], t) && S(S(da0, t), e[i]) == c[i]) {
              s[i]  = static_cast<element_type>(t);
              has_s = true;
              break;
            }
          }
        }
        if (!has_s) {
          continue;
        }
        ++stats.infix_outer;
        s                 = mul(a0, s);
        Tuple const se    = mul(s, e);
        Tuple       y     = a0;
        std::size_t inner = 0;
        while (true) {
          Tuple const dy = mul(d, y);
          for (auto const& a1 : A) {
            if (leq(Relation::J, y, a1) && mul(mul(dy, a1), e) == c) {
              stats.infix_inner += inner;
              stats.infix_inner_max = std::max(stats.infix_inner_max, inner);
              return mul(y, a1);
            }
          }
          bool advanced = false;
          for (auto const& a2 : A) {
            if (!leq(Relation::J, y, a2)) {
              continue;
            }
            Tuple const dya2 = mul(dy, a2);
            for (auto const& a3 : A) {
              if (leq(Relation::J, y, a3)) {
                continue;
              }
              if (mul(mul(dya2, a3), se) == c) {
                y        = mul(mul(y, a2), a3);
                advanced = true;
                break;
              }
            }
            if (advanced) {
              break;
            }
          }
          if (!advanced) {
            break;  // next a0
          }
          ++inner;
        }
        stats.infix_inner += inner;
        stats.infix_inner_max = std::max(stats.infix_inner_max, inner);
      }
      return std::nullopt;
    }

    std::optional<Tuple> run_suffix(GenSet const& gens,
                                    Tuple const&  b,
                                    SmpStats&     stats) const {
      ++stats.suffix_calls;
      auto const&          A = gens.members;
      std::optional<Tuple> found;
      for (auto const& a : A) {
        if (mul(b, a) == b) {
          found = a;
          break;
        }
      }
      if (!found) {
        return std::nullopt;
      }
      Tuple       x     = std::move(*found);
      std::size_t loops = 0;
      auto        done  = [&](std::optional<Tuple> result) {
        stats.suffix_loops += loops;
        stats.suffix_loops_max = std::max(stats.suffix_loops_max, loops);
        return result;
      };
      while (!(leq(Relation::L, x, b) && leq(Relation::L, b, x))) {
        ++loops;
        GenSet restricted{gens.arity, {}};
        for (auto const& a : A) {
          if (leq(Relation::J, x, a)) {
            restricted.members.push_back(a);
          }
        }
        bool advanced = false;
        for (auto const& a : A) {
          if (!leq(Relation::J, b, a) || leq(Relation::J, x, a)) {
            continue;
          }
          CpInfixInstance inst{b, mul(b, a), x, restricted};
          check_infix(inst);
          ++stats.infix_calls;
          if (auto y = run_infix(inst, stats)) {
            x        = mul(mul(a, *y), x);
            advanced = true;
            break;
          }
        }
        if (!advanced) {
          return done(std::nullopt);
        }
      }
      return done(x);
    }

    Band                _band;
    SmpOptions          _options;
    std::optional<bool> _lambda;
  };

  //! One-shot cp-infix.
  inline std::optional<Tuple> cp_infix(Band const&            band,
                                       CpInfixInstance const& inst,
                                       SmpOptions             options = {},
                                       SmpStats*              stats   = nullptr) {
    return CpSolver(band, options).cp_infix(inst, stats);
  }

  //! One-shot cp-suffix.
  inline std::optional<Tuple> cp_suffix(Band const&   band,
                                        GenSet const& A,
                                        Tuple const&  b,
                                        SmpOptions    options = {},
                                        SmpStats*     stats   = nullptr) {
    return CpSolver(band, options).cp_suffix(A, b, stats);
  }

  struct PolyResult {
    Answer               answer = Answer::No;
    std::optional<Tuple> x;  // x in <A>, x L b
    std::optional<Tuple> y;  // y in <A>, y R b; then b = y x
  };

  //! Membership via cp-suffix in S and in dual(S). Classification is done
  //! once per solver.
  class PolySolver {
   public:
    explicit PolySolver(Band const& band, SmpOptions options = {})
        : _left(band, options), _right(dual(band), options) {
      // Both checks run here, so decide() only reads cached state.
      bool const left_ok = _left.lambda_holds(), right_ok = _right.lambda_holds();
      if (!options.force) {
        if (!left_ok || !right_ok) {
          throw Error(ErrorCode::NotTractable,
                      "band " + band.name()
                          + " fails lambda or its dual; use force to run anyway");
        }
      }
    }

    [[nodiscard]] Band const& band() const noexcept {
      return _left.band();
    }

    PolyResult decide(SmpInstance const& inst, SmpStats* stats = nullptr) {
      Band const& S = band();
      detail::check_tuple(S, inst.target, inst.generators.arity);
      PolyResult out;
      out.x = _left.cp_suffix(inst.generators, inst.target, stats);
      if (!out.x) {
        out.answer = _left.lambda_holds() ? Answer::No : Answer::Unknown;
        return out;
      }
      out.y = _right.cp_suffix(inst.generators, inst.target, stats);
      if (!out.y) {
        out.answer = _right.lambda_holds() ? Answer::No : Answer::Unknown;
        return out;
      }
      Tuple const& b = inst.target;
      if (!(detail::leq_unchecked(S, Relation::L, *out.x, b)
            && detail::leq_unchecked(S, Relation::L, b, *out.x)
            && detail::leq_unchecked(S, Relation::R, *out.y, b)
            && detail::leq_unchecked(S, Relation::R, b, *out.y)
            && mul(S, *out.y, *out.x) == b)) {
        throw std::logic_error("cp-suffix returned an unverifiable solution");
      }
      out.answer = Answer::Yes;
      return out;
    }

   private:
    CpSolver _left;
    CpSolver _right;
  };

  inline PolyResult smp_decide_poly(Band const&        band,
                                    SmpInstance const& inst,
                                    SmpOptions         options = {},
                                    SmpStats*          stats   = nullptr) {
    return PolySolver(band, options).decide(inst, stats);
  }

  //! Checks that the product of the generators listed in word (0-based
  //! indices) equals target.
  inline bool verify_word(Band const&                     band,
                          GenSet const&                   A,
                          std::vector<std::size_t> const& word,
                          Tuple const&                    target) {
    if (word.empty()) {
      throw Error(ErrorCode::EmptyWord, "a generator word must be nonempty");
    }
    for (std::size_t g : word) {
      if (g >= A.size()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "generator " + std::to_string(g + 1) + " of "
                        + std::to_string(A.size()));
      }
    }
    detail::check_tuple(band, target, A.arity);
    Tuple acc = A[word[0]];
    for (std::size_t i = 1; i < word.size(); ++i) {
      detail::mul_into(band, acc, A[word[i]], acc);
    }
    return acc == target;
  }

  enum class Method { Poly, Closure };

  inline char const* to_string(Method m) noexcept {
    return m == Method::Poly ? "poly" : "closure";
  }

  struct AutoResult {
    bool                                    member = false;
    Method                                  method = Method::Poly;
    std::optional<PolyResult>               poly;
    std::optional<std::vector<std::size_t>> word;  // closure path only
  };

  //! Polynomial algorithm for tractable bands, closure oracle otherwise.
  inline AutoResult smp_decide_auto(Band const&        band,
                                    SmpInstance const& inst,
                                    std::size_t        cap   = default_closure_cap,
                                    SmpStats*          stats = nullptr) {
    AutoResult out;
    if (classify(band).tractable()) {
      out.method = Method::Poly;
      out.poly   = smp_decide_poly(band, inst, {}, stats);
      out.member = out.poly->answer == Answer::Yes;
    } else {
      out.method = Method::Closure;
      out.word   = witness_word(band, inst.generators, inst.target, cap);
      out.member = out.word.has_value();
    }
    return out;
  }

}  // namespace bandsmp

#endif  // BANDSMP_SMP_HPP_
