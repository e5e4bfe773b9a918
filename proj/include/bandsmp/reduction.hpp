// SAT to SMP: CNF input, the gadget instance inside a band failing lambda,
// and translations between assignments and generator words.
//
// With clauses C_1, ..., C_n over x_1, ..., x_k and a normalized witness
// (d, e, x, y, h) the instance has arity n + 2k and generators
//
//   u      = (d  ... d  | d ... d)
//   v      = (xe ... xe | y ... y)
//   a_j^z  : on clause coordinate i, e if the literal x_j (z = 1) or
//            not x_j (z = 0) is in C_i and h otherwise; h on the control
//            block except at positions n + 2j - 1, n + 2j, which hold
//            (x, e) for z = 0 and (e, x) for z = 1
//
// and target b = (de ... de). The formula is satisfiable iff b is in <A>.

#ifndef BANDSMP_REDUCTION_HPP_
#define BANDSMP_REDUCTION_HPP_

#include <algorithm>  // for reverse, find
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <cstdlib>    // for abs
#include <optional>   // for optional, nullopt
#include <sstream>    // for istringstream
#include <stdexcept>  // for logic_error
#include <string>     // for string, to_string, getline
#include <vector>     // for vector

#include "band.hpp"
#include "error.hpp"
#include "forbidden.hpp"
#include "power.hpp"
#include "quasi.hpp"
#include "smp.hpp"

namespace bandsmp {

  //! A CNF formula. Literals are +j / -j for 1 <= j <= k.
  struct SatInstance {
    std::size_t                   k = 0;
    std::vector<std::vector<int>> clauses;
    //! Set when the input contained an empty clause; such a clause is not
    //! stored in clauses, and the formula is unsatisfiable.
    bool has_empty_clause = false;
  };

  namespace detail {
    inline Error dimacs_error(std::size_t line, std::string const& what) {
      return Error(ErrorCode::SyntaxError,
                   "line " + std::to_string(line) + ": " + what);
    }

    inline long parse_long(std::string const& tok, std::size_t line) {
      std::size_t pos = 0;
      long        v   = 0;
      try {
        v = std::stol(tok, &pos);
      } catch (std::exception const&) {
        pos = 0;
      }
      if (pos == 0 || pos != tok.size()) {
        throw dimacs_error(line, "expected an integer, found '" + tok + "'");
      }
      return v;
    }
  }  // namespace detail

  //! DIMACS CNF: comment lines start with 'c', the header is "p cnf k m",
  //! clauses are 0-terminated and may span lines; a line "%" ends the input.
  inline SatInstance parse_dimacs(std::string const& text) {
    SatInstance        sat;
    std::istringstream in(text);
    std::string        line;
    std::size_t        lineno      = 0;
    std::size_t        header_line = 0;
    std::size_t        declared    = 0;
    std::size_t        seen        = 0;
    bool               open        = false;
    std::vector<int>   clause;
    auto               close_clause = [&] {
      if (clause.empty()) {
        sat.has_empty_clause = true;
      } else {
        sat.clauses.push_back(clause);
      }
      clause.clear();
      ++seen;
      open = false;
    };
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream words(line);
      std::string        tok;
      if (!(words >> tok) || tok[0] == 'c') {
        continue;
      }
      if (tok == "%") {
        break;
      }
      if (tok == "p") {
        std::string fmt, k, m, extra;
        if (header_line != 0) {
          throw detail::dimacs_error(lineno, "second problem line");
        }
        if (!(words >> fmt >> k >> m) || fmt != "cnf" || (words >> extra)) {
          throw detail::dimacs_error(lineno, "expected 'p cnf <variables> <clauses>'");
        }
        long const kv = detail::parse_long(k, lineno);
        long const mv = detail::parse_long(m, lineno);
        if (kv < 0 || mv < 0) {
          throw detail::dimacs_error(lineno, "negative count in problem line");
        }
        sat.k       = static_cast<std::size_t>(kv);
        declared    = static_cast<std::size_t>(mv);
        header_line = lineno;
        continue;
      }
      if (header_line == 0) {
        throw detail::dimacs_error(lineno, "clause before the problem line");
      }
      for (words.clear(), words.str(line); words >> tok;) {
        long const lit = detail::parse_long(tok, lineno);
        if (lit == 0) {
          close_clause();
          continue;
        }
        if (static_cast<std::size_t>(std::labs(lit)) > sat.k) {
          throw detail::dimacs_error(lineno,
                                     "literal " + tok + " exceeds variable count "
                                         + std::to_string(sat.k));
        }
        clause.push_back(static_cast<int>(lit));
        open = true;
      }
    }
    if (header_line == 0) {
      throw detail::dimacs_error(lineno, "missing problem line");
    }
    if (open) {
      close_clause();  // tolerate a missing final 0
    }
    if (seen != declared) {
      throw detail::dimacs_error(header_line,
                                 "declares " + std::to_string(declared)
                                     + " clauses, found " + std::to_string(seen));
    }
    return sat;
  }

  //! Whether z (z[j - 1] is the value of x_j) satisfies every clause.
  inline bool satisfies(SatInstance const& sat, std::vector<bool> const& z) {
    if (sat.has_empty_clause) {
      return false;
    }
    for (auto const& clause : sat.clauses) {
      bool sat_clause = false;
      for (int lit : clause) {
        bool const value = z.at(static_cast<std::size_t>(std::abs(lit)) - 1);
        sat_clause       = sat_clause || (lit > 0) == value;
      }
      if (!sat_clause) {
        return false;
      }
    }
    return true;
  }

  inline constexpr std::size_t default_sat_bound = 20;

  //! First satisfying assignment in binary counting order (x_1 least
  //! significant), by exhaustive scan.
  inline std::optional<std::vector<bool>>
  sat_solve(SatInstance const& sat, std::size_t bound = default_sat_bound) {
    if (sat.k > bound) {
      throw Error(ErrorCode::TooManyVariables,
                  std::to_string(sat.k) + " variables exceed the bound "
                      + std::to_string(bound));
    }
    if (sat.has_empty_clause) {
      return std::nullopt;
    }
    std::vector<bool> z(sat.k);
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << sat.k); ++bits) {
      for (std::size_t j = 0; j < sat.k; ++j) {
        z[j] = ((bits >> j) & 1) != 0;
      }
      if (satisfies(sat, z)) {
        return z;
      }
    }
    return std::nullopt;
  }

  inline bool sat_oracle(SatInstance const& sat,
                         std::size_t        bound = default_sat_bound) {
    return sat_solve(sat, bound).has_value();
  }

  //! The formula with unused variables removed.
  struct Renumbered {
    SatInstance sat;
    //! original[j - 1] is the original index of new variable j.
    std::vector<std::size_t> original;
    //! renumbered[j - 1] is the new index of original variable j, or 0 if it
    //! was dropped.
    std::vector<std::size_t> renumbered;
  };

  inline Renumbered drop_unused_variables(SatInstance const& sat) {
    Renumbered out;
    out.renumbered.assign(sat.k, 0);
    for (auto const& clause : sat.clauses) {
      for (int lit : clause) {
        out.renumbered[static_cast<std::size_t>(std::abs(lit)) - 1] = 1;
      }
    }
    for (std::size_t j = 0; j < sat.k; ++j) {
      if (out.renumbered[j] != 0) {
        out.original.push_back(j + 1);
        out.renumbered[j] = out.original.size();
      }
    }
    out.sat.k                = out.original.size();
    out.sat.has_empty_clause = sat.has_empty_clause;
    for (auto const& clause : sat.clauses) {
      std::vector<int> c;
      for (int lit : clause) {
        int const j = static_cast<int>(
            out.renumbered[static_cast<std::size_t>(std::abs(lit)) - 1]);
        c.push_back(lit > 0 ? j : -j);
      }
      out.sat.clauses.push_back(std::move(c));
    }
    return out;
  }

  struct ReductionOutput {
    SmpInstance instance;
    //! Role of each generator, in order: "u", "v", "a1^0", ..., "ak^0",
    //! "a1^1", ..., "ak^1".
    std::vector<std::string> roles;
    std::size_t              clauses = 0;  // n
    std::size_t              k       = 0;  // variables after renumbering
    std::size_t              original_k = 0;
    std::vector<std::size_t> original;    // as in Renumbered
    std::vector<std::size_t> renumbered;  // as in Renumbered
    //! The gadget was built in dual(band): words are read right to left.
    bool    reversed = false;
    Witness witness;

    [[nodiscard]] std::size_t u() const noexcept {
      return 0;
    }
    [[nodiscard]] std::size_t v() const noexcept {
      return 1;
    }
    //! Generator index of a_j^z, j the renumbered variable.
    [[nodiscard]] std::size_t a(std::size_t j, bool z) const noexcept {
      return 2 + (z ? k : 0) + (j - 1);
    }
  };

  struct ReductionOptions {
    bool drop_unused = true;
  };

  //! The gadget instance in band for a witness satisfying the partial table
  //! of has_forbidden_table (e.g. the output of normalize_witness).
  inline ReductionOutput sat_to_smp(SatInstance const& input,
                                    Band const&        band,
                                    Witness const&     w,
                                    ReductionOptions   options = {}) {
    if (!is_lambda_witness(band, w) || !has_forbidden_table(band, w)) {
      throw Error(ErrorCode::NotAWitness,
                  "(" + to_string(w) + ") is not a normalized lambda-witness in "
                      + band.name());
    }
    ReductionOutput out;
    out.witness    = w;
    out.original_k = input.k;
    SatInstance sat;
    if (options.drop_unused) {
      Renumbered r   = drop_unused_variables(input);
      sat            = std::move(r.sat);
      out.original   = std::move(r.original);
      out.renumbered = std::move(r.renumbered);
    } else {
      sat = input;
      for (std::size_t j = 1; j <= sat.k; ++j) {
        out.original.push_back(j);
        out.renumbered.push_back(j);
      }
      auto const check = drop_unused_variables(input);
      if (check.sat.k != input.k) {
        for (std::size_t j = 0; j < input.k; ++j) {
          if (check.renumbered[j] == 0) {
            throw Error(ErrorCode::UnusedVariable,
                        "x" + std::to_string(j + 1) + " occurs in no clause");
          }
        }
      }
    }
    // An empty clause is a clause coordinate on which every a_j^z is h.
    if (sat.has_empty_clause) {
      sat.clauses.emplace_back();
    }
    std::size_t const n     = sat.clauses.size();
    std::size_t const k     = sat.k;
    std::size_t const arity = n + 2 * k;
    out.clauses             = n;
    out.k                   = k;

    auto const el = [](std::size_t a) { return static_cast<element_type>(a); };
    element_type const d = el(w.d), e = el(w.e), x = el(w.x), y = el(w.y),
                       h = el(w.h), xe = el(band(w.x, w.e)),
                       de = el(band(w.d, w.e));

    GenSet A{arity, {}};
    Tuple  v(arity, y);
    std::fill(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n), xe);
    A.members.push_back(Tuple(arity, d));
    A.members.push_back(std::move(v));
    out.roles = {"u", "v"};
    for (bool z : {false, true}) {
      for (std::size_t j = 1; j <= k; ++j) {
        Tuple a(arity, h);
        int const literal = z ? static_cast<int>(j) : -static_cast<int>(j);
        for (std::size_t i = 0; i < n; ++i) {
          auto const& c = sat.clauses[i];
          if (std::find(c.begin(), c.end(), literal) != c.end()) {
            a[i] = e;
          }
        }
        a[n + 2 * j - 2] = z ? e : x;
        a[n + 2 * j - 1] = z ? x : e;
        A.members.push_back(std::move(a));
        out.roles.push_back("a" + std::to_string(j) + "^" + (z ? "1" : "0"));
      }
    }
    out.instance = SmpInstance{std::move(A), Tuple(arity, de)};
    return out;
  }

  //! The gadget in the default band T9 with its canonical witness.
  inline ReductionOutput sat_to_smp(SatInstance const& sat,
                                    ReductionOptions   options = {}) {
    return sat_to_smp(sat,
                      construct_forbidden_band(ForbiddenCase::T9),
                      canonical_forbidden_witness,
                      options);
  }

  //! A band in which to build the gadget and the witness to use: a
  //! normalized lambda-witness of band if there is one, otherwise one of
  //! dual(band). Throws NotAWitness for bands satisfying lambda and its dual.
  struct GadgetHost {
    Band    band;
    Witness witness;
    bool    reversed = false;
  };

  inline GadgetHost gadget_host(Band const& band,
                                std::size_t bound = default_lambda_bound) {
    if (auto w = satisfies_lambda(band, bound).witness) {
      return {band, normalize_witness(band, *w), false};
    }
    Band dual_band = dual(band);
    if (auto w = satisfies_lambda(dual_band, bound).witness) {
      Witness const nw = normalize_witness(dual_band, *w);
      return {std::move(dual_band), nw, true};
    }
    throw Error(ErrorCode::NotAWitness,
                "band " + band.name()
                    + " satisfies lambda and its dual; it hosts no gadget");
  }

  //! The gadget for an arbitrary band failing lambda or its dual. If only
  //! the dual fails, the instance is built in dual(band); it has the same
  //! tuples as an instance over band, with generator words reversed.
  inline ReductionOutput sat_to_smp_in(SatInstance const& sat,
                                       Band const&        band,
                                       ReductionOptions   options = {}) {
    GadgetHost const host = gadget_host(band);
    ReductionOutput  out  = sat_to_smp(sat, host.band, host.witness, options);
    out.reversed          = host.reversed;
    return out;
  }

  //! The word u a_1^{z_1} ... a_k^{z_k} v (reversed if out.reversed), with
  //! z[j - 1] the value of original variable x_j. Dropped variables are
  //! ignored.
  inline std::vector<std::size_t> assignment_to_word(ReductionOutput const&   out,
                                                     std::vector<bool> const& z) {
    if (z.size() != out.original_k) {
      throw Error(ErrorCode::ArityMismatch,
                  "assignment of length " + std::to_string(z.size()) + " for "
                      + std::to_string(out.original_k) + " variables");
    }
    std::vector<std::size_t> word{out.u()};
    for (std::size_t j = 1; j <= out.k; ++j) {
      word.push_back(out.a(j, z[out.original[j - 1] - 1]));
    }
    word.push_back(out.v());
    if (out.reversed) {
      std::reverse(word.begin(), word.end());
    }
    return word;
  }

  //! Reads an assignment off a generator word whose product is the target.
  //! The word is first cut to the form u g_1 ... g_l v with no u or v among
  //! the g_i (everything up to the last u and from the first v after it is
  //! absorbed); there the factors a_j^z agree on each j, the first one fixes
  //! x_j = z, and variables without a factor are false. The result is in
  //! the original numbering.
  inline std::vector<bool> word_to_assignment(Band const&                     band,
                                              ReductionOutput const&          out,
                                              std::vector<std::size_t> const& word) {
    bool ok = false;
    try {
      ok = verify_word(band, out.instance.generators, word, out.instance.target);
    } catch (Error const& err) {
      throw Error(ErrorCode::NotAWitnessingWord, err.what());
    }
    if (!ok) {
      throw Error(ErrorCode::NotAWitnessingWord,
                  "the word does not evaluate to the target");
    }
    // In the orientation of the band the gadget was built in.
    std::vector<std::size_t> w{out.u()};
    w.insert(w.end(), word.begin(), word.end());
    if (out.reversed) {
      std::reverse(w.begin() + 1, w.end());
    }
    w.push_back(out.v());
    auto const last_u  = std::find(w.rbegin(), w.rend(), out.u()).base() - 1;
    auto const first_v = std::find(last_u + 1, w.end(), out.v());
    std::vector<std::size_t> middle(last_u + 1, first_v);
    std::vector<std::size_t> trimmed{out.u()};
    trimmed.insert(trimmed.end(), middle.begin(), middle.end());
    trimmed.push_back(out.v());
    if (out.reversed) {
      std::reverse(trimmed.begin(), trimmed.end());
    }
    if (!verify_word(band, out.instance.generators, trimmed, out.instance.target)) {
      throw std::logic_error("trimmed gadget word does not evaluate to the target");
    }

    std::vector<bool> z(out.original_k, false);
    std::vector<bool> fixed(out.k + 1, false);
    for (std::size_t g : middle) {
      bool const        value = g >= 2 + out.k;
      std::size_t const j     = g - 2 - (value ? out.k : 0) + 1;
      if (!fixed[j]) {
        fixed[j]                   = true;
        z[out.original[j - 1] - 1] = value;
      }
    }
    return z;
  }

}  // namespace bandsmp

#endif  // BANDSMP_REDUCTION_HPP_
