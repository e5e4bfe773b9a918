#include <random>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace bandsmp;

namespace {
  Tuple T(std::initializer_list<int> labels) {
    Tuple t;
    for (int a : labels) {
      t.push_back(static_cast<element_type>(a - 1));
    }
    return t;
  }

  SatInstance cnf(std::size_t k, std::vector<std::vector<int>> clauses) {
    SatInstance s;
    s.k       = k;
    s.clauses = std::move(clauses);
    return s;
  }

  ErrorCode dimacs_code(std::string const& text) {
    try {
      (void) parse_dimacs(text);
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  }

  // Calls f on every word over g generators of length 1..max_len.
  template <typename F>
  void for_each_word(std::size_t g, std::size_t max_len, F&& f) {
    std::vector<std::size_t> w;
    for (std::size_t len = 1; len <= max_len; ++len) {
      w.assign(len, 0);
      while (true) {
        f(w);
        std::size_t i = 0;
        while (i < len && ++w[i] == g) {
          w[i++] = 0;
        }
        if (i == len) {
          break;
        }
      }
    }
  }
}  // namespace

TEST_CASE("DIMACS parsing", "[reduction][dimacs]") {
  auto const a = parse_dimacs("p cnf 1 1\n1 0\n");
  CHECK(a.k == 1);
  CHECK(a.clauses == std::vector<std::vector<int>>{{1}});
  auto const b = parse_dimacs("c two clauses\np cnf 1 2\n1 0\n-1 0\n");
  CHECK(b.clauses == std::vector<std::vector<int>>{{1}, {-1}});
  auto const c = parse_dimacs("p cnf 3 1\n1 -2 3 0\n");
  CHECK(c.k == 3);
  CHECK(c.clauses == std::vector<std::vector<int>>{{1, -2, 3}});

  // Clauses across lines, a tautology kept verbatim, the '%' terminator.
  auto const d = parse_dimacs("p cnf 2 2\n1\n-2 0 1 -1\n0\n%\n0\n");
  CHECK(d.clauses == std::vector<std::vector<int>>{{1, -2}, {1, -1}});
  CHECK(parse_dimacs("p cnf 2 1\n1 2").clauses == std::vector<std::vector<int>>{{1, 2}});

  auto const e = parse_dimacs("p cnf 1 2\n1 0\n0\n");
  CHECK(e.has_empty_clause);
  CHECK(e.clauses.size() == 1);
  CHECK_FALSE(sat_oracle(e));

  CHECK(dimacs_code("1 0\n") == ErrorCode::SyntaxError);
  CHECK(dimacs_code("p cnf 1 1\n2 0\n") == ErrorCode::SyntaxError);
  CHECK(dimacs_code("p cnf 1 1\n1 x 0\n") == ErrorCode::SyntaxError);
  CHECK(dimacs_code("p cnf 1 2\n1 0\n") == ErrorCode::SyntaxError);
  CHECK(dimacs_code("p dnf 1 1\n1 0\n") == ErrorCode::SyntaxError);
  CHECK(dimacs_code("") == ErrorCode::SyntaxError);
  try {
    (void) parse_dimacs("c\np cnf 1 1\n1 0\n5 0\n");
  } catch (Error const& err) {
    CHECK(std::string(err.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("SAT oracle", "[reduction][sat]") {
  CHECK(sat_oracle(cnf(1, {{1}})));
  CHECK_FALSE(sat_oracle(cnf(1, {{1}, {-1}})));
  CHECK_FALSE(sat_oracle(cnf(2, {{1, 2}, {-1}, {-2}})));
  CHECK(sat_solve(cnf(2, {{2}})) == std::vector<bool>{false, true});
  try {
    (void) sat_oracle(cnf(21, {{1}}));
    FAIL("expected TooManyVariables");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::TooManyVariables);
  }
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    SatInstance const s = oracle::random_cnf(rng, 6, 8);
    CHECK(sat_oracle(s) == oracle::sat_by_truth_table(s));
  }
}

TEST_CASE("the gadget for a single clause", "[reduction]") {
  Band const            S9  = catalog::s9();
  Witness const         w{5, 2, 1, 4, 0};
  ReductionOutput const out = sat_to_smp(cnf(1, {{1}}), S9, w);
  GenSet const&         A   = out.instance.generators;
  CHECK(A.arity == 3);
  REQUIRE(A.size() == 4);
  CHECK(out.instance.target == T({8, 8, 8}));
  CHECK(A[out.u()] == T({6, 6, 6}));
  CHECK(A[out.v()] == T({4, 5, 5}));
  CHECK(A[out.a(1, false)] == T({1, 2, 3}));
  CHECK(A[out.a(1, true)] == T({3, 3, 2}));
  CHECK(out.roles == std::vector<std::string>{"u", "v", "a1^0", "a1^1"});

  auto const yes = assignment_to_word(out, {true});
  CHECK(yes == std::vector<std::size_t>{0, 3, 1});
  CHECK(verify_word(S9, A, yes, out.instance.target));
  CHECK(word_to_assignment(S9, out, yes) == std::vector<bool>{true});
  CHECK(word_to_assignment(S9, out, {0, 3, 3, 1}) == std::vector<bool>{true});

  auto const no = assignment_to_word(out, {false});
  CHECK_FALSE(verify_word(S9, A, no, out.instance.target));
  Tuple const p = mul(S9, mul(S9, A[0], A[2]), A[1]);
  CHECK(p[0] + 1 == 9);
  CHECK(p[0] == S9(S9(w.d, w.x), w.e));
  try {
    (void) word_to_assignment(S9, out, no);
    FAIL("expected NotAWitnessingWord");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotAWitnessingWord);
  }

  // The default band gives the same tuples.
  ReductionOutput const t9 = sat_to_smp(cnf(1, {{1}}));
  CHECK(t9.instance.generators.members.size() == 4);
  CHECK(member_closure(construct_forbidden_band(ForbiddenCase::T9), t9.instance.generators,
                       t9.instance.target));
  try {
    (void) sat_to_smp(cnf(1, {{1}}), S9, Witness{0, 0, 0, 0, 0});
    FAIL("expected NotAWitness");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotAWitness);
  }
}

TEST_CASE("unsatisfiable hand instances", "[reduction]") {
  ReductionOutput const out = sat_to_smp(cnf(1, {{1}, {-1}}));
  Band const            T9  = construct_forbidden_band(ForbiddenCase::T9);
  CHECK_FALSE(member_closure(T9, out.instance.generators, out.instance.target));

  auto sat       = parse_dimacs("p cnf 1 2\n1 0\n0\n");
  auto const emp = sat_to_smp(sat);
  CHECK_FALSE(member_closure(T9, emp.instance.generators, emp.instance.target));
}

TEST_CASE("unused variables", "[reduction]") {
  SatInstance const    s = cnf(3, {{1, -3}, {3}});
  ReductionOutput const out = sat_to_smp(s);
  CHECK(out.k == 2);
  CHECK(out.original_k == 3);
  CHECK(out.original == std::vector<std::size_t>{1, 3});
  CHECK(out.renumbered == std::vector<std::size_t>{1, 0, 2});
  CHECK(out.instance.generators.arity == 2 + 2 * 2);
  Band const T9 = construct_forbidden_band(ForbiddenCase::T9);
  auto const w  = assignment_to_word(out, {true, true, true});
  CHECK(verify_word(T9, out.instance.generators, w, out.instance.target));
  CHECK(word_to_assignment(T9, out, w) == std::vector<bool>{true, false, true});
  try {
    (void) sat_to_smp(s, ReductionOptions{false});
    FAIL("expected UnusedVariable");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::UnusedVariable);
  }
  CHECK_NOTHROW(sat_to_smp(cnf(1, {{1}}), ReductionOptions{false}));
}

TEST_CASE("reduction equivalence on random formulas", "[reduction][property]") {
  std::mt19937 rng(7);
  Band const   T9 = construct_forbidden_band(ForbiddenCase::T9);
  for (int it = 0; it < 40; ++it) {
    SatInstance const     s   = oracle::random_cnf(rng, 4, 5);
    ReductionOutput const out = sat_to_smp(s);
    GenSet const&         A   = out.instance.generators;
    CHECK(A.arity == s.clauses.size() + 2 * out.k);
    CHECK(A.size() == 2 * out.k + 2);
    for (std::size_t i = 0; i < A.arity; ++i) {
      CHECK(out.instance.target[i] == T9(out.witness.d, out.witness.e));
      CHECK(A[0][i] == out.witness.d);
    }
    bool const sat = oracle::sat_by_truth_table(s);
    auto const w   = witness_word(T9, A, out.instance.target);
    CHECK(w.has_value() == sat);
    if (w) {
      auto const z = word_to_assignment(T9, out, *w);
      CHECK(satisfies(s, z));
      auto const z0 = sat_solve(s);
      REQUIRE(z0);
      CHECK(verify_word(T9, A, assignment_to_word(out, *z0), out.instance.target));
    }
    // Every assignment gives a witnessing word exactly when it satisfies s.
    for (std::size_t bits = 0; bits < (std::size_t(1) << s.k); ++bits) {
      std::vector<bool> z(s.k);
      for (std::size_t j = 0; j < s.k; ++j) {
        z[j] = (bits >> j) & 1;
      }
      CHECK(verify_word(T9, A, assignment_to_word(out, z), out.instance.target)
            == satisfies(s, z));
    }
  }
}

TEST_CASE("gadgets in other bands", "[reduction][property]") {
  std::mt19937 rng(9);
  std::vector<Band> hosts{catalog::s9(), dual(catalog::s9()),
                          construct_forbidden_band(ForbiddenCase::T13a),
                          dual(construct_forbidden_band(ForbiddenCase::T13b))};
  for (Band const& B : hosts) {
    for (int it = 0; it < 6; ++it) {
      SatInstance const     s   = oracle::random_cnf(rng, 3, 3);
      ReductionOutput const out = sat_to_smp_in(s, B);
      CHECK(out.reversed == satisfies_lambda(B).holds);
      CHECK(member_closure(B, out.instance.generators, out.instance.target)
            == oracle::sat_by_truth_table(s));
      if (auto z = sat_solve(s)) {
        CHECK(verify_word(B, out.instance.generators, assignment_to_word(out, *z),
                          out.instance.target));
      }
    }
  }
  try {
    (void) sat_to_smp_in(cnf(1, {{1}}), catalog::s10());
    FAIL("expected NotAWitness");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotAWitness);
  }
}

TEST_CASE("witnessing words extract satisfying assignments", "[reduction][property]") {
  Band const T9 = construct_forbidden_band(ForbiddenCase::T9);
  std::vector<SatInstance> const formulas{cnf(1, {{1}}), cnf(1, {{-1}}),
                                          cnf(2, {{1, 2}}), cnf(2, {{1}, {-2}}),
                                          cnf(2, {{1, -2}, {-1, 2}})};
  std::size_t witnessing = 0, minimal_form = 0;
  for (SatInstance const& s : formulas) {
    ReductionOutput const out = sat_to_smp(s);
    GenSet const&         A   = out.instance.generators;
    // Arbitrary words, u and v may occur anywhere.
    for_each_word(A.size(), 6, [&](std::vector<std::size_t> const& w) {
      if (!verify_word(T9, A, w, out.instance.target)) {
        return;
      }
      ++witnessing;
      CHECK(satisfies(s, word_to_assignment(T9, out, w)));
    });
    // Words u g_1 ... g_l v with every g_i some a_j^z never use both a_j^0
    // and a_j^1.
    for_each_word(A.size() - 2, 6, [&](std::vector<std::size_t> const& g) {
      std::vector<std::size_t> w{out.u()};
      for (std::size_t i : g) {
        w.push_back(i + 2);
      }
      w.push_back(out.v());
      if (!verify_word(T9, A, w, out.instance.target)) {
        return;
      }
      ++minimal_form;
      for (std::size_t j = 1; j <= out.k; ++j) {
        bool const zero = std::find(w.begin(), w.end(), out.a(j, false)) != w.end();
        bool const one  = std::find(w.begin(), w.end(), out.a(j, true)) != w.end();
        CHECK_FALSE((zero && one));
      }
    });
  }
  CHECK(witnessing > 0);
  CHECK(minimal_form > 0);
}

TEST_CASE("extraction from reversed gadgets", "[reduction]") {
  Band const            D   = dual(catalog::s9());
  SatInstance const     s   = cnf(2, {{1, -2}, {2}});
  ReductionOutput const out = sat_to_smp_in(s, D);
  REQUIRE(out.reversed);
  auto const w = witness_word(D, out.instance.generators, out.instance.target);
  REQUIRE(w);
  CHECK(satisfies(s, word_to_assignment(D, out, *w)));
  auto const direct = assignment_to_word(out, {true, true});
  CHECK(word_to_assignment(D, out, direct) == std::vector<bool>{true, true});
}
