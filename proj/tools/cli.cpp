#include "cli.hpp"

#include <algorithm>  // for max, min
#include <atomic>     // for atomic
#include <cstdlib>    // for getenv
#include <fstream>    // for ifstream, ofstream
#include <optional>   // for optional
#include <random>     // for mt19937_64, uniform_int_distribution
#include <sstream>    // for ostringstream
#include <string>     // for string
#include <thread>     // for thread
#include <vector>     // for vector

#include "CLI11.hpp"
#include "json.hpp"

#include "bandsmp.hpp"

namespace bandsmp::cli {

  namespace {

    using json = nlohmann::json;

    struct UsageError : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    struct Globals {
      bool          json_out = false;
      std::uint64_t seed     = 0;
    };

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw Error(ErrorCode::IoError, "cannot read '" + path + "'");
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }

    void write_file(std::string const& path, std::string const& text) {
      std::ofstream out(path, std::ios::binary);
      if (!out || !(out << text)) {
        throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
      }
    }

    struct BandSource {
      std::string file;
      std::string catalog;

      void add_to(CLI::App* sub) {
        auto* f = sub->add_option("--band", file, "Band table file (text or JSON)");
        auto* c = sub->add_option("--catalog", catalog, "Catalog band name");
        f->excludes(c);
      }

      [[nodiscard]] bool given() const {
        return !file.empty() || !catalog.empty();
      }

      [[nodiscard]] Band load() const {
        if (!file.empty()) {
          return io::parse_band(read_file(file), file);
        }
        if (!catalog.empty()) {
          return catalog_band(catalog);
        }
        throw UsageError("one of --band or --catalog is required");
      }
    };

    std::string join(std::vector<std::string> const& parts) {
      std::string out;
      for (auto const& p : parts) {
        out += (out.empty() ? "" : " ") + p;
      }
      return out;
    }

    std::string label_list(std::vector<std::size_t> const& elements) {
      std::string out;
      for (auto a : elements) {
        out += (out.empty() ? "" : " ") + std::to_string(a + 1);
      }
      return out;
    }

    json witness_json(std::optional<Witness> const& w) {
      if (!w) {
        return nullptr;
      }
      return {{"d", w->d + 1}, {"e", w->e + 1}, {"x", w->x + 1}, {"y", w->y + 1}, {"h", w->h + 1}};
    }

    // Classes of the equivalence rel, each listed in ascending order.
    std::vector<std::vector<std::size_t>> classes(Band const& band, Relation rel) {
      std::vector<std::vector<std::size_t>> out;
      std::vector<bool>                     seen(band.order(), false);
      for (std::size_t a = 0; a < band.order(); ++a) {
        if (seen[a]) {
          continue;
        }
        out.emplace_back();
        for (std::size_t b = a; b < band.order(); ++b) {
          if (!seen[b] && band.equivalent(rel, a, b)) {
            seen[b] = true;
            out.back().push_back(b);
          }
        }
      }
      return out;
    }

    std::string format_classes(std::vector<std::vector<std::size_t>> const& cls) {
      std::string out;
      for (auto const& c : cls) {
        out += (out.empty() ? "{" : " {") + label_list(c) + "}";
      }
      return out;
    }

    json classes_json(std::vector<std::vector<std::size_t>> const& cls) {
      json out = json::array();
      for (auto const& c : cls) {
        json row = json::array();
        for (auto a : c) {
          row.push_back(a + 1);
        }
        out.push_back(row);
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // validate, green, classify, catalog
    ////////////////////////////////////////////////////////////////////////

    int cmd_validate(Globals const& g, BandSource const& src, std::ostream& out) {
      Band const band = src.load();
      if (g.json_out) {
        out << json{{"valid", true}, {"order", band.order()}}.dump() << '\n';
      } else {
        out << "valid band of order " << band.order() << '\n';
      }
      return exit_member;
    }

    int cmd_green(Globals const& g, BandSource const& src, std::ostream& out) {
      Band const band = src.load();
      auto const J = classes(band, Relation::J), L = classes(band, Relation::L),
                 R = classes(band, Relation::R);
      if (g.json_out) {
        out << json{{"order", band.order()},
                    {"height", band.height()},
                    {"J", classes_json(J)},
                    {"L", classes_json(L)},
                    {"R", classes_json(R)}}
                   .dump()
            << '\n';
      } else {
        out << "order " << band.order() << '\n'
            << "height " << band.height() << '\n'
            << "J-classes " << format_classes(J) << '\n'
            << "L-classes " << format_classes(L) << '\n'
            << "R-classes " << format_classes(R) << '\n';
      }
      return exit_member;
    }

    int cmd_classify(Globals const& g,
                     BandSource const& src,
                     bool              embeddings,
                     std::ostream&     out) {
      Band const           band = src.load();
      Classification const c    = classify(band);
      std::optional<ForbiddenReport> report;
      if (embeddings) {
        report = embeds_forbidden(band);
      }
      if (g.json_out) {
        json j{{"verdict", to_string(c.verdict)},
               {"lambda_witness", witness_json(c.lambda_witness)},
               {"lambda_dual_witness", witness_json(c.lambda_dual_witness)}};
        if (report) {
          json entries = json::array();
          for (auto const& e : report->entries) {
            json map = nullptr;
            if (e.map) {
              map = json::array();
              for (auto a : *e.map) {
                map.push_back(a + 1);
              }
            }
            entries.push_back({{"band", to_string(e.which)},
                               {"into", e.into_dual ? "dual" : "band"},
                               {"map", map}});
          }
          j["embeddings"] = entries;
        }
        out << j.dump() << '\n';
        return exit_member;
      }
      out << to_string(c.verdict) << '\n';
      if (c.lambda_witness) {
        out << "lambda witness: " << *c.lambda_witness << '\n';
      }
      if (c.lambda_dual_witness) {
        out << "dual lambda witness: " << *c.lambda_dual_witness << '\n';
      }
      if (report) {
        for (auto const& e : report->entries) {
          out << to_string(e.which) << " into " << (e.into_dual ? "dual: " : "band: ")
              << (e.map ? label_list(*e.map) : "none") << '\n';
        }
      }
      return exit_member;
    }

    int cmd_catalog(Globals const&     g,
                    std::string const& name,
                    bool               list,
                    std::ostream&      out) {
      if (list || name.empty()) {
        if (g.json_out) {
          out << json(catalog::names()).dump() << '\n';
        } else {
          for (auto const& n : catalog::names()) {
            out << n << '\n';
          }
        }
        return exit_member;
      }
      Band const band = catalog_band(name);
      if (g.json_out) {
        out << io::band_to_json(band).dump() << '\n';
      } else {
        out << io::format_band(band);
      }
      return exit_member;
    }

    ////////////////////////////////////////////////////////////////////////
    // smp
    ////////////////////////////////////////////////////////////////////////

    struct SmpArgs {
      BandSource               band;
      std::vector<std::string> files;
      std::vector<std::string> inlines;
      std::string              algo = "auto";
      bool                     force = false;
      std::optional<std::size_t> cap;
      bool                     stats = false;
      std::size_t              jobs  = 1;
    };

    struct Report {
      int         code = exit_error;
      std::string text;
      json        j;
    };

    std::size_t effective_cap(std::optional<std::size_t> cap) {
      if (cap) {
        return *cap;
      }
      if (char const* env = std::getenv("BANDSMP_CAP")) {
        try {
          std::size_t pos = 0;
          auto const  v   = std::stoull(env, &pos);
          if (pos == std::string(env).size() && v > 0) {
            return v;
          }
        } catch (std::exception const&) {
        }
        throw UsageError("BANDSMP_CAP must be a positive integer");
      }
      return default_closure_cap;
    }

    json stats_json(SmpStats const& s, std::size_t bound) {
      return {{"infix_calls", s.infix_calls},
              {"infix_outer", s.infix_outer},
              {"infix_inner_total", s.infix_inner},
              {"infix_inner_max", s.infix_inner_max},
              {"suffix_calls", s.suffix_calls},
              {"suffix_loops_total", s.suffix_loops},
              {"suffix_loops_max", s.suffix_loops_max},
              {"bound", bound}};
    }

    void stats_text(std::ostream& os, SmpStats const& s, std::size_t bound) {
      os << "bound n(h-1): " << bound << '\n'
         << "cp-infix calls: " << s.infix_calls << '\n'
         << "cp-infix a0 tried: " << s.infix_outer << '\n'
         << "cp-infix inner total: " << s.infix_inner << '\n'
         << "cp-infix inner max: " << s.infix_inner_max << '\n'
         << "cp-suffix calls: " << s.suffix_calls << '\n'
         << "cp-suffix loops total: " << s.suffix_loops << '\n'
         << "cp-suffix loops max: " << s.suffix_loops_max << '\n';
    }

    // Membership of the certificate factors, confirmed by the closure
    // oracle when it fits in a small budget; true if it does not fit.
    bool member_closure_if_small(Band const&        band,
                                 SmpInstance const& inst,
                                 Tuple const&       x,
                                 Tuple const&       y) {
      constexpr std::size_t small = 200'000;
      try {
        Closure c(band, inst.generators);
        c.run(small);
        return c.find(x).has_value() && c.find(y).has_value();
      } catch (Error const&) {
        return true;
      }
    }

    Report decide_one(Band const&        band,
                      PolySolver*        poly,
                      Method             method,
                      SmpArgs const&     args,
                      std::size_t        cap,
                      std::string const& text) {
      Report             r;
      std::ostringstream os;
      try {
        SmpInstance const inst  = io::parse_instance(band, text);
        std::size_t const bound = loop_bound(band, inst.generators.arity);
        r.j["method"]           = to_string(method);
        if (method == Method::Poly) {
          SmpStats         stats;
          PolyResult const res = poly->decide(inst, &stats);
          r.code = res.answer == Answer::Yes  ? exit_member
                   : res.answer == Answer::No ? exit_negative
                                              : exit_error;
          os << to_string(res.answer) << '\n' << "method: poly\n";
          r.j["verdict"] = to_string(res.answer);
          if (args.stats) {
            stats_text(os, stats, bound);
            r.j["stats"] = stats_json(stats, bound);
            if (res.x) {
              os << "x: " << io::format_tuple(*res.x) << '\n';
              r.j["x"] = io::tuple_to_json(*res.x);
            }
            if (res.y) {
              os << "y: " << io::format_tuple(*res.y) << '\n';
              r.j["y"] = io::tuple_to_json(*res.y);
            }
            if (res.answer == Answer::Yes) {
              bool const ok = mul(band, *res.y, *res.x) == inst.target
                              && member_closure_if_small(band, inst, *res.x, *res.y);
              os << "check: y*x = b " << (ok ? "verified" : "FAILED") << '\n';
              r.j["verified"] = ok;
            }
          }
        } else {
          Closure closure(band, inst.generators);
          closure.run(cap, &inst.target);
          auto const found = closure.found();
          r.code           = found ? exit_member : exit_negative;
          os << (found ? "MEMBER" : "NON-MEMBER") << '\n' << "method: closure\n";
          r.j["verdict"] = found ? "MEMBER" : "NON-MEMBER";
          if (args.stats) {
            os << "closure tuples: " << closure.size() << '\n';
            r.j["closure_tuples"] = closure.size();
            if (found) {
              auto const         word = closure.word(*found);
              std::vector<std::size_t> labels;
              for (auto gidx : word) {
                labels.push_back(gidx + 1);
              }
              bool const ok = verify_word(band, inst.generators, word, inst.target);
              os << "word: " << io::format_word(labels) << '\n'
                 << "check: word evaluates to b " << (ok ? "verified" : "FAILED")
                 << '\n';
              r.j["word"]     = labels;
              r.j["verified"] = ok;
            }
          }
        }
      } catch (Error const& e) {
        r.code = exit_error;
        os << "error: " << e.what() << '\n';
        r.j    = {{"error", e.name()}, {"message", e.what()}};
      }
      r.text = os.str();
      return r;
    }

    int cmd_smp(Globals const& g,
                SmpArgs const& args,
                std::ostream&  out,
                std::ostream&  err) {
      Band const                band = args.band.load();
      std::vector<std::string>  texts;
      std::vector<std::string>  names;
      for (auto const& f : args.files) {
        texts.push_back(read_file(f));
        names.push_back(f);
      }
      for (std::size_t i = 0; i < args.inlines.size(); ++i) {
        texts.push_back(args.inlines[i]);
        names.push_back("inline " + std::to_string(i + 1));
      }
      if (texts.empty()) {
        throw UsageError("no instance given (use --instance or --inline)");
      }
      std::size_t const cap = effective_cap(args.cap);

      Method method = Method::Closure;
      if (args.algo == "poly") {
        method = Method::Poly;
      } else if (args.algo == "auto") {
        method = classify(band).tractable() ? Method::Poly : Method::Closure;
      }
      std::optional<PolySolver> poly;
      if (method == Method::Poly) {
        SmpOptions opts;
        opts.force = args.force;
        poly.emplace(band, opts);
      }

      std::vector<Report>      reports(texts.size());
      std::atomic<std::size_t> next{0};
      auto                     worker = [&] {
        for (std::size_t i = next++; i < texts.size(); i = next++) {
          reports[i] = decide_one(band, poly ? &*poly : nullptr, method, args, cap, texts[i]);
        }
      };
      std::size_t const jobs = std::max<std::size_t>(1, std::min(args.jobs, texts.size()));
      if (jobs == 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < jobs; ++t) {
          pool.emplace_back(worker);
        }
        for (auto& t : pool) {
          t.join();
        }
      }

      int code = exit_member;
      for (auto const& r : reports) {
        code = std::max(code, r.code);
      }
      bool const batch = texts.size() > 1;
      if (g.json_out) {
        if (batch) {
          json arr = json::array();
          for (std::size_t i = 0; i < reports.size(); ++i) {
            json j        = reports[i].j;
            j["instance"] = names[i];
            arr.push_back(j);
          }
          out << arr.dump() << '\n';
        } else {
          out << reports[0].j.dump() << '\n';
        }
      } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
          if (batch) {
            out << "== " << names[i] << '\n';
          }
          auto& sink = reports[i].text.starts_with("error: ") ? err : out;
          sink << reports[i].text;
        }
      }
      return code;
    }

    ////////////////////////////////////////////////////////////////////////
    // words
    ////////////////////////////////////////////////////////////////////////

    struct WordsArgs {
      std::vector<std::string> word;
      std::size_t              n = 0;
      std::uint64_t            k = 0;
      std::string              family;
      BandSource               band;
      std::vector<std::size_t> at;
      std::string              lhs;
      std::string              rhs;
      std::uint64_t            budget = default_identity_budget;
      std::size_t              length = 8;
      std::size_t              count  = 1;
    };

    int print_word(Globals const& g, Word const& w, std::ostream& out) {
      out << (g.json_out ? io::word_to_json(w).dump() : io::format_word(w)) << '\n';
      return exit_member;
    }

    int cmd_words(Globals const&     g,
                  std::string const& op,
                  WordsArgs const&   a,
                  std::ostream&      out) {
      Word const w = io::parse_word(join(a.word));
      if (op == "content") {
        return print_word(g, content(w), out);
      } else if (op == "s") {
        return print_word(g, left_cut_s(w), out);
      } else if (op == "sigma") {
        return print_word(g, sigma(w), out);
      } else if (op == "dual") {
        return print_word(g, dual_word(w), out);
      } else if (op == "h") {
        return print_word(g, h_n(a.n, w), out);
      } else if (op == "p") {
        auto const p = length_bound_p(a.n, a.k);
        out << (g.json_out ? json(p).dump() : std::to_string(p)) << '\n';
        return exit_member;
      } else if (op == "ghi") {
        if (a.family != "G" && a.family != "H" && a.family != "I") {
          throw UsageError("family must be G, H or I");
        }
        WordFamily const f = a.family == "G"   ? WordFamily::G
                             : a.family == "H" ? WordFamily::H
                                               : WordFamily::I;
        return print_word(g, ghi_word(f, a.n), out);
      } else if (op == "eval") {
        Band const                band = a.band.load();
        std::vector<element_type> point;
        for (auto v : a.at) {
          if (v == 0) {
            throw Error(ErrorCode::OutOfRange, "element labels start at 1");
          }
          point.push_back(static_cast<element_type>(v - 1));
        }
        auto const value = eval_word(band, w, point) + 1;
        out << (g.json_out ? json(value).dump() : std::to_string(value)) << '\n';
        return exit_member;
      } else if (op == "check") {
        Band const          band = a.band.load();
        Identity const      id{io::parse_word(a.lhs), io::parse_word(a.rhs)};
        IdentityCheck const res = satisfies_identity(band, id, a.budget);
        std::vector<std::size_t> point;
        for (auto v : content(concat(id.lhs, id.rhs))) {
          point.push_back(v);
        }
        if (g.json_out) {
          json cx = nullptr;
          if (!res.holds) {
            cx = json::object();
            for (auto v : point) {
              cx["x" + std::to_string(v)] = res.counterexample[v - 1] + 1;
            }
          }
          out << json{{"holds", res.holds}, {"counterexample", cx}}.dump() << '\n';
        } else if (res.holds) {
          out << "HOLDS\n";
        } else {
          out << "FAILS at";
          for (auto v : point) {
            out << " x" << v << '=' << res.counterexample[v - 1] + 1;
          }
          out << '\n';
        }
        return res.holds ? exit_member : exit_negative;
      } else if (op == "random") {
        if (a.k == 0 || a.length == 0) {
          throw UsageError("--k and --length must be positive");
        }
        std::mt19937_64                            rng(g.seed);
        std::uniform_int_distribution<std::size_t> var(1, a.k);
        json                                       all = json::array();
        for (std::size_t i = 0; i < a.count; ++i) {
          Word r(a.length);
          for (auto& v : r) {
            v = var(rng);
          }
          if (g.json_out) {
            all.push_back(r);
          } else {
            out << io::format_word(r) << '\n';
          }
        }
        if (g.json_out) {
          out << all.dump() << '\n';
        }
        return exit_member;
      }
      throw UsageError("unknown words operation");
    }

    ////////////////////////////////////////////////////////////////////////
    // reduce
    ////////////////////////////////////////////////////////////////////////

    int cmd_reduce(Globals const&     g,
                   std::string const& cnf,
                   BandSource const&  src,
                   std::string const& output,
                   std::string const& roles_file,
                   std::ostream&      out) {
      SatInstance const sat = parse_dimacs(read_file(cnf));
      ReductionOutput   red;
      if (src.given()) {
        red = sat_to_smp_in(sat, src.load());
      } else {
        red = sat_to_smp(sat);
      }
      std::string const instance = io::format_instance(red.instance);
      std::ostringstream roles;
      roles << "# generator number (line number minus 1) and role\n";
      for (std::size_t i = 0; i < red.roles.size(); ++i) {
        roles << i + 1 << ' ' << red.roles[i] << '\n';
      }
      roles << "target b\n"
            << "reversed " << (red.reversed ? "yes" : "no") << '\n';
      for (std::size_t j = 0; j < red.original.size(); ++j) {
        roles << "var " << red.original[j] << " -> " << j + 1 << '\n';
      }
      if (!roles_file.empty()) {
        write_file(roles_file, roles.str());
      }
      if (!output.empty()) {
        write_file(output, instance);
      }
      if (g.json_out) {
        json j{{"arity", red.instance.generators.arity},
               {"generators", red.instance.generators.size()},
               {"clauses", red.clauses},
               {"variables", red.k},
               {"reversed", red.reversed},
               {"roles", red.roles},
               {"witness", witness_json(red.witness)},
               {"unsatisfiable_marker", sat.has_empty_clause}};
        if (output.empty()) {
          j["instance"] = io::instance_to_json(red.instance);
        }
        out << j.dump() << '\n';
      } else if (output.empty()) {
        out << instance;
      } else {
        out << "wrote instance of arity " << red.instance.generators.arity << " with "
            << red.instance.generators.size() << " generators to " << output << '\n';
      }
      return exit_member;
    }

  }  // namespace

  int run(std::vector<std::string> const& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Subpower membership for finite bands", "bandsmp"};
    app.require_subcommand(1, 1);
    Globals g;
    app.add_flag("--json", g.json_out, "Machine-readable JSON output");
    app.add_option("--seed", g.seed, "Seed for randomized operations")->capture_default_str();

    BandSource validate_src, green_src, classify_src;
    bool       embeddings = false;
    auto* validate = app.add_subcommand("validate", "Check a multiplication table");
    validate_src.add_to(validate);
    auto* green = app.add_subcommand("green", "Print Green's classes and height");
    green_src.add_to(green);
    auto* classify_cmd = app.add_subcommand("classify", "TRACTABLE or NP-COMPLETE");
    classify_src.add_to(classify_cmd);
    classify_cmd->add_flag("--embeddings", embeddings, "Also search for forbidden subbands");

    SmpArgs smp_args;
    auto*   smp = app.add_subcommand("smp", "Decide subpower membership");
    smp_args.band.add_to(smp);
    smp->add_option("--instance", smp_args.files, "Instance file (repeatable)");
    smp->add_option("--inline", smp_args.inlines, "Instance text, ';' separates lines");
    smp->add_option("--algo", smp_args.algo, "Decision procedure")
        ->check(CLI::IsMember({"auto", "poly", "closure"}))
        ->capture_default_str();
    smp->add_flag("--force", smp_args.force, "Run poly on bands failing lambda");
    smp->add_option("--cap", smp_args.cap, "Closure size cap")->check(CLI::PositiveNumber);
    smp->add_flag("--stats", smp_args.stats, "Print loop counters and certificates");
    smp->add_option("--jobs", smp_args.jobs, "Parallel instances")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    WordsArgs   words_args;
    std::string words_op;
    auto*       words = app.add_subcommand("words", "Word operations");
    words->require_subcommand(1, 1);
    auto add_word = [&](std::string const& name, std::string const& help, bool required) {
      auto* sub = words->add_subcommand(name, help);
      auto* opt = sub->add_option("word", words_args.word, "Word tokens");
      if (required) {
        opt->required();
      }
      sub->fallthrough();
      return sub;
    };
    add_word("content", "Variables of a word", false);
    add_word("s", "Longest prefix missing one variable", false);
    add_word("sigma", "Last variable by first occurrence", false);
    add_word("dual", "Reverse a word", false);
    add_word("h", "The normal-form map h_n", false)
        ->add_option("--n", words_args.n, "Index n >= 2")
        ->required();
    auto* p_cmd = words->add_subcommand("p", "Length bound p_n(k)");
    p_cmd->add_option("--n", words_args.n, "Index n >= 2")->required();
    p_cmd->add_option("--k", words_args.k, "Number of variables")->required();
    p_cmd->fallthrough();
    auto* ghi = words->add_subcommand("ghi", "The words G_n, H_n, I_n");
    ghi->add_option("family", words_args.family, "G, H or I")->required();
    ghi->add_option("n", words_args.n, "2, 3 or 4")->required();
    ghi->fallthrough();
    auto* eval = add_word("eval", "Evaluate a word in a band", true);
    words_args.band.add_to(eval);
    eval->add_option("--at", words_args.at, "Values of x1, x2, ... (1-based)")->required();
    auto* check = words->add_subcommand("check", "Exhaustive identity check");
    words_args.band.add_to(check);
    check->add_option("--lhs", words_args.lhs, "Left side")->required();
    check->add_option("--rhs", words_args.rhs, "Right side")->required();
    check->add_option("--budget", words_args.budget, "Maximum assignments scanned");
    check->fallthrough();
    auto* random_cmd = words->add_subcommand("random", "Random words (seeded)");
    random_cmd->add_option("--k", words_args.k, "Number of variables")->required();
    random_cmd->add_option("--length", words_args.length, "Word length")->capture_default_str();
    random_cmd->add_option("--count", words_args.count, "Number of words")->capture_default_str();
    random_cmd->fallthrough();

    std::string cnf, output, roles_file;
    BandSource  reduce_src;
    auto*       reduce = app.add_subcommand("reduce", "SAT to SMP reduction");
    reduce->add_option("--cnf", cnf, "DIMACS CNF file")->required();
    reduce_src.add_to(reduce);
    reduce->add_option("-o,--output", output, "Instance output file");
    reduce->add_option("--roles", roles_file, "Generator roles output file");

    std::string catalog_name;
    bool        list = false;
    auto*       catalog_cmd = app.add_subcommand("catalog", "Print a catalog band");
    catalog_cmd->add_option("name", catalog_name, "Band name");
    catalog_cmd->add_flag("--list", list, "List available names");

    for (auto* sub : app.get_subcommands({})) {
      sub->fallthrough();
    }
    words->fallthrough();

    try {
      std::vector<std::string> reversed(argv.rbegin(), argv.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_member : exit_usage;
    }

    try {
      if (validate->parsed()) {
        return cmd_validate(g, validate_src, out);
      } else if (green->parsed()) {
        return cmd_green(g, green_src, out);
      } else if (classify_cmd->parsed()) {
        return cmd_classify(g, classify_src, embeddings, out);
      } else if (smp->parsed()) {
        return cmd_smp(g, smp_args, out, err);
      } else if (words->parsed()) {
        for (auto* sub : words->get_subcommands({})) {
          if (sub->parsed()) {
            words_op = sub->get_name();
          }
        }
        return cmd_words(g, words_op, words_args, out);
      } else if (reduce->parsed()) {
        return cmd_reduce(g, cnf, reduce_src, output, roles_file, out);
      } else if (catalog_cmd->parsed()) {
        return cmd_catalog(g, catalog_name, list, out);
      }
    } catch (UsageError const& e) {
      err << "usage error: " << e.what() << '\n';
      return exit_usage;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_error;
    }
    return exit_usage;
  }

}  // namespace bandsmp::cli
