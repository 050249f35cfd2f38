//
// ... Standard header files
//
#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

//
// ... External header files
//
#include <CLI11.hpp>

//
// ... chordext header files
//
#include <chordext/cli.hpp>
#include <chordext/io.hpp>
#include <chordext/random.hpp>

namespace chordext::cli {

  namespace {

    using io::json;

    int
    exit_code(Error_kind kind)
    {
      switch (kind) {
        case Error_kind::not_chordal:
        case Error_kind::not_psd:
        case Error_kind::not_partially_positive:
        case Error_kind::no_completion:
        case Error_kind::no_convergence:
        case Error_kind::not_chordal_subset:
        case Error_kind::not_positive_definite:
          return exit_infeasible;
        case Error_kind::too_large:
          return exit_too_large;
        default:
          return exit_malformed;
      }
    }

    json
    error_document(std::string_view name, std::string const& message)
    {
      return json{{"error", std::string(name)}, {"message", message}};
    }

    struct Options {
      std::optional<double> tol;
      std::uint64_t seed = 1;
      bool pretty = false;
    };

    // Randomized soundness sweep over chordal completions and
    // decompositions.
    json
    self_test(std::uint64_t seed, int cases, std::optional<double> tol)
    {
      Rng rng(seed);
      int failures = 0;
      for (int k = 0; k < cases; ++k) {
        auto n = std::uniform_int_distribution<int>(1, 8)(rng);
        auto d = std::uniform_int_distribution<int>(1, 2)(rng);
        auto pattern = random_chordal_pattern(rng, n);
        auto full = random_psd(rng, n * d, std::uniform_int_distribution<int>(1, n * d)(rng));
        auto partial = PartialHermitianMatrix::restrict(full, pattern, d);
        try {
          auto result = positive_completion(partial, tol);
          if (!verify_extension(partial, result.matrix, tol)) ++failures;

          auto t = random_psd_on(rng, pattern);
          auto factors = rank_one_positive_decomposition(t, pattern, tol);
          auto diff = (outer_sum(factors, n).matrix() - t.matrix()).max_abs();
          if (diff > 1e-8 * (1.0 + t.max_abs())) ++failures;
        } catch (Error const&) {
          ++failures;
        }
      }
      return json{{"seed", seed}, {"cases", cases}, {"failures", failures}};
    }

  } // end of unnamed namespace

  int
  run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
  {
    CLI::App app{"Chordal positive completion and positive-definite extension toolkit",
                 "chordext"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    double tol_value = 0.0;
    auto* tol_opt = app.add_option("--tol", tol_value,
                                   "Absolute tolerance for PSD checks (default: relative)");
    app.add_option("--seed", opts.seed, "Seed for randomized self-tests");
    app.add_flag("--pretty", opts.pretty, "Indent the JSON output");

    std::function<json()> action;
    std::vector<std::string> files(3);
    int block_size = 1;
    int depth = 1;
    int cases = 50;
    std::vector<std::string> sequence;

    auto command = [&](char const* name, char const* help,
                       std::vector<char const*> const& inputs,
                       std::function<json()> body) {
      auto* sub = app.add_subcommand(name, help);
      for (std::size_t k = 0; k < inputs.size(); ++k) {
        sub->add_option(inputs[k], files[k], "JSON input file")->required();
      }
      sub->callback([&action, body = std::move(body)] { action = body; });
      return sub;
    };

    auto pattern_in = [&](std::size_t k) { return io::pattern_from_json(io::read_file(files[k])); };
    auto partial_in = [&](std::size_t k) { return io::partial_from_json(io::read_file(files[k])); };
    auto matrix_in = [&](std::size_t k) { return io::matrix_from_json(io::read_file(files[k])); };
    auto group_in = [&](std::size_t k) { return io::group_from_json(io::read_file(files[k])); };

    command("chordal", "Decide whether a pattern is chordal", {"pattern"}, [&] {
      return json{{"chordal", is_chordal(pattern_in(0))}};
    });
    command("peo", "Perfect elimination order of a chordal pattern", {"pattern"}, [&] {
      return json{{"order", perfect_elimination_order(pattern_in(0)).order}};
    });
    command("cliques", "Maximal cliques of a pattern", {"pattern"}, [&] {
      auto cliques = maximal_cliques(pattern_in(0));
      auto list = json::array();
      for (auto const& c : cliques) list.push_back(c);
      return json{{"cliques", list}};
    });
    command("clique-tree", "Clique tree of a chordal pattern", {"pattern"}, [&] {
      auto tree = clique_tree(pattern_in(0));
      auto cliques = json::array();
      for (auto const& c : tree.cliques) cliques.push_back(c);
      auto edges = json::array();
      for (auto [a, b] : tree.tree_edges) edges.push_back({a, b});
      auto seps = json::array();
      for (auto const& s : tree.separators) seps.push_back(s);
      return json{{"cliques", cliques}, {"tree_edges", edges}, {"separators", seps}};
    });
    command("square-partition", "Greedy partition of the vertices into cliques", {"pattern"}, [&] {
      auto blocks = json::array();
      for (auto const& b : square_partition(pattern_in(0))) blocks.push_back(b);
      return json{{"blocks", blocks}};
    });
    command("partially-positive", "Check PSD-ness of every maximal clique block", {"partial"}, [&] {
      auto r = partially_positive(partial_in(0), opts.tol);
      return json{{"partially_positive", r.positive},
                  {"witness", r.witness ? json(*r.witness) : json(nullptr)}};
    });
    command("complete", "Positive completion along the clique tree", {"partial"}, [&] {
      return io::to_json(positive_completion(partial_in(0), opts.tol));
    });
    command("decompose", "Clique-supported rank-one decomposition of a PSD matrix",
            {"matrix", "pattern"}, [&] {
      auto factors = rank_one_positive_decomposition(matrix_in(0), pattern_in(1), opts.tol);
      auto list = json::array();
      for (auto const& f : factors) list.push_back(io::to_json(f));
      return json{{"factors", list}};
    });
    command("apply-mult", "Apply a partially defined Schur multiplier", {"partial", "matrix"}, [&] {
      return io::to_json(apply_multiplier(partial_in(0), matrix_in(1)));
    });
    auto* cb = command("cb-norm", "cb norm of a positive Schur multiplier", {"matrix"}, [&] {
      return json{{"cb_norm", cb_norm_positive(matrix_in(0), block_size, opts.tol)}};
    });
    cb->add_option("--block-size", block_size, "Block size d")->check(CLI::PositiveNumber);
    command("verify", "Check that a matrix is a positive extension", {"partial", "matrix"}, [&] {
      return json{{"valid", verify_extension(partial_in(0), matrix_in(1), opts.tol)}};
    });
    command("group-validate", "Validate a group multiplication table", {"group"}, [&] {
      auto g = group_in(0);
      return json{{"order", g.order()}, {"identity", g.identity()}, {"inverse", g.inverses()}};
    });
    command("star-pattern", "The pattern E* = {(s,t) : t s^-1 in E}", {"group", "subset"}, [&] {
      auto g = group_in(0);
      return io::to_json(star_pattern(g, io::subset_from_json(io::read_file(files[1]), g)));
    });
    command("chordal-subset", "Decide whether E is a chordal subset", {"group", "subset"}, [&] {
      auto g = group_in(0);
      return json{{"chordal_subset",
                   is_chordal_subset(g, io::subset_from_json(io::read_file(files[1]), g))}};
    });
    command("pd-check", "Decide whether u is positive definite on E",
            {"group", "subset", "function"}, [&] {
      auto g = group_in(0);
      auto e = io::subset_from_json(io::read_file(files[1]), g);
      auto u = io::function_from_json(io::read_file(files[2]));
      return json{{"positive_definite", is_positive_definite_on(g, e, u, opts.tol)}};
    });
    command("group-extend", "Positive definite extension of u from E to G",
            {"group", "subset", "function"}, [&] {
      auto g = group_in(0);
      auto e = io::subset_from_json(io::read_file(files[1]), g);
      auto u = io::function_from_json(io::read_file(files[2]));
      return io::to_json(positive_definite_extension(g, e, u, opts.tol));
    });
    command("circle-predicates", "Positivity-domain predicates of E* for E in the circle",
            {"circleset"}, [&] {
      auto r = is_positivity_domain_star(io::circle_from_json(io::read_file(files[0])));
      return json{{"symmetric", r.symmetric},
                  {"contains_zero", r.contains_zero},
                  {"closure_of_interior", r.closure_of_interior},
                  {"generated_by_squares", r.generated_by_squares},
                  {"positivity_domain", r.symmetric && r.contains_zero && r.closure_of_interior}};
    });

    auto* cexi = app.add_subcommand(
      "cexi",
      "Depth-N truncation {0} u [t_2n, t_2n-1] u [-t_2n-1, -t_2n] of a set whose E* "
      "contains no square around the diagonal. Finite truncations keep 0 isolated, "
      "so they are not closures of their interiors; the missing symmetric "
      "neighbourhood of 0 holds at every depth.");
    cexi->add_option("depth", depth, "Truncation depth N")->required()->check(CLI::PositiveNumber);
    cexi->add_option("--sequence", sequence,
                     "Decreasing sequence t_1, t_2, ... as rationals (default 1/n)")
        ->delimiter(',');
    cexi->callback([&] {
      action = [&] {
        std::optional<std::vector<Rational>> t;
        if (!sequence.empty()) {
          t.emplace();
          for (auto const& s : sequence) t->push_back(parse_rational(s));
        }
        return io::to_json(cexi_truncation(depth, t));
      };
    });

    auto* selftest = app.add_subcommand("self-test", "Randomized completion and decomposition checks");
    selftest->add_option("--cases", cases, "Number of random cases")->check(CLI::PositiveNumber);
    selftest->callback([&] { action = [&] { return self_test(opts.seed, cases, opts.tol); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      out << io::dump(error_document("UsageError", e.what())) << '\n';
      return exit_malformed;
    }

    if (*tol_opt) {
      if (!(tol_value >= 0.0)) {
        err << "error: --tol must be non-negative\n";
        out << io::dump(error_document("UsageError", "--tol must be non-negative")) << '\n';
        return exit_malformed;
      }
      opts.tol = tol_value;
    }

    try {
      out << io::dump(action(), opts.pretty) << '\n';
      return exit_ok;
    } catch (Error const& e) {
      err << "error: " << e.name() << ": " << e.what() << '\n';
      out << io::dump(error_document(e.name(), e.what())) << '\n';
      return exit_code(e.kind());
    } catch (io::json::exception const& e) {
      err << "error: MalformedInput: " << e.what() << '\n';
      out << io::dump(error_document("MalformedInput", e.what())) << '\n';
      return exit_malformed;
    }
  }

} // end of namespace chordext::cli
