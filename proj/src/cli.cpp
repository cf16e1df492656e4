// Copyright 2026 The monocount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "monocount/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "monocount/counting.hpp"
#include "monocount/freeinv.hpp"
#include "monocount/oracle.hpp"
#include "monocount/pperm.hpp"
#include "monocount/transform.hpp"

namespace monocount::cli {

  namespace {

    // Thrown for flag combinations that parse but make no sense.
    class UsageError : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    void emit(std::string const& text, std::string const& path, std::ostream& out) {
      if (path.empty()) {
        out << text;
        return;
      }
      std::ofstream file(path, std::ios::binary);
      if (!file) {
        throw std::runtime_error("cannot open " + path + " for writing");
      }
      file << text;
    }

    template <typename T>
    std::string join(std::vector<T> const& values) {
      std::string result = "[";
      for (std::size_t i = 0; i < values.size(); ++i) {
        result += (i > 0 ? ", " : "") + std::to_string(values[i]);
      }
      return result + "]";
    }

    struct CountArgs {
      std::string func;
      std::size_t n   = 0;
      std::size_t max = 0;
    };

    void cmd_count(CountArgs const& args,
                   bool             single,
                   std::ostream&    out) {
      std::map<std::string, count_type (*)(std::size_t)> const funcs
          = {{"s", element_order_count},
             {"t", monoid_type_count},
             {"i", inverse_monoid_type_count},
             {"semi-t", semigroup_type_count},
             {"semi-i", inverse_semigroup_type_count}};
      auto const fn = funcs.at(args.func);
      bool const semi = args.func.starts_with("semi");
      if (single) {
        if (semi && args.n == 0) {
          throw UsageError(args.func + " is defined for n >= 1");
        }
        out << fn(args.n) << '\n';
        return;
      }
      if (semi && args.max == 0) {
        throw UsageError(args.func + " is defined for n >= 1");
      }
      auto const table = count_table(args.max);
      for (auto const& row : table) {
        std::optional<count_type> value;
        if (args.func == "s") {
          value = row.element_orders;
        } else if (args.func == "t") {
          value = row.monoids;
        } else if (args.func == "i") {
          value = row.inverse_monoids;
        } else if (args.func == "semi-t") {
          value = row.semigroups;
        } else {
          value = row.inverse_semigroups;
        }
        if (value) {
          out << *value << '\n';
        }
      }
    }

    void cmd_classify(std::string const& kind,
                      std::string const& input,
                      std::ostream&      out) {
      if (kind == "transformation") {
        auto const f = parse_transformation(input);
        auto const tp = threshold_period(f);
        out << "degree: " << f.degree() << '\n'
            << "threshold: " << tp.threshold << '\n'
            << "period: " << tp.period << '\n'
            << "monoid_size: " << monogenic_monoid_size(f) << '\n';
        return;
      }
      auto const f      = parse_partial_perm(input);
      auto const orbits = orbit_decomposition(f);
      auto const type   = classify(f);
      out << "degree: " << f.degree() << '\n'
          << "chains: " << join(orbits.chains) << '\n'
          << "cycles: " << join(orbits.cycles) << '\n'
          << "chain_param: " << type.chain_param << '\n'
          << "cycle_param: " << type.cycle_param << '\n'
          << "size: " << snk_size(type.chain_param, type.cycle_param) << '\n';
    }

    void cmd_construct(std::size_t   threshold,
                       std::uint64_t period,
                       std::size_t   degree,
                       std::ostream& out) {
      if (period == 0) {
        throw UsageError("the period must be at least 1");
      }
      std::uint64_t const m
          = std::max<std::uint64_t>(minimal_permutation_degree(period), 1);
      if (m + threshold > degree) {
        throw UsageError("threshold " + std::to_string(threshold)
                         + " and period " + std::to_string(period)
                         + " are not realisable in degree "
                         + std::to_string(degree) + ", minimal degree "
                         + std::to_string(m + threshold));
      }
      auto const f = construct_generator(degree, threshold, permutation_of_order(period));
      out << to_string(f) << '\n';
    }

    void cmd_normal_form(std::size_t        n,
                         std::uint64_t      k,
                         std::string const& word,
                         std::ostream&      out) {
      auto const u = free_eval(parse_word(word));
      out << to_string(snk_normalize(snk_reduce(u, n, k))) << '\n';
    }

    struct VerifyArgs {
      std::size_t max_degree       = 0;
      std::size_t brute_max_degree = 3;
      std::size_t threads          = 0;
      std::string output;
    };

    int cmd_verify(VerifyArgs const& args, std::ostream& out) {
      if (args.max_degree < 1 || args.max_degree > oracle::max_sweep_degree) {
        throw UsageError("--max-degree must be between 1 and "
                         + std::to_string(oracle::max_sweep_degree));
      }
      oracle::SweepOptions opts;
      opts.threads                = args.threads;
      opts.brute_force_max_degree = args.brute_max_degree;

      using json = nlohmann::ordered_json;
      json report;
      report["max_degree"] = args.max_degree;
      bool all_match       = true;
      auto add             = [&](char const* key, oracle::EnumerationReport const& r) {
        report[key].push_back(json::parse(oracle::to_json(r)));
        all_match = all_match && r.match && r.slices_match.value_or(true)
                    && r.brute_force_agrees.value_or(true);
      };
      report["transformations"]           = json::array();
      report["partial_perms"]             = json::array();
      report["semigroup_transformations"] = json::array();
      report["semigroup_partial_perms"]   = json::array();
      for (std::size_t n = 1; n <= args.max_degree; ++n) {
        add("transformations", oracle::sweep_transformations(n, opts));
        add("partial_perms", oracle::sweep_partial_perms(n, opts));
        if (n <= oracle::max_semigroup_sweep_degree) {
          auto const semi = oracle::sweep_semigroup_types(n, opts);
          add("semigroup_transformations", semi.transformations);
          add("semigroup_partial_perms", semi.partial_perms);
        }
      }
      report["properties"] = json::array();
      for (auto const& p : oracle::run_property_suite(args.max_degree)) {
        json entry;
        entry["name"]   = p.name;
        entry["passed"] = p.passed;
        if (!p.passed) {
          entry["counterexample"] = p.detail;
        }
        report["properties"].push_back(entry);
        all_match = all_match && p.passed;
      }
      report["all_match"] = all_match;
      emit(report.dump(2) + "\n", args.output, out);
      return all_match ? 0 : 1;
    }

  }  // namespace

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Monogenic submonoids of T_n and inverse submonoids of I_n",
                 "monocount"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto*     count = app.add_subcommand("count", "Print s, t, i or a subsemigroup count");
    count->add_option("--func", count_args.func, "s | t | i | semi-t | semi-i")
        ->required()
        ->check(CLI::IsMember({"s", "t", "i", "semi-t", "semi-i"}));
    auto* count_n   = count->add_option("--n", count_args.n, "A single n");
    auto* count_max = count->add_option("--max", count_args.max, "All n up to this");
    count_n->excludes(count_max);
    count_max->excludes(count_n);

    std::size_t table_max    = 19;
    std::string table_format = "csv";
    std::string table_output;
    auto*       table = app.add_subcommand("table", "Emit the table of counts");
    table->add_option("--max", table_max, "Largest n")->capture_default_str();
    table->add_option("--format", table_format, "csv | json | md")
        ->check(CLI::IsMember({"csv", "json", "md"}))
        ->capture_default_str();
    table->add_option("-o,--output", table_output, "Write to a file");

    std::string kind;
    std::string input;
    auto*       classify_cmd = app.add_subcommand(
        "classify", "Classify the monoid generated by an element");
    classify_cmd->add_option("--kind", kind, "transformation | pperm")
        ->required()
        ->check(CLI::IsMember({"transformation", "pperm"}));
    classify_cmd->add_option("--input", input, "e.g. \"2 3 1 1\" or \"2 - 4 5 3\"")
        ->required();

    std::size_t   threshold = 0;
    std::uint64_t period    = 1;
    std::size_t   degree    = 0;
    auto*         construct = app.add_subcommand(
        "construct", "Build a transformation with a given threshold and period");
    construct->add_option("--threshold", threshold)->required();
    construct->add_option("--period", period)->required();
    construct->add_option("--degree", degree)->required();

    std::size_t   snk_n = 0;
    std::uint64_t snk_k = 1;
    std::string   word;
    auto*         normal_form = app.add_subcommand(
        "normal-form", "Normal form of a word over {x, X} in S_{n,k}");
    normal_form->add_option("--n", snk_n)->required();
    normal_form->add_option("--k", snk_k)->required()->check(CLI::PositiveNumber);
    normal_form->add_option("--word", word, "Letters x and X (inverse)")->required();

    std::string cayley_format = "csv";
    std::string cayley_output;
    std::size_t cayley_limit = default_cayley_limit;
    auto*       cayley = app.add_subcommand("cayley", "Multiplication table of S_{n,k}");
    cayley->add_option("--n", snk_n)->required();
    cayley->add_option("--k", snk_k)->required()->check(CLI::PositiveNumber);
    cayley->add_option("--format", cayley_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cayley->add_option("--limit", cayley_limit, "Largest n + k")->capture_default_str();
    cayley->add_option("-o,--output", cayley_output, "Write to a file");

    VerifyArgs verify_args;
    auto*      verify = app.add_subcommand(
        "verify", "Check every count and classification by exhaustive search");
    verify->add_option("--max-degree", verify_args.max_degree, "1 to 7")->required();
    verify->add_option("--brute-max-degree",
                       verify_args.brute_max_degree,
                       "Classify semigroup types by brute force up to this degree")
        ->capture_default_str();
    verify->add_option("--threads", verify_args.threads, "0 for all cores")
        ->capture_default_str();
    verify->add_option("-o,--output", verify_args.output, "Write to a file");

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      // --help and friends exit 0; every other parse failure is a usage
      // error.
      int const rc = app.exit(e, out, err);
      return rc == 0 ? 0 : 2;
    }

    try {
      if (count->parsed()) {
        if (count_n->count() == 0 && count_max->count() == 0) {
          throw UsageError("count needs --n or --max");
        }
        cmd_count(count_args, count_n->count() > 0, out);
      } else if (table->parsed()) {
        auto const format = table_format == "json" ? TableFormat::json
                            : table_format == "md" ? TableFormat::markdown
                                                   : TableFormat::csv;
        emit(format_table(count_table(table_max), format), table_output, out);
      } else if (classify_cmd->parsed()) {
        cmd_classify(kind, input, out);
      } else if (construct->parsed()) {
        cmd_construct(threshold, period, degree, out);
      } else if (normal_form->parsed()) {
        cmd_normal_form(snk_n, snk_k, word, out);
      } else if (cayley->parsed()) {
        auto const t = cayley_table(snk_n, snk_k, cayley_limit);
        emit(cayley_format == "json" ? to_json(t) : to_csv(t), cayley_output, out);
      } else if (verify->parsed()) {
        return cmd_verify(verify_args, out);
      }
    } catch (UsageError const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
    return 0;
  }

}  // namespace monocount::cli
