// kaz <command> --input <file> [--seed N] [--k-max N] [--output <file>]

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kaz/cli.hpp"
#include "kaz/error.hpp"

namespace {

int emit(const kaz::cli::Json& doc, const std::string& output) {
  std::string text = kaz::cli::serialize(doc);
  if (output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(output, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "kaz: cannot write " << output << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact intersection indices, mixed volumes and representation-theory oracles"};
  std::string command, input, output;
  std::uint64_t seed = kaz::Rng::default_seed;
  std::int64_t k_max = 0;
  app.add_option("command", command, "one of: hull, mixed-volume, mixed-integral, weight-polytope, moment-polytope, "
                                     "kazarnovskii, bk, hilbert, completion, gc, newton-gl, tensor, prv-check, verify")
      ->required();
  app.add_option("--input", input, "input JSON document ('-' for stdin)")->required();
  app.add_option("--seed", seed, "seed for randomized commands");
  auto* kopt = app.add_option("--k-max", k_max, "largest k for the hilbert command")->check(CLI::PositiveNumber);
  app.add_option("--output", output, "write the result here instead of stdout");
  CLI11_PARSE(app, argc, argv);

  kaz::cli::RunOptions options;
  options.seed = seed;
  if (*kopt) options.k_max = k_max;

  try {
    kaz::cli::Json doc;
    if (input == "-") {
      doc = kaz::cli::Json::parse(std::cin);
    } else {
      std::ifstream in(input);
      if (!in) throw kaz::UserError("cannot read " + input);
      doc = kaz::cli::Json::parse(in);
    }
    return emit(kaz::cli::run(command, doc, options), output);
  } catch (const kaz::InvariantViolation& e) {
    std::cerr << "kaz: internal invariant violated: " << e.what() << "\n";
    emit(kaz::cli::error_document("internal_invariant_violated", e.what()), output);
    return 2;
  } catch (const kaz::cli::Json::exception& e) {
    std::cerr << "kaz: " << e.what() << "\n";
    emit(kaz::cli::error_document("user_error", std::string("malformed input: ") + e.what()), output);
    return 1;
  } catch (const kaz::UserError& e) {
    std::cerr << "kaz: " << e.what() << "\n";
    emit(kaz::cli::error_document("user_error", e.what()), output);
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "kaz: internal invariant violated: " << e.what() << "\n";
    emit(kaz::cli::error_document("internal_invariant_violated", e.what()), output);
    return 2;
  }
}
