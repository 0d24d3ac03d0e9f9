#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace CLI {
class App;
}

namespace rbx::cli {

struct Global {
  bool allow_char2 = false;
  std::string format = "human";
  /// Set by long-running commands; the elapsed time goes to stderr.
  bool timing = false;
};

/// Options shared by most subcommands.
struct Inputs {
  std::string algebra;
  std::string builder;
  std::string field = "Q";
  std::string op;
  std::string tensor;
  std::optional<std::string> weight;
  std::size_t jobs = 1;
  std::string out;
  std::string algebra_out;
};

class Commands {
public:
  explicit Commands(Global& global) : global_(global) {}

  void install(CLI::App& app);
  /// Runs the selected subcommand and returns the exit code.
  int run() const { return action_ ? action_() : 2; }

private:
  void add_check(CLI::App& app);
  void add_construct(CLI::App& app);
  void add_convert(CLI::App& app);
  void add_gen_system(CLI::App& app);
  void add_enumerate(CLI::App& app);
  void add_classify(CLI::App& app);
  void add_verify(CLI::App& app);
  void add_info(CLI::App& app);

  Global& global_;
  Inputs in_;
  std::function<int()> action_;

  // construct
  std::string a1_, a2_, psi_, e_, lambda_ = "1", diag_, k_, l_, alpha_, s_, i_, d_;
  // convert
  std::string to_;
  bool sandwich_ = false;
  // gen-system
  bool reduced_ = false;
  int z_ = 1;
  // enumerate / classify
  std::string what_ = "rb", strategy_ = "pruned";
  bool transpose_ = false, scaling_ = false;
  // verify
  std::string claim_;
  std::uint64_t p_ = 3;
};

}  // namespace rbx::cli
