// rbx: command-line front end.
// Exit codes: 0 success / property holds, 1 property false, 2 usage or input error.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "rbx/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"rbx: Rota-Baxter operators on finite-dimensional algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  rbx::cli::Global global;
  app.add_flag("--allow-char2", global.allow_char2, "Permit fields of characteristic 2");
  app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"human", "machine"}));

  rbx::cli::Commands commands(global);
  commands.install(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = 2;
  try {
    code = commands.run();
  } catch (const rbx::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = e.code() == rbx::ErrorCode::not_rb ? 1 : 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  if (global.timing) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    std::cerr << "time=" << dt.count() << "s\n";
  }
  return code;
}
