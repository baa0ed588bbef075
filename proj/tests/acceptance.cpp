#include "e7dirac/acceptance.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <thread>

int main(int argc, char** argv) {
  e7dirac::AcceptanceOptions opt;
  opt.fixture_dir = E7DIRAC_FIXTURE_DIR;
  if (const char* env = std::getenv("DIRAC_FIXTURES")) opt.fixture_dir = env;
  opt.jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string fixtures = opt.fixture_dir.string();

  CLI::App app{"acceptance criteria 1-13"};
  app.add_option("--fixtures", fixtures);
  app.add_option("--jobs", opt.jobs)->check(CLI::PositiveNumber);
  app.add_option("--height-cap", opt.height_cap)->check(CLI::PositiveNumber);
  app.add_option("--coord-cap", opt.coord_cap)->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  opt.fixture_dir = fixtures;

  int failed = 0;
  e7dirac::run_acceptance(opt, [&](const e7dirac::CriterionResult& r) {
    failed += !r.passed;
    std::cout << e7dirac::format_result(r) << std::endl;
  });
  std::cout << (13 - failed) << "/13 criteria passed" << std::endl;
  return failed ? 1 : 0;
}
