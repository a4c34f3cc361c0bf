#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

int emit(const hadaq::cli::CommandResult& res, bool as_json) {
  if (as_json)
    std::cout << res.payload.dump(2) << '\n';
  else
    std::cout << res.human;
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hadamard transform / dead-zone quantization analysis"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the JSON payload instead of the table");

  hadaq::cli::TransformArgs targs;
  auto* t = app.add_subcommand("transform", "forward or inverse transform of vector files");
  t->add_option("--matrix", targs.matrix_spec, "sylvester:<k> | kron:<a>x<b> | file")->required();
  t->add_option("--dir", targs.direction, "fwd | inv")->required();
  t->add_option("--in", targs.input, "vector file, or - for stdin")->required();
  t->add_flag("--unscaled", targs.unscaled, "fwd only: emit Hx without dividing by n");

  hadaq::cli::PipelineArgs pargs;
  auto* p = app.add_subcommand("pipeline", "full transform/quantization round trip with trace");
  p->add_option("--matrix", pargs.matrix_spec)->required();
  p->add_option("--bank", pargs.bank, "bank JSON (inline or file)")->required();
  p->add_option("--in", pargs.input)->required();
  p->add_option("--register-width", pargs.register_width,
                "flag intermediates outside this signed bit width");

  hadaq::cli::BoundsArgs bargs;
  auto* b = app.add_subcommand("bounds", "closed-form error/magnitude bounds and bit width");
  b->add_option("--matrix", bargs.matrix_spec)->required();
  b->add_option("--bank", bargs.bank)->required();
  b->add_option("--xmax", bargs.xmax, "declared bound on |x|_inf")->required();

  hadaq::cli::NormArgs nargs;
  auto* n = app.add_subcommand("norm", "matrix norms, including brute-force |A|_{inf,1}");
  n->add_option("--matrix", nargs.matrix_spec)->required();
  n->add_option("--kind", nargs.kind, "inf1 | 1 | inf | 1inf | 2");
  n->add_flag("--long-run", nargs.long_run, "allow enumeration up to order 32");
  n->add_option("--threads", nargs.threads, "enumeration worker count (0 = all cores)");

  hadaq::cli::ExcessArgs eargs;
  auto* e = app.add_subcommand("excess", "excess, maximal class excess, and excess bounds");
  e->add_option("--matrix", eargs.matrix_spec)->required();
  e->add_flag("--long-run", eargs.long_run);
  e->add_option("--threads", eargs.threads);

  hadaq::cli::SearchArgs sargs;
  auto* s = app.add_subcommand("search", "empirical worst-case input search");
  s->add_option("--matrix", sargs.matrix_spec)->required();
  s->add_option("--bank", sargs.bank)->required();
  s->add_option("--objective", sargs.objective, "error | magnitude");
  s->add_option("--xmax", sargs.xmax)->required();
  s->add_option("--budget", sargs.budget);
  s->add_option("--seed", sargs.seed);
  s->add_option("--strategy", sargs.strategy, "random | coordinate-ascent | exhaustive");
  s->add_option("--seed-file", sargs.seed_file, "vectors evaluated before the strategy runs");
  s->add_option("--threads", sargs.threads);

  bool verify_long = false;
  auto* v = app.add_subcommand("verify", "run the built-in regression checks");
  v->add_flag("--long-run", verify_long, "include the order-32 norm check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }

  using hadaq::cli::CommandResult;
  CommandResult res;
  if (*t)
    res = hadaq::cli::cmd_transform(targs);
  else if (*p)
    res = hadaq::cli::cmd_pipeline(pargs);
  else if (*b)
    res = hadaq::cli::cmd_bounds(bargs);
  else if (*n)
    res = hadaq::cli::cmd_norm(nargs);
  else if (*e)
    res = hadaq::cli::cmd_excess(eargs);
  else if (*s)
    res = hadaq::cli::cmd_search(sargs);
  else if (*v)
    res = hadaq::cli::cmd_verify(verify_long);
  return emit(res, as_json);
}
