#pragma once

namespace lvelab {

/* Entry point of the lvelab tool: parses one subcommand, runs it, and
   writes a single output file with an embedded version/config/seed header.
   Returns 0 on success, 2 on domain errors, 3 on capacity errors, 4 on
   resummation or quadrature failures, 64 on unparseable arguments. */
int run_cli(int argc, const char* const* argv);

}  // namespace lvelab
