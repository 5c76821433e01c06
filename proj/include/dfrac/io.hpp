#ifndef DFRAC_IO_HPP
#define DFRAC_IO_HPP

#include <iosfwd>
#include <string>

#include "dfrac/grid.hpp"
#include "dfrac/inequalities.hpp"
#include "dfrac/solver.hpp"

namespace dfrac {

/// Shortest round-trip-exact decimal rendering of a double (17 significant
/// digits); used for every number the CLI emits so reruns are byte-identical.
std::string format_number(double v);

// GridSeq: CSV with header `offset,value`, JSON object
// {family, a, nu, values}.
void write_grid_csv(std::ostream& os, const GridSeq& seq);
GridSeq read_grid_csv(std::istream& is, GridFamily family, FracParams params);

std::string grid_to_json(const GridSeq& seq);
GridSeq grid_from_json(const std::string& text);

/// IvpSpec JSON: {a, nu, x0, y: number|number[], z: number|number[], horizon}.
IvpSpec ivp_from_json(const std::string& text);

std::string sweep_report_to_json(const SweepReport& report);
void write_violations_csv(std::ostream& os, const SweepReport& report);

}  // namespace dfrac

#endif
