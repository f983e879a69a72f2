#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fermat5/rational.hpp"

namespace fermat5::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kCheckFailed = 2 };

// Entry point shared by the binary and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// floor (round_up = false) or ceiling of q at `places` decimals, e.g. "2.558".
std::string to_decimal(const Rational& q, int places, bool round_up);

// Static scatter of the six points over sampled conic and quintic branches.
std::string render_svg(const Rational& t, const std::vector<std::pair<double, double>>& points);

}  // namespace fermat5::cli
