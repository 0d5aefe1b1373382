#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gspeyer {

/// Entry point behind the gspeyer binary; testable in-process.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One line of the compute CSV: "g6,v,e,N2,g" (Appendix-style record).
std::string compute_record(const std::string& g6_token, int edge_cap = 64);

}  // namespace gspeyer
