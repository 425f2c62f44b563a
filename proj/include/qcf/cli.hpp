#ifndef QCF_CLI_HPP
#define QCF_CLI_HPP

#include <ostream>

namespace qcf {

/// Entry point of the `qcf` tool. Returns 0 iff every case passed, 1 on a
/// failed case and 2 on a usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcf

#endif
