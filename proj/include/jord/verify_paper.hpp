#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace jord {

// One-shot battery over every construction the library ships: model axioms,
// the explicit isomorphism, the wreath/lift machinery, and the subalgebra
// data. Prints one line per claim (PASS / FAIL / DEVIATION), a deviations
// section when nonempty, and a summary line; output is byte-identical for a
// fixed seed regardless of thread count.
//
// `fixtures_dir` must contain k10-broken.json (the deliberately corrupted
// table used as the negative control); a missing or unreadable file throws
// std::invalid_argument with the path in the message.
//
// Returns 0 when no claim failed (deviations alone do not fail the run),
// 1 otherwise.
int run_verify_paper(std::ostream& out, std::uint64_t seed, const std::string& fixtures_dir,
                     bool json_format);

}  // namespace jord
