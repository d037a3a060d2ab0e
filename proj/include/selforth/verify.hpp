#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "selforth/criteria.hpp"

namespace selforth {

// Differential verification of the Hermitian-type criteria against the
// definitional brute force on the explicit image and trace codes.
//
// Instances cycle through GF(4)/GF(2), GF(9)/GF(3), GF(16)/GF(4) and
// GF(64)/GF(4) and mix three families: fully random codes (mostly negative
// verdicts), duplicated-coordinate codes (self-orthogonal by construction,
// so the brute force runs to completion), and zero-coordinate-sum orbits
// (image-positive but trace-negative under suitable bases).
struct VerifyOutcome {
    int instances = 0;
    int agreements = 0;
    std::vector<std::string> failures;

    bool all_agree() const { return agreements == instances; }
};

VerifyOutcome verify_against_oracle(std::uint64_t seed, int instances,
                                    std::uint64_t pair_guard = (1ull << 24));

} // namespace selforth
