#pragma once

#include "qwalk/core/types.hpp"
#include "qwalk/nonabelian/links.hpp"

namespace qw {

// (C(delta_theta) (x) 1_N) blockdiag(U_+, U_-) (S (x) 1_N). Internal index = spin * N + a.
SpinorField nonabelian_step(const SpinorField& psi, const GroupLinkPair& links, double delta_theta);

}  // namespace qw
