#pragma once

#include <string>
#include <utility>
#include <vector>

namespace svectkit {

using CheckResult = std::vector<std::pair<std::string, bool>>;

CheckResult check_picard();
CheckResult check_bundles();
CheckResult check_ktheory();
CheckResult check_coxzoo();
CheckResult check_tubular();

}  // namespace svectkit
