#pragma once

#include <string>

#include "foldnet/network.hpp"
#include "foldnet/regions.hpp"
#include "foldnet/verification.hpp"

namespace foldnet {

/// Collapsed form: {"hidden_layers": [{"weights": [[..]..], "bias": [..]}..],
///                  "head": {"a":.., "b":.., "c":..}}
std::string network_to_json(const MlpNetwork& net);

/// Staged form adds a "stages" array with entries tagged "linear" / "relu".
std::string staged_to_json(const StagedNetwork& net);

/// Accepts either form; staged input is collapsed on load.
MlpNetwork network_from_json(const std::string& text);

/// Array of {"vertices": [[x,y]..], "pattern": ["0101",..], "pre_sign": [a,b,c]}.
std::string decomposition_to_json(const Decomposition& d);

std::string report_to_json(const VerificationReport& report);
std::string reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace foldnet
