#pragma once

#include "blocklab/abacus.hpp"
#include "blocklab/block.hpp"
#include "blocklab/decomposition.hpp"
#include "blocklab/pyramid.hpp"
#include "blocklab/subs.hpp"
#include "blocklab/sweep.hpp"

#include <json.hpp>

#include <string>

namespace blocklab {

nlohmann::json to_json(const Partition& lambda);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json abacus_json(const Abacus& a);
nlohmann::json pyramid_json(const Pyramid& py);

/// Core, weight, quotient and abacus drawing of a partition, parts written
/// out in full as on the command line.
std::string core_report_text(const Partition& lambda, int p);
nlohmann::json core_report_json(const Partition& lambda, int p);

/// The ∂ classes one per line, lex-ascending, p-singular members marked '*',
/// followed by the ceil labels of the regular members in the same order.
std::string partial_table_text(const BlockCatalog& cat);

std::string block_report_text(const BlockCatalog& cat);
nlohmann::json block_report_json(const BlockCatalog& cat);

std::string subs_report_text(const SubsW2& s, const DecompMatrix& full, const VerificationReport& verdict);
nlohmann::json subs_report_json(const SubsW2& s, const DecompMatrix& full, const VerificationReport& verdict);

nlohmann::json verification_json(const BlockCheck& check);
std::string sweep_summary_text(const SweepResult& result);
nlohmann::json sweep_json(const SweepResult& result);

nlohmann::json matrix_json(const DecompMatrix& m);

} // namespace blocklab
