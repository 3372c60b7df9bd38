#ifndef URS_REPORT_HPP
#define URS_REPORT_HPP

#include <string>

#include <json.hpp>

#include "urs/certifier.hpp"
#include "urs/families.hpp"
#include "urs/root_isolation.hpp"
#include "urs/sharing.hpp"

namespace urs {

// Machine reports use a fixed field order; golden tests byte-compare them.
using Json = nlohmann::ordered_json;

Json to_json(const Hypothesis& h);
Json to_json(const Certificate& c);
Json to_json(const Disk& d);
Json to_json(const RootCluster& c);
Json to_json(const CheckedCondition& c);
Json to_json(const FamilyInstance& inst);
Json to_json(const SymmetryReport& s);
Json to_json(const SharedSpectrum& s);

std::string render_human(const Certificate& c);
std::string render_human(const FamilyInstance& inst);
std::string render_human(const SymmetryReport& s);

}  // namespace urs

#endif
