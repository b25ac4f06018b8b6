#ifndef NCHODGE_REPORT_HPP
#define NCHODGE_REPORT_HPP

#include <string>

#include "json.hpp"
#include "nchodge/cyclic.hpp"
#include "nchodge/fdalgebra.hpp"
#include "nchodge/hodge.hpp"
#include "nchodge/verify.hpp"

namespace nchodge {

nlohmann::json to_json(const WedderburnData& w);
nlohmann::json to_json(const RankTable& t);
nlohmann::json to_json(const TriangleReport& r, const WedderburnData& w);
nlohmann::json to_json(const CyclicTables& t);
nlohmann::json to_json(const PeriodicityVerdict& v);
nlohmann::json to_json(const std::map<int, DimPair>& dims);

std::string to_text(const FDAlgebra& a, const WedderburnData& w);
std::string to_text(const TriangleReport& r);
std::string to_text(const CyclicTables& t);
std::string to_text(const std::map<int, DimPair>& dims, const std::string& title);

}  // namespace nchodge

#endif  // NCHODGE_REPORT_HPP
