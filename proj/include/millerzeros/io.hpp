#pragma once

#include <string>

#include "json.hpp"
#include "millerzeros/certify.hpp"
#include "millerzeros/zeros.hpp"

namespace mz {

using json = nlohmann::ordered_json;

json to_json(const FormId& id);
json to_json(const IntegerSeries& s);
json to_json(const RationalSeries& s);
json to_json(const IntPolynomial& p);
json faber_json(const MillerForm& f);
json to_json(const RootInterval& r, int digits = 12);
json to_json(const AngleInterval& a);
json to_json(const ZeroReport& r);
json to_json(const BoundLedgerEntry& e);
json to_json(const MrlReport& r);
json to_json(const Thm2Row& r);
json to_json(const DistributionStats& d);

// decimal string of a rational, rounded to the given number of fractional digits
std::string decimal(const mpq_class& q, int digits);

}  // namespace mz
