#pragma once

#include <string>

#include <json.hpp>

#include "sqdist/charpoly.hpp"
#include "sqdist/extremal.hpp"
#include "sqdist/oracle.hpp"
#include "sqdist/partitions.hpp"
#include "sqdist/spectrum.hpp"

namespace sqdist::io {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so printed floats are stable.
double round12(double x);

/// "p/q", or just "p" for integers.
std::string exact_string(const ExactRational& r);

Json to_json(const Partition& p);
Json to_json(const IntPolynomial& p);
Json to_json(const FactoredCharPoly& f);
Json to_json(const SpectrumReport& s);
Json to_json(const InertiaTriple& in);
Json to_json(const EnergyReport& e);
Json to_json(const RootBracket& r);
Json to_json(const ScanEntry& e);
Json to_json(const ScanReport& r);
Json to_json(const ChainReport& c);
Json to_json(const VerificationRecord& v);
Json summary_json(const SweepSummary& s);

/// One row per partition: partition, energy, radius, inertia.
std::string scan_csv(const ScanReport& r);
std::string chain_csv(const ChainReport& c);
std::string sweep_csv(const SweepSummary& s);

}  // namespace sqdist::io
