#pragma once

#include <string>

#include "x0quartic/classifier.hpp"

namespace x0quartic::report {

/// JSON renderings; field names follow the struct members. indent < 0 gives one line.
std::string to_json(oggfilter::OggCertificate const& c, int indent = -1);
std::string to_json(qflattice::EnumerationResult const& r, int indent = -1);
std::string to_json(classifier::TetraellipticVerdict const& v, int indent = -1);
std::string to_json(classifier::Classification const& c, int indent = -1);
std::string to_json(classifier::ScanReport const& r, int indent = -1);

/// Multi-line plain-text summaries for terminal output.
std::string describe(oggfilter::OggCertificate const& c);
std::string describe(classifier::TetraellipticVerdict const& v);
std::string describe(classifier::Classification const& c);
std::string describe(classifier::ScanReport const& r);

}  // namespace x0quartic::report
