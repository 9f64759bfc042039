#ifndef QSG_GAUGE_IO_HPP
#define QSG_GAUGE_IO_HPP

#include <string>

#include "qsg/gauge.hpp"

namespace qsg {

// JSON form of a gauge potential: a list of records
//   {"edge": [a, b], "phase": x}
// with 1-based vertex labels and the phase for traversing a -> b.
std::string gauge_to_json(const GaugePotential& omega);

// Rebuilds the potential on the given host; every host edge must appear
// exactly once.  Throws ParseError or PathNotOnGraph.
GaugePotential gauge_from_json(const Graph& host, const std::string& text);

}  // namespace qsg

#endif
