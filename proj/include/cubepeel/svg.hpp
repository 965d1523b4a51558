#ifndef CUBEPEEL_SVG_HPP
#define CUBEPEEL_SVG_HPP

#include "cubepeel/arrangement.hpp"

#include <string>

namespace cubepeel {

// Writes overview.svg plus one snapshot per peel event into `dir`.
// Only planar geometry is drawn (euclidean d = 2 and the Klein disk);
// higher dimensions get a note instead of pictures.
void write_sweep_svgs(const Arrangement& a, const CellEnumeration& enumeration,
                      const PeelingSequence& seq, const std::string& dir);

} // namespace cubepeel

#endif
