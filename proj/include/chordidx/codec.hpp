#pragma once

#include <optional>
#include <string>

#include "chordidx/diagram.hpp"
#include "chordidx/homology.hpp"

namespace chordidx {

/// A diagram file: the diagram plus the optional `class` line.
struct DiagramFile {
  SurfaceDiagram diagram;
  std::optional<HomologyClass> alpha;
};

/// Reads the `genus` / `walk` / optional `class` format. Blank lines and lines
/// starting with '#' are skipped. Throws MalformedToken, DuplicatePassage,
/// SignMismatch, SideIndexOutOfRange, MissingGenusHeader, WrongLength,
/// NonInteger.
DiagramFile parse_diagram_file(const std::string& text);
SurfaceDiagram parse_diagram(const std::string& text);

/// "genus g\nwalk tok tok ..." with no trailing newline.
std::string serialize_diagram(const SurfaceDiagram& d);
std::string serialize_event(const Event& e, const SurfaceDiagram& d);

/// 2*genus whitespace-separated integers. Throws WrongLength, NonInteger.
HomologyClass parse_class(const std::string& text, int genus);

}  // namespace chordidx
