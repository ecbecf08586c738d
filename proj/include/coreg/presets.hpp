// Built-in generator sets addressed by name: plane groups of every
// classification type, line groups, and pair groups on a product of lines.
// Every lookup re-closes the generators and checks the documented order, so
// a corrupted table cannot classify silently.

#pragma once

#include "coreg/projective.hpp"

namespace coreg {

struct Preset {
  std::string name;
  std::string surface;  // "p2", "p1" or "quadric"
  std::string doc;      // documented structure, shown by the preset listing
  size_t order = 0;     // documented projective order
};

// Stable listing of all built-ins.  The parametric families cyclic_<n> and
// dihedral_<order> are represented by one documented instance each; lookup
// accepts any admissible parameter.
const std::vector<Preset>& presets();

bool is_preset_name(const std::string& name);
Preset preset_info(const std::string& name);

// Generator matrices without closure (2x2 or 3x3 depending on the preset).
std::vector<CMat> preset_generators(const std::string& name);
// Pair generators of a quadric preset.
std::vector<QuadricElement> preset_pairs(const std::string& name);

// Closed groups; fail PresetSelfTestFailed when the closure order does not
// match the documented order.
MatGroup preset_group(const std::string& name);
QuadricGroup preset_quadric(const std::string& name);

}  // namespace coreg
