// Copyright 2026 The freeknot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>

#include "freeknot/knot_family.h"

namespace freeknot {

std::string SpliceDiagramDot(const CablingSequence& c) {
  const SpliceLabels labels = SpliceLabelsOf(c);
  const auto pairs = c.pairs();
  const int g = c.stages();
  std::ostringstream out;
  out << "digraph splice {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (int i = 1; i <= g; ++i) {
    out << "  s" << i << " [label=\"+\", xlabel=\"v" << i << "=" << labels.v[i - 1] << "\"];\n";
  }
  for (int i = 0; i <= g; ++i) {
    out << "  b" << i << " [shape=point, xlabel=\"w" << i << "=" << labels.w[i] << "\"];\n";
  }
  out << "  k [shape=none, label=\"\"];\n";
  if (g == 0) {
    out << "  b0 -> k;\n";
    out << "}\n";
    return out.str();
  }
  // Weights sit at the splice-node end of each edge.
  out << "  b0 -> s1 [dir=none, headlabel=\"" << pairs[0].q << "\"];\n";
  for (int i = 1; i <= g; ++i) {
    out << "  b" << i << " -> s" << i << " [dir=none, headlabel=\"" << pairs[i - 1].p
        << "\"];\n";
    if (i < g) {
      out << "  s" << i << " -> s" << i + 1 << " [dir=none, taillabel=\"1\", headlabel=\""
          << pairs[i].q << "\"];\n";
    }
  }
  out << "  s" << g << " -> k [taillabel=\"1\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace freeknot
