#pragma once

#include <string>

#include "insideness/coloring.hpp"
#include "insideness/ray_net.hpp"

namespace insideness {

// Line-oriented text format, one token group per line:
//
//   # insideness netspec v1
//   net <kind> <name>              kind: ray | convlstm
//   param <key> <value>            ray: N, C, head_begin; convlstm: q, border_hidden_init
//   layer <name>
//   shape <kh> <kw> <cin> <cout>
//   anchor <row> <col>
//   dilation <d>
//   activation <identity|relu|sigmoid|tanh> <gain>
//   pad <value>
//   bias <cout values>
//   weights <kh*kw*cin*cout values, index [a][b][c][o]>
//   end
//
// Reals are printed with 17 significant digits so parsing restores them exactly.
// ConvLSTM layers appear in gate order i, f, g, o.
std::string write_netspec(const RayNetSpec& net);
std::string write_netspec(const ConvLstmSpec& cell);

// Throw FormatError on malformed input.
RayNetSpec parse_ray_netspec(const std::string& text);
ConvLstmSpec parse_convlstm_netspec(const std::string& text);

}  // namespace insideness
