#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "insideness/conv.hpp"
#include "insideness/oracle.hpp"

namespace insideness {

inline constexpr double kDefaultSaturation = 64.0;

struct ColoringState {
  FeatureTensor hidden;  // H x W x 1, values in [0, 1]; 1 means outside
  int step = 0;
};

// Border pixels 1, everything else 0.
ColoringState initial_coloring_state(Dims dims);

// h'(i,j) = sigmoid(q (sum of h over (i,j) and its 4-neighbours - 5 X(i,j) - 1/2)),
// out-of-image neighbours reading 1. Throws std::invalid_argument for q <= 0
// or a state/image size mismatch.
ColoringState coloring_step_rnn(const ColoringState& state, const BinaryImage& img,
                                double q = kDefaultSaturation);

struct ColoringRun {
  InsidenessMask mask;
  int steps = 0;                    // first t with binarize(h_t) == binarize(h_{t-1})
  bool monotone = true;             // binarized outside set never shrank
  double max_saturation_gap = 0.0;  // max over steps and pixels of min(h, 1 - h)
};

// Iterates coloring_step_rnn from initial_coloring_state until the map
// binarized at 0.5 stops changing. max_steps defaults to H * W.
// Throws InvalidCurve unless img is a Jordan curve, NoConvergence when the
// fixpoint is not reached in max_steps.
ColoringRun run_coloring(const BinaryImage& img, double q = kDefaultSaturation,
                         std::optional<int> max_steps = std::nullopt);

struct TruthRow {
  int x = 0;
  unsigned bits = 0;  // 5 hidden bits: centre, up, down, left, right (MSB first)
  int out = 0;

  int index() const { return x * 32 + static_cast<int>(bits); }
};

// The 64 cases (X, hidden bits) in ascending index order, out = [X == 0 and
// some hidden bit set].
std::vector<TruthRow> coloring_truth_table();

// One coloring_step_rnn update of a single pixel whose own and neighbour
// hidden values are the given bits (surroundings 0).
double coloring_step_single(int x, unsigned bits, double q = kDefaultSaturation);

// Convolutional LSTM cell: gates read [input, hidden] through 3x3 kernels
// anchored at the centre.
//   i = act_i(conv), f = act_f(conv), g = act_g(conv), o = act_o(conv)
//   c' = f * c + i * g,  h' = o * tanh(c')
struct ConvLstmSpec {
  std::string name;
  double q = kDefaultSaturation;
  ConvLayerSpec input_gate;
  ConvLayerSpec forget_gate;
  ConvLayerSpec cell_gate;
  ConvLayerSpec output_gate;
  double border_hidden_init = 0.0;  // initial hidden value on image-border pixels

  std::vector<const ConvLayerSpec*> gates() const {
    return {&input_gate, &forget_gate, &cell_gate, &output_gate};
  }

  friend bool operator==(const ConvLstmSpec&, const ConvLstmSpec&) = default;
};

struct ConvLstmState {
  FeatureTensor hidden;
  FeatureTensor cell;
};

ConvLstmState initial_lstm_state(const ConvLstmSpec& spec, Dims dims);
ConvLstmState lstm_step(const ConvLstmSpec& spec, const ConvLstmState& state,
                        const FeatureTensor& input);

// h' = tanh(1) * X for binary X: i ~ 1, f ~ 0, g ~ 1, o = sigmoid(q (X - 1/2)).
ConvLstmSpec build_identity_convlstm(double q = kDefaultSaturation);

// Hidden values are tanh(1) for outside and 0 otherwise; the cell and output
// gates see the plus-shaped sum of hidden / tanh(1) minus 5 X and 1/2, so the
// binarized hidden state follows coloring_step_rnn exactly.
ConvLstmSpec build_coloring_convlstm(double q = kDefaultSaturation);

struct StackRun {
  BinaryImage output;  // last cell's hidden state binarized at 0.5
  int steps = 0;
  bool monotone = true;
};

// Every step feeds the image to the first cell and each cell's new hidden
// state to the next one; stops when the binarized output of the last cell
// does not change. Throws std::invalid_argument for an empty stack and
// NoConvergence after max_steps (default H * W + cells).
StackRun stack_convlstms(const std::vector<ConvLstmSpec>& cells, const BinaryImage& img,
                         std::optional<int> max_steps = std::nullopt);

// Outside where the stacked coloring output is 1.
InsidenessMask mask_from_outside_map(const BinaryImage& img, const BinaryImage& outside);

}  // namespace insideness
