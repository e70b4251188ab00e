#include "insideness/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "insideness/digital_geometry.hpp"
#include "insideness/errors.hpp"

namespace insideness {
namespace {

// Kernel taps of the pixel and its 4-neighbourhood in a 3x3 kernel.
constexpr int kPlus[5][2] = {{1, 1}, {0, 1}, {2, 1}, {1, 0}, {1, 2}};

// Channels [h, X]; out-of-image h reads 1.
ConvLayerSpec coloring_rnn_layer(double q) {
  auto l = ConvLayerSpec::zeros("coloring_rnn", 3, 3, 2, 1);
  l.anchor_row = 1;
  l.anchor_col = 1;
  for (auto [a, b] : kPlus) l.weight(a, b, 0, 0) = 1.0;
  l.weight(1, 1, 1, 0) = -5.0;
  l.bias[0] = -0.5;
  l.activation = Activation::Sigmoid;
  l.gain = q;
  l.pad_value = 1.0;
  return l;
}

void check_q(double q) {
  if (!(q > 0.0)) throw std::invalid_argument("saturation scale q must be > 0");
}

BinaryImage binarize(const FeatureTensor& t) {
  BinaryImage out(t.height(), t.width());
  for (int r = 0; r < t.height(); ++r) {
    for (int c = 0; c < t.width(); ++c) out.set({r, c}, t(r, c, 0) > 0.5);
  }
  return out;
}

// True if every 1 of before is still 1 in after.
bool grows(const BinaryImage& before, const BinaryImage& after) {
  const auto b = before.data();
  const auto a = after.data();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] && !a[i]) return false;
  }
  return true;
}

ConvLayerSpec gate(const std::string& name, Activation act, double q, double bias) {
  auto l = ConvLayerSpec::zeros(name, 3, 3, 2, 1);
  l.anchor_row = 1;
  l.anchor_col = 1;
  l.activation = act;
  l.gain = q;
  l.bias[0] = bias;
  return l;
}

int default_steps(const BinaryImage& img) { return img.height() * img.width(); }

}  // namespace

ColoringState initial_coloring_state(Dims dims) {
  ColoringState s{FeatureTensor(dims.height, dims.width, 1), 0};
  for (int r = 0; r < dims.height; ++r) {
    for (int c = 0; c < dims.width; ++c) {
      if (is_border({r, c}, dims)) s.hidden(r, c, 0) = 1.0;
    }
  }
  return s;
}

ColoringState coloring_step_rnn(const ColoringState& state, const BinaryImage& img, double q) {
  check_q(q);
  if (state.hidden.height() != img.height() || state.hidden.width() != img.width() ||
      state.hidden.channels() != 1) {
    throw std::invalid_argument("coloring_step_rnn: state does not match image");
  }
  FeatureTensor in = concat_channels(state.hidden, FeatureTensor::from_image(img));
  return {conv2d(in, coloring_rnn_layer(q)), state.step + 1};
}

ColoringRun run_coloring(const BinaryImage& img, double q, std::optional<int> max_steps) {
  JordanCurve::from_image(img);
  const int limit = max_steps.value_or(default_steps(img));
  ColoringState state = initial_coloring_state(img.dims());
  BinaryImage prev = binarize(state.hidden);
  ColoringRun run;
  for (int t = 1; t <= limit; ++t) {
    state = coloring_step_rnn(state, img, q);
    for (double v : state.hidden.values()) {
      run.max_saturation_gap = std::max(run.max_saturation_gap, std::min(v, 1.0 - v));
    }
    BinaryImage cur = binarize(state.hidden);
    if (!grows(prev, cur)) run.monotone = false;
    if (cur == prev) {
      run.steps = t;
      run.mask = mask_from_outside_map(img, cur);
      return run;
    }
    prev = std::move(cur);
  }
  throw NoConvergence("coloring did not reach a fixpoint within " + std::to_string(limit) +
                      " steps");
}

std::vector<TruthRow> coloring_truth_table() {
  std::vector<TruthRow> rows;
  for (int x = 0; x <= 1; ++x) {
    for (unsigned bits = 0; bits < 32; ++bits) rows.push_back({x, bits, (x == 0 && bits != 0) ? 1 : 0});
  }
  return rows;
}

double coloring_step_single(int x, unsigned bits, double q) {
  if (bits >= 32 || (x != 0 && x != 1)) throw std::invalid_argument("coloring_step_single: bad case");
  // 5x5 canvas keeps the out-of-image padding away from the probed pixel.
  constexpr int kCentre = 2;
  const PixelCoord taps[5] = {{2, 2}, {1, 2}, {3, 2}, {2, 1}, {2, 3}};
  BinaryImage img(5, 5);
  img.set({kCentre, kCentre}, x == 1);
  ColoringState s{FeatureTensor(5, 5, 1), 0};
  for (int k = 0; k < 5; ++k) {
    if (bits & (1u << (4 - k))) s.hidden(taps[k].row, taps[k].col, 0) = 1.0;
  }
  return coloring_step_rnn(s, img, q).hidden(kCentre, kCentre, 0);
}

ConvLstmState initial_lstm_state(const ConvLstmSpec& spec, Dims dims) {
  ConvLstmState s{FeatureTensor(dims.height, dims.width, 1), FeatureTensor(dims.height, dims.width, 1)};
  for (int r = 0; r < dims.height; ++r) {
    for (int c = 0; c < dims.width; ++c) {
      if (is_border({r, c}, dims)) s.hidden(r, c, 0) = spec.border_hidden_init;
    }
  }
  return s;
}

ConvLstmState lstm_step(const ConvLstmSpec& spec, const ConvLstmState& state,
                        const FeatureTensor& input) {
  const FeatureTensor z = concat_channels(input, state.hidden);
  const FeatureTensor i = conv2d(z, spec.input_gate);
  const FeatureTensor f = conv2d(z, spec.forget_gate);
  const FeatureTensor g = conv2d(z, spec.cell_gate);
  const FeatureTensor o = conv2d(z, spec.output_gate);
  ConvLstmState next{FeatureTensor(input.height(), input.width(), 1),
                     FeatureTensor(input.height(), input.width(), 1)};
  for (int r = 0; r < input.height(); ++r) {
    for (int c = 0; c < input.width(); ++c) {
      const double cell = f(r, c, 0) * state.cell(r, c, 0) + i(r, c, 0) * g(r, c, 0);
      next.cell(r, c, 0) = cell;
      next.hidden(r, c, 0) = o(r, c, 0) * std::tanh(cell);
    }
  }
  return next;
}

ConvLstmSpec build_identity_convlstm(double q) {
  check_q(q);
  ConvLstmSpec s;
  s.name = "identity_lstm";
  s.q = q;
  s.input_gate = gate("identity_i", Activation::Sigmoid, q, 1.0);
  s.forget_gate = gate("identity_f", Activation::Sigmoid, q, -1.0);
  s.cell_gate = gate("identity_g", Activation::Tanh, q, 1.0);
  s.output_gate = gate("identity_o", Activation::Sigmoid, q, -0.5);
  s.output_gate.weight(1, 1, 0, 0) = 1.0;
  return s;
}

ConvLstmSpec build_coloring_convlstm(double q) {
  check_q(q);
  const double tau = std::tanh(1.0);
  ConvLstmSpec s;
  s.name = "coloring_lstm";
  s.q = q;
  s.border_hidden_init = tau;
  s.input_gate = gate("coloring_i", Activation::Sigmoid, q, 1.0);
  s.forget_gate = gate("coloring_f", Activation::Sigmoid, q, -1.0);
  s.cell_gate = gate("coloring_g", Activation::Tanh, q, -0.5);
  for (auto [a, b] : kPlus) s.cell_gate.weight(a, b, 1, 0) = 1.0 / tau;
  s.cell_gate.weight(1, 1, 0, 0) = -5.0;
  s.output_gate = s.cell_gate;
  s.output_gate.name = "coloring_o";
  s.output_gate.activation = Activation::Sigmoid;
  for (auto* g : {&s.input_gate, &s.forget_gate, &s.cell_gate, &s.output_gate}) g->pad_value = tau;
  return s;
}

StackRun stack_convlstms(const std::vector<ConvLstmSpec>& cells, const BinaryImage& img,
                         std::optional<int> max_steps) {
  if (cells.empty()) throw std::invalid_argument("stack_convlstms: no cells");
  const int limit = max_steps.value_or(default_steps(img) + static_cast<int>(cells.size()));
  std::vector<ConvLstmState> states;
  for (const auto& cell : cells) states.push_back(initial_lstm_state(cell, img.dims()));
  const FeatureTensor x = FeatureTensor::from_image(img);
  StackRun run;
  BinaryImage prev = binarize(states.back().hidden);
  for (int t = 1; t <= limit; ++t) {
    const FeatureTensor* input = &x;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      states[k] = lstm_step(cells[k], states[k], *input);
      input = &states[k].hidden;
    }
    BinaryImage cur = binarize(states.back().hidden);
    if (t > 1 && !grows(prev, cur)) run.monotone = false;
    if (cur == prev) {
      run.steps = t;
      run.output = std::move(cur);
      return run;
    }
    prev = std::move(cur);
  }
  throw NoConvergence("ConvLSTM stack did not reach a fixpoint within " + std::to_string(limit) +
                      " steps");
}

InsidenessMask mask_from_outside_map(const BinaryImage& img, const BinaryImage& outside) {
  if (img.dims() != outside.dims()) throw std::invalid_argument("mask_from_outside_map: size mismatch");
  std::vector<std::uint8_t> inside(img.data().size());
  const auto o = outside.data();
  for (std::size_t i = 0; i < inside.size(); ++i) inside[i] = o[i] ? 0 : 1;
  return mask_from_inside_map(img, inside);
}

}  // namespace insideness
