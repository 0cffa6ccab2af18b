// Copyright (C) 2026 The paln authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PALN_LSTM_HPP
#define PALN_LSTM_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "paln/matrix.hpp"
#include "paln/rng.hpp"

namespace paln {

// Where the external phonetic feature enters the cell. The feature is added
// inside the pre-activation of the selected receiver: inside g's argument for
// GFunction, inside the corresponding sigmoid argument for the three gates.
enum class ReceiverKind : std::uint8_t {
  None = 0,
  InputGate = 1,
  ForgetGate = 2,
  OutputGate = 3,
  GFunction = 4,
};

const char* receiver_name(ReceiverKind r);
ReceiverKind receiver_from_name(const std::string& name);

struct InjectionParams {
  ReceiverKind receiver = ReceiverKind::GFunction;
  Matrix W_inj;  // cell_dim x feat_dim
};

// One projected LSTM layer: gate and cell weights, diagonal peepholes
// (vectors, never full matrices), the recurrent projection W_rm and the
// non-recurrent projection W_pm, plus optional injection weights.
// Output-layer weights live in OutputHead so a network can carry several
// softmax heads off the same r_t/p_t.
struct LstmParams {
  Matrix W_ix, W_ir;  // input gate:  cell x input, cell x rec
  Matrix W_fx, W_fr;  // forget gate
  Matrix W_cx, W_cr;  // cell (g) input
  Matrix W_ox, W_or;  // output gate
  Vector w_ic, w_fc, w_oc;  // diagonal peepholes, cell_dim
  Vector b_i, b_f, b_c, b_o;
  Matrix W_rm;  // rec  x cell
  Matrix W_pm;  // proj x cell
  std::optional<InjectionParams> inj;

  std::size_t input_dim() const { return W_ix.cols(); }
  std::size_t cell_dim() const { return W_ix.rows(); }
  std::size_t rec_dim() const { return W_rm.rows(); }
  std::size_t proj_dim() const { return W_pm.rows(); }
  std::size_t feat_dim() const { return inj ? inj->W_inj.cols() : 0; }

  static LstmParams zeros(std::size_t input_dim, std::size_t cell_dim,
                          std::size_t rec_dim, std::size_t proj_dim);
  void add_injection(ReceiverKind receiver, std::size_t feat_dim);
  // uniform(-scale, scale) weights, zero biases and peepholes.
  void init_uniform(Rng& rng, double scale = 0.05);
  void validate(const char* what) const;
};

struct OutputHead {
  Matrix W_yr;  // out x rec
  Matrix W_yp;  // out x proj
  Vector b_y;

  std::size_t out_dim() const { return b_y.size(); }
  static OutputHead zeros(std::size_t out_dim, std::size_t rec_dim,
                          std::size_t proj_dim);
  void init_uniform(Rng& rng, double scale = 0.05);
};

struct CellState {
  Vector c;  // cell_dim
  Vector r;  // rec_dim

  static CellState zero(std::size_t cell_dim, std::size_t rec_dim);
};

// Every signal of one forward step, retained for the matching backward step.
struct StepCache {
  Vector x, c_prev, r_prev;
  Vector i, f, g, o;  // gate activations and g output
  Vector c, m, r, p;
  std::optional<Vector> feat;  // injected r'_t when injection is active
};

struct StepResult {
  CellState state;
  Vector p;
  StepCache cache;
};

// One forward step of the cell:
//   i_t = sigma(W_ix x + W_ir r_prev + w_ic . c_prev + b_i)
//   f_t = sigma(W_fx x + W_fr r_prev + w_fc . c_prev + b_f)
//   c_t = f_t . c_prev + i_t . g(W_cx x + W_cr r_prev + b_c)
//   o_t = sigma(W_ox x + W_or r_prev + w_oc . c_t + b_o)
//   m_t = o_t . h(c_t),  r_t = W_rm m_t,  p_t = W_pm m_t
// with g = h = tanh. phon_feat must be present iff params.inj is present;
// its W_inj-weighted image is added to the selected receiver pre-activation.
StepResult cell_forward(const LstmParams& params, const Vector& x,
                        const CellState& prev, const Vector* phon_feat);

// y_t = W_yr r_t + W_yp p_t + b_y (logits; softmax is applied by the caller).
Vector output_forward(const OutputHead& head, const Vector& r,
                      const Vector& p);

struct CellBackwardResult {
  Vector grad_x;
  Vector grad_prev_r;
  Vector grad_prev_c;
  std::optional<Vector> grad_feat;
};

// Exact reverse of cell_forward. grad_r/grad_c/grad_p are dLoss/d(r_t, c_t,
// p_t) flowing in from the step's consumers; parameter gradients are
// accumulated into param_grads (same shapes as params, injection included).
CellBackwardResult cell_backward(const LstmParams& params,
                                 const StepCache& cache, const Vector& grad_r,
                                 const Vector& grad_c, const Vector& grad_p,
                                 LstmParams& param_grads);

// Reverse of output_forward: accumulates head gradients and adds the
// back-propagated contributions onto grad_r / grad_p.
void output_backward(const OutputHead& head, const Vector& r, const Vector& p,
                     const Vector& grad_logits, OutputHead& head_grads,
                     Vector& grad_r, Vector& grad_p);

LstmParams zeros_like(const LstmParams& p);
OutputHead zeros_like(const OutputHead& h);

// Flat view of one parameter tensor. Vectors are exposed as n x 1. The
// collection order is fixed; checkpointing, SGD and gradient flattening all
// share it.
struct TensorView {
  std::string name;
  double* data;
  std::size_t rows;
  std::size_t cols;
  std::size_t size() const { return rows * cols; }
};

void collect_tensors(LstmParams& p, const std::string& prefix,
                     std::vector<TensorView>& out);
void collect_tensors(OutputHead& h, const std::string& prefix,
                     std::vector<TensorView>& out);

}  // namespace paln

#endif  // PALN_LSTM_HPP
