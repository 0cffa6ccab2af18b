// Copyright (C) 2026 The paln authors
// SPDX-License-Identifier: Apache-2.0

#include "paln/lstm.hpp"

#include <cmath>

#include "paln/error.hpp"
#include "paln/kernels.hpp"
#include "paln/math.hpp"

namespace paln {

const char* receiver_name(ReceiverKind r) {
  switch (r) {
    case ReceiverKind::None:
      return "none";
    case ReceiverKind::InputGate:
      return "input_gate";
    case ReceiverKind::ForgetGate:
      return "forget_gate";
    case ReceiverKind::OutputGate:
      return "output_gate";
    case ReceiverKind::GFunction:
      return "g";
  }
  return "unknown";
}

ReceiverKind receiver_from_name(const std::string& name) {
  if (name == "none") return ReceiverKind::None;
  if (name == "input_gate") return ReceiverKind::InputGate;
  if (name == "forget_gate") return ReceiverKind::ForgetGate;
  if (name == "output_gate") return ReceiverKind::OutputGate;
  if (name == "g") return ReceiverKind::GFunction;
  raise(ErrorCode::InvalidArgument, "unknown receiver '" + name +
                                        "' (expected none|input_gate|"
                                        "forget_gate|output_gate|g)");
}

LstmParams LstmParams::zeros(std::size_t input_dim, std::size_t cell_dim,
                             std::size_t rec_dim, std::size_t proj_dim) {
  LstmParams p;
  p.W_ix = Matrix(cell_dim, input_dim);
  p.W_ir = Matrix(cell_dim, rec_dim);
  p.W_fx = Matrix(cell_dim, input_dim);
  p.W_fr = Matrix(cell_dim, rec_dim);
  p.W_cx = Matrix(cell_dim, input_dim);
  p.W_cr = Matrix(cell_dim, rec_dim);
  p.W_ox = Matrix(cell_dim, input_dim);
  p.W_or = Matrix(cell_dim, rec_dim);
  p.w_ic.assign(cell_dim, 0.0);
  p.w_fc.assign(cell_dim, 0.0);
  p.w_oc.assign(cell_dim, 0.0);
  p.b_i.assign(cell_dim, 0.0);
  p.b_f.assign(cell_dim, 0.0);
  p.b_c.assign(cell_dim, 0.0);
  p.b_o.assign(cell_dim, 0.0);
  p.W_rm = Matrix(rec_dim, cell_dim);
  p.W_pm = Matrix(proj_dim, cell_dim);
  return p;
}

void LstmParams::add_injection(ReceiverKind receiver, std::size_t feat_dim) {
  if (receiver == ReceiverKind::None) {
    inj.reset();
    return;
  }
  InjectionParams ip;
  ip.receiver = receiver;
  ip.W_inj = Matrix(cell_dim(), feat_dim);
  inj = std::move(ip);
}

void LstmParams::init_uniform(Rng& rng, double scale) {
  auto fill = [&](Matrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
      m.data()[i] = rng.uniform(-scale, scale);
  };
  fill(W_ix);
  fill(W_ir);
  fill(W_fx);
  fill(W_fr);
  fill(W_cx);
  fill(W_cr);
  fill(W_ox);
  fill(W_or);
  fill(W_rm);
  fill(W_pm);
  if (inj) fill(inj->W_inj);
}

void LstmParams::validate(const char* what) const {
  const std::size_t cd = cell_dim();
  auto check = [&](const Matrix& m, std::size_t rows, std::size_t cols,
                   const char* name) {
    if (m.rows() != rows || m.cols() != cols)
      raise(ErrorCode::DimMismatch, std::string(what) + "." + name +
                                        " has shape " +
                                        std::to_string(m.rows()) + "x" +
                                        std::to_string(m.cols()));
  };
  check(W_ir, cd, rec_dim(), "W_ir");
  check(W_fx, cd, input_dim(), "W_fx");
  check(W_fr, cd, rec_dim(), "W_fr");
  check(W_cx, cd, input_dim(), "W_cx");
  check(W_cr, cd, rec_dim(), "W_cr");
  check(W_ox, cd, input_dim(), "W_ox");
  check(W_or, cd, rec_dim(), "W_or");
  check(W_rm, rec_dim(), cd, "W_rm");
  check(W_pm, proj_dim(), cd, "W_pm");
  auto check_vec = [&](const Vector& v, const char* name) {
    if (v.size() != cd)
      raise(ErrorCode::DimMismatch,
            std::string(what) + "." + name + " has dim " +
                std::to_string(v.size()) + " != cell_dim " +
                std::to_string(cd));
  };
  check_vec(w_ic, "w_ic");
  check_vec(w_fc, "w_fc");
  check_vec(w_oc, "w_oc");
  check_vec(b_i, "b_i");
  check_vec(b_f, "b_f");
  check_vec(b_c, "b_c");
  check_vec(b_o, "b_o");
  if (inj) {
    if (inj->receiver == ReceiverKind::None)
      raise(ErrorCode::InvalidArgument,
            std::string(what) + ": injection present but receiver is none");
    if (inj->W_inj.rows() != cd)
      raise(ErrorCode::DimMismatch,
            std::string(what) + ".W_inj row count != cell_dim");
  }
}

OutputHead OutputHead::zeros(std::size_t out_dim, std::size_t rec_dim,
                             std::size_t proj_dim) {
  OutputHead h;
  h.W_yr = Matrix(out_dim, rec_dim);
  h.W_yp = Matrix(out_dim, proj_dim);
  h.b_y.assign(out_dim, 0.0);
  return h;
}

void OutputHead::init_uniform(Rng& rng, double scale) {
  for (std::size_t i = 0; i < W_yr.size(); ++i)
    W_yr.data()[i] = rng.uniform(-scale, scale);
  for (std::size_t i = 0; i < W_yp.size(); ++i)
    W_yp.data()[i] = rng.uniform(-scale, scale);
}

CellState CellState::zero(std::size_t cell_dim, std::size_t rec_dim) {
  CellState s;
  s.c.assign(cell_dim, 0.0);
  s.r.assign(rec_dim, 0.0);
  return s;
}

namespace {

void tanh_into(Vector& v) {
  for (double& x : v) x = std::tanh(x);
}

void sigmoid_into(Vector& v) {
  for (double& x : v) x = sigmoid(x);
}

// pre = W_x x + W_r r_prev + b (+ w_c . c  if peephole given)
void gate_preactivation(Vector& pre, const Matrix& wx, const Vector& x,
                        const Matrix& wr, const Vector& r_prev,
                        const Vector& b, const Vector* peephole,
                        const Vector* c, const char* wx_name,
                        const char* wr_name) {
  matvec_into(pre, wx, x, wx_name);
  require_dim(r_prev.size(), wr.cols(), wr_name);
  for (std::size_t k = 0; k < wr.rows(); ++k)
    pre[k] += kernels::dot(wr.row(k), r_prev.data(), wr.cols());
  if (peephole != nullptr) hadamard_add_in_place(pre, *peephole, *c);
  add_in_place(pre, b);
}

void add_injection_term(Vector& pre, const InjectionParams& inj,
                        const Vector& feat) {
  require_dim(feat.size(), inj.W_inj.cols(), "W_inj");
  for (std::size_t k = 0; k < inj.W_inj.rows(); ++k)
    pre[k] += kernels::dot(inj.W_inj.row(k), feat.data(), inj.W_inj.cols());
}

}  // namespace

StepResult cell_forward(const LstmParams& params, const Vector& x,
                        const CellState& prev, const Vector* phon_feat) {
  if (params.inj.has_value() != (phon_feat != nullptr))
    raise(ErrorCode::InvalidArgument,
          params.inj ? "cell_forward: injection configured but no phonetic "
                       "feature supplied"
                     : "cell_forward: phonetic feature supplied but no "
                       "injection configured");
  require_dim(x.size(), params.input_dim(), "W_ix");
  require_dim(prev.c.size(), params.cell_dim(), "c_prev");
  require_dim(prev.r.size(), params.rec_dim(), "r_prev");
  if (!all_finite(x)) raise(ErrorCode::NonFinite, "cell_forward: x not finite");
  if (phon_feat != nullptr && !all_finite(*phon_feat))
    raise(ErrorCode::NonFinite, "cell_forward: phonetic feature not finite");

  const ReceiverKind recv =
      params.inj ? params.inj->receiver : ReceiverKind::None;

  StepResult out;
  StepCache& cache = out.cache;
  cache.x = x;
  cache.c_prev = prev.c;
  cache.r_prev = prev.r;
  if (phon_feat != nullptr) cache.feat = *phon_feat;

  Vector& i = cache.i;
  gate_preactivation(i, params.W_ix, x, params.W_ir, prev.r, params.b_i,
                     &params.w_ic, &prev.c, "W_ix", "W_ir");
  if (recv == ReceiverKind::InputGate)
    add_injection_term(i, *params.inj, *phon_feat);
  sigmoid_into(i);

  Vector& f = cache.f;
  gate_preactivation(f, params.W_fx, x, params.W_fr, prev.r, params.b_f,
                     &params.w_fc, &prev.c, "W_fx", "W_fr");
  if (recv == ReceiverKind::ForgetGate)
    add_injection_term(f, *params.inj, *phon_feat);
  sigmoid_into(f);

  Vector& g = cache.g;
  gate_preactivation(g, params.W_cx, x, params.W_cr, prev.r, params.b_c,
                     nullptr, nullptr, "W_cx", "W_cr");
  if (recv == ReceiverKind::GFunction)
    add_injection_term(g, *params.inj, *phon_feat);
  tanh_into(g);

  Vector& c = cache.c;
  c = hadamard(f, prev.c);
  hadamard_add_in_place(c, i, g);

  Vector& o = cache.o;
  gate_preactivation(o, params.W_ox, x, params.W_or, prev.r, params.b_o,
                     &params.w_oc, &c, "W_ox", "W_or");
  if (recv == ReceiverKind::OutputGate)
    add_injection_term(o, *params.inj, *phon_feat);
  sigmoid_into(o);

  Vector& m = cache.m;
  m = c;
  tanh_into(m);
  kernels::hadamard(m.data(), o.data(), m.data(), m.size());

  matvec_into(cache.r, params.W_rm, m, "W_rm");
  matvec_into(cache.p, params.W_pm, m, "W_pm");

  out.state.c = cache.c;
  out.state.r = cache.r;
  out.p = cache.p;
  return out;
}

Vector output_forward(const OutputHead& head, const Vector& r,
                      const Vector& p) {
  Vector y = matvec(head.W_yr, r, "W_yr");
  require_dim(p.size(), head.W_yp.cols(), "W_yp");
  for (std::size_t k = 0; k < head.W_yp.rows(); ++k)
    y[k] += kernels::dot(head.W_yp.row(k), p.data(), head.W_yp.cols());
  add_in_place(y, head.b_y);
  return y;
}

CellBackwardResult cell_backward(const LstmParams& params,
                                 const StepCache& cache, const Vector& grad_r,
                                 const Vector& grad_c, const Vector& grad_p,
                                 LstmParams& param_grads) {
  const std::size_t cd = params.cell_dim();
  require_dim(cache.i.size(), cd, "cache");
  require_dim(grad_r.size(), params.rec_dim(), "grad_r");
  require_dim(grad_c.size(), cd, "grad_c");
  require_dim(grad_p.size(), params.proj_dim(), "grad_p");
  require_dim(param_grads.cell_dim(), cd, "param_grads");
  if (params.inj.has_value() != cache.feat.has_value())
    raise(ErrorCode::InvalidArgument,
          "cell_backward: cache does not match params injection config");
  if (params.inj.has_value() != param_grads.inj.has_value())
    raise(ErrorCode::InvalidArgument,
          "cell_backward: param_grads does not match params injection config");

  const ReceiverKind recv =
      params.inj ? params.inj->receiver : ReceiverKind::None;

  // m_t = o . h(c); r = W_rm m; p = W_pm m
  Vector grad_m(cd, 0.0);
  matvec_transpose_add(grad_m, params.W_rm, grad_r, "W_rm");
  matvec_transpose_add(grad_m, params.W_pm, grad_p, "W_pm");
  add_outer(param_grads.W_rm, grad_r, cache.m, "W_rm");
  add_outer(param_grads.W_pm, grad_p, cache.m, "W_pm");

  Vector hc(cd);
  for (std::size_t k = 0; k < cd; ++k) hc[k] = std::tanh(cache.c[k]);

  Vector grad_o = hadamard(grad_m, hc);
  Vector grad_ct = grad_c;  // total dL/dc_t
  for (std::size_t k = 0; k < cd; ++k)
    grad_ct[k] += grad_m[k] * cache.o[k] * (1.0 - hc[k] * hc[k]);

  // output gate pre-activation; its peephole feeds back into c_t
  Vector da_o(cd);
  for (std::size_t k = 0; k < cd; ++k)
    da_o[k] = grad_o[k] * cache.o[k] * (1.0 - cache.o[k]);
  hadamard_add_in_place(grad_ct, params.w_oc, da_o);

  // c_t = f . c_prev + i . g
  Vector grad_i = hadamard(grad_ct, cache.g);
  Vector grad_g = hadamard(grad_ct, cache.i);
  Vector grad_f = hadamard(grad_ct, cache.c_prev);
  Vector grad_c_prev = hadamard(grad_ct, cache.f);

  Vector da_i(cd), da_f(cd), da_g(cd);
  for (std::size_t k = 0; k < cd; ++k) {
    da_i[k] = grad_i[k] * cache.i[k] * (1.0 - cache.i[k]);
    da_f[k] = grad_f[k] * cache.f[k] * (1.0 - cache.f[k]);
    da_g[k] = grad_g[k] * (1.0 - cache.g[k] * cache.g[k]);
  }
  // input/forget peepholes read c_{t-1}
  hadamard_add_in_place(grad_c_prev, params.w_ic, da_i);
  hadamard_add_in_place(grad_c_prev, params.w_fc, da_f);

  add_outer(param_grads.W_ix, da_i, cache.x, "W_ix");
  add_outer(param_grads.W_ir, da_i, cache.r_prev, "W_ir");
  add_outer(param_grads.W_fx, da_f, cache.x, "W_fx");
  add_outer(param_grads.W_fr, da_f, cache.r_prev, "W_fr");
  add_outer(param_grads.W_cx, da_g, cache.x, "W_cx");
  add_outer(param_grads.W_cr, da_g, cache.r_prev, "W_cr");
  add_outer(param_grads.W_ox, da_o, cache.x, "W_ox");
  add_outer(param_grads.W_or, da_o, cache.r_prev, "W_or");
  hadamard_add_in_place(param_grads.w_ic, da_i, cache.c_prev);
  hadamard_add_in_place(param_grads.w_fc, da_f, cache.c_prev);
  hadamard_add_in_place(param_grads.w_oc, da_o, cache.c);
  add_in_place(param_grads.b_i, da_i);
  add_in_place(param_grads.b_f, da_f);
  add_in_place(param_grads.b_c, da_g);
  add_in_place(param_grads.b_o, da_o);

  CellBackwardResult res;
  res.grad_x.assign(params.input_dim(), 0.0);
  matvec_transpose_add(res.grad_x, params.W_ix, da_i, "W_ix");
  matvec_transpose_add(res.grad_x, params.W_fx, da_f, "W_fx");
  matvec_transpose_add(res.grad_x, params.W_cx, da_g, "W_cx");
  matvec_transpose_add(res.grad_x, params.W_ox, da_o, "W_ox");

  res.grad_prev_r.assign(params.rec_dim(), 0.0);
  matvec_transpose_add(res.grad_prev_r, params.W_ir, da_i, "W_ir");
  matvec_transpose_add(res.grad_prev_r, params.W_fr, da_f, "W_fr");
  matvec_transpose_add(res.grad_prev_r, params.W_cr, da_g, "W_cr");
  matvec_transpose_add(res.grad_prev_r, params.W_or, da_o, "W_or");

  res.grad_prev_c = std::move(grad_c_prev);

  if (params.inj) {
    const Vector* da_recv = nullptr;
    switch (recv) {
      case ReceiverKind::InputGate:
        da_recv = &da_i;
        break;
      case ReceiverKind::ForgetGate:
        da_recv = &da_f;
        break;
      case ReceiverKind::OutputGate:
        da_recv = &da_o;
        break;
      case ReceiverKind::GFunction:
        da_recv = &da_g;
        break;
      case ReceiverKind::None:
        break;
    }
    Vector grad_feat(params.feat_dim(), 0.0);
    if (da_recv != nullptr) {
      add_outer(param_grads.inj->W_inj, *da_recv, *cache.feat, "W_inj");
      matvec_transpose_add(grad_feat, params.inj->W_inj, *da_recv, "W_inj");
    }
    res.grad_feat = std::move(grad_feat);
  }
  return res;
}

void output_backward(const OutputHead& head, const Vector& r, const Vector& p,
                     const Vector& grad_logits, OutputHead& head_grads,
                     Vector& grad_r, Vector& grad_p) {
  require_dim(grad_logits.size(), head.out_dim(), "grad_logits");
  add_outer(head_grads.W_yr, grad_logits, r, "W_yr");
  add_outer(head_grads.W_yp, grad_logits, p, "W_yp");
  add_in_place(head_grads.b_y, grad_logits);
  matvec_transpose_add(grad_r, head.W_yr, grad_logits, "W_yr");
  matvec_transpose_add(grad_p, head.W_yp, grad_logits, "W_yp");
}

LstmParams zeros_like(const LstmParams& p) {
  LstmParams z = LstmParams::zeros(p.input_dim(), p.cell_dim(), p.rec_dim(),
                                   p.proj_dim());
  if (p.inj) z.add_injection(p.inj->receiver, p.feat_dim());
  return z;
}

OutputHead zeros_like(const OutputHead& h) {
  return OutputHead::zeros(h.out_dim(), h.W_yr.cols(), h.W_yp.cols());
}

namespace {

void push_mat(std::vector<TensorView>& out, const std::string& prefix,
              const char* name, Matrix& m) {
  out.push_back({prefix + name, m.data(), m.rows(), m.cols()});
}

void push_vec(std::vector<TensorView>& out, const std::string& prefix,
              const char* name, Vector& v) {
  out.push_back({prefix + name, v.data(), v.size(), 1});
}

}  // namespace

void collect_tensors(LstmParams& p, const std::string& prefix,
                     std::vector<TensorView>& out) {
  push_mat(out, prefix, "W_ix", p.W_ix);
  push_mat(out, prefix, "W_ir", p.W_ir);
  push_mat(out, prefix, "W_fx", p.W_fx);
  push_mat(out, prefix, "W_fr", p.W_fr);
  push_mat(out, prefix, "W_cx", p.W_cx);
  push_mat(out, prefix, "W_cr", p.W_cr);
  push_mat(out, prefix, "W_ox", p.W_ox);
  push_mat(out, prefix, "W_or", p.W_or);
  push_vec(out, prefix, "w_ic", p.w_ic);
  push_vec(out, prefix, "w_fc", p.w_fc);
  push_vec(out, prefix, "w_oc", p.w_oc);
  push_vec(out, prefix, "b_i", p.b_i);
  push_vec(out, prefix, "b_f", p.b_f);
  push_vec(out, prefix, "b_c", p.b_c);
  push_vec(out, prefix, "b_o", p.b_o);
  push_mat(out, prefix, "W_rm", p.W_rm);
  push_mat(out, prefix, "W_pm", p.W_pm);
  if (p.inj) push_mat(out, prefix, "W_inj", p.inj->W_inj);
}

void collect_tensors(OutputHead& h, const std::string& prefix,
                     std::vector<TensorView>& out) {
  push_mat(out, prefix, "W_yr", h.W_yr);
  push_mat(out, prefix, "W_yp", h.W_yp);
  push_vec(out, prefix, "b_y", h.b_y);
}

}  // namespace paln
