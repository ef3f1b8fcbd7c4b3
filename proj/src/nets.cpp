#include "cgdlab/nets.hpp"

#include <cmath>
#include <stdexcept>

namespace cgdlab::nets {

namespace {

// Modified Gram-Schmidt with one re-orthogonalization pass over the rows
// of a rows x cols matrix (rows <= cols assumed by the caller). Rows that
// collapse numerically are redrawn from the stream.
void orthonormalize_rows(Mat& m, SplitMix64& rng) {
  for (int i = 0; i < m.rows; ++i) {
    for (int attempt = 0;; ++attempt) {
      for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j < i; ++j) {
          double proj = 0.0;
          for (int c = 0; c < m.cols; ++c) proj += m(i, c) * m(j, c);
          for (int c = 0; c < m.cols; ++c) m(i, c) -= proj * m(j, c);
        }
      }
      double norm = 0.0;
      for (int c = 0; c < m.cols; ++c) norm += m(i, c) * m(i, c);
      norm = std::sqrt(norm);
      if (norm > 1e-8) {
        for (int c = 0; c < m.cols; ++c) m(i, c) /= norm;
        break;
      }
      if (attempt > 32)
        throw std::runtime_error("orthonormal_init: degenerate draw");
      for (int c = 0; c < m.cols; ++c) m(i, c) = rng.gaussian();
    }
  }
}

}  // namespace

Mat orthonormal_init(int rows, int cols, std::uint64_t seed) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("orthonormal_init: dimensions must be >= 1");
  SplitMix64 rng(seed);
  if (rows <= cols) {
    Mat m(rows, cols);
    for (double& e : m.a) e = rng.gaussian();
    orthonormalize_rows(m, rng);
    return m;
  }
  Mat t(cols, rows);
  for (double& e : t.a) e = rng.gaussian();
  orthonormalize_rows(t, rng);
  return transpose(t);
}

int DenseNet::param_count() const {
  int total = 0;
  for (int l = 0; l + 1 < static_cast<int>(layer_dims.size()); ++l)
    total += layer_dims[l + 1] * layer_dims[l] + layer_dims[l + 1];
  return total;
}

Vec DenseNet::init_params(std::uint64_t seed) const {
  Vec params;
  params.reserve(param_count());
  for (int l = 0; l < layers(); ++l) {
    const Mat w = orthonormal_init(layer_dims[l + 1], layer_dims[l],
                                   seed + static_cast<std::uint64_t>(l));
    params.insert(params.end(), w.a.begin(), w.a.end());
    params.insert(params.end(), layer_dims[l + 1], 0.0);
  }
  return params;
}

namespace {

struct LayerView {
  const double* w;  // out x in, row-major
  const double* b;  // out
  int in;
  int out;
};

std::vector<LayerView> layer_views(const DenseNet& net, const Vec& params) {
  if (static_cast<int>(params.size()) != net.param_count())
    throw std::invalid_argument("dense net: parameter vector size mismatch");
  std::vector<LayerView> views;
  const double* p = params.data();
  for (int l = 0; l < net.layers(); ++l) {
    LayerView v{p, nullptr, net.layer_dims[l], net.layer_dims[l + 1]};
    p += static_cast<std::size_t>(v.out) * v.in;
    v.b = p;
    p += v.out;
    views.push_back(v);
  }
  return views;
}

// z = h W^T + b
Mat affine(const Mat& h, const LayerView& v) {
  Mat z(h.rows, v.out);
  for (int r = 0; r < h.rows; ++r) {
    for (int o = 0; o < v.out; ++o) {
      const double* wrow = v.w + static_cast<std::size_t>(o) * v.in;
      double acc = v.b[o];
      for (int i = 0; i < v.in; ++i) acc += h(r, i) * wrow[i];
      z(r, o) = acc;
    }
  }
  return z;
}

}  // namespace

Mat DenseNet::forward(const Vec& params, const Mat& inputs) const {
  if (inputs.cols != layer_dims.front())
    throw std::invalid_argument("dense net: input dimension mismatch");
  const auto views = layer_views(*this, params);
  Mat h = inputs;
  for (int l = 0; l < layers(); ++l) {
    Mat z = affine(h, views[l]);
    if (l + 1 < layers()) {
      for (double& e : z.a) e = e > 0.0 ? e : 0.0;
    }
    h = std::move(z);
  }
  return h;
}

DenseNet::BackpropResult DenseNet::forward_backward(const Vec& params,
                                                    const Mat& inputs,
                                                    const Mat& upstream) const {
  if (inputs.cols != layer_dims.front())
    throw std::invalid_argument("dense net: input dimension mismatch");
  if (upstream.rows != inputs.rows || upstream.cols != layer_dims.back())
    throw std::invalid_argument("dense net: upstream shape mismatch");
  const auto views = layer_views(*this, params);

  // Forward, keeping activations and pre-activation signs.
  std::vector<Mat> acts;  // acts[l] feeds layer l
  acts.reserve(layers() + 1);
  acts.push_back(inputs);
  std::vector<Mat> preacts(layers());
  for (int l = 0; l < layers(); ++l) {
    preacts[l] = affine(acts.back(), views[l]);
    Mat h = preacts[l];
    if (l + 1 < layers()) {
      for (double& e : h.a) e = e > 0.0 ? e : 0.0;
    }
    acts.push_back(std::move(h));
  }

  BackpropResult result;
  result.outputs = acts.back();
  result.param_grads.assign(param_count(), 0.0);

  // Reverse sweep.
  Mat delta = upstream;
  double* pg = result.param_grads.data() + param_count();
  for (int l = layers() - 1; l >= 0; --l) {
    const LayerView& v = views[l];
    pg -= v.out;  // bias block
    double* gb = pg;
    pg -= static_cast<std::size_t>(v.out) * v.in;  // weight block
    double* gw = pg;

    const Mat& h_in = acts[l];
    for (int o = 0; o < v.out; ++o) {
      double bsum = 0.0;
      double* gwrow = gw + static_cast<std::size_t>(o) * v.in;
      for (int r = 0; r < delta.rows; ++r) {
        const double d = delta(r, o);
        bsum += d;
        if (d == 0.0) continue;
        for (int i = 0; i < v.in; ++i) gwrow[i] += d * h_in(r, i);
      }
      gb[o] = bsum;
    }

    // Propagate to the previous layer (through its ReLU when hidden).
    Mat prev(delta.rows, v.in);
    for (int r = 0; r < delta.rows; ++r) {
      for (int i = 0; i < v.in; ++i) {
        double acc = 0.0;
        for (int o = 0; o < v.out; ++o)
          acc += delta(r, o) * v.w[static_cast<std::size_t>(o) * v.in + i];
        prev(r, i) = acc;
      }
    }
    if (l > 0) {
      const Mat& z = preacts[l - 1];
      for (int r = 0; r < prev.rows; ++r)
        for (int i = 0; i < prev.cols; ++i)
          if (!(z(r, i) > 0.0)) prev(r, i) = 0.0;
    }
    delta = std::move(prev);
  }
  result.input_grads = std::move(delta);
  return result;
}

DualPass::DualPass(const DenseNet& net, const Vec& params,
                   const Vec& params_dot, const Mat& inputs,
                   const Mat& inputs_dot)
    : net_(net), params_(params) {
  if (inputs.cols != net.layer_dims.front())
    throw std::invalid_argument("dual pass: input dimension mismatch");
  params_dot_ = params_dot.empty() ? Vec(params.size(), 0.0) : params_dot;
  if (params_dot_.size() != params.size())
    throw std::invalid_argument("dual pass: tangent size mismatch");
  const auto views = layer_views(net, params);
  const auto views_dot = layer_views(net, params_dot_);

  acts_.push_back(inputs);
  acts_dot_.push_back(inputs_dot.rows == 0 ? Mat(inputs.rows, inputs.cols)
                                           : inputs_dot);
  preacts_.resize(net.layers());
  for (int l = 0; l < net.layers(); ++l) {
    preacts_[l] = affine(acts_.back(), views[l]);
    // z_dot = h_dot W^T + h W_dot^T + b_dot
    Mat z_dot = affine(acts_dot_.back(), views[l]);
    for (int r = 0; r < z_dot.rows; ++r)
      for (int o = 0; o < views[l].out; ++o) z_dot(r, o) -= views[l].b[o];
    {
      const Mat extra = affine(acts_.back(), views_dot[l]);
      for (std::size_t i = 0; i < z_dot.a.size(); ++i) z_dot.a[i] += extra.a[i];
    }
    Mat h = preacts_[l];
    Mat h_dot = std::move(z_dot);
    if (l + 1 < net.layers()) {
      for (std::size_t i = 0; i < h.a.size(); ++i) {
        if (!(preacts_[l].a[i] > 0.0)) {
          h.a[i] = 0.0;
          h_dot.a[i] = 0.0;
        }
      }
    }
    acts_.push_back(std::move(h));
    acts_dot_.push_back(std::move(h_dot));
  }
  outputs_ = acts_.back();
  outputs_dot_ = acts_dot_.back();
}

void DualPass::backward(const Mat& upstream, const Mat& upstream_dot) {
  if (upstream.rows != outputs_.rows || upstream.cols != outputs_.cols)
    throw std::invalid_argument("dual pass: upstream shape mismatch");
  const auto views = layer_views(net_, params_);
  const auto views_dot = layer_views(net_, params_dot_);

  param_grads_.assign(net_.param_count(), 0.0);
  param_grads_dot_.assign(net_.param_count(), 0.0);

  Mat delta = upstream;
  Mat delta_dot = upstream_dot.rows == 0
                      ? Mat(upstream.rows, upstream.cols)
                      : upstream_dot;
  double* pg = param_grads_.data() + net_.param_count();
  double* pgd = param_grads_dot_.data() + net_.param_count();
  for (int l = net_.layers() - 1; l >= 0; --l) {
    const LayerView& v = views[l];
    const LayerView& vd = views_dot[l];
    pg -= v.out;
    pgd -= v.out;
    double* gb = pg;
    double* gbd = pgd;
    pg -= static_cast<std::size_t>(v.out) * v.in;
    pgd -= static_cast<std::size_t>(v.out) * v.in;
    double* gw = pg;
    double* gwd = pgd;

    const Mat& h_in = acts_[l];
    const Mat& h_in_dot = acts_dot_[l];
    for (int o = 0; o < v.out; ++o) {
      double bsum = 0.0;
      double bsum_dot = 0.0;
      double* gwrow = gw + static_cast<std::size_t>(o) * v.in;
      double* gwdrow = gwd + static_cast<std::size_t>(o) * v.in;
      for (int r = 0; r < delta.rows; ++r) {
        const double d = delta(r, o);
        const double dd = delta_dot(r, o);
        bsum += d;
        bsum_dot += dd;
        for (int i = 0; i < v.in; ++i) {
          gwrow[i] += d * h_in(r, i);
          gwdrow[i] += dd * h_in(r, i) + d * h_in_dot(r, i);
        }
      }
      gb[o] = bsum;
      gbd[o] = bsum_dot;
    }

    Mat prev(delta.rows, v.in);
    Mat prev_dot(delta.rows, v.in);
    for (int r = 0; r < delta.rows; ++r) {
      for (int i = 0; i < v.in; ++i) {
        double acc = 0.0;
        double acc_dot = 0.0;
        for (int o = 0; o < v.out; ++o) {
          const std::size_t wi = static_cast<std::size_t>(o) * v.in + i;
          acc += delta(r, o) * v.w[wi];
          acc_dot += delta_dot(r, o) * v.w[wi] + delta(r, o) * vd.w[wi];
        }
        prev(r, i) = acc;
        prev_dot(r, i) = acc_dot;
      }
    }
    if (l > 0) {
      const Mat& z = preacts_[l - 1];
      for (int r = 0; r < prev.rows; ++r) {
        for (int i = 0; i < prev.cols; ++i) {
          if (!(z(r, i) > 0.0)) {
            prev(r, i) = 0.0;
            prev_dot(r, i) = 0.0;
          }
        }
      }
    }
    delta = std::move(prev);
    delta_dot = std::move(prev_dot);
  }
  input_grads_ = std::move(delta);
  input_grads_dot_ = std::move(delta_dot);
}

Vec rmsprop_scale(const Vec& update, const Vec& grads, Vec& state_slot,
                  double rho, double eps) {
  if (update.size() != grads.size())
    throw std::invalid_argument("rmsprop_scale: dimension mismatch");
  if (state_slot.empty()) state_slot.assign(update.size(), 0.0);
  if (state_slot.size() != update.size())
    throw std::invalid_argument("rmsprop_scale: state dimension mismatch");
  Vec out(update.size());
  for (std::size_t i = 0; i < update.size(); ++i) {
    state_slot[i] = rho * state_slot[i] + (1.0 - rho) * grads[i] * grads[i];
    out[i] = update[i] / std::sqrt(state_slot[i] + eps);
  }
  return out;
}

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double sigmoid_cross_entropy(double logit, double label) {
  // max(z,0) - z*t + log(1 + exp(-|z|))
  return std::max(logit, 0.0) - logit * label +
         std::log1p(std::exp(-std::abs(logit)));
}

std::array<double, 2> sample_mixture(const GanConfig& cfg, SplitMix64& rng) {
  const bool first = rng.uniform01() < 0.5;
  const auto& mu = first ? cfg.mu1 : cfg.mu2;
  return {mu[0] + cfg.sigma * rng.gaussian(),
          mu[1] + cfg.sigma * rng.gaussian()};
}

GanOracle::GanOracle(GanConfig cfg, std::vector<int> gen_dims,
                     std::vector<int> disc_dims, std::uint64_t seed)
    : cfg_(cfg),
      gen_{std::move(gen_dims)},
      disc_{std::move(disc_dims)},
      batch_rng_(seed) {
  if (gen_.layer_dims.front() != cfg_.noise_dim)
    throw std::invalid_argument("gan: generator input must equal noise_dim");
  if (gen_.layer_dims.back() != 2 || disc_.layer_dims.front() != 2)
    throw std::invalid_argument("gan: generator output / discriminator input must be 2-d");
  if (disc_.layer_dims.back() != 1)
    throw std::invalid_argument("gan: discriminator output must be a scalar logit");
  if (cfg_.batch_real < 1 || cfg_.batch_fake < 1)
    throw std::invalid_argument("gan: batch sizes must be >= 1");
  if (!(cfg_.sigma > 0.0)) throw std::invalid_argument("gan: sigma must be > 0");
  resample_minibatch();
}

void GanOracle::set_minibatch(Mat real, Mat noise) {
  if (real.rows != cfg_.batch_real || real.cols != 2 ||
      noise.rows != cfg_.batch_fake || noise.cols != cfg_.noise_dim)
    throw std::invalid_argument("gan set_minibatch: shape mismatch");
  real_batch_ = std::move(real);
  noise_batch_ = std::move(noise);
}

void GanOracle::resample_minibatch() {
  real_batch_ = Mat(cfg_.batch_real, 2);
  for (int r = 0; r < cfg_.batch_real; ++r) {
    const auto s = sample_mixture(cfg_, batch_rng_);
    real_batch_(r, 0) = s[0];
    real_batch_(r, 1) = s[1];
  }
  noise_batch_ = Mat(cfg_.batch_fake, cfg_.noise_dim);
  for (double& e : noise_batch_.a) e = batch_rng_.gaussian();
}

JointState GanOracle::initial_state(std::uint64_t seed) const {
  JointState s;
  s.x = disc_.init_params(seed * 2654435761ULL + 17);
  s.y = gen_.init_params(seed * 2654435761ULL + 7919);
  return s;
}

std::vector<std::array<double, 2>> GanOracle::generate(
    const JointState& s, int count, std::uint64_t seed) const {
  require_dims(*this, s);
  SplitMix64 rng(seed);
  Mat noise(count, cfg_.noise_dim);
  for (double& e : noise.a) e = rng.gaussian();
  const Mat out = gen_.forward(s.y, noise);
  std::vector<std::array<double, 2>> samples(count);
  for (int r = 0; r < count; ++r) samples[r] = {out(r, 0), out(r, 1)};
  return samples;
}

double GanOracle::eval_f(const JointState& s) const {
  require_dims(*this, s);
  const Mat real_logits = disc_.forward(s.x, real_batch_);
  const Mat fakes = gen_.forward(s.y, noise_batch_);
  const Mat fake_logits = disc_.forward(s.x, fakes);
  double total = 0.0;
  for (int r = 0; r < real_logits.rows; ++r)
    total += sigmoid_cross_entropy(real_logits(r, 0), 1.0);
  for (int r = 0; r < fake_logits.rows; ++r)
    total += sigmoid_cross_entropy(fake_logits(r, 0), 0.0);
  return total / (cfg_.batch_real + cfg_.batch_fake);
}

Vec GanOracle::grad_x_f(const JointState& s) const {
  require_dims(*this, s);
  const double inv_total = 1.0 / (cfg_.batch_real + cfg_.batch_fake);

  // d ce / d logit = sigmoid(logit) - label
  const Mat real_logits = disc_.forward(s.x, real_batch_);
  Mat up_real(real_logits.rows, 1);
  for (int r = 0; r < real_logits.rows; ++r)
    up_real(r, 0) = (sigmoid(real_logits(r, 0)) - 1.0) * inv_total;
  const auto bp_real = disc_.forward_backward(s.x, real_batch_, up_real);

  const Mat fakes = gen_.forward(s.y, noise_batch_);
  const Mat fake_logits = disc_.forward(s.x, fakes);
  Mat up_fake(fake_logits.rows, 1);
  for (int r = 0; r < fake_logits.rows; ++r)
    up_fake(r, 0) = sigmoid(fake_logits(r, 0)) * inv_total;
  const auto bp_fake = disc_.forward_backward(s.x, fakes, up_fake);

  Vec g = bp_real.param_grads;
  axpy(1.0, bp_fake.param_grads, g);
  return g;
}

Vec GanOracle::grad_y_f(const JointState& s) const {
  const double inv_total = 1.0 / (cfg_.batch_real + cfg_.batch_fake);
  const Mat fakes = gen_.forward(s.y, noise_batch_);
  const Mat fake_logits = disc_.forward(s.x, fakes);
  Mat up_fake(fake_logits.rows, 1);
  for (int r = 0; r < fake_logits.rows; ++r)
    up_fake(r, 0) = sigmoid(fake_logits(r, 0)) * inv_total;
  // Chain through the discriminator into the generator parameters.
  const auto bp_disc = disc_.forward_backward(s.x, fakes, up_fake);
  const auto bp_gen =
      gen_.forward_backward(s.y, noise_batch_, bp_disc.input_grads);
  return bp_gen.param_grads;
}

Vec GanOracle::grad_y_g(const JointState& s) const {
  require_dims(*this, s);
  return scaled(-1.0, grad_y_f(s));
}

// Exact directional derivatives of the two gradients along (vx, vy): the
// whole loss graph is evaluated once with tangents attached. sigma'(z)
// carries the curvature of the logistic loss; ReLU masks are constant
// along the tangent.
std::pair<Vec, Vec> GanOracle::grad_tangents(const JointState& s,
                                             const Vec& vx,
                                             const Vec& vy) const {
  require_dims(*this, s);
  const double inv_total = 1.0 / (cfg_.batch_real + cfg_.batch_fake);
  const Mat no_mat;

  // Real half touches only the discriminator.
  DualPass real_pass(disc_, s.x, vx, real_batch_, no_mat);
  {
    Mat up(real_pass.outputs().rows, 1);
    Mat up_dot(up.rows, 1);
    for (int r = 0; r < up.rows; ++r) {
      const double sig = sigmoid(real_pass.outputs()(r, 0));
      up(r, 0) = (sig - 1.0) * inv_total;
      up_dot(r, 0) =
          sig * (1.0 - sig) * real_pass.outputs_dot()(r, 0) * inv_total;
    }
    real_pass.backward(up, up_dot);
  }

  // Fake half chains generator into discriminator.
  DualPass gen_pass(gen_, s.y, vy, noise_batch_, no_mat);
  DualPass fake_pass(disc_, s.x, vx, gen_pass.outputs(),
                     gen_pass.outputs_dot());
  {
    Mat up(fake_pass.outputs().rows, 1);
    Mat up_dot(up.rows, 1);
    for (int r = 0; r < up.rows; ++r) {
      const double sig = sigmoid(fake_pass.outputs()(r, 0));
      up(r, 0) = sig * inv_total;
      up_dot(r, 0) =
          sig * (1.0 - sig) * fake_pass.outputs_dot()(r, 0) * inv_total;
    }
    fake_pass.backward(up, up_dot);
  }
  gen_pass.backward(fake_pass.input_grads(), fake_pass.input_grads_dot());

  Vec gx_dot = real_pass.param_grads_dot();
  axpy(1.0, fake_pass.param_grads_dot(), gx_dot);
  return {std::move(gx_dot), gen_pass.param_grads_dot()};
}

Vec GanOracle::hvp_xy_f(const JointState& s, const Vec& v) const {
  if (static_cast<int>(v.size()) != dim_y())
    throw std::invalid_argument("gan hvp_xy_f: direction dimension mismatch");
  return grad_tangents(s, {}, v).first;
}

Vec GanOracle::hvp_yx_g(const JointState& s, const Vec& v) const {
  if (static_cast<int>(v.size()) != dim_x())
    throw std::invalid_argument("gan hvp_yx_g: direction dimension mismatch");
  return scaled(-1.0, grad_tangents(s, v, {}).second);
}

Vec GanOracle::hvp_xx_f(const JointState& s, const Vec& v) const {
  if (static_cast<int>(v.size()) != dim_x())
    throw std::invalid_argument("gan hvp_xx_f: direction dimension mismatch");
  return grad_tangents(s, v, {}).first;
}

Vec GanOracle::hvp_yy_g(const JointState& s, const Vec& v) const {
  if (static_cast<int>(v.size()) != dim_y())
    throw std::invalid_argument("gan hvp_yy_g: direction dimension mismatch");
  return scaled(-1.0, grad_tangents(s, {}, v).second);
}

}  // namespace cgdlab::nets
