#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cgdlab/core.hpp"
#include "cgdlab/mat.hpp"
#include "cgdlab/rng.hpp"

namespace cgdlab::nets {

// Matrix with orthonormal rows (rows <= cols) or orthonormal columns
// (rows > cols), obtained by orthogonalizing a seeded Gaussian draw.
Mat orthonormal_init(int rows, int cols, std::uint64_t seed);

// Fully connected net: ReLU on hidden layers, linear final layer.
// Parameters are a single flat vector laid out layer by layer as the
// row-major weight matrix followed by the bias vector. The ReLU
// subgradient at exactly 0 is 0.
struct DenseNet {
  std::vector<int> layer_dims;  // input, hidden..., output

  int layers() const { return static_cast<int>(layer_dims.size()) - 1; }
  int param_count() const;

  // Orthonormal weights, zero biases.
  Vec init_params(std::uint64_t seed) const;

  // inputs: batch x layer_dims.front() -> batch x layer_dims.back()
  Mat forward(const Vec& params, const Mat& inputs) const;

  struct BackpropResult {
    Mat outputs;      // batch x out
    Vec param_grads;  // gradient of <upstream, outputs> w.r.t. params
    Mat input_grads;  // batch x in
  };
  // Exact gradient of sum_b <upstream[b], outputs[b]> via reverse
  // accumulation.
  BackpropResult forward_backward(const Vec& params, const Mat& inputs,
                                  const Mat& upstream) const;
};

// One forward/backward through a net with every quantity carrying a
// directional (tangent) component, so gradients AND their exact
// directional derivatives along (params_dot, inputs_dot) come out of a
// single pass. ReLU masks are held fixed along the tangent (their
// derivative vanishes almost everywhere). Empty *_dot arguments mean a
// zero tangent.
class DualPass {
 public:
  DualPass(const DenseNet& net, const Vec& params, const Vec& params_dot,
           const Mat& inputs, const Mat& inputs_dot);

  const Mat& outputs() const { return outputs_; }
  const Mat& outputs_dot() const { return outputs_dot_; }

  void backward(const Mat& upstream, const Mat& upstream_dot);

  const Vec& param_grads() const { return param_grads_; }
  const Vec& param_grads_dot() const { return param_grads_dot_; }
  const Mat& input_grads() const { return input_grads_; }
  const Mat& input_grads_dot() const { return input_grads_dot_; }

 private:
  const DenseNet& net_;
  const Vec& params_;
  Vec params_dot_;  // zero-filled when absent
  std::vector<Mat> acts_;
  std::vector<Mat> acts_dot_;
  std::vector<Mat> preacts_;
  Mat outputs_;
  Mat outputs_dot_;
  Vec param_grads_, param_grads_dot_;
  Mat input_grads_, input_grads_dot_;
};

// ---- RMSProp ---------------------------------------------------------------

struct RmsState {
  Vec second_moment_x;
  Vec second_moment_y;
  bool initialized_x = false;
  bool initialized_y = false;
};

// state <- rho*state + (1-rho)*grads^2 elementwise, then returns
// update / sqrt(state + eps). An empty state slot starts at zero.
Vec rmsprop_scale(const Vec& update, const Vec& grads, Vec& state_slot,
                  double rho, double eps);

// ---- bimodal-mixture GAN game -----------------------------------------------

struct GanConfig {
  std::array<double, 2> mu1{0.0, 1.0};
  std::array<double, 2> mu2{0.70710678118654752, 0.70710678118654752};
  double sigma = 0.1;
  int noise_dim = 16;
  int batch_real = 64;
  int batch_fake = 64;
  double rmsprop_rho = 0.9;
  double rmsprop_eps = 1e-8;
};

// Draws one sample of the two-mode Gaussian mixture.
std::array<double, 2> sample_mixture(const GanConfig& cfg, SplitMix64& rng);

// Zero-sum game over (x = discriminator parameters, y = generator
// parameters). f is the mean sigmoidal cross-entropy of the discriminator
// over the union of the real batch (label 1) and the generated batch
// (label 0); g = -f. Gradients come from backprop; the four HVPs are
// exact directional derivatives of those gradients, computed by
// tangent-augmented passes on the current frozen minibatch. All oracle
// calls between two resample_minibatch() calls see identical data, so
// the oracle is deterministic within an outer iteration.
class GanOracle final : public GameOracle {
 public:
  GanOracle(GanConfig cfg, std::vector<int> gen_dims,
            std::vector<int> disc_dims, std::uint64_t seed);

  const GanConfig& config() const { return cfg_; }
  const DenseNet& generator() const { return gen_; }
  const DenseNet& discriminator() const { return disc_; }

  // New real and noise batches from the oracle's own generator stream.
  void resample_minibatch();

  // Pins an explicit minibatch (rows: batch_real x 2 and batch_fake x
  // noise_dim).
  void set_minibatch(Mat real, Mat noise);
  const Mat& real_batch() const { return real_batch_; }
  const Mat& noise_batch() const { return noise_batch_; }

  // Orthonormal weights for both nets, derived from the seed.
  JointState initial_state(std::uint64_t seed) const;

  // Generator samples at the given parameters, from a fresh noise stream.
  std::vector<std::array<double, 2>> generate(const JointState& s, int count,
                                              std::uint64_t seed) const;

  int dim_x() const override { return disc_.param_count(); }
  int dim_y() const override { return gen_.param_count(); }
  bool is_zero_sum() const override { return true; }

  double eval_f(const JointState& s) const override;
  double eval_g(const JointState& s) const override { return -eval_f(s); }
  Vec grad_x_f(const JointState& s) const override;
  Vec grad_y_g(const JointState& s) const override;
  Vec hvp_xy_f(const JointState& s, const Vec& v) const override;
  Vec hvp_yx_g(const JointState& s, const Vec& v) const override;
  Vec hvp_xx_f(const JointState& s, const Vec& v) const override;
  Vec hvp_yy_g(const JointState& s, const Vec& v) const override;

 private:
  Vec grad_y_f(const JointState& s) const;
  // Directional derivatives of (grad_x f, grad_y f) along (vx, vy); either
  // tangent may be empty (zero).
  std::pair<Vec, Vec> grad_tangents(const JointState& s, const Vec& vx,
                                    const Vec& vy) const;

  GanConfig cfg_;
  DenseNet gen_;
  DenseNet disc_;
  SplitMix64 batch_rng_;
  Mat real_batch_;   // batch_real x 2
  Mat noise_batch_;  // batch_fake x noise_dim
};

// Numerically stable logistic loss pieces.
double sigmoid_cross_entropy(double logit, double label);
double sigmoid(double z);

}  // namespace cgdlab::nets
