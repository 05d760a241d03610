#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace sparserel::ad {

using Mat = Eigen::MatrixXd;

class Tape;

// Lightweight handle into a tape. Copyable; valid until Tape::reset().
struct Var {
  Tape* tape = nullptr;
  int id = -1;

  const Mat& val() const;
  Eigen::Index rows() const { return val().rows(); }
  Eigen::Index cols() const { return val().cols(); }
};

// Reverse-mode tape over dense matrices. Nodes are created in topological
// order by construction, so backward() is a single reverse sweep.
class Tape {
 public:
  int push(Mat value, bool needs_grad, std::function<void()> backward = nullptr);

  Var var(int id) { return Var{this, id}; }
  Var constant(Mat value) { return var(push(std::move(value), false)); }
  Var leaf(Mat value) { return var(push(std::move(value), true)); }

  const Mat& val(int id) const { return nodes_[id].value; }
  Mat& val_mut(int id) { return nodes_[id].value; }
  bool needs_grad(int id) const { return nodes_[id].needs_grad; }

  // Zero-initializes on first touch.
  Mat& grad(int id);
  bool has_grad(int id) const { return nodes_[id].grad.size() > 0; }

  // Seeds d(loss)/d(loss) = 1 (loss must be 1x1) and sweeps the tape.
  void backward(Var loss);

  void reset();
  std::size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Mat value;
    Mat grad;
    bool needs_grad = false;
    std::function<void()> backward;
  };
  std::vector<Node> nodes_;
};

inline const Mat& Var::val() const { return tape->val(id); }

}  // namespace sparserel::ad
