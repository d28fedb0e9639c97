#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "tabqa/rng.hpp"
#include "tabqa/tensor.hpp"

namespace tabqa {

enum class Init { kUniformWeight, kZero };

// Per-worker gradient sink; merged into a ParamStore in worker order so the
// result is deterministic for a fixed job count.
struct GradBuffer {
  std::unordered_map<std::string, Tensor> grads;

  Tensor& at(const std::string& name, const std::vector<int>& shape);
  void add_full(const std::string& name, const Tensor& g);
  void add_rows(const std::string& name, const std::vector<int>& shape,
                const std::vector<int>& row_ids, const Tensor& row_grads);
  void clear();
};

// Named trainable tensors with gradient accumulators and Adam moments.
class ParamStore {
 public:
  Tensor& create(const std::string& name, std::vector<int> shape, Init init,
                 Rng& rng);
  bool has(const std::string& name) const { return entries_.count(name) != 0; }
  const Tensor& value(const std::string& name) const;
  Tensor& mutable_value(const std::string& name);
  Tensor& grad(const std::string& name);

  void zero_grads();
  void accumulate(const GradBuffer& buffer);

  // Standard Adam update; gradients are zeroed after the step.
  void adam_step(double lr, double beta1 = 0.9, double beta2 = 0.999,
                 double eps = 1e-8);
  void sgd_step(double lr);

  std::vector<std::string> names() const;
  double max_abs_grad() const;
  bool grads_all_zero() const;

  // Parameter values only (no optimizer state); used for best-epoch snapshots.
  std::map<std::string, Tensor> snapshot_values() const;
  void restore_values(const std::map<std::string, Tensor>& snapshot);

  void save(const std::string& path, uint64_t config_hash) const;
  // Returns the stored config hash.
  uint64_t load(const std::string& path);

 private:
  struct Entry {
    Tensor value;
    Tensor grad;
    Tensor m;
    Tensor v;
  };
  std::map<std::string, Entry> entries_;  // ordered: deterministic iteration
  int64_t adam_steps_ = 0;
};

}  // namespace tabqa
