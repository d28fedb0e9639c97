#include "tabqa/params.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

#include "tabqa/table.hpp"

namespace tabqa {

namespace {

constexpr char kMagic[4] = {'T', 'Q', 'C', 'K'};
constexpr uint32_t kVersion = 1;
constexpr double kInitRange = 0.08;

void write_u32(std::ostream& os, uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 4);
}

void write_u64(std::ostream& os, uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 8);
}

uint32_t read_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
  return v;
}

uint64_t read_u64(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
  return v;
}

void write_f64(std::ostream& os, double d) {
  uint64_t bits;
  std::memcpy(&bits, &d, 8);
  write_u64(os, bits);
}

double read_f64(std::istream& is) {
  uint64_t bits = read_u64(is);
  double d;
  std::memcpy(&d, &bits, 8);
  return d;
}

}  // namespace

Tensor& GradBuffer::at(const std::string& name, const std::vector<int>& shape) {
  auto it = grads.find(name);
  if (it == grads.end()) {
    it = grads.emplace(name, Tensor::zeros(shape)).first;
  }
  return it->second;
}

void GradBuffer::add_full(const std::string& name, const Tensor& g) {
  Tensor& acc = at(name, g.shape);
  for (int i = 0; i < g.numel(); ++i) acc.data[i] += g.data[i];
}

void GradBuffer::add_rows(const std::string& name, const std::vector<int>& shape,
                          const std::vector<int>& row_ids, const Tensor& row_grads) {
  Tensor& acc = at(name, shape);
  int width = acc.cols();
  for (size_t i = 0; i < row_ids.size(); ++i) {
    double* dst = acc.data.data() + static_cast<size_t>(row_ids[i]) * width;
    const double* src = row_grads.data.data() + i * width;
    for (int k = 0; k < width; ++k) dst[k] += src[k];
  }
}

void GradBuffer::clear() {
  for (auto& [name, g] : grads) std::fill(g.data.begin(), g.data.end(), 0.0);
}

Tensor& ParamStore::create(const std::string& name, std::vector<int> shape,
                           Init init, Rng& rng) {
  if (entries_.count(name)) throw ContractError("duplicate parameter '" + name + "'");
  Entry e;
  e.value = Tensor::zeros(shape);
  if (init == Init::kUniformWeight) {
    for (auto& x : e.value.data) x = rng.uniform(-kInitRange, kInitRange);
  }
  e.grad = Tensor::zeros(shape);
  e.m = Tensor::zeros(shape);
  e.v = Tensor::zeros(shape);
  auto [it, ok] = entries_.emplace(name, std::move(e));
  (void)ok;
  return it->second.value;
}

const Tensor& ParamStore::value(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw ContractError("unknown parameter '" + name + "'");
  return it->second.value;
}

Tensor& ParamStore::mutable_value(const std::string& name) {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw ContractError("unknown parameter '" + name + "'");
  return it->second.value;
}

Tensor& ParamStore::grad(const std::string& name) {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw ContractError("unknown parameter '" + name + "'");
  return it->second.grad;
}

void ParamStore::zero_grads() {
  for (auto& [name, e] : entries_) {
    std::fill(e.grad.data.begin(), e.grad.data.end(), 0.0);
  }
}

void ParamStore::accumulate(const GradBuffer& buffer) {
  for (auto& [name, e] : entries_) {
    auto it = buffer.grads.find(name);
    if (it == buffer.grads.end()) continue;
    if (!it->second.same_shape(e.grad)) {
      throw ContractError("gradient shape mismatch for '" + name + "'");
    }
    for (int i = 0; i < e.grad.numel(); ++i) e.grad.data[i] += it->second.data[i];
  }
}

void ParamStore::adam_step(double lr, double beta1, double beta2, double eps) {
  ++adam_steps_;
  double bc1 = 1.0 - std::pow(beta1, static_cast<double>(adam_steps_));
  double bc2 = 1.0 - std::pow(beta2, static_cast<double>(adam_steps_));
  for (auto& [name, e] : entries_) {
    for (int i = 0; i < e.value.numel(); ++i) {
      double g = e.grad.data[i];
      if (!std::isfinite(g)) {
        throw DivergenceError("non-finite gradient in '" + name + "'");
      }
      e.m.data[i] = beta1 * e.m.data[i] + (1.0 - beta1) * g;
      e.v.data[i] = beta2 * e.v.data[i] + (1.0 - beta2) * g * g;
      double mhat = e.m.data[i] / bc1;
      double vhat = e.v.data[i] / bc2;
      e.value.data[i] -= lr * mhat / (std::sqrt(vhat) + eps);
    }
    std::fill(e.grad.data.begin(), e.grad.data.end(), 0.0);
  }
}

void ParamStore::sgd_step(double lr) {
  for (auto& [name, e] : entries_) {
    for (int i = 0; i < e.value.numel(); ++i) {
      double g = e.grad.data[i];
      if (!std::isfinite(g)) {
        throw DivergenceError("non-finite gradient in '" + name + "'");
      }
      e.value.data[i] -= lr * g;
    }
    std::fill(e.grad.data.begin(), e.grad.data.end(), 0.0);
  }
}

std::vector<std::string> ParamStore::names() const {
  std::vector<std::string> out;
  for (auto& [name, e] : entries_) out.push_back(name);
  return out;
}

double ParamStore::max_abs_grad() const {
  double m = 0.0;
  for (auto& [name, e] : entries_) {
    for (double g : e.grad.data) m = std::max(m, std::abs(g));
  }
  return m;
}

bool ParamStore::grads_all_zero() const {
  for (auto& [name, e] : entries_) {
    for (double g : e.grad.data) {
      if (g != 0.0) return false;
    }
  }
  return true;
}

std::map<std::string, Tensor> ParamStore::snapshot_values() const {
  std::map<std::string, Tensor> out;
  for (auto& [name, e] : entries_) out[name] = e.value;
  return out;
}

void ParamStore::restore_values(const std::map<std::string, Tensor>& snapshot) {
  for (auto& [name, t] : snapshot) {
    mutable_value(name) = t;
  }
}

void ParamStore::save(const std::string& path, uint64_t config_hash) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError("cannot open checkpoint for writing: " + path);
  os.write(kMagic, 4);
  write_u32(os, kVersion);
  write_u64(os, config_hash);
  write_u32(os, static_cast<uint32_t>(entries_.size()));
  for (auto& [name, e] : entries_) {
    write_u32(os, static_cast<uint32_t>(name.size()));
    os.write(name.data(), static_cast<std::streamsize>(name.size()));
    write_u32(os, static_cast<uint32_t>(e.value.shape.size()));
    for (int d : e.value.shape) write_u32(os, static_cast<uint32_t>(d));
    for (double x : e.value.data) write_f64(os, x);
  }
  if (!os) throw DataError("checkpoint write failed: " + path);
}

uint64_t ParamStore::load(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataError("cannot open checkpoint: " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0) {
    throw DataError("not a checkpoint file: " + path);
  }
  uint32_t version = read_u32(is);
  if (version != kVersion) {
    throw DataError("unsupported checkpoint version " + std::to_string(version));
  }
  uint64_t config_hash = read_u64(is);
  uint32_t count = read_u32(is);
  for (uint32_t i = 0; i < count; ++i) {
    uint32_t name_len = read_u32(is);
    std::string name(name_len, '\0');
    is.read(name.data(), name_len);
    uint32_t ndim = read_u32(is);
    std::vector<int> shape(ndim);
    for (auto& d : shape) d = static_cast<int>(read_u32(is));
    auto it = entries_.find(name);
    if (it == entries_.end()) {
      throw DataError("checkpoint parameter '" + name + "' unknown to this model");
    }
    if (it->second.value.shape != shape) {
      throw DataError("checkpoint shape mismatch for '" + name + "'");
    }
    for (auto& x : it->second.value.data) x = read_f64(is);
    if (!is) throw DataError("truncated checkpoint: " + path);
  }
  return config_hash;
}

}  // namespace tabqa
