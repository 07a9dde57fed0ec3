// Copyright 2026 The nswcat Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nswcat/model_io.hpp"

#include <bit>
#include <cmath>

#include "nswcat/error.hpp"
#include "nswcat/text_io.hpp"

namespace nswcat {

namespace {

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u16(std::uint16_t v) { le(v, 2); }
  void u32(std::uint32_t v) { le(v, 4); }
  void u64(std::uint64_t v) { le(v, 8); }
  void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  void size(std::size_t v) { u32(static_cast<std::uint32_t>(v)); }
  void str(std::string_view s) {
    size(s.size());
    out_.append(s);
  }
  void doubles(const std::vector<double>& v) {
    for (double d : v) f64(d);
  }
  std::string take() { return std::move(out_); }

 private:
  void le(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}

  [[noreturn]] void fail(const std::string& why) const { throw DecodeError(why, pos_); }

  std::uint8_t u8() { return static_cast<std::uint8_t>(le(1)); }
  std::uint16_t u16() { return static_cast<std::uint16_t>(le(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(le(4)); }
  std::uint64_t u64() { return le(8); }
  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
  double f64() { return std::bit_cast<double>(u64()); }
  std::string str() {
    const auto n = u32();
    need(n);
    std::string s(in_.substr(pos_, n));
    pos_ += n;
    return s;
  }
  // A count of items that each take at least `item_bytes`; rejects counts the input cannot hold.
  std::size_t count(std::size_t item_bytes) {
    const std::size_t at = pos_;
    const auto n = u32();
    if (item_bytes > 0 && n > (in_.size() - pos_) / item_bytes) {
      pos_ = at;
      fail("count " + std::to_string(n) + " exceeds remaining input");
    }
    return n;
  }
  std::vector<double> doubles(std::size_t n) {
    if (n > (in_.size() - pos_) / 8) fail("truncated model: need " + std::to_string(n) + " more doubles");
    std::vector<double> v(n);
    for (auto& d : v) d = f64();
    return v;
  }
  std::string_view raw(std::size_t n) {
    need(n);
    auto s = in_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ == in_.size(); }

 private:
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) fail("truncated model: need " + std::to_string(n) + " more bytes");
  }
  std::uint64_t le(int n) {
    need(static_cast<std::size_t>(n));
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in_[pos_ + i])) << (8 * i);
    pos_ += static_cast<std::size_t>(n);
    return v;
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

constexpr std::size_t kNodeBytes = 4 + 8 + 4 + 4 + 4;

void write_tree(Writer& w, const TreeModel& t) {
  w.size(t.nodes.size());
  for (const auto& n : t.nodes) {
    w.i32(n.feature);
    w.f64(n.threshold);
    w.u32(n.left);
    w.u32(n.right);
    w.u32(n.label);
  }
}

TreeModel read_tree(Reader& r, std::size_t width, std::size_t n_classes) {
  TreeModel t;
  const auto n = r.count(kNodeBytes);
  if (n == 0) r.fail("tree has no nodes");
  t.nodes.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto at = r.pos();
    auto& node = t.nodes[i];
    node.feature = r.i32();
    node.threshold = r.f64();
    node.left = r.u32();
    node.right = r.u32();
    node.label = r.u32();
    if (node.label >= n_classes) throw DecodeError("tree node label out of range", at);
    if (node.feature >= 0) {
      // Children always follow their parent, which rules out cycles.
      if (static_cast<std::size_t>(node.feature) >= width) throw DecodeError("tree node feature out of range", at);
      if (node.left <= i || node.right <= i || node.left >= n || node.right >= n)
        throw DecodeError("tree node child index invalid", at);
    } else if (node.feature != -1) {
      throw DecodeError("tree node feature out of range", at);
    }
  }
  return t;
}

}  // namespace

std::string serialize_model(const Model& m) {
  Writer w;
  for (char c : kModelMagic) w.u8(static_cast<std::uint8_t>(c));
  w.u16(kModelVersion);
  w.u8(static_cast<std::uint8_t>(m.kind()));
  w.size(m.feature_width);
  w.size(m.class_names.size());
  for (const auto& name : m.class_names) w.str(name);

  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, NaiveBayesModel>) {
          for (auto c : p.class_counts) w.u64(c);
          w.doubles(p.means);
          w.doubles(p.variances);
        } else if constexpr (std::is_same_v<T, KnnModel>) {
          w.size(p.k);
          w.u8(p.scaled ? 1 : 0);
          if (p.scaled) {
            w.doubles(p.offsets);
            w.doubles(p.scales);
          }
          w.size(p.targets.size());
          w.doubles(p.rows);
          for (auto t : p.targets) w.u32(t);
        } else if constexpr (std::is_same_v<T, TreeModel>) {
          write_tree(w, p);
        } else {
          w.size(p.trees.size());
          for (const auto& t : p.trees) write_tree(w, t);
        }
      },
      m.params);
  return w.take();
}

Model deserialize_model(std::string_view bytes) {
  Reader r(bytes);
  if (r.raw(kModelMagic.size()) != kModelMagic) throw DecodeError("bad magic, not a model file", 0);
  const auto version_at = r.pos();
  if (const auto version = r.u16(); version != kModelVersion)
    throw DecodeError("unsupported model version " + std::to_string(version), version_at);
  const auto kind_at = r.pos();
  const auto kind = r.u8();
  if (kind > static_cast<std::uint8_t>(ClassifierKind::kForest))
    throw DecodeError("unknown model kind " + std::to_string(kind), kind_at);

  Model m;
  m.feature_width = r.u32();
  const auto n_classes = r.count(4);
  if (n_classes == 0) r.fail("model has no classes");
  for (std::size_t c = 0; c < n_classes; ++c) m.class_names.push_back(r.str());
  const std::size_t w = m.feature_width;

  switch (static_cast<ClassifierKind>(kind)) {
    case ClassifierKind::kNaiveBayes: {
      NaiveBayesModel nb;
      for (std::size_t c = 0; c < n_classes; ++c) nb.class_counts.push_back(r.u64());
      nb.means = r.doubles(n_classes * w);
      const auto var_at = r.pos();
      nb.variances = r.doubles(n_classes * w);
      for (double v : nb.variances)
        if (!(v > 0) || !std::isfinite(v)) throw DecodeError("non-positive variance", var_at);
      nb.prepare(w);
      m.params = std::move(nb);
      break;
    }
    case ClassifierKind::kKnn: {
      KnnModel knn;
      const auto k_at = r.pos();
      knn.k = r.u32();
      if (knn.k == 0) throw DecodeError("knn k must be positive", k_at);
      const auto flag = r.u8();
      if (flag > 1) r.fail("bad scaling flag");
      knn.scaled = flag == 1;
      if (knn.scaled) {
        knn.offsets = r.doubles(w);
        knn.scales = r.doubles(w);
      }
      const auto n = r.count(w * 8 + 4);
      if (n == 0) r.fail("knn model has no rows");
      knn.rows = r.doubles(n * w);
      for (std::size_t i = 0; i < n; ++i) {
        const auto at = r.pos();
        const auto t = r.u32();
        if (t >= n_classes) throw DecodeError("knn target out of range", at);
        knn.targets.push_back(t);
      }
      m.params = std::move(knn);
      break;
    }
    case ClassifierKind::kTree:
      m.params = read_tree(r, w, n_classes);
      break;
    case ClassifierKind::kForest: {
      ForestModel forest;
      const auto n = r.count(4 + kNodeBytes);
      if (n == 0) r.fail("forest has no trees");
      for (std::size_t i = 0; i < n; ++i) forest.trees.push_back(read_tree(r, w, n_classes));
      m.params = std::move(forest);
      break;
    }
  }
  if (!r.done()) r.fail("trailing bytes after model");
  return m;
}

void save_model(const std::filesystem::path& path, const Model& m) { write_file(path, serialize_model(m)); }

Model load_model(const std::filesystem::path& path) { return deserialize_model(read_file(path)); }

}  // namespace nswcat
