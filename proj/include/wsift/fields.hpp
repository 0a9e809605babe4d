#pragma once

#include <cstdint>
#include <vector>

#include "wsift/volume.hpp"

namespace wsift {

enum class Label : std::uint8_t { out = 0, in = 1 };

/// One bit per voxel.
class BitField {
 public:
  BitField() = default;
  explicit BitField(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void assign(std::size_t i, bool on) { on ? set(i) : reset(i); }
  std::size_t count() const;

  friend bool operator==(const BitField&, const BitField&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Bit-packed result labels. A clear bit is OUT.
class LabelField {
 public:
  LabelField() = default;
  explicit LabelField(std::size_t size) : bits_(size) {}

  std::size_t size() const { return bits_.size(); }
  Label operator[](VoxelIndex v) const { return bits_.test(v) ? Label::in : Label::out; }
  void set(VoxelIndex v, Label l) { bits_.assign(v, l == Label::in); }
  std::size_t count_in() const { return bits_.count(); }

  friend bool operator==(const LabelField&, const LabelField&) = default;

 private:
  BitField bits_;
};

/// TEMP/DONE flag per voxel. Only ever moves TEMP -> DONE.
class FlagField {
 public:
  explicit FlagField(std::size_t size) : bits_(size) {}

  bool done(VoxelIndex v) const { return bits_.test(v); }
  void mark_done(VoxelIndex v) { bits_.set(v); }
  std::size_t count_done() const { return bits_.count(); }

 private:
  BitField bits_;
};

/// Per-voxel path cost; `infinity()` marks voxels never reached.
class CostField {
 public:
  CostField() = default;
  CostField(std::size_t size, Weight infinity) : infinity_(infinity), values_(size, infinity) {}

  Weight infinity() const { return infinity_; }
  std::size_t size() const { return values_.size(); }
  Weight operator[](VoxelIndex v) const { return values_[v]; }
  Weight& operator[](VoxelIndex v) { return values_[v]; }
  const std::vector<Weight>& values() const { return values_; }

  friend bool operator==(const CostField&, const CostField&) = default;

 private:
  Weight infinity_ = 0;
  std::vector<Weight> values_;
};

}  // namespace wsift
