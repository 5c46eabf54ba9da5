// Copyright 2026 The arcelim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arcelim {

enum class Backend { kSimulated, kThreaded };

std::string_view to_string(Backend backend);
std::optional<Backend> parse_backend(std::string_view name);

/// Counters of the CREW PRAM step model.
///
/// A par-block over k indices with p processors costs ceil(k/p) time steps
/// and one synchronization; sequential driver work is charged through
/// seq_tick and costs one time step per unit.
struct CostReport {
  std::uint64_t time_steps = 0;
  std::uint64_t sync_steps = 0;
  std::uint64_t work = 0;
  std::uint64_t seq_steps = 0;

  friend bool operator==(const CostReport&, const CostReport&) = default;
  friend CostReport operator-(const CostReport& a, const CostReport& b) {
    return {a.time_steps - b.time_steps, a.sync_steps - b.sync_steps, a.work - b.work,
            a.seq_steps - b.seq_steps};
  }

  /// "time_steps=..\nsync_steps=..\nwork=..\nseq_steps=..\n", each key
  /// prefixed with `prefix`.
  std::string to_key_value(std::string_view prefix = {}) const;
  static std::string csv_header();
  std::string to_csv_row() const;
};

/// Raised in write-validation mode when two bodies of one par-block wrote
/// the same location.
class WriteConflict : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Executes par-blocks: data-parallel loops over [0, k) followed by a
/// barrier. Bodies may read anything but must write pairwise-disjoint
/// locations (CREW). The simulated backend runs bodies on the calling
/// thread; the threaded backend splits the range into p contiguous chunks
/// of ceil(k/p) indices run by a fixed pool of p participants (the caller
/// plus p-1 workers). Both backends account identically.
///
/// Not thread-safe: one driver thread issues all blocks.
class ParEngine {
 public:
  explicit ParEngine(std::size_t processors = 1, Backend backend = Backend::kSimulated);
  ~ParEngine();

  ParEngine(const ParEngine&) = delete;
  ParEngine& operator=(const ParEngine&) = delete;

  std::size_t processors() const { return processors_; }
  Backend backend() const { return backend_; }

  template <class Body>
  void par_for(std::size_t range_size, Body&& body) {
    run_block(range_size, [&body](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) body(i);
    });
  }

  void seq_tick(std::uint64_t units = 1) {
    counters_.seq_steps += units;
    counters_.time_steps += units;
  }

  CostReport report() const { return counters_; }

  /// In validation mode every body is expected to call note_write for each
  /// location it mutates; a block that writes a location twice throws
  /// WriteConflict after its barrier.
  void set_write_validation(bool enabled) { validate_writes_ = enabled; }
  bool write_validation() const { return validate_writes_; }

  void note_write(const void* location) {
    if (!validate_writes_) return;
    std::lock_guard lock(write_log_mutex_);
    write_log_.push_back(location);
  }

 private:
  using ChunkFn = std::function<void(std::size_t, std::size_t)>;
  class WorkerPool;

  void run_block(std::size_t range_size, const ChunkFn& chunk);
  void check_write_log();

  std::size_t processors_;
  Backend backend_;
  CostReport counters_;
  std::unique_ptr<WorkerPool> pool_;

  bool validate_writes_ = false;
  std::mutex write_log_mutex_;
  std::vector<const void*> write_log_;
};

/// Processor count from the ARCELIM_PROCS environment variable, or
/// `fallback` when unset or unparsable.
std::size_t processors_from_env(std::size_t fallback = 1);

}  // namespace arcelim
