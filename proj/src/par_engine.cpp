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

#include "arcelim/par_engine.hpp"

#include <algorithm>
#include <barrier>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <thread>

namespace arcelim {

std::string_view to_string(Backend backend) {
  return backend == Backend::kSimulated ? "simulated" : "threaded";
}

std::optional<Backend> parse_backend(std::string_view name) {
  if (name == "simulated") return Backend::kSimulated;
  if (name == "threaded") return Backend::kThreaded;
  return std::nullopt;
}

std::string CostReport::to_key_value(std::string_view prefix) const {
  std::ostringstream out;
  out << prefix << "time_steps=" << time_steps << '\n'
      << prefix << "sync_steps=" << sync_steps << '\n'
      << prefix << "work=" << work << '\n'
      << prefix << "seq_steps=" << seq_steps << '\n';
  return out.str();
}

std::string CostReport::csv_header() { return "time_steps,sync_steps,work,seq_steps"; }

std::string CostReport::to_csv_row() const {
  std::ostringstream out;
  out << time_steps << ',' << sync_steps << ',' << work << ',' << seq_steps;
  return out.str();
}

// Fixed pool of p participants. Every block is two barrier phases: `start_`
// publishes the job, `done_` is the block's synchronization point.
class ParEngine::WorkerPool {
 public:
  explicit WorkerPool(std::size_t participants)
      : participants_(participants), start_(static_cast<std::ptrdiff_t>(participants)),
        done_(static_cast<std::ptrdiff_t>(participants)) {
    workers_.reserve(participants - 1);
    for (std::size_t w = 1; w < participants; ++w) {
      workers_.emplace_back([this, w] { worker_loop(w); });
    }
  }

  ~WorkerPool() {
    stop_ = true;
    start_.arrive_and_wait();
    for (auto& t : workers_) t.join();
  }

  void run(std::size_t range_size, const ChunkFn& chunk) {
    range_size_ = range_size;
    chunk_ = &chunk;
    error_ = nullptr;
    start_.arrive_and_wait();
    run_chunk(0);
    done_.arrive_and_wait();
    chunk_ = nullptr;
    if (error_) std::rethrow_exception(error_);
  }

 private:
  void worker_loop(std::size_t w) {
    for (;;) {
      start_.arrive_and_wait();
      if (stop_) return;
      run_chunk(w);
      done_.arrive_and_wait();
    }
  }

  void run_chunk(std::size_t w) {
    const std::size_t chunk = (range_size_ + participants_ - 1) / participants_;
    const std::size_t begin = std::min(range_size_, w * chunk);
    const std::size_t end = std::min(range_size_, begin + chunk);
    if (begin == end) return;
    try {
      (*chunk_)(begin, end);
    } catch (...) {
      std::lock_guard lock(error_mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }

  std::size_t participants_;
  std::barrier<> start_;
  std::barrier<> done_;
  std::vector<std::thread> workers_;

  // Written by the driver before `start_`, read by workers after it.
  bool stop_ = false;
  std::size_t range_size_ = 0;
  const ChunkFn* chunk_ = nullptr;

  std::mutex error_mutex_;
  std::exception_ptr error_;
};

ParEngine::ParEngine(std::size_t processors, Backend backend)
    : processors_(processors), backend_(backend) {
  if (processors_ == 0) throw std::invalid_argument("processor count must be at least 1");
  if (backend_ == Backend::kThreaded) pool_ = std::make_unique<WorkerPool>(processors_);
}

ParEngine::~ParEngine() = default;

void ParEngine::run_block(std::size_t range_size, const ChunkFn& chunk) {
  try {
    if (pool_) {
      pool_->run(range_size, chunk);
    } else if (range_size > 0) {
      chunk(0, range_size);
    }
  } catch (...) {
    write_log_.clear();
    throw;
  }
  if (validate_writes_) check_write_log();

  counters_.time_steps += (range_size + processors_ - 1) / processors_;
  counters_.sync_steps += 1;
  counters_.work += range_size;
}

void ParEngine::check_write_log() {
  std::vector<const void*> log;
  log.swap(write_log_);
  std::sort(log.begin(), log.end());
  auto dup = std::adjacent_find(log.begin(), log.end());
  if (dup != log.end()) {
    std::ostringstream msg;
    msg << "par-block wrote location " << *dup << " more than once";
    throw WriteConflict(msg.str());
  }
}

std::size_t processors_from_env(std::size_t fallback) {
  const char* value = std::getenv("ARCELIM_PROCS");
  if (value == nullptr) return fallback;
  std::string_view text(value);
  std::size_t p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || ptr != text.data() + text.size() || p == 0) return fallback;
  return p;
}

}  // namespace arcelim
