#include "qwalk/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace qwalk {

double SweepGrid::alpha_at(int i) const {
  return alpha_min + i * (alpha_max - alpha_min) / (n_alpha - 1);
}

double SweepGrid::beta_at(int j) const {
  return beta_min + j * (beta_max - beta_min) / (n_beta - 1);
}

void SweepGrid::validate() const {
  if (n_alpha < 2 || n_beta < 2) {
    throw std::domain_error("grid needs at least 2 points per axis");
  }
  if (!(alpha_min < alpha_max) || !(beta_min < beta_max)) {
    throw std::domain_error("grid bounds must satisfy min < max");
  }
  if (steps < 1) {
    throw std::domain_error("steps must be >= 1");
  }
  if (sequence.letters.empty()) {
    throw std::domain_error("grid has no game sequence");
  }
}

namespace {

int resolve_threads(int threads, std::size_t cells) {
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) {
      threads = 1;
    }
  }
  return static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(threads), cells));
}

}  // namespace

SweepResult sweep(const SweepGrid& grid, int threads) {
  grid.validate();

  SweepResult result;
  result.grid = grid;
  const std::size_t cells =
      static_cast<std::size_t>(grid.n_alpha) * grid.n_beta;
  result.values.resize(cells);

  const WalkerState initial = standard_initial_state();
  auto run_cell = [&](std::size_t cell) {
    const int i = static_cast<int>(cell) / grid.n_beta;
    const int j = static_cast<int>(cell) % grid.n_beta;
    const PhasePair phases{grid.alpha_at(i), grid.beta_at(j)};
    result.values[cell] = expectation_position(
        evolve(initial, grid.sequence, phases, grid.steps));
  };

  const int workers = resolve_threads(threads, cells);
  if (workers == 1) {
    for (std::size_t cell = 0; cell < cells; ++cell) {
      run_cell(cell);
    }
    return result;
  }

  // Each cell writes only its own slot, so the values are identical for any
  // worker count and claim order.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (std::size_t cell = next.fetch_add(1); cell < cells;
             cell = next.fetch_add(1)) {
          run_cell(cell);
        }
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& worker : pool) {
    worker.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return result;
}

std::vector<PositiveCell> positive_region(const SweepResult& result,
                                          double threshold) {
  std::vector<PositiveCell> cells;
  for (int i = 0; i < result.grid.n_alpha; ++i) {
    for (int j = 0; j < result.grid.n_beta; ++j) {
      const double value = result.at(i, j);
      if (value > threshold) {
        cells.push_back({result.grid.alpha_at(i), result.grid.beta_at(j),
                         value});
      }
    }
  }
  return cells;
}

namespace {

// Smallest repeating unit: ABAB -> AB, AAA -> A.
std::string primitive_period(const std::string& word) {
  const std::size_t n = word.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) {
      continue;
    }
    bool repeats = true;
    for (std::size_t k = p; k < n; ++k) {
      if (word[k] != word[k - p]) {
        repeats = false;
        break;
      }
    }
    if (repeats) {
      return word.substr(0, p);
    }
  }
  return word;
}

std::string swap_letters(std::string word) {
  for (char& c : word) {
    c = (c == 'A') ? 'B' : 'A';
  }
  return word;
}

}  // namespace

std::vector<GameSequence> enumerate_sequences(int max_len) {
  if (max_len < 1 || max_len > 8) {
    throw std::domain_error("max_len must be in [1, 8]");
  }
  std::set<std::string> canonical;
  for (int len = 1; len <= max_len; ++len) {
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      std::string word(static_cast<std::size_t>(len), 'A');
      for (int k = 0; k < len; ++k) {
        if (mask & (1u << k)) {
          word[k] = 'B';
        }
      }
      word = primitive_period(word);
      // Exactly one of {word, swap(word)} starts with A; that member is
      // the class representative.
      if (word[0] != 'A') {
        word = swap_letters(word);
      }
      canonical.insert(word);
    }
  }
  std::vector<GameSequence> out;
  out.reserve(canonical.size());
  std::vector<std::string> sorted(canonical.begin(), canonical.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (std::string& word : sorted) {
    out.push_back(GameSequence{std::move(word)});
  }
  return out;
}

std::vector<ScreenEntry> parrondo_screen(int max_len, const SweepGrid& proto,
                                         int threads) {
  const std::vector<GameSequence> sequences = enumerate_sequences(max_len);
  std::vector<ScreenEntry> entries;
  entries.reserve(sequences.size());
  for (const GameSequence& sequence : sequences) {
    SweepGrid grid = proto;
    grid.sequence = sequence;
    const int period = static_cast<int>(sequence.period());
    grid.steps = proto.steps - proto.steps % period;
    if (grid.steps < 1) {
      throw std::domain_error(
          "base step count is smaller than the sequence period");
    }
    const SweepResult result = sweep(grid, threads);

    // Positivity is judged on the open quadrant alpha > 0, beta > 0; the
    // grid may include the axes themselves.
    bool any_in_quadrant = false;
    double max_exp_x = 0.0;
    for (int i = 0; i < grid.n_alpha; ++i) {
      if (!(grid.alpha_at(i) > 0.0)) {
        continue;
      }
      for (int j = 0; j < grid.n_beta; ++j) {
        if (!(grid.beta_at(j) > 0.0)) {
          continue;
        }
        const double value = result.at(i, j);
        if (!any_in_quadrant || value > max_exp_x) {
          max_exp_x = value;
          any_in_quadrant = true;
        }
      }
    }
    if (!any_in_quadrant) {
      // Degenerate grid with no positive-phase cells: fall back to the max
      // over everything so the report stays well defined.
      max_exp_x = *std::max_element(result.values.begin(),
                                    result.values.end());
    }
    entries.push_back(
        {sequence, grid.steps, max_exp_x, any_in_quadrant && max_exp_x > 0.0});
  }
  return entries;
}

}  // namespace qwalk
