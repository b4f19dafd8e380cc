#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace qps {

// Worker count: QPS_THREADS if set (>=1), else hardware concurrency.
int worker_count();

// Evaluate fn(i) for i in [0, n) into a vector, splitting the index range over
// worker threads.  Slot i always holds fn(i), so results are independent of
// the thread count.
std::vector<double> parallel_map(std::size_t n, const std::function<double(std::size_t)>& fn);

// Fixed-shape pairwise reduction tree: adjacent pairs are summed repeatedly.
// The summation order depends only on values.size(), never on thread count,
// so reductions are bit-identical across runs.
double pairwise_sum(const std::vector<double>& values);
double pairwise_sum(const double* data, std::size_t n);

}  // namespace qps
