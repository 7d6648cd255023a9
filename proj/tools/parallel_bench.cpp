// Compares the OpenMP trial loop against the serial reference on a
// representative recognition workload and checks that both produce the same
// CSV bytes.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gavsa/experiment.hpp"

namespace {

double run_once(gavsa::ExperimentConfig config, bool parallel, std::string* csv_out) {
  config.parallel = parallel;
  const auto start = std::chrono::steady_clock::now();
  const auto rows = gavsa::run_experiment(config);
  const auto stop = std::chrono::steady_clock::now();
  *csv_out = gavsa::to_csv(rows);
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  gavsa::ExperimentConfig config;
  config.kind = gavsa::ExperimentKind::Recognize;
  config.questions = {"(4a)#cause_obj"};
  config.constructions = {gavsa::Construction::AgentObjectOdd};
  config.measures = {gavsa::Measure::Hamming};
  config.n_min = 16;
  config.n_max = 16;
  config.trials = (argc > 1) ? std::atoi(argv[1]) : 2000;
  config.seed = 99;

  std::string serial_csv;
  std::string parallel_csv;
  const double serial_s = run_once(config, false, &serial_csv);
  const double parallel_s = run_once(config, true, &parallel_csv);

  int threads = 1;
#ifdef _OPENMP
#pragma omp parallel
  {
#pragma omp single
    threads = omp_get_num_threads();
  }
#endif

  std::printf("workload: %s, N=%d, %d trials\n", config.questions.front().c_str(), config.n_min,
              config.trials);
  std::printf("serial reference: %8.3f s\n", serial_s);
  std::printf("openmp (%2d thr.): %8.3f s\n", threads, parallel_s);
  std::printf("speedup:          %8.2fx\n", serial_s / parallel_s);
  if (serial_csv != parallel_csv) {
    std::printf("FAIL: serial and parallel CSV outputs differ\n");
    return 1;
  }
  std::printf("outputs identical: yes\n");
  return 0;
}
