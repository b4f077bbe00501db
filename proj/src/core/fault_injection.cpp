#include "strainwig/fault_injection.hpp"

#include <atomic>

namespace strainwig {

namespace {
std::atomic<int> g_kind{static_cast<int>(Fault::None)};
std::atomic<double> g_eta{0.0};
}  // namespace

void set_fault(Fault kind, double eta) {
  g_eta.store(eta, std::memory_order_relaxed);
  g_kind.store(static_cast<int>(kind), std::memory_order_release);
}

void clear_fault() { g_kind.store(static_cast<int>(Fault::None), std::memory_order_release); }

Fault active_fault() { return static_cast<Fault>(g_kind.load(std::memory_order_acquire)); }

double fault_factor(Fault kind) {
  if (kind == Fault::None || active_fault() != kind) return 1.0;
  return 1.0 + g_eta.load(std::memory_order_relaxed);
}

}  // namespace strainwig
