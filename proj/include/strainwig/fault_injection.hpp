#pragma once

namespace strainwig {

/// Deliberate perturbations used by the mutation tests of the verify suite.
/// Inactive by default; the library reads the hook with relaxed atomics.
enum class Fault { None, LaguerreRecurrence, AnmPhase, OmegaZeta };

void set_fault(Fault kind, double eta);
void clear_fault();
Fault active_fault();

/// 1 + eta when `kind` is the active fault, 1 otherwise.
double fault_factor(Fault kind);

class ScopedFault {
public:
  ScopedFault(Fault kind, double eta) { set_fault(kind, eta); }
  ~ScopedFault() { clear_fault(); }
  ScopedFault(const ScopedFault&) = delete;
  ScopedFault& operator=(const ScopedFault&) = delete;
};

}  // namespace strainwig
