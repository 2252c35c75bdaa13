#pragma once

#include <string>
#include <vector>

namespace monodromy {

enum class FiberKind { I, II, III, IV, Istar, IIstar, IIIstar, IVstar };

struct KodairaFiber {
  FiberKind kind = FiberKind::I;
  int n = 0;  // only meaningful for I and Istar

  bool is_star() const;
  bool operator==(const KodairaFiber&) const = default;
};

KodairaFiber fiber_I(int n);
KodairaFiber fiber_Istar(int n);

int fiber_et(const KodairaFiber& f);

/// Throws AlreadyStar.
KodairaFiber star_twist(const KodairaFiber& f);

enum class EndMark { A2, B2 };
KodairaFiber minimal_fiber_over_end(EndMark mark, int e, bool star);

/// "I0", "I5", "II", "III", "IV", "I0*", "II*", "III*", "IV*".
std::string fiber_name(const KodairaFiber& f);
KodairaFiber parse_fiber(const std::string& name);

struct SurfaceStats {
  int et_surface;
  int chi;
  int s_squared;
  int r;
};

/// Throws NotMultipleOf12 when the Euler number is not divisible by 12.
SurfaceStats surface_stats(const std::vector<KodairaFiber>& fibers);

}  // namespace monodromy
