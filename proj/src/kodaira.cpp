#include "monodromy/kodaira.hpp"

#include <cctype>

#include "monodromy/error.hpp"

namespace monodromy {

bool KodairaFiber::is_star() const {
  return kind == FiberKind::Istar || kind == FiberKind::IIstar || kind == FiberKind::IIIstar ||
         kind == FiberKind::IVstar;
}

KodairaFiber fiber_I(int n) { return KodairaFiber{FiberKind::I, n}; }
KodairaFiber fiber_Istar(int n) { return KodairaFiber{FiberKind::Istar, n}; }

int fiber_et(const KodairaFiber& f) {
  switch (f.kind) {
    case FiberKind::I: return 2 * f.n;
    case FiberKind::II: return 4;
    case FiberKind::III: return 6;
    case FiberKind::IV: return 8;
    case FiberKind::Istar: return 2 * f.n + 12;
    case FiberKind::IVstar: return 16;
    case FiberKind::IIIstar: return 18;
    case FiberKind::IIstar: return 20;
  }
  return 0;
}

KodairaFiber star_twist(const KodairaFiber& f) {
  switch (f.kind) {
    case FiberKind::I: return fiber_Istar(f.n);
    case FiberKind::II: return KodairaFiber{FiberKind::IVstar, 0};
    case FiberKind::III: return KodairaFiber{FiberKind::IIIstar, 0};
    case FiberKind::IV: return KodairaFiber{FiberKind::IIstar, 0};
    default: throw Error(ErrorCode::AlreadyStar, fiber_name(f) + " is already a star fiber");
  }
}

KodairaFiber minimal_fiber_over_end(EndMark mark, int e, bool star) {
  if (e < 1) throw Error(ErrorCode::InvalidProfile, "ramification order must be positive");
  KodairaFiber f;
  if (mark == EndMark::B2) {
    f = e % 2 == 0 ? fiber_I(0) : KodairaFiber{FiberKind::III, 0};
  } else {
    switch (e % 3) {
      case 0: f = fiber_I(0); break;
      case 1: f = KodairaFiber{FiberKind::II, 0}; break;
      default: f = KodairaFiber{FiberKind::IV, 0}; break;
    }
  }
  return star ? star_twist(f) : f;
}

std::string fiber_name(const KodairaFiber& f) {
  switch (f.kind) {
    case FiberKind::I: return "I" + std::to_string(f.n);
    case FiberKind::II: return "II";
    case FiberKind::III: return "III";
    case FiberKind::IV: return "IV";
    case FiberKind::Istar: return "I" + std::to_string(f.n) + "*";
    case FiberKind::IIstar: return "II*";
    case FiberKind::IIIstar: return "III*";
    case FiberKind::IVstar: return "IV*";
  }
  return "?";
}

KodairaFiber parse_fiber(const std::string& name) {
  if (name == "II") return {FiberKind::II, 0};
  if (name == "III") return {FiberKind::III, 0};
  if (name == "IV") return {FiberKind::IV, 0};
  if (name == "II*") return {FiberKind::IIstar, 0};
  if (name == "III*") return {FiberKind::IIIstar, 0};
  if (name == "IV*") return {FiberKind::IVstar, 0};
  if (name.size() >= 2 && name[0] == 'I') {
    bool star = name.back() == '*';
    std::string digits = name.substr(1, name.size() - 1 - (star ? 1 : 0));
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      int n = std::stoi(digits);
      return star ? fiber_Istar(n) : fiber_I(n);
    }
  }
  throw Error(ErrorCode::ParseError, "unknown fiber type '" + name + "'");
}

SurfaceStats surface_stats(const std::vector<KodairaFiber>& fibers) {
  if (fibers.empty()) throw Error(ErrorCode::InvalidProfile, "no fibers given");
  int et = 0;
  for (const auto& f : fibers) et += fiber_et(f);
  int chi = et / 2;
  if (et % 2 != 0 || chi % 12 != 0)
    throw Error(ErrorCode::NotMultipleOf12, "chi = " + std::to_string(et / 2) + " is not divisible by 12");
  return SurfaceStats{et, chi, -chi / 12, chi / 12};
}

}  // namespace monodromy
