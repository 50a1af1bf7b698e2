#pragma once

#include <stdexcept>
#include <string>

namespace pd7kit {

// Domain-level failures carry a stable name so the CLI can map them to
// exit codes and JSON error objects.
struct domain_error : std::runtime_error {
    domain_error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

   private:
    std::string name_;
};

#define PD7KIT_DEFINE_ERROR(Name)                                        \
    struct Name : domain_error {                                         \
        explicit Name(const std::string& what) : domain_error(#Name, what) {} \
    }

PD7KIT_DEFINE_ERROR(NonExactDivision);
PD7KIT_DEFINE_ERROR(DivisionByZero);
PD7KIT_DEFINE_ERROR(PoleAtZero);
PD7KIT_DEFINE_ERROR(PoleHit);
PD7KIT_DEFINE_ERROR(ZeroHit);
PD7KIT_DEFINE_ERROR(BranchAmbiguity);
PD7KIT_DEFINE_ERROR(RootCollision);
PD7KIT_DEFINE_ERROR(OnCut);
PD7KIT_DEFINE_ERROR(AtOrigin);
PD7KIT_DEFINE_ERROR(QuadratureFailure);
PD7KIT_DEFINE_ERROR(BracketFailure);
PD7KIT_DEFINE_ERROR(BoundaryHit);
PD7KIT_DEFINE_ERROR(ContinuationStall);
PD7KIT_DEFINE_ERROR(RealityViolation);
PD7KIT_DEFINE_ERROR(TraceStall);
PD7KIT_DEFINE_ERROR(StructureViolation);
PD7KIT_DEFINE_ERROR(PathConstructionFailure);
PD7KIT_DEFINE_ERROR(IdentityViolation);
PD7KIT_DEFINE_ERROR(InsufficientData);
PD7KIT_DEFINE_ERROR(DegreeViolation);

#undef PD7KIT_DEFINE_ERROR

}  // namespace pd7kit
