#pragma once

// Time steppers for the no-slope-selection equation, all diagonal in the
// Fourier basis:
//
//   stabilized multistep (init)   u^1     = e^{-K tau} u^0 - phi0(K) G(u^0)
//   stabilized multistep          u^{n+1} = e^{-K tau} u^n - phi0(K) G(u^n)
//                                           - phi1(K) [G(u^n) - G(u^{n-1})]
//
// with G(v) = (1 + A tau^2 lap^2)^{-1} f_N(v), and the convex-splitting
// baselines (ETD1 one-step, ETDMs2 two-step) using the L_c symbol and the
// slot f_e(v) = f_N(v) + kappa lap v.  The mean mode of the explicit slot is
// forced to zero, so the solution mean is carried unchanged through every
// step.

#include <functional>
#include <optional>

#include "nss/field.hpp"
#include "nss/model.hpp"
#include "nss/symbols.hpp"

namespace nss {

// Explicit-slot evaluator at the current state and time.  Defaults to the
// nonlinear flux f_N; manufactured-solution runs subtract the forcing here.
using SourceFn = std::function<SpectralField(const SpectralField& u_hat, double t)>;

struct StepSchedule {
    struct Segment {
        double t_end = 0.0;
        double tau = 0.0;
    };
    std::vector<Segment> segments;

    double horizon() const { return segments.empty() ? 0.0 : segments.back().t_end; }
    static StepSchedule single(double T, double tau);
    // Throws ValidationError unless segment ends are strictly increasing and
    // each segment length is an integer multiple of its tau (1e-9 relative).
    static StepSchedule make(std::vector<Segment> segments);
    // Steps in segment k given the previous segment's end (0 for the first).
    long steps_in(size_t k) const;
};

class Stepper {
  public:
    Stepper(const GridSpec& grid, const SchemeParams& params, SourceFn source = {});

    // Resets the trajectory to nodal data u0 at time t0; drops history.
    void seed(const Field& u0, double t0);
    void seed_spectral(SpectralField u_hat, double t0, long step_index = 0);

    // Enters a schedule segment: swaps in the symbol table for tau (reusing
    // the current one when tau is unchanged) and discards multistep history,
    // so the next step is the scheme's first-order init step.
    void start_segment(double tau);

    // Advances one step: init form when no history is cached (or for ETD1),
    // multistep form otherwise.  Throws NonFinite if the update produced
    // NaN/Inf.
    void step();

    // The two forms individually; step_multi throws MissingHistory when no
    // previous slot is cached.
    void step_init();
    void step_multi();

    double t() const { return segment_start_ + steps_in_segment_ * tau_; }
    double tau() const { return tau_; }
    long step_index() const { return step_index_; }
    bool has_history() const { return src_prev_.has_value(); }
    const SpectralField& u_hat() const { return u_hat_; }
    const std::optional<SpectralField>& source_prev() const { return src_prev_; }
    const SchemeParams& params() const { return params_; }
    const GridSpec& grid() const { return grid_; }
    Field u() const { return inverse_transform(u_hat_); }

    // Checkpoint support: restore the cached previous slot verbatim.
    void restore_history(SpectralField src_prev) { src_prev_ = std::move(src_prev); }
    void set_time_base(double t0) { segment_start_ = t0; steps_in_segment_ = 0; }

  private:
    SpectralField eval_slot() const;
    void advance(const SpectralField& u_next, std::optional<SpectralField> slot);

    GridSpec grid_;
    SchemeParams params_;
    SourceFn source_;
    SymbolTable table_;
    bool table_ready_ = false;
    SpectralField u_hat_;
    std::optional<SpectralField> src_prev_;
    double tau_ = 0.0;
    double segment_start_ = 0.0;
    long steps_in_segment_ = 0;
    long step_index_ = 0;
};

// Sampling policy for trajectory diagnostics: every step below dense_until,
// then geometrically spaced targets snapped to the next completed step.
struct DiagnosticCadence {
    double dense_until = 10.0;
    double per_decade = 200.0;
};

// Resume descriptor: mid-schedule cursor plus the verbatim stepper state.
struct ResumePoint {
    SpectralField u_hat;
    std::optional<SpectralField> src_prev;
    double t = 0.0;
    long step_index = 0;
    size_t segment_index = 0;
    long steps_done_in_segment = 0;
};

struct RunResult {
    Field u;
    double t = 0.0;
    long steps = 0;
    ResumePoint state;  // end-of-run cursor, checkpointable
};

using DiagnosticsObserver = std::function<void(const Diagnostics&)>;
using StepHook = std::function<void(const Stepper&)>;

// Executes the schedule from u0, re-applying the first-order init step at
// every segment boundary.  The observer receives Diagnostics at cadence
// times (plus the initial and final states); the hook fires after every step.
RunResult run(const Field& u0, const SchemeParams& params, const StepSchedule& sched,
              const DiagnosticCadence& cadence = {}, const DiagnosticsObserver& observer = {},
              const SourceFn& source = {}, const StepHook& hook = {});

// Places the cursor of a stored state inside a (possibly re-sliced) schedule
// by its time stamp.  Throws ValidationError when t does not land on a step
// of the containing segment.
void relocate_cursor(ResumePoint& state, const StepSchedule& sched);

RunResult run_resumed(const ResumePoint& from, const SchemeParams& params,
                      const StepSchedule& sched, const DiagnosticCadence& cadence = {},
                      const DiagnosticsObserver& observer = {}, const SourceFn& source = {},
                      const StepHook& hook = {});

}  // namespace nss
