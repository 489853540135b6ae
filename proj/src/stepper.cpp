#include "nss/stepper.hpp"

#include <cmath>

#include "nss/kernels.hpp"

namespace nss {

StepSchedule StepSchedule::single(double T, double tau) {
    return make({{T, tau}});
}

StepSchedule StepSchedule::make(std::vector<Segment> segments) {
    if (segments.empty()) throw ValidationError("schedule has no segments", "schedule");
    double prev_end = 0.0;
    bool first = true;
    for (const Segment& s : segments) {
        if (!(s.tau > 0.0)) throw ValidationError("segment tau must be positive", "schedule");
        if (!first && !(s.t_end > prev_end))
            throw ValidationError("segment ends must be strictly increasing", "schedule");
        if (first && s.t_end < 0.0)
            throw ValidationError("segment end must be nonnegative", "schedule");
        const double len = s.t_end - prev_end;
        const double steps = len / s.tau;
        if (std::abs(steps - std::round(steps)) > 1e-9 * std::max(1.0, steps))
            throw ValidationError("segment length is not an integer multiple of tau",
                                  "schedule");
        prev_end = s.t_end;
        first = false;
    }
    StepSchedule out;
    out.segments = std::move(segments);
    return out;
}

long StepSchedule::steps_in(size_t k) const {
    const double start = k == 0 ? 0.0 : segments[k - 1].t_end;
    return std::lround((segments[k].t_end - start) / segments[k].tau);
}

Stepper::Stepper(const GridSpec& grid, const SchemeParams& params, SourceFn source)
    : grid_(grid), params_(params), source_(std::move(source)), u_hat_(grid) {
    if (!source_)
        source_ = [](const SpectralField& u_hat, double) {
            return nonlinear_term_spectral(u_hat);
        };
}

void Stepper::seed(const Field& u0, double t0) {
    if (!u0.finite()) throw NonFinite("initial data contains NaN/Inf", 0);
    require_same_grid(u0.grid, grid_);
    seed_spectral(forward_transform(u0), t0, 0);
}

void Stepper::seed_spectral(SpectralField u_hat, double t0, long step_index) {
    require_same_grid(u_hat.grid, grid_);
    u_hat_ = std::move(u_hat);
    src_prev_.reset();
    segment_start_ = t0;
    steps_in_segment_ = 0;
    step_index_ = step_index;
}

void Stepper::start_segment(double tau) {
    if (!(tau > 0.0)) throw DomainError("start_segment: tau must be positive");
    segment_start_ = t();
    steps_in_segment_ = 0;
    if (!table_ready_ || tau != tau_) {
        table_ = build_symbols(grid_, params_, tau);
        table_ready_ = true;
        tau_ = tau;
    }
    src_prev_.reset();
}

SpectralField Stepper::eval_slot() const {
    SpectralField slot = source_(u_hat_, t());
    if (params_.scheme != Scheme::SETDMS2 && params_.kappa != 0.0) {
        const std::ptrdiff_t n = grid_.size();
        const double kappa = params_.kappa;
        const auto* s = table_.s_lap.data();
        const auto* u = u_hat_.coeffs.data();
        auto* e = slot.coeffs.data();
#pragma omp parallel for schedule(static) if (n >= kernels::kParallelCutoff)
        for (std::ptrdiff_t i = 0; i < n; ++i) e[i] += kappa * s[i] * u[i];
    }
    if (params_.scheme == Scheme::SETDMS2)
        kernels::apply_symbol(slot.coeffs.data(), table_.stabInv.data(), grid_.size());
    // mean mode carries through every step untouched
    slot.coeffs[0] = {0.0, 0.0};
    return slot;
}

void Stepper::advance(const SpectralField& u_next, std::optional<SpectralField> slot) {
    for (const auto& c : u_next.coeffs)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw NonFinite("solution lost finiteness at step " + std::to_string(step_index_ + 1),
                            step_index_ + 1);
    u_hat_ = u_next;
    src_prev_ = std::move(slot);
    ++steps_in_segment_;
    ++step_index_;
}

void Stepper::step_init() {
    if (!table_ready_) throw DomainError("step before start_segment");
    SpectralField slot = eval_slot();
    SpectralField u_next(grid_);
    kernels::etd_update_init(u_next.coeffs.data(), u_hat_.coeffs.data(), slot.coeffs.data(),
                             table_.expK.data(), table_.phi0K.data(), grid_.size());
    advance(u_next, params_.scheme == Scheme::ETD1 ? std::nullopt
                                                   : std::optional<SpectralField>(std::move(slot)));
}

void Stepper::step_multi() {
    if (!table_ready_) throw DomainError("step before start_segment");
    if (params_.scheme == Scheme::ETD1)
        throw MissingHistory("etd1 has no multistep form");
    if (!src_prev_)
        throw MissingHistory("multistep update requested with no cached previous slot");
    SpectralField slot = eval_slot();
    SpectralField u_next(grid_);
    kernels::etd_update(u_next.coeffs.data(), u_hat_.coeffs.data(), slot.coeffs.data(),
                        src_prev_->coeffs.data(), table_.expK.data(), table_.phi0K.data(),
                        table_.phi1K.data(), grid_.size());
    advance(u_next, std::move(slot));
}

void Stepper::step() {
    if (params_.scheme == Scheme::ETD1 || !src_prev_)
        step_init();
    else
        step_multi();
}

namespace {

// Emits every step below dense_until, then at geometric targets.
struct CadenceTracker {
    double dense_until;
    double ratio;
    double next_target = 0.0;

    explicit CadenceTracker(const DiagnosticCadence& c)
        : dense_until(c.dense_until),
          ratio(c.per_decade > 0.0 ? std::pow(10.0, 1.0 / c.per_decade) : 10.0) {}

    bool should_emit(double t) {
        if (t < dense_until) return true;
        if (t >= next_target) {
            next_target = t > 0.0 ? t * ratio : 0.0;
            return true;
        }
        return false;
    }
};

RunResult run_impl(Stepper& st, const SchemeParams& params, const StepSchedule& sched,
                   const DiagnosticCadence& cadence, const DiagnosticsObserver& observer,
                   const StepHook& hook, size_t first_segment, long steps_already_done) {
    CadenceTracker tracker(cadence);
    bool current(false);
    auto emit = [&] {
        if (observer) observer(diagnostics(st.u(), params.model, st.t()));
        current = true;
    };
    if (tracker.should_emit(st.t())) emit();

    size_t last_segment = first_segment;
    long last_done = steps_already_done;
    for (size_t k = first_segment; k < sched.segments.size(); ++k) {
        const auto& seg = sched.segments[k];
        const long nsteps = sched.steps_in(k);
        long done = k == first_segment ? steps_already_done : 0;
        if (done == 0)
            st.start_segment(seg.tau);
        for (long i = done; i < nsteps; ++i) {
            st.step();
            current = false;
            if (hook) hook(st);
            if (tracker.should_emit(st.t())) emit();
        }
        last_segment = k;
        last_done = nsteps;
    }
    if (!current) emit();
    RunResult result{st.u(), sched.horizon(), st.step_index(), {}};
    result.state.u_hat = st.u_hat();
    result.state.src_prev = st.source_prev();
    result.state.t = st.t();
    result.state.step_index = st.step_index();
    result.state.segment_index = last_segment;
    result.state.steps_done_in_segment = last_done;
    return result;
}

}  // namespace

RunResult run(const Field& u0, const SchemeParams& params, const StepSchedule& sched,
              const DiagnosticCadence& cadence, const DiagnosticsObserver& observer,
              const SourceFn& source, const StepHook& hook) {
    Stepper st(u0.grid, params, source);
    st.seed(u0, 0.0);
    return run_impl(st, params, sched, cadence, observer, hook, 0, 0);
}

void relocate_cursor(ResumePoint& state, const StepSchedule& sched) {
    const double t = state.t;
    const double horizon = sched.horizon();
    const double tol = 1e-9 * std::max(1.0, horizon);
    if (t >= horizon - tol) {
        state.segment_index = sched.segments.size() - 1;
        state.steps_done_in_segment = sched.steps_in(state.segment_index);
        return;
    }
    double seg_start = 0.0;
    for (size_t k = 0; k < sched.segments.size(); ++k) {
        const auto& seg = sched.segments[k];
        if (t < seg.t_end - tol) {
            const double steps = (t - seg_start) / seg.tau;
            if (std::abs(steps - std::round(steps)) > 1e-6)
                throw ValidationError("checkpoint time does not land on a step boundary",
                                      "resume");
            state.segment_index = k;
            state.steps_done_in_segment = std::lround(steps);
            if (state.steps_done_in_segment == 0) state.src_prev.reset();
            return;
        }
        seg_start = seg.t_end;
    }
    throw ValidationError("checkpoint time is outside the schedule", "resume");
}

RunResult run_resumed(const ResumePoint& from, const SchemeParams& params,
                      const StepSchedule& sched, const DiagnosticCadence& cadence,
                      const DiagnosticsObserver& observer, const SourceFn& source,
                      const StepHook& hook) {
    if (from.segment_index >= sched.segments.size())
        throw ValidationError("resume segment index beyond schedule", "resume");
    Stepper st(from.u_hat.grid, params, source);
    const auto& seg = sched.segments[from.segment_index];
    st.seed_spectral(from.u_hat, from.t, from.step_index);
    if (from.steps_done_in_segment > 0) {
        // mid-segment: restore tau and multistep history without an init step
        st.start_segment(seg.tau);
        if (from.src_prev) st.restore_history(*from.src_prev);
    }
    return run_impl(st, params, sched, cadence, observer, hook, from.segment_index,
                    from.steps_done_in_segment);
}

}  // namespace nss
