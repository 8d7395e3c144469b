"""Vision-based flocking simulator: Python interface to the C++ core."""

from ._core import (  # noqa: F401
    PI,
    AgentState,
    ControlInput,
    DesiredRates,
    DispersionRecord,
    HeadingLoop,
    InitSpec,
    Mode,
    NoiseParams,
    OscillationEstimate,
    PairGeometry,
    SimConfig,
    SimError,
    SplitMix64,
    SwarmParams,
    TrajectoryLog,
    Vec2,
    VisualSignal,
    apply_axis,
    circular_distance,
    cs_acceleration,
    detect_convergence,
    dispersion,
    estimate_asymptote,
    euler_step,
    flow_profile,
    initial_swarm,
    log_decrement,
    noise_bound,
    optic_flow,
    pair_geometry,
    rates_from_vector,
    reflect_to_inertial,
    run_scenario,
    run_sweep,
    sense,
    sign_select,
    substream,
    subtended_angle,
    subtended_rate,
    validate_config,
    visibility,
    wrap_angle,
    yfm_desired_heading_rate,
    yfm_heading_control,
    yfm_speed_control,
)

__all__ = [name for name in dir() if not name.startswith("_")]
