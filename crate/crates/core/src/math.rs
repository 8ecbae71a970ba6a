//! Float helpers usable from both std and no_std builds, plus small
//! kinematic formulas shared by the reachability and game modules.

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("no_std builds require the `libm` feature");

#[inline]
pub fn sqrt(x: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        x.sqrt()
    }
    #[cfg(not(feature = "std"))]
    {
        libm::sqrt(x)
    }
}

#[inline]
pub fn floor(x: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        x.floor()
    }
    #[cfg(not(feature = "std"))]
    {
        libm::floor(x)
    }
}

#[inline]
pub fn ceil(x: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        x.ceil()
    }
    #[cfg(not(feature = "std"))]
    {
        libm::ceil(x)
    }
}

#[inline]
pub fn round(x: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        x.round()
    }
    #[cfg(not(feature = "std"))]
    {
        libm::round(x)
    }
}

/// Maximum distance a forward-only agent can cover in `tau` seconds starting
/// at speed `v`, accelerating at `a_max` up to the speed cap `v_max`.
pub fn max_advance(v: f64, a_max: f64, v_max: f64, tau: f64) -> f64 {
    if tau <= 0.0 {
        return 0.0;
    }
    let v = v.clamp(0.0, v_max);
    if a_max <= 0.0 {
        return v * tau;
    }
    let t_cap = (v_max - v) / a_max;
    if tau <= t_cap {
        v * tau + 0.5 * a_max * tau * tau
    } else {
        let d_accel = v * t_cap + 0.5 * a_max * t_cap * t_cap;
        d_accel + v_max * (tau - t_cap)
    }
}

/// Minimum distance covered in `tau` seconds from speed `v` when braking at
/// `a_max` (speed clamps at zero; the agent never reverses).
pub fn min_advance(v: f64, a_max: f64, tau: f64) -> f64 {
    if tau <= 0.0 {
        return 0.0;
    }
    let v = v.max(0.0);
    if a_max <= 0.0 {
        return v * tau;
    }
    let t_stop = v / a_max;
    if tau <= t_stop {
        v * tau - 0.5 * a_max * tau * tau
    } else {
        v * v / (2.0 * a_max)
    }
}

/// Minimum time to cover distance `d` starting at speed `v`, accelerating at
/// `a_max` up to `v_max`. Returns 0 for non-positive `d` and infinity when the
/// agent cannot move (`v = 0` with no acceleration).
pub fn min_time_to_cover(d: f64, v: f64, a_max: f64, v_max: f64) -> f64 {
    if d <= 0.0 {
        return 0.0;
    }
    let v = v.clamp(0.0, v_max);
    if a_max <= 0.0 {
        return if v > 0.0 { d / v } else { f64::INFINITY };
    }
    let d_accel = (v_max * v_max - v * v) / (2.0 * a_max);
    if d <= d_accel {
        // solve v t + a t^2 / 2 = d
        (-v + sqrt(v * v + 2.0 * a_max * d)) / a_max
    } else {
        let t_accel = (v_max - v) / a_max;
        t_accel + (d - d_accel) / v_max
    }
}

/// Latest time at which a forward-only agent starting at distance `d` from a
/// line can still be at or above that line, braking at up to `a_max`.
/// Negative when already past the line, infinite when it can come to rest
/// before crossing.
pub fn latest_time_above(d: f64, v: f64, a_max: f64) -> f64 {
    if d < 0.0 {
        return -1.0;
    }
    let v = v.max(0.0);
    if a_max <= 0.0 {
        return if v > 0.0 { d / v } else { f64::INFINITY };
    }
    if v * v <= 2.0 * a_max * d {
        return f64::INFINITY;
    }
    // first root of d - v t + a t^2 / 2 = 0
    (v - sqrt(v * v - 2.0 * a_max * d)) / a_max
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn max_advance_caps_at_speed_limit() {
        // 1 s at 12 m/s with a=8 up to 14: 0.25 s accel (12->14, 3.25 m) + 0.75 s at 14
        let d = max_advance(12.0, 8.0, 14.0, 1.0);
        assert!((d - (3.25 + 10.5)).abs() < 1e-12);
    }

    #[test]
    fn min_advance_stops_at_zero() {
        // from 4 m/s braking at 8: stops after 0.5 s having covered 1 m
        assert!((min_advance(4.0, 8.0, 2.0) - 1.0).abs() < 1e-12);
        assert!((min_advance(4.0, 8.0, 0.25) - (1.0 - 0.25)).abs() < 1e-12);
    }

    #[test]
    fn min_time_matches_hand_values() {
        assert!((min_time_to_cover(10.0, 15.0, 8.0, 15.0) - 10.0 / 15.0).abs() < 1e-12);
        assert!((min_time_to_cover(200.0, 15.0, 8.0, 15.0) - 200.0 / 15.0).abs() < 1e-12);
        // from standstill, 4 m at a=8: t = sqrt(2*4/8) = 1
        assert!((min_time_to_cover(4.0, 0.0, 8.0, 100.0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn latest_time_above_brake_cases() {
        // v^2/(2a) = 14.0625 for v=15, a=8: can rest above a line 15 m away
        assert!(latest_time_above(15.0, 15.0, 8.0).is_infinite());
        // 5 m away at 15 m/s: crosses even under max braking
        let t = latest_time_above(5.0, 15.0, 8.0);
        assert!(t.is_finite() && t > 0.0);
        // position at t under max braking is exactly the line
        assert!((15.0 * t - 4.0 * t * t - 5.0).abs() < 1e-9);
    }
}
