//! Parameter grids and the worker pool that evaluates sweep points.

use rayon::prelude::*;

use crate::error::RunError;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "TROTTERCHEM_THREADS";

const MAX_GRID_POINTS: usize = 1_000_000;

fn config(message: impl Into<String>) -> RunError {
    RunError::Config(message.into())
}

/// `0, step, 2·step, …` up to and including `max` (within round-off).
pub fn uniform_grid(name: &str, max: f64, step: f64) -> Result<Vec<f64>, RunError> {
    if !(max.is_finite() && max >= 0.0) {
        return Err(config(format!(
            "{name} maximum must be finite and non-negative, got {max}"
        )));
    }
    if !(step.is_finite() && step > 0.0) {
        return Err(config(format!("{name} step must be positive, got {step}")));
    }
    let n = (max / step + 1e-9).floor();
    if n >= MAX_GRID_POINTS as f64 {
        return Err(config(format!("{name} grid has too many points")));
    }
    Ok((0..=n as usize).map(|k| k as f64 * step).collect())
}

/// `points` values from `min` to `max`: log-spaced when `min > 0`,
/// linear otherwise.
pub fn eps_grid(min: f64, max: f64, points: usize) -> Result<Vec<f64>, RunError> {
    if !(min.is_finite() && max.is_finite() && 0.0 <= min && min <= max && max <= 1.0) {
        return Err(config(format!(
            "need 0 <= eps-min <= eps-max <= 1, got {min} and {max}"
        )));
    }
    if points == 0 || points > MAX_GRID_POINTS {
        return Err(config(format!(
            "eps-points must be between 1 and {MAX_GRID_POINTS}"
        )));
    }
    if points == 1 {
        return Ok(vec![min]);
    }
    let last = (points - 1) as f64;
    Ok((0..points)
        .map(|k| {
            let f = k as f64 / last;
            if min > 0.0 {
                (min.ln() + f * (max.ln() - min.ln())).exp()
            } else {
                min + f * (max - min)
            }
        })
        .collect())
}

/// Checks a Trotter step list: non-empty, every entry at least 1.
pub fn step_list(steps: &[usize]) -> Result<Vec<usize>, RunError> {
    if steps.is_empty() {
        return Err(config("step list is empty"));
    }
    if steps.contains(&0) {
        return Err(config("step counts must be at least 1"));
    }
    Ok(steps.to_vec())
}

/// Worker pool sized by `TROTTERCHEM_THREADS`, or by rayon's default.
pub fn pool() -> Result<rayon::ThreadPool, RunError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v.trim().parse().ok().filter(|&n| n >= 1).ok_or_else(|| {
            config(format!(
                "{THREADS_ENV} must be a positive integer, got {v:?}"
            ))
        })?;
        builder = builder.num_threads(n);
    }
    builder
        .build()
        .map_err(|e| config(format!("cannot start worker pool: {e}")))
}

/// Maps `f` over `items` on the pool; results keep the input order.
pub fn par_map<T, R, F>(pool: &rayon::ThreadPool, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    pool.install(|| items.par_iter().map(f).collect())
}
