use super::field::{c, preprocess_field, NumericField};
use super::midpoint::{
    flow_jacobian, midpoint_increment, midpoint_step, rk4_step, DEFAULT_MAX_ITER, DEFAULT_TOL,
};
use crate::error::{Error, Result};
use num_traits::Float;
use std::cmp::Ordering;
use std::fmt::Write;

/// Errors measured over a grid of step sizes and their log-log slope.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResult<T> {
    /// Step sizes, strictly decreasing.
    pub h: Vec<T>,
    pub errors: Vec<T>,
    pub slope: T,
    pub preprocessed: bool,
}

impl<T: Float + std::fmt::LowerExp> ExperimentResult<T> {
    /// CSV rows without a header.
    pub fn csv_rows(&self) -> String {
        let mut out = String::new();
        for (h, e) in self.h.iter().zip(&self.errors) {
            writeln!(out, "{:e},{:e},{}", h, e, self.preprocessed).expect("writing to a String");
        }
        out
    }
}

/// Header of the volume-error CSV.
pub const CSV_HEADER: &str = "h,volume_error,preprocessed";

/// `n` step sizes spaced geometrically from `hmax` down to `hmin`.
pub fn step_grid<T: Float>(hmin: T, hmax: T, n: usize) -> Result<Vec<T>> {
    if n < 2 || !(hmin > T::zero() && hmax > hmin) {
        return Err(Error::Invalid(
            "need 0 < hmin < hmax and at least two steps".into(),
        ));
    }
    let ratio = (hmin / hmax).ln() / T::from(n - 1).expect("small count");
    Ok((0..n)
        .map(|i| {
            if i == n - 1 {
                hmin
            } else {
                hmax * (ratio * T::from(i).expect("small count")).exp()
            }
        })
        .collect())
}

/// Least-squares slope of `log e` against `log h`.
pub fn fit_slope<T: Float>(h: &[T], e: &[T]) -> T {
    let xs: Vec<T> = h.iter().map(|x| x.ln()).collect();
    let ys: Vec<T> = e.iter().map(|y| y.ln()).collect();
    let n = T::from(xs.len()).expect("small count");
    let mx = xs.iter().fold(T::zero(), |a, &x| a + x) / n;
    let my = ys.iter().fold(T::zero(), |a, &y| a + y) / n;
    let (mut sxy, mut sxx) = (T::zero(), T::zero());
    for (&x, &y) in xs.iter().zip(&ys) {
        sxy = sxy + (x - mx) * (y - my);
        sxx = sxx + (x - mx) * (x - mx);
    }
    sxy / sxx
}

/// Smallest error treated as signal rather than finite-difference noise.
pub fn noise_floor<T: Float>() -> T {
    T::epsilon() * c(1e5)
}

fn check_grid<T: Float>(h: &[T]) -> Result<()> {
    if h.len() < 2 || h.windows(2).any(|w| w[1] >= w[0]) || h.iter().any(|&x| x <= T::zero()) {
        return Err(Error::Invalid(
            "step sizes must be positive and strictly decreasing".into(),
        ));
    }
    Ok(())
}

fn stepping_field<T: Float + Send + Sync + 'static>(
    f: &NumericField<T>,
    h: T,
    preprocess: bool,
) -> Result<NumericField<T>> {
    if preprocess {
        preprocess_field(f, h)
    } else {
        Ok(f.clone())
    }
}

fn finish<T: Float>(h: Vec<T>, errors: Vec<T>, preprocessed: bool) -> Result<ExperimentResult<T>> {
    let floor = noise_floor::<T>();
    if let Some((&hh, &e)) = h
        .iter()
        .zip(&errors)
        .find(|(_, &e)| e.partial_cmp(&floor) != Some(Ordering::Greater))
    {
        return Err(Error::DegenerateFit {
            h: hh.to_f64().unwrap_or(f64::NAN),
            error: e.to_f64().unwrap_or(f64::NAN),
            floor: floor.to_f64().unwrap_or(f64::NAN),
        });
    }
    let slope = fit_slope(&h, &errors);
    Ok(ExperimentResult {
        h,
        errors,
        slope,
        preprocessed,
    })
}

/// One-step volume error `|det ∂y₁/∂y₀ − 1|` of the (optionally
/// pre-processed) implicit midpoint rule from `y0`, for each step size.
pub fn volume_errors<T: Float + Send + Sync + 'static>(
    f: &NumericField<T>,
    y0: &[T],
    h_list: &[T],
    preprocess: bool,
) -> Result<Vec<T>> {
    if !f.is_divergence_free() {
        return Err(Error::Domain(
            "the volume experiment needs a divergence-free field".into(),
        ));
    }
    check_grid(h_list)?;
    let tol = c::<T>(DEFAULT_TOL);
    h_list
        .iter()
        .map(|&h| {
            let field = stepping_field(f, h, preprocess)?;
            let jac = flow_jacobian(
                |y| midpoint_increment(&field, y, h, tol, DEFAULT_MAX_ITER),
                y0,
            )?;
            Ok((jac.det() - T::one()).abs())
        })
        .collect()
}

/// [`volume_errors`] with a fitted slope; fails if any error is at the
/// noise floor.
pub fn volume_error_experiment<T: Float + Send + Sync + 'static>(
    f: &NumericField<T>,
    y0: &[T],
    h_list: &[T],
    preprocess: bool,
) -> Result<ExperimentResult<T>> {
    let errors = volume_errors(f, y0, h_list, preprocess)?;
    finish(h_list.to_vec(), errors, preprocess)
}

fn integrate<T: Float + Send + Sync + 'static>(
    field: &NumericField<T>,
    y0: &[T],
    h: T,
    steps: usize,
) -> Result<Vec<T>> {
    let tol = c::<T>(DEFAULT_TOL);
    let mut y = y0.to_vec();
    for _ in 0..steps {
        y = midpoint_step(field, &y, h, tol, DEFAULT_MAX_ITER)?;
    }
    Ok(y)
}

fn steps_for<T: Float>(t_end: T, h: T) -> Result<usize> {
    let n = (t_end / h).round();
    let steps = n
        .to_usize()
        .ok_or_else(|| Error::Invalid("step count out of range".into()))?;
    if steps == 0 || ((n * h - t_end) / t_end).abs() > c(1e-9) {
        return Err(Error::Invalid(
            "each step size must divide the time interval".into(),
        ));
    }
    Ok(steps)
}

/// Global error at `t_end` against a fine Runge–Kutta reference.
/// Every step size must divide `t_end`.
pub fn trajectory_error_experiment<T: Float + Send + Sync + 'static>(
    f: &NumericField<T>,
    y0: &[T],
    t_end: T,
    h_list: &[T],
    preprocess: bool,
) -> Result<ExperimentResult<T>> {
    check_grid(h_list)?;
    let h_min = h_list[h_list.len() - 1];
    let ref_steps = steps_for(t_end, h_min)? * 20;
    let h_ref = t_end / T::from(ref_steps).expect("small count");
    let mut reference = y0.to_vec();
    for _ in 0..ref_steps {
        reference = rk4_step(f, &reference, h_ref);
    }
    let errors = h_list
        .iter()
        .map(|&h| {
            let field = stepping_field(f, h, preprocess)?;
            let y = integrate(&field, y0, h, steps_for(t_end, h)?)?;
            Ok(y.iter()
                .zip(&reference)
                .fold(T::zero(), |acc, (&a, &b)| acc.max((a - b).abs())))
        })
        .collect::<Result<Vec<T>>>()?;
    finish(h_list.to_vec(), errors, preprocess)
}

/// Volume error of the whole flow map over `[0, t_end]`.
pub fn global_volume_experiment<T: Float + Send + Sync + 'static>(
    f: &NumericField<T>,
    y0: &[T],
    t_end: T,
    h_list: &[T],
    preprocess: bool,
) -> Result<ExperimentResult<T>> {
    if !f.is_divergence_free() {
        return Err(Error::Domain(
            "the volume experiment needs a divergence-free field".into(),
        ));
    }
    check_grid(h_list)?;
    let errors = h_list
        .iter()
        .map(|&h| {
            let field = stepping_field(f, h, preprocess)?;
            let steps = steps_for(t_end, h)?;
            let jac = flow_jacobian(
                |y| {
                    let end = integrate(&field, y, h, steps)?;
                    Ok(end.iter().zip(y).map(|(&a, &b)| a - b).collect())
                },
                y0,
            )?;
            Ok((jac.det() - T::one()).abs())
        })
        .collect::<Result<Vec<T>>>()?;
    finish(h_list.to_vec(), errors, preprocess)
}
