use super::field::{c, NumericField};
use super::matrix::Matrix;
use crate::error::{Error, Result};
use num_traits::Float;

/// Fixed-point tolerance used by the experiments.
pub const DEFAULT_TOL: f64 = 1e-13;
/// Iteration cap used by the experiments.
pub const DEFAULT_MAX_ITER: usize = 100;

fn norm<T: Float>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |acc, x| acc.max(x.abs()))
}

/// The increment `d = y' − y` of the implicit midpoint rule, solving
/// `d = h F(y + d/2)` by fixed-point iteration.
///
/// Once the update drops below `tol` the iteration continues while it keeps
/// shrinking, so the result is converged to rounding level and depends
/// smoothly on `y`.
pub fn midpoint_increment<T: Float + Send + Sync + 'static>(
    field: &NumericField<T>,
    y: &[T],
    h: T,
    tol: T,
    max_iter: usize,
) -> Result<Vec<T>> {
    if y.len() != field.dim() {
        return Err(Error::Dimension {
            expected: field.dim(),
            found: y.len(),
        });
    }
    let half = c::<T>(0.5);
    let eval_at = |d: &[T]| -> Vec<T> {
        let mid: Vec<T> = y.iter().zip(d).map(|(&yi, &di)| yi + half * di).collect();
        field.eval(&mid).into_iter().map(|v| h * v).collect()
    };
    let mut d = eval_at(&vec![T::zero(); y.len()]);
    let mut last = T::infinity();
    let mut converged = false;
    for _ in 0..max_iter {
        let next = eval_at(&d);
        let delta: Vec<T> = next.iter().zip(&d).map(|(&a, &b)| a - b).collect();
        let change = norm(&delta);
        if !change.is_finite() {
            break;
        }
        if converged && change >= last {
            return Ok(d);
        }
        d = next;
        if change <= tol {
            converged = true;
        }
        if change == T::zero() {
            return Ok(d);
        }
        last = change;
    }
    if converged {
        return Ok(d);
    }
    Err(Error::NoConvergence {
        iterations: max_iter,
        residual: last.to_f64().unwrap_or(f64::NAN),
    })
}

/// One implicit midpoint step `y' = y + h F((y + y')/2)`.
pub fn midpoint_step<T: Float + Send + Sync + 'static>(
    field: &NumericField<T>,
    y: &[T],
    h: T,
    tol: T,
    max_iter: usize,
) -> Result<Vec<T>> {
    let d = midpoint_increment(field, y, h, tol, max_iter)?;
    Ok(y.iter().zip(&d).map(|(&a, &b)| a + b).collect())
}

/// Jacobian of a map `y ↦ y + increment(y)` by central differences with
/// perturbation `max(1e-6, 1e-6 ‖y‖)`. Differencing the increment rather
/// than the image keeps rounding of `y` out of the quotient.
pub fn flow_jacobian<T: Float>(
    increment: impl Fn(&[T]) -> Result<Vec<T>>,
    y: &[T],
) -> Result<Matrix<T>> {
    let n = y.len();
    let base = c::<T>(1e-6);
    let delta = base.max(base * norm(y));
    let mut jac = Matrix::identity(n);
    for k in 0..n {
        let mut plus = y.to_vec();
        let mut minus = y.to_vec();
        plus[k] = plus[k] + delta;
        minus[k] = minus[k] - delta;
        let (dp, dm) = (increment(&plus)?, increment(&minus)?);
        let width = plus[k] - minus[k];
        for i in 0..n {
            jac[(i, k)] = jac[(i, k)] + (dp[i] - dm[i]) / width;
        }
    }
    Ok(jac)
}

/// One classical Runge–Kutta step, used for reference trajectories.
pub fn rk4_step<T: Float + Send + Sync + 'static>(
    field: &NumericField<T>,
    y: &[T],
    h: T,
) -> Vec<T> {
    let half = c::<T>(0.5);
    let axpy =
        |a: T, x: &[T]| -> Vec<T> { y.iter().zip(x).map(|(&yi, &xi)| yi + a * xi).collect() };
    let k1 = field.eval(y);
    let k2 = field.eval(&axpy(half * h, &k1));
    let k3 = field.eval(&axpy(half * h, &k2));
    let k4 = field.eval(&axpy(h, &k3));
    let sixth = h / c(6.0);
    (0..y.len())
        .map(|i| y[i] + sixth * (k1[i] + c::<T>(2.0) * (k2[i] + k3[i]) + k4[i]))
        .collect()
}
