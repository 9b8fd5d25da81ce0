use super::matrix::Matrix;
use crate::error::{Error, Result};
use num_traits::Float;
use std::fmt;
use std::sync::Arc;

type Eval<T> = Arc<dyn Fn(&[T]) -> Vec<T> + Send + Sync>;
type Jacobian<T> = Arc<dyn Fn(&[T]) -> Matrix<T> + Send + Sync>;

/// A vector field given by closures, with an optional analytic Jacobian.
#[derive(Clone)]
pub struct NumericField<T> {
    dim: usize,
    eval: Eval<T>,
    jacobian: Option<Jacobian<T>>,
    divergence_free: bool,
}

impl<T> fmt::Debug for NumericField<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumericField")
            .field("dim", &self.dim)
            .field("has_jacobian", &self.jacobian.is_some())
            .field("divergence_free", &self.divergence_free)
            .finish()
    }
}

pub(crate) fn c<T: Float>(x: f64) -> T {
    T::from(x).expect("constant representable in the scalar type")
}

impl<T: Float + Send + Sync + 'static> NumericField<T> {
    pub fn new(dim: usize, eval: impl Fn(&[T]) -> Vec<T> + Send + Sync + 'static) -> Self {
        NumericField {
            dim,
            eval: Arc::new(eval),
            jacobian: None,
            divergence_free: false,
        }
    }

    pub fn with_jacobian(
        mut self,
        jacobian: impl Fn(&[T]) -> Matrix<T> + Send + Sync + 'static,
    ) -> Self {
        self.jacobian = Some(Arc::new(jacobian));
        self
    }

    /// Marks the field divergence free after checking `tr f′(y)` vanishes at
    /// every sample point.
    pub fn divergence_free(mut self, samples: &[Vec<T>]) -> Result<Self> {
        let jac = self
            .jacobian
            .as_ref()
            .ok_or_else(|| Error::Invalid("divergence-free check needs a Jacobian".into()))?;
        let tol = c::<T>(1e-12).max(T::epsilon() * c(64.0));
        for y in samples {
            let tr = jac(y).trace();
            if tr.abs() > tol {
                return Err(Error::Invalid(format!(
                    "trace of the Jacobian is {:e}",
                    tr.to_f64().unwrap_or(f64::NAN)
                )));
            }
        }
        self.divergence_free = true;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_divergence_free(&self) -> bool {
        self.divergence_free
    }

    pub fn has_jacobian(&self) -> bool {
        self.jacobian.is_some()
    }

    pub fn eval(&self, y: &[T]) -> Vec<T> {
        (self.eval)(y)
    }

    pub fn jacobian(&self, y: &[T]) -> Option<Matrix<T>> {
        self.jacobian.as_ref().map(|j| j(y))
    }

    /// The zero field.
    pub fn zero(dim: usize) -> Self {
        Self::new(dim, move |_| vec![T::zero(); dim]).with_jacobian(move |_| Matrix::zeros(dim))
    }

    /// `y ↦ A·y`.
    pub fn linear(a: Matrix<T>) -> Self {
        let dim = a.dim();
        let a2 = a.clone();
        Self::new(dim, move |y| a.mul_vec(y)).with_jacobian(move |_| a2.clone())
    }

    /// Hamiltonian field of `H = x²y + y³/3 + x⁴/4`: `(−x² − y², 2xy + x³)`.
    pub fn cubic_hamiltonian() -> Self {
        let two = c::<T>(2.0);
        let three = c::<T>(3.0);
        Self::new(2, move |y| {
            vec![
                -(y[0] * y[0] + y[1] * y[1]),
                two * y[0] * y[1] + y[0] * y[0] * y[0],
            ]
        })
        .with_jacobian(move |y| {
            Matrix::from_rows(&[
                vec![-two * y[0], -two * y[1]],
                vec![two * y[1] + three * y[0] * y[0], two * y[0]],
            ])
        })
        .mark_divergence_free()
    }

    /// The pendulum `(p, −sin q)`.
    pub fn pendulum() -> Self {
        Self::new(2, |y: &[T]| vec![y[1], -y[0].sin()])
            .with_jacobian(|y| {
                Matrix::from_rows(&[vec![T::zero(), T::one()], vec![-y[0].cos(), T::zero()]])
            })
            .mark_divergence_free()
    }

    /// `(y² − z, z² + x, x² − y)`, divergence free and not Hamiltonian.
    pub fn quadratic_3d() -> Self {
        let two = c::<T>(2.0);
        Self::new(3, |y: &[T]| {
            vec![y[1] * y[1] - y[2], y[2] * y[2] + y[0], y[0] * y[0] - y[1]]
        })
        .with_jacobian(move |y| {
            Matrix::from_rows(&[
                vec![T::zero(), two * y[1], -T::one()],
                vec![T::one(), T::zero(), two * y[2]],
                vec![two * y[0], -T::one(), T::zero()],
            ])
        })
        .mark_divergence_free()
    }

    /// Arnold–Beltrami–Childress flow with coefficients `(1, 0.8, 0.6)`.
    pub fn abc_flow() -> Self {
        let (a, b, cc) = (T::one(), c::<T>(0.8), c::<T>(0.6));
        Self::new(3, move |y: &[T]| {
            vec![
                a * y[2].sin() + cc * y[1].cos(),
                b * y[0].sin() + a * y[2].cos(),
                cc * y[1].sin() + b * y[0].cos(),
            ]
        })
        .with_jacobian(move |y| {
            Matrix::from_rows(&[
                vec![T::zero(), -cc * y[1].sin(), a * y[2].cos()],
                vec![b * y[0].cos(), T::zero(), -a * y[2].sin()],
                vec![-b * y[0].sin(), cc * y[1].cos(), T::zero()],
            ])
        })
        .mark_divergence_free()
    }

    /// The harmonic oscillator `(−y, x)`.
    pub fn harmonic() -> Self {
        Self::linear(Matrix::from_rows(&[
            vec![T::zero(), -T::one()],
            vec![T::one(), T::zero()],
        ]))
        .mark_divergence_free()
    }

    /// Looks up a named test field.
    pub fn named(name: &str) -> Result<Self> {
        match name {
            "cubic2d" => Ok(Self::cubic_hamiltonian()),
            "pendulum" => Ok(Self::pendulum()),
            "quad3d" => Ok(Self::quadratic_3d()),
            "abc" => Ok(Self::abc_flow()),
            "harmonic" => Ok(Self::harmonic()),
            other => Err(Error::Invalid(format!(
                "unknown field {other:?}; expected one of cubic2d, pendulum, quad3d, abc, harmonic"
            ))),
        }
    }

    /// Builtin fields whose divergence vanishes identically.
    fn mark_divergence_free(self) -> Self {
        let samples = sample_points(self.dim);
        self.divergence_free(&samples)
            .expect("builtin field is divergence free")
    }
}

/// Names accepted by [`NumericField::named`].
pub const FIELD_NAMES: [&str; 5] = ["cubic2d", "pendulum", "quad3d", "abc", "harmonic"];

fn sample_points<T: Float>(dim: usize) -> Vec<Vec<T>> {
    [0.3, -0.7, 1.1, 0.05]
        .iter()
        .map(|&s| {
            (0..dim)
                .map(|i| c::<T>(s * (i as f64 + 1.0) - 0.2 * i as f64))
                .collect()
        })
        .collect()
}

/// `F(y) = f(y) + h²/12 (½ tr(f′(y)²) I − f′(y)²) f(y)`.
pub fn preprocess_field<T: Float + Send + Sync + 'static>(
    f: &NumericField<T>,
    h: T,
) -> Result<NumericField<T>> {
    if !f.has_jacobian() {
        return Err(Error::Invalid(
            "pre-processing needs the Jacobian of the field".into(),
        ));
    }
    let inner = f.clone();
    let coeff = h * h / c(12.0);
    let half = c::<T>(0.5);
    Ok(NumericField::new(f.dim(), move |y| {
        let fy = inner.eval(y);
        let j = inner.jacobian(y).expect("checked above");
        let j2 = j.mul(&j);
        let s = half * j2.trace();
        let j2f = j2.mul_vec(&fy);
        fy.iter()
            .zip(&j2f)
            .map(|(&fi, &gi)| fi + coeff * (s * fi - gi))
            .collect()
    }))
}
