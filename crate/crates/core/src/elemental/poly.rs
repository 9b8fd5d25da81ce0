use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::parse_rational;
use crate::Rational;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector of a monomial.
pub type Exponents = Vec<u32>;

/// Multivariate polynomial with exact coefficients. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyScalar<T> {
    nvars: usize,
    terms: BTreeMap<Exponents, T>,
}

impl<T: Scalar> PolyScalar<T> {
    pub fn zero(nvars: usize) -> Self {
        PolyScalar {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, T::one())
    }

    /// The coordinate `x_i` (zero-based `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(nvars, i, 1)
    }

    /// `x_i^k`.
    pub fn monomial(nvars: usize, i: usize, k: u32) -> Self {
        let mut e = vec![0; nvars];
        e[i] = k;
        let mut p = Self::zero(nvars);
        p.add_term(e, T::one());
        p
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Exponents, T)>,
    ) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Dimension {
                    expected: nvars,
                    found: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &T)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> T {
        self.terms.get(e).cloned().unwrap_or_else(T::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Highest power of variable `i` present.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    fn add_term(&mut self, e: Exponents, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let sum = v.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = sum;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomials over different variable counts"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-T::one()))
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.check(other);
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        PolyScalar {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// `∂/∂x_i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[i] -= 1;
            out.add_term(d, c.clone() * T::from_count(e[i] as u64));
        }
        out
    }

    /// Mixed partial derivative along each index in `indices`.
    pub fn partials(&self, indices: &[usize]) -> Self {
        indices.iter().fold(self.clone(), |p, &i| p.partial(i))
    }

    /// Substitutes `x_i ↦ subs[i]`; every substitute must share one variable count.
    pub fn compose(&self, subs: &[PolyScalar<T>]) -> Result<Self> {
        if subs.len() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                found: subs.len(),
            });
        }
        let target = subs.first().map_or(0, |s| s.nvars);
        if let Some(s) = subs.iter().find(|s| s.nvars != target) {
            return Err(Error::Dimension {
                expected: target,
                found: s.nvars,
            });
        }
        let mut powers: Vec<Vec<PolyScalar<T>>> = subs
            .iter()
            .map(|s| vec![PolyScalar::one(s.nvars)])
            .collect();
        let mut out = PolyScalar::zero(target);
        for (e, c) in &self.terms {
            let mut term = PolyScalar::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().expect("power 0 present").mul(&subs[i]);
                    powers[i].push(next);
                }
                if k > 0 {
                    term = term.mul(&powers[i][k as usize]);
                }
            }
            out.add_assign(&term);
        }
        Ok(out)
    }

    /// Same polynomial over `extra` additional trailing variables.
    pub fn extend_vars(&self, extra: usize) -> Self {
        PolyScalar {
            nvars: self.nvars + extra,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.resize(e.len() + extra, 0);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Drops every term whose power of `x_i` exceeds `max`.
    pub fn truncate_var(&self, i: usize, max: u32) -> Self {
        PolyScalar {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[i] <= max)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `x_i^k` as a polynomial in the remaining variables,
    /// with `x_i` removed from the variable list.
    pub fn coefficient_of(&self, i: usize, k: u32) -> Self {
        PolyScalar {
            nvars: self.nvars - 1,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[i] == k)
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.remove(i);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Evaluates at a point.
    pub fn eval(&self, point: &[T]) -> T {
        self.terms.iter().fold(T::zero(), |acc, (e, c)| {
            let m = e
                .iter()
                .zip(point)
                .fold(c.clone(), |m, (&k, x)| (0..k).fold(m, |m, _| m * x.clone()));
            acc + m
        })
    }
}

impl PolyScalar<Rational> {
    /// Parses `c*x1^a*x2^b + ...`; coefficients may be written `p/q` and
    /// terms may be separated by `+` or `-`.
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        let mut out = Self::zero(nvars);
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse {
                position: 0,
                message: "empty polynomial".into(),
            });
        }
        let mut start = 0;
        let bytes = cleaned.as_bytes();
        let mut pieces = Vec::new();
        for i in 1..=bytes.len() {
            if i == bytes.len()
                || ((bytes[i] == b'+' || bytes[i] == b'-')
                    && !matches!(bytes[i - 1], b'*' | b'/' | b'+' | b'-'))
            {
                pieces.push((start, &cleaned[start..i]));
                start = i;
            }
        }
        for (pos, piece) in pieces {
            let (sign, body) = match piece.as_bytes()[0] {
                b'+' => (Rational::from_integer(1.into()), &piece[1..]),
                b'-' => (Rational::from_integer((-1).into()), &piece[1..]),
                _ => (Rational::from_integer(1.into()), piece),
            };
            let bad = |m: &str| Error::Parse {
                position: pos,
                message: format!("{m} in term {piece:?}"),
            };
            if body.is_empty() {
                return Err(bad("empty term"));
            }
            let mut coeff = sign;
            let mut e = vec![0u32; nvars];
            for factor in body.split('*') {
                if let Some(var) = factor.strip_prefix('x') {
                    let (index, power) = match var.split_once('^') {
                        Some((i, p)) => (i, p.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                        None => (var, 1),
                    };
                    let index: usize = index.parse().map_err(|_| bad("bad variable index"))?;
                    if index == 0 || index > nvars {
                        return Err(bad(&format!("variable x{index} outside x1..x{nvars}")));
                    }
                    e[index - 1] += power;
                } else {
                    coeff *= parse_rational(factor).map_err(|_| bad("bad coefficient"))?;
                }
            }
            out.add_term(e, coeff);
        }
        Ok(out)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for PolyScalar<T> {
    /// `c*x1^a*x2^b` terms, highest total degree first, joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Exponents, &T)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            b.iter()
                .sum::<u32>()
                .cmp(&a.iter().sum::<u32>())
                .then_with(|| b.cmp(a))
        });
        for (n, (e, c)) in terms.into_iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{k}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

/// Polynomial vector field on `dim` coordinates. Its components may carry
/// extra trailing parameter variables, which are never differentiated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyVecField<T> {
    components: Vec<PolyScalar<T>>,
}

impl<T: Scalar> PolyVecField<T> {
    pub fn new(components: Vec<PolyScalar<T>>) -> Result<Self> {
        let dim = components.len();
        if dim == 0 {
            return Err(Error::Invalid(
                "a vector field needs at least one component".into(),
            ));
        }
        let nvars = components[0].nvars();
        for c in &components {
            if c.nvars() != nvars {
                return Err(Error::Dimension {
                    expected: nvars,
                    found: c.nvars(),
                });
            }
        }
        if nvars < dim {
            return Err(Error::Dimension {
                expected: dim,
                found: nvars,
            });
        }
        Ok(PolyVecField { components })
    }

    /// Number of coordinates (components).
    pub fn dim(&self) -> usize {
        self.components.len()
    }

    /// Number of polynomial variables, coordinates plus parameters.
    pub fn nvars(&self) -> usize {
        self.components[0].nvars()
    }

    pub fn components(&self) -> &[PolyScalar<T>] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &PolyScalar<T> {
        &self.components[i]
    }

    pub fn extend_vars(&self, extra: usize) -> Self {
        PolyVecField {
            components: self
                .components
                .iter()
                .map(|c| c.extend_vars(extra))
                .collect(),
        }
    }
}

impl PolyVecField<Rational> {
    /// Components separated by `;`.
    pub fn parse(text: &str, dim: usize) -> Result<Self> {
        let parts: Vec<&str> = text.split(';').collect();
        if parts.len() != dim {
            return Err(Error::Dimension {
                expected: dim,
                found: parts.len(),
            });
        }
        Self::new(
            parts
                .into_iter()
                .map(|p| PolyScalar::parse(p, dim))
                .collect::<Result<_>>()?,
        )
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for PolyVecField<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
