use crate::error::{Error, Result};
use crate::forest::AromaticForest;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Finite sum `Σ m·(left ⊗ right)` with positive integer multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TensorSum {
    terms: BTreeMap<(AromaticForest, AromaticForest), u64>,
}

impl TensorSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, left: AromaticForest, right: AromaticForest, multiplicity: u64) {
        if multiplicity > 0 {
            *self.terms.entry((left, right)).or_insert(0) += multiplicity;
        }
    }

    /// Subtracts a term; fails if it is not present often enough.
    pub fn remove(
        &mut self,
        left: &AromaticForest,
        right: &AromaticForest,
        multiplicity: u64,
    ) -> Result<()> {
        let key = (left.clone(), right.clone());
        let current = self.terms.get(&key).copied().unwrap_or(0);
        if current < multiplicity {
            return Err(Error::Invalid(format!(
                "term {left}|{right} occurs {current} times, cannot remove {multiplicity}"
            )));
        }
        if current == multiplicity {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, current - multiplicity);
        }
        Ok(())
    }

    pub fn multiplicity(&self, left: &AromaticForest, right: &AromaticForest) -> u64 {
        self.terms
            .get(&(left.clone(), right.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&AromaticForest, &AromaticForest, u64)> {
        self.terms.iter().map(|((l, r), &m)| (l, r, m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all multiplicities.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Product in the tensor square of the forest algebra:
    /// `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn product(&self, other: &TensorSum) -> TensorSum {
        let mut out = TensorSum::new();
        for ((l1, r1), m1) in &self.terms {
            for ((l2, r2), m2) in &other.terms {
                out.add(l1.concat(l2), r1.concat(r2), m1 * m2);
            }
        }
        out
    }
}

impl fmt::Display for TensorSum {
    /// Terms `m*(left|right)` joined by ` + `; the empty sum is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((l, r), m)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}*({l}|{r})")?;
        }
        Ok(())
    }
}

impl FromStr for TensorSum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = TensorSum::new();
        if s.trim() == "0" {
            return Ok(out);
        }
        for term in s.split(" + ") {
            let bad = || Error::Invalid(format!("malformed tensor term {term:?}"));
            let term = term.trim();
            let (m, rest) = term.split_once('*').ok_or_else(bad)?;
            let m: u64 = m.trim().parse().map_err(|_| bad())?;
            let inner = rest
                .trim()
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(bad)?;
            let (l, r) = inner.split_once('|').ok_or_else(bad)?;
            out.add(
                AromaticForest::parse(l.trim())?,
                AromaticForest::parse(r.trim())?,
                m,
            );
        }
        Ok(out)
    }
}

/// Finite sum `Σ m·φ` with positive integer multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FormalSum {
    terms: BTreeMap<AromaticForest, u64>,
}

impl FormalSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, phi: AromaticForest, multiplicity: u64) {
        if multiplicity > 0 {
            *self.terms.entry(phi).or_insert(0) += multiplicity;
        }
    }

    pub fn multiplicity(&self, phi: &AromaticForest) -> u64 {
        self.terms.get(phi).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&AromaticForest, u64)> {
        self.terms.iter().map(|(k, &m)| (k, m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (phi, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}*({phi})")?;
        }
        Ok(())
    }
}

impl FromIterator<(AromaticForest, u64)> for FormalSum {
    fn from_iter<I: IntoIterator<Item = (AromaticForest, u64)>>(iter: I) -> Self {
        let mut out = FormalSum::new();
        for (phi, m) in iter {
            out.add(phi, m);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> AromaticForest {
        s.parse().unwrap()
    }

    #[test]
    fn tensor_text_roundtrip() {
        let mut t = TensorSum::new();
        t.add(f("b[b]"), f("1"), 1);
        t.add(f("1"), f("b[b]"), 1);
        t.add(f("b"), f("b"), 1);
        assert_eq!(t.to_string(), "1*(1|b[b]) + 1*(b|b) + 1*(b[b]|1)");
        assert_eq!(t.to_string().parse::<TensorSum>().unwrap(), t);
        assert_eq!(TensorSum::new().to_string(), "0");
        assert!("2*(b|".parse::<TensorSum>().is_err());
        assert!("x*(b|b)".parse::<TensorSum>().is_err());
    }

    #[test]
    fn tensor_product_multiplies_both_sides() {
        let t: TensorSum = "1*(1|b) + 1*(b|1)".parse().unwrap();
        assert_eq!(t.product(&t).to_string(), "1*(1|b b) + 2*(b|b) + 1*(b b|1)");
    }

    #[test]
    fn remove_checks_multiplicity() {
        let mut t: TensorSum = "2*(b|b)".parse().unwrap();
        assert!(t.remove(&f("b"), &f("b"), 3).is_err());
        t.remove(&f("b"), &f("b"), 2).unwrap();
        assert!(t.is_empty());
    }
}
