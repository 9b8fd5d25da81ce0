//! Polynomials in the formal symbols `a(φ)` and `b(τ)`, used to print the
//! substitution law forest by forest.

use super::partition::tree_partitions;
use crate::error::{Error, Result};
use crate::forest::AromaticForest;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// A monomial `a(F)·Π b(G)^e`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial {
    pub a: AromaticForest,
    pub b: BTreeMap<AromaticForest, u32>,
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a({})", self.a)?;
        for (g, &e) in &self.b {
            write!(f, "*b({g})")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sum of monomials with positive integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymbolicPoly {
    terms: BTreeMap<Monomial, u64>,
}

impl SymbolicPoly {
    pub fn add(&mut self, monomial: Monomial, coefficient: u64) {
        if coefficient > 0 {
            *self.terms.entry(monomial).or_insert(0) += coefficient;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, u64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> u64 {
        self.terms.get(monomial).copied().unwrap_or(0)
    }
}

impl fmt::Display for SymbolicPoly {
    /// Monomials `k*a(F)*b(G)^e` sorted by their text and joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, &c)| {
                if c == 1 {
                    m.to_string()
                } else {
                    format!("{c}*{m}")
                }
            })
            .collect();
        if parts.is_empty() {
            return f.write_str("0");
        }
        parts.sort();
        f.write_str(&parts.join(" + "))
    }
}

impl FromStr for SymbolicPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = SymbolicPoly::default();
        if s.trim() == "0" {
            return Ok(out);
        }
        for term in s.split(" + ") {
            let bad = |why: &str| Error::Invalid(format!("malformed monomial {term:?}: {why}"));
            let mut coefficient = 1u64;
            let mut a = None;
            let mut b = BTreeMap::new();
            for factor in term.trim().split('*') {
                let factor = factor.trim();
                if let Ok(k) = factor.parse::<u64>() {
                    coefficient *= k;
                    continue;
                }
                let (symbol, exponent) = match factor.rsplit_once(")^") {
                    Some((head, e)) => (
                        format!("{head})"),
                        e.parse::<u32>().map_err(|_| bad("bad exponent"))?,
                    ),
                    None => (factor.to_string(), 1),
                };
                let inner = |prefix: &str| {
                    symbol
                        .strip_prefix(prefix)
                        .and_then(|r| r.strip_suffix(')'))
                        .map(str::to_string)
                };
                if let Some(text) = inner("a(") {
                    if a.is_some() || exponent != 1 {
                        return Err(bad("exactly one linear a(...) factor is allowed"));
                    }
                    a = Some(AromaticForest::parse(&text)?);
                } else if let Some(text) = inner("b(") {
                    *b.entry(AromaticForest::parse(&text)?).or_insert(0) += exponent;
                } else {
                    return Err(bad("expected a(...), b(...) or an integer"));
                }
            }
            let a = a.ok_or_else(|| bad("missing a(...) factor"))?;
            out.add(Monomial { a, b }, coefficient);
        }
        Ok(out)
    }
}

/// The substitution law at `phi` with `a(·)` and `b(·)` kept symbolic.
pub fn star_product_symbolic(phi: &AromaticForest) -> SymbolicPoly {
    let mut out = SymbolicPoly::default();
    for p in tree_partitions(phi).iter() {
        let mut b = BTreeMap::new();
        for blk in &p.blocks {
            *b.entry(blk.clone()).or_insert(0) += 1;
        }
        out.add(
            Monomial {
                a: p.skeleton.clone(),
                b,
            },
            1,
        );
    }
    out
}
