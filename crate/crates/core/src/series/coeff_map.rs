use crate::error::{Error, Result};
use crate::forest::{enumerate_up_to, AromaticForest, ForestFilter};
use crate::scalar::Scalar;
use crate::Rational;
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{Map, Value};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Intended index set of a coefficient map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    /// All aromatic forests.
    AF,
    /// Aromatic trees (exactly one root).
    AT,
    /// Rootless forests.
    A,
}

impl Domain {
    pub fn admits(self, phi: &AromaticForest) -> bool {
        match self {
            Domain::AF => true,
            Domain::AT => phi.root_count() == 1,
            Domain::A => phi.root_count() == 0,
        }
    }

    pub fn filter(self) -> ForestFilter {
        match self {
            Domain::AF => ForestFilter::All,
            Domain::AT => ForestFilter::AromaticTrees,
            Domain::A => ForestFilter::Rootless,
        }
    }

    /// Every forest of the domain with at most `order` vertices.
    pub fn forests(self, order: usize) -> Vec<AromaticForest> {
        enumerate_up_to(order, self.filter())
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Domain::AF => "AF",
            Domain::AT => "AT",
            Domain::A => "A",
        })
    }
}

impl FromStr for Domain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "AF" => Ok(Domain::AF),
            "AT" => Ok(Domain::AT),
            "A" => Ok(Domain::A),
            other => Err(Error::Invalid(format!("unknown domain {other:?}"))),
        }
    }
}

/// Truncated linear functional on aromatic forests.
///
/// Forests absent from the map and with at most `order` vertices have
/// coefficient zero. Zero values are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffMap<T> {
    entries: BTreeMap<AromaticForest, T>,
    order: usize,
    domain: Domain,
}

impl<T: Scalar> CoeffMap<T> {
    pub fn new(domain: Domain, order: usize) -> Self {
        CoeffMap {
            entries: BTreeMap::new(),
            order,
            domain,
        }
    }

    /// The counit `ε` on all forests: `1 ↦ 1`, everything else zero.
    pub fn counit(order: usize) -> Self {
        Self::counit_on(Domain::AF, order)
    }

    /// `ε_A`, the unit of the product on rootless forests.
    pub fn aroma_unit(order: usize) -> Self {
        Self::counit_on(Domain::A, order)
    }

    fn counit_on(domain: Domain, order: usize) -> Self {
        let mut m = Self::new(domain, order);
        m.entries.insert(AromaticForest::unit(), T::one());
        m
    }

    /// The dual basis element `φ*`.
    pub fn basis(domain: Domain, phi: &AromaticForest, order: usize) -> Result<Self> {
        let mut m = Self::new(domain, order);
        m.insert(phi.clone(), T::one())?;
        Ok(m)
    }

    /// The substitution identity `b*` on aromatic trees.
    pub fn tree_identity(order: usize) -> Self {
        let mut m = Self::new(Domain::AT, order);
        if order >= 1 {
            m.entries.insert(AromaticForest::node(), T::one());
        }
        m
    }

    /// Builds a map from `(forest text, value)` pairs.
    pub fn from_pairs<'a>(
        domain: Domain,
        order: usize,
        pairs: impl IntoIterator<Item = (&'a str, T)>,
    ) -> Result<Self> {
        let mut m = Self::new(domain, order);
        for (text, value) in pairs {
            let phi = AromaticForest::parse(text)?;
            let sum = m.coeff(&phi) + value;
            m.insert(phi, sum)?;
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sets a coefficient. Zero removes the entry.
    pub fn insert(&mut self, phi: AromaticForest, value: T) -> Result<()> {
        if !self.domain.admits(&phi) {
            return Err(Error::Domain(format!(
                "{phi} is not in domain {}",
                self.domain
            )));
        }
        if phi.size() > self.order {
            return Err(Error::Truncation {
                requested: phi.size(),
                available: self.order,
            });
        }
        if value.is_zero() {
            self.entries.remove(&phi);
        } else {
            self.entries.insert(phi, value);
        }
        Ok(())
    }

    /// Coefficient of `phi`, zero when absent. Forests beyond the truncation
    /// order are not checked here; see [`CoeffMap::try_coeff`].
    pub fn coeff(&self, phi: &AromaticForest) -> T {
        self.entries.get(phi).cloned().unwrap_or_else(T::zero)
    }

    /// Coefficient of `phi`, or `None` if it lies beyond the truncation order.
    pub fn try_coeff(&self, phi: &AromaticForest) -> Option<T> {
        (phi.size() <= self.order).then(|| self.coeff(phi))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&AromaticForest, &T)> {
        self.entries.iter()
    }

    /// Copy truncated to a lower order.
    pub fn truncated(&self, order: usize) -> Self {
        CoeffMap {
            entries: self
                .entries
                .iter()
                .filter(|(k, _)| k.size() <= order)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
            order: order.min(self.order),
            domain: self.domain,
        }
    }

    /// Same entries viewed under a different domain tag.
    pub fn with_domain(&self, domain: Domain) -> Result<Self> {
        let mut m = Self::new(domain, self.order);
        for (k, v) in &self.entries {
            m.insert(k.clone(), v.clone())?;
        }
        Ok(m)
    }

    /// Restriction to the forests of `domain`, dropping the others.
    pub fn restricted(&self, domain: Domain) -> Self {
        CoeffMap {
            entries: self
                .entries
                .iter()
                .filter(|(k, _)| domain.admits(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
            order: self.order,
            domain,
        }
    }

    /// Entrywise sum `self + scale·other` on the common truncation order.
    pub fn add_scaled(&self, other: &Self, scale: T) -> Self {
        let order = self.order.min(other.order);
        let domain = if self.domain == other.domain {
            self.domain
        } else {
            Domain::AF
        };
        let mut m = Self::new(domain, order);
        let keys: std::collections::BTreeSet<&AromaticForest> = self
            .entries
            .keys()
            .chain(other.entries.keys())
            .filter(|k| k.size() <= order)
            .collect();
        for k in keys {
            let value = self.coeff(k) + scale.clone() * other.coeff(k);
            m.insert(k.clone(), value)
                .expect("key admitted by one of the operands");
        }
        m
    }

    /// Ensures `order` does not exceed the truncation order.
    pub(crate) fn check_order(&self, order: usize) -> Result<()> {
        if order > self.order {
            Err(Error::Truncation {
                requested: order,
                available: self.order,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_domain(&self, domain: Domain, what: &str) -> Result<()> {
        if self.domain != domain {
            return Err(Error::Domain(format!(
                "{what} must be indexed by {domain}, found {}",
                self.domain
            )));
        }
        Ok(())
    }
}

impl CoeffMap<Rational> {
    /// JSON object mapping canonical forest text to `"p/q"`, plus the
    /// metadata keys `__order` and `__domain`.
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("__order".into(), Value::from(self.order as u64));
        obj.insert("__domain".into(), Value::from(self.domain.to_string()));
        for (k, v) in &self.entries {
            obj.insert(
                k.render(),
                Value::from(format!("{}/{}", v.numer(), v.denom())),
            );
        }
        Value::Object(obj)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("JSON value serializes")
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Invalid("coefficient map must be a JSON object".into()))?;
        let order = obj
            .get("__order")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Invalid("missing integer \"__order\"".into()))?
            as usize;
        let domain: Domain = obj
            .get("__domain")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Invalid("missing string \"__domain\"".into()))?
            .parse()?;
        let mut m = Self::new(domain, order);
        for (k, v) in obj {
            if k.starts_with("__") {
                continue;
            }
            let phi = AromaticForest::parse(k)?;
            let text = v.as_str().ok_or_else(|| {
                Error::Invalid(format!("value of {k:?} must be a string \"p/q\""))
            })?;
            let value = parse_rational(text)?;
            if m.entries.contains_key(&phi) {
                return Err(Error::Invalid(format!(
                    "{k:?} duplicates the canonical key {phi}"
                )));
            }
            m.insert(phi, value)?;
        }
        Ok(m)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| Error::Invalid(format!("bad JSON: {e}")))?;
        Self::from_json(&value)
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Invalid(format!("not a rational number: {text:?}"));
    let (p, q) = match text.trim().split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}
