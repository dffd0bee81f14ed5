//! Serde mirrors of classes and space descriptors.
//!
//! ```json
//! {"space": {"family": "grassmannian", "params": [2, 2]},
//!  "coefficients": [{"label": "2,1", "num": 1, "den": 3}]}
//! ```

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{CohomologyClass, Space, SpaceDescriptor};
use crate::arith::Rational;
use crate::error::{invalid, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub family: String,
    pub params: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientJson {
    pub label: String,
    pub num: i128,
    pub den: i128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub space: SpaceJson,
    pub coefficients: Vec<CoefficientJson>,
}

impl From<SpaceDescriptor> for SpaceJson {
    fn from(d: SpaceDescriptor) -> Self {
        Self {
            family: d.family_name().to_string(),
            params: d.params(),
        }
    }
}

impl TryFrom<&SpaceJson> for SpaceDescriptor {
    type Error = Error;

    fn try_from(s: &SpaceJson) -> Result<Self> {
        SpaceDescriptor::from_family(&s.family, &s.params)
    }
}

impl CoefficientJson {
    pub fn new(label: String, q: &Rational) -> Result<Self> {
        let fit = |b: &BigInt| {
            b.to_i128()
                .ok_or_else(|| Error::Unsupported(format!("coefficient {q} does not fit a 128-bit integer")))
        };
        Ok(Self {
            label,
            num: fit(q.numer())?,
            den: fit(q.denom())?,
        })
    }

    pub fn value(&self) -> Result<Rational> {
        if self.den == 0 {
            return Err(invalid(format!("zero denominator for label {:?}", self.label)));
        }
        Ok(Rational::new(BigInt::from(self.num), BigInt::from(self.den)))
    }
}

impl ClassJson {
    pub fn from_class(x: &CohomologyClass) -> Result<Self> {
        Ok(Self {
            space: x.space().into(),
            coefficients: x
                .terms()
                .map(|(l, q)| CoefficientJson::new(l.to_string(), q))
                .collect::<Result<_>>()?,
        })
    }
}

impl Space {
    /// Reads a class written by [`ClassJson::from_class`]; the space must match.
    pub fn class_from_json(&self, j: &ClassJson) -> Result<CohomologyClass> {
        let desc = SpaceDescriptor::try_from(&j.space)?;
        if desc != self.descriptor() {
            return Err(invalid(format!("class is on {desc}, expected {}", self.descriptor())));
        }
        let terms = j
            .coefficients
            .iter()
            .map(|c| Ok((self.parse_label(&c.label)?, c.value()?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.class(terms))
    }
}
