use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use super::{Label, SpaceDescriptor};
use crate::arith::Rational;

/// A finite rational combination of Schubert basis labels of one space.
///
/// Zero coefficients are never stored, and terms iterate in label order
/// (degree first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    space: SpaceDescriptor,
    terms: BTreeMap<Label, Rational>,
}

impl CohomologyClass {
    pub fn zero(space: SpaceDescriptor) -> Self {
        Self {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(space: SpaceDescriptor, terms: impl IntoIterator<Item = (Label, Rational)>) -> Self {
        let mut c = Self::zero(space);
        for (l, q) in terms {
            c.add_term(l, q);
        }
        c
    }

    pub fn space(&self) -> SpaceDescriptor {
        self.space
    }

    pub fn add_term(&mut self, label: Label, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(label) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, label: &Label) -> Rational {
        self.terms.get(label).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Label, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::from_terms(
            self.space,
            self.terms.iter().map(|(l, q)| (l.clone(), q * factor)),
        )
    }

    /// The part supported on labels accepted by `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Label) -> bool) -> Self {
        Self {
            space: self.space,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| keep(l))
                .map(|(l, q)| (l.clone(), q.clone()))
                .collect(),
        }
    }

    fn combine(mut self, rhs: &Self, sign: bool) -> Self {
        assert_eq!(self.space, rhs.space, "classes live on different spaces");
        for (l, q) in &rhs.terms {
            self.add_term(l.clone(), if sign { q.clone() } else { -q.clone() });
        }
        self
    }
}

impl Add for CohomologyClass {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.combine(&rhs, true)
    }
}

impl<'a> Add<&'a CohomologyClass> for CohomologyClass {
    type Output = Self;

    fn add(self, rhs: &'a CohomologyClass) -> Self {
        self.combine(rhs, true)
    }
}

impl Sub for CohomologyClass {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self.combine(&rhs, false)
    }
}

impl<'a> Sub<&'a CohomologyClass> for CohomologyClass {
    type Output = Self;

    fn sub(self, rhs: &'a CohomologyClass) -> Self {
        self.combine(rhs, false)
    }
}

impl Neg for CohomologyClass {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            space: self.space,
            terms: self.terms.into_iter().map(|(l, q)| (l, -q)).collect(),
        }
    }
}
