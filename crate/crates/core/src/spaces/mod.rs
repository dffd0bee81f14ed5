//! Graded cohomology rings of the compact hermitian symmetric spaces in
//! their Schubert bases.
//!
//! A [`Space`] owns the basis tables for one family member and implements
//! the degree-one Pieri action (the Lefschetz operator), Poincaré duality,
//! the closed-form Hodge star and the closed-form adjoint `Λ`.
//!
//! Degrees exposed through the public API are cohomological (`2p` for a
//! class of type `(p, p)`); internally tables are indexed by `p`.

mod class;
mod json;
mod label;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

pub use class::CohomologyClass;
pub use json::{ClassJson, CoefficientJson, SpaceJson};
pub use label::{Branch, Label, QuadricLabel};

use crate::arith::{factorial, pow2, rat, rat_from_uint, rat_int, rat_pow, ratio, Rational};
use crate::error::{invalid, Result};
use crate::partitions::{
    complement_in_rectangle, complement_in_set, hook_product, partitions_in_rectangle,
    shifted_hook_product, strict_partitions_in_staircase, Partition, StrictPartition,
};

/// One member of the families of spaces handled here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpaceDescriptor {
    /// `G(m, n)`, `m`-planes in `C^{m+n}`.
    Grassmannian { m: usize, n: usize },
    /// `OG(n, 2n)`, the spinor variety.
    OgEven { n: usize },
    /// `OG(n-1, 2n-1)`; its ring and Lefschetz action are those of `OG(n, 2n)`.
    OgOddAlias { n: usize },
    /// `LG(n, 2n)`.
    Lagrangian { n: usize },
    /// The quadric of odd dimension `2k - 1`.
    QuadricOdd { k: usize },
    /// The quadric of even dimension `2k`.
    QuadricEven { k: usize },
}

impl SpaceDescriptor {
    pub fn family_name(&self) -> &'static str {
        match self {
            Self::Grassmannian { .. } => "grassmannian",
            Self::OgEven { .. } => "og-even",
            Self::OgOddAlias { .. } => "og-odd",
            Self::Lagrangian { .. } => "lg",
            Self::QuadricOdd { .. } => "quadric-odd",
            Self::QuadricEven { .. } => "quadric-even",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            Self::Grassmannian { m, n } => vec![m, n],
            Self::OgEven { n } | Self::OgOddAlias { n } | Self::Lagrangian { n } => vec![n],
            Self::QuadricOdd { k } | Self::QuadricEven { k } => vec![k],
        }
    }

    pub fn from_family(family: &str, params: &[usize]) -> Result<Self> {
        let one = || match params {
            [a] => Ok(*a),
            _ => Err(invalid(format!("family {family} takes exactly one parameter"))),
        };
        let d = match family {
            "grassmannian" => match params {
                [m, n] => Self::Grassmannian { m: *m, n: *n },
                _ => return Err(invalid("grassmannian takes parameters [m, n]")),
            },
            "og-even" => Self::OgEven { n: one()? },
            "og-odd" => Self::OgOddAlias { n: one()? },
            "lg" => Self::Lagrangian { n: one()? },
            "quadric-odd" => Self::QuadricOdd { k: one()? },
            "quadric-even" => Self::QuadricEven { k: one()? },
            other => return Err(invalid(format!("unknown family {other:?}"))),
        };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            Self::Grassmannian { m, n } => m >= 1 && n >= 1,
            Self::OgEven { n } | Self::OgOddAlias { n } => n >= 2,
            Self::Lagrangian { n } => n >= 1,
            Self::QuadricOdd { k } | Self::QuadricEven { k } => k >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(invalid(format!("{self} has positive-dimension parameters out of range")))
        }
    }

    /// Complex dimension `d`.
    pub fn complex_dim(&self) -> usize {
        match *self {
            Self::Grassmannian { m, n } => m * n,
            Self::OgEven { n } | Self::OgOddAlias { n } => n * (n - 1) / 2,
            Self::Lagrangian { n } => n * (n + 1) / 2,
            Self::QuadricOdd { k } => 2 * k - 1,
            Self::QuadricEven { k } => 2 * k,
        }
    }

    /// Total rank of the cohomology, computed without building the basis.
    pub fn rank(&self) -> u128 {
        match *self {
            Self::Grassmannian { m, n } => {
                let (m, n) = (m as u128, n as u128);
                (1..=m).fold(1u128, |acc, i| acc * (n + i) / i)
            }
            Self::OgEven { n } | Self::OgOddAlias { n } => 1u128 << (n - 1),
            Self::Lagrangian { n } => 1u128 << n,
            Self::QuadricOdd { k } => 2 * k as u128,
            Self::QuadricEven { k } => 2 * k as u128 + 2,
        }
    }

    /// The space whose ring data this descriptor uses.
    pub fn ring_model(&self) -> SpaceDescriptor {
        match *self {
            Self::OgOddAlias { n } => Self::OgEven { n },
            other => other,
        }
    }

    /// Greek letter used for Schubert forms when printing.
    pub fn form_symbol(&self) -> &'static str {
        match self {
            Self::Grassmannian { .. } => "Ω",
            Self::OgEven { .. } | Self::OgOddAlias { .. } => "Φ",
            Self::Lagrangian { .. } => "Ψ",
            Self::QuadricOdd { .. } | Self::QuadricEven { .. } => "",
        }
    }
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Grassmannian { m, n } => write!(f, "G({m},{n})"),
            Self::OgEven { n } => write!(f, "OG({n},{})", 2 * n),
            Self::OgOddAlias { n } => write!(f, "OG({},{})", n - 1, 2 * n - 1),
            Self::Lagrangian { n } => write!(f, "LG({n},{})", 2 * n),
            Self::QuadricOdd { k } => write!(f, "Q({})", 2 * k - 1),
            Self::QuadricEven { k } => write!(f, "Q({})", 2 * k),
        }
    }
}

/// `n(n-1)/2` when `k = 1`, else `n(n-1) - k(k-1)`: the adjoint coefficient
/// for removing a box from the part `k` of a strict partition.
fn strict_removal_coefficient(n: usize, k: u32) -> Rational {
    let (n, k) = (n as i64, k as i64);
    if k == 1 {
        rat(n * (n - 1) / 2, 1)
    } else {
        rat(n * (n - 1) - k * (k - 1), 1)
    }
}

/// A space together with its graded Schubert basis.
#[derive(Clone, Debug)]
pub struct Space {
    desc: SpaceDescriptor,
    /// Labels by half-degree `p`, each level in label order.
    levels: Vec<Vec<Label>>,
    index: HashMap<Label, (usize, usize)>,
}

impl Space {
    pub fn new(desc: SpaceDescriptor) -> Result<Self> {
        desc.validate()?;
        let d = desc.complex_dim();
        let labels: Vec<Label> = match desc.ring_model() {
            SpaceDescriptor::Grassmannian { m, n } => partitions_in_rectangle(m, n)
                .into_iter()
                .map(Label::Partition)
                .collect(),
            SpaceDescriptor::OgEven { n } => strict_partitions_in_staircase(n as u32 - 1)
                .into_iter()
                .map(|p| Label::Partition(p.into()))
                .collect(),
            SpaceDescriptor::Lagrangian { n } => strict_partitions_in_staircase(n as u32)
                .into_iter()
                .map(|p| Label::Partition(p.into()))
                .collect(),
            SpaceDescriptor::QuadricOdd { k } => {
                let k = k as u32;
                (0..k)
                    .map(QuadricLabel::power)
                    .chain((0..k).map(|j| QuadricLabel::with(j, Branch::E)))
                    .map(Label::Quadric)
                    .collect()
            }
            SpaceDescriptor::QuadricEven { k } => {
                let k = k as u32;
                (0..k)
                    .map(QuadricLabel::power)
                    .chain([QuadricLabel::with(0, Branch::E0), QuadricLabel::with(0, Branch::E1)])
                    .chain((1..=k).map(|j| QuadricLabel::with(j, Branch::E0)))
                    .map(Label::Quadric)
                    .collect()
            }
            SpaceDescriptor::OgOddAlias { .. } => unreachable!("aliases resolve to their model"),
        };
        let mut levels = vec![Vec::new(); d + 1];
        for l in labels {
            let p = Self::half_degree_in(&desc, &l);
            levels[p].push(l);
        }
        let mut index = HashMap::new();
        for (p, level) in levels.iter_mut().enumerate() {
            level.sort();
            for (i, l) in level.iter().enumerate() {
                index.insert(l.clone(), (p, i));
            }
        }
        Ok(Self { desc, levels, index })
    }

    pub fn descriptor(&self) -> SpaceDescriptor {
        self.desc
    }

    pub fn complex_dim(&self) -> usize {
        self.desc.complex_dim()
    }

    pub fn rank(&self) -> usize {
        self.index.len()
    }

    fn half_degree_in(desc: &SpaceDescriptor, label: &Label) -> usize {
        match label {
            Label::Partition(p) => p.weight(),
            Label::Quadric(q) => {
                let k = match desc.ring_model() {
                    SpaceDescriptor::QuadricOdd { k } | SpaceDescriptor::QuadricEven { k } => k,
                    _ => 0,
                };
                match q.branch {
                    Branch::None => q.power as usize,
                    _ => k + q.power as usize,
                }
            }
        }
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.index.contains_key(label)
    }

    /// Half of the cohomological degree of a label of this space.
    pub fn half_degree(&self, label: &Label) -> usize {
        self.index
            .get(label)
            .map(|&(p, _)| p)
            .unwrap_or_else(|| panic!("{label} is not a basis label of {}", self.desc))
    }

    pub fn degree(&self, label: &Label) -> usize {
        2 * self.half_degree(label)
    }

    /// Position of a label inside its degree, matching [`Space::basis`] order.
    pub fn position(&self, label: &Label) -> Option<(usize, usize)> {
        self.index.get(label).copied()
    }

    /// Labels of half-degree `p`; empty outside `0..=d`.
    pub fn level(&self, p: usize) -> &[Label] {
        self.levels.get(p).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.levels.iter().flatten()
    }

    /// All labels of cohomological degree `degree`.
    pub fn basis(&self, degree: usize) -> Result<&[Label]> {
        if degree % 2 == 1 || degree > 2 * self.complex_dim() {
            return Err(invalid(format!(
                "degree {degree} is odd or outside 0..={} for {}",
                2 * self.complex_dim(),
                self.desc
            )));
        }
        Ok(&self.levels[degree / 2])
    }

    /// Parses a label in the text form used by the CLI and JSON and checks it belongs here.
    pub fn parse_label(&self, s: &str) -> Result<Label> {
        let label = match self.desc.ring_model() {
            SpaceDescriptor::QuadricOdd { .. } | SpaceDescriptor::QuadricEven { .. } => {
                label::parse_quadric_label(s)
                    .map(Label::Quadric)
                    .ok_or_else(|| invalid(format!("bad quadric label {s:?}")))?
            }
            _ => Label::Partition(s.parse::<Partition>()?),
        };
        if !self.contains(&label) {
            return Err(invalid(format!("{label} is not a basis label of {}", self.desc)));
        }
        Ok(label)
    }

    /// `Ω(2,1)`, `Ψ(∅)`, `w^1*e0`, ...
    pub fn display_label(&self, label: &Label) -> String {
        match label {
            Label::Partition(p) if p.is_empty() => format!("{}(∅)", self.desc.form_symbol()),
            Label::Partition(p) => format!("{}({p})", self.desc.form_symbol()),
            Label::Quadric(q) => q.to_string(),
        }
    }

    /// `c · X + c' · X' + ...`, or `0`.
    pub fn display_class(&self, x: &CohomologyClass) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        x.terms()
            .map(|(l, q)| format!("{} · {}", crate::arith::format_rational(q), self.display_label(l)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn class(&self, terms: impl IntoIterator<Item = (Label, Rational)>) -> CohomologyClass {
        let c = CohomologyClass::from_terms(self.desc, terms);
        debug_assert!(c.terms().all(|(l, _)| self.contains(l)));
        c
    }

    pub fn basis_class(&self, label: &Label) -> CohomologyClass {
        assert!(self.contains(label), "{label} is not a basis label of {}", self.desc);
        self.class([(label.clone(), Rational::one())])
    }

    pub fn zero(&self) -> CohomologyClass {
        CohomologyClass::zero(self.desc)
    }

    pub fn unit(&self) -> CohomologyClass {
        self.basis_class(&self.levels[0][0])
    }

    fn check_class(&self, x: &CohomologyClass) {
        assert_eq!(x.space(), self.desc, "class belongs to a different space");
    }

    /// Homogeneous component of cohomological degree `degree`.
    pub fn homogeneous_part(&self, x: &CohomologyClass, degree: usize) -> CohomologyClass {
        self.check_class(x);
        x.filter(|l| self.degree(l) == degree)
    }

    fn quadric_k(&self) -> u32 {
        match self.desc {
            SpaceDescriptor::QuadricOdd { k } | SpaceDescriptor::QuadricEven { k } => k as u32,
            _ => unreachable!("not a quadric"),
        }
    }

    fn strict(label: &Label) -> StrictPartition {
        StrictPartition::try_from(label.as_partition().expect("partition label").clone())
            .expect("labels of this family are strict")
    }

    /// The unique label pairing non-trivially with `label`.
    pub fn poincare_dual_label(&self, label: &Label) -> Result<Label> {
        if !self.contains(label) {
            return Err(invalid(format!("{label} is not a basis label of {}", self.desc)));
        }
        Ok(match (self.desc.ring_model(), label) {
            (SpaceDescriptor::Grassmannian { m, n }, Label::Partition(p)) => {
                Label::Partition(complement_in_rectangle(p, m, n)?)
            }
            (SpaceDescriptor::OgEven { n }, _) => {
                Label::Partition(complement_in_set(&Self::strict(label), n as u32 - 1)?.into())
            }
            (SpaceDescriptor::Lagrangian { n }, _) => {
                Label::Partition(complement_in_set(&Self::strict(label), n as u32)?.into())
            }
            (SpaceDescriptor::QuadricOdd { k }, Label::Quadric(q)) => {
                let k = k as u32;
                match q.branch {
                    Branch::None => QuadricLabel::with(k - 1 - q.power, Branch::E),
                    _ => QuadricLabel::power(k - 1 - q.power),
                }
                .into()
            }
            (SpaceDescriptor::QuadricEven { k }, Label::Quadric(q)) => {
                let k = k as u32;
                match q.branch {
                    Branch::None => QuadricLabel::with(k - q.power, Branch::E0),
                    Branch::E0 if q.power > 0 => QuadricLabel::power(k - q.power),
                    Branch::E0 | Branch::E1 => {
                        let j = u32::from(q.branch == Branch::E1);
                        let dual = if (j + k).is_multiple_of(2) { Branch::E0 } else { Branch::E1 };
                        QuadricLabel::with(0, dual)
                    }
                    Branch::E => unreachable!("even quadrics have no e"),
                }
                .into()
            }
            _ => unreachable!("label kind matches the family"),
        })
    }

    /// `L` on a single basis label: multiplication by the Schubert form of type (1,1).
    pub fn lefschetz_label(&self, label: &Label) -> Vec<(Label, Rational)> {
        let one = Rational::one;
        match (self.desc.ring_model(), label) {
            (SpaceDescriptor::Grassmannian { m, n }, Label::Partition(p)) => p
                .add_box_children()
                .into_iter()
                .filter(|mu| mu.fits_in_rectangle(m, n))
                .map(|mu| (Label::Partition(mu), one()))
                .collect(),
            (SpaceDescriptor::OgEven { n }, Label::Partition(p)) => p
                .add_box_children()
                .into_iter()
                .filter(|mu| mu.is_strict() && (mu.part(1) as usize) < n)
                .map(|mu| (Label::Partition(mu), one()))
                .collect(),
            (SpaceDescriptor::Lagrangian { n }, Label::Partition(p)) => {
                let mut out = Vec::new();
                // A box in an existing row carries multiplicity 2.
                for i in 0..p.len() {
                    let mut parts = p.parts().to_vec();
                    parts[i] += 1;
                    if let Ok(mu) = StrictPartition::new(parts) {
                        if mu.parts()[0] as usize <= n {
                            out.push((Label::Partition(mu.into()), rat(2, 1)));
                        }
                    }
                }
                // λ^+ = (λ, 1) carries multiplicity 1.
                if p.is_empty() || p.parts()[p.len() - 1] > 1 {
                    let mut parts = p.parts().to_vec();
                    parts.push(1);
                    let plus = Partition::new(parts).expect("appending 1 keeps a partition");
                    if self.contains(&Label::Partition(plus.clone())) {
                        out.push((Label::Partition(plus), one()));
                    }
                }
                out
            }
            (SpaceDescriptor::QuadricOdd { k }, Label::Quadric(q)) => {
                let k = k as u32;
                match q.branch {
                    Branch::None if q.power + 1 < k => vec![(QuadricLabel::power(q.power + 1).into(), one())],
                    Branch::None => vec![(QuadricLabel::with(0, Branch::E).into(), rat(2, 1))],
                    _ if q.power + 1 < k => vec![(QuadricLabel::with(q.power + 1, Branch::E).into(), one())],
                    _ => vec![],
                }
            }
            (SpaceDescriptor::QuadricEven { k }, Label::Quadric(q)) => {
                let k = k as u32;
                match q.branch {
                    Branch::None if q.power + 1 < k => vec![(QuadricLabel::power(q.power + 1).into(), one())],
                    Branch::None => vec![
                        (QuadricLabel::with(0, Branch::E0).into(), one()),
                        (QuadricLabel::with(0, Branch::E1).into(), one()),
                    ],
                    // ω e_0 = ω e_1, stored under e_0.
                    _ if q.power < k => vec![(QuadricLabel::with(q.power + 1, Branch::E0).into(), one())],
                    _ => vec![],
                }
            }
            _ => unreachable!("label kind matches the family"),
        }
    }

    fn extend_linearly(
        &self,
        x: &CohomologyClass,
        f: impl Fn(&Label) -> Vec<(Label, Rational)>,
    ) -> CohomologyClass {
        self.check_class(x);
        let mut out = self.zero();
        for (l, q) in x.terms() {
            for (m, c) in f(l) {
                out.add_term(m, c * q);
            }
        }
        out
    }

    /// Multiplication by the fundamental form.
    pub fn lefschetz_apply(&self, x: &CohomologyClass) -> CohomologyClass {
        self.extend_linearly(x, |l| self.lefschetz_label(l))
    }

    /// `ω^r` written in the Schubert basis, from the closed-form expansion.
    pub fn omega_power_expand(&self, r: usize) -> Result<CohomologyClass> {
        let d = self.complex_dim();
        if r > d {
            return Err(invalid(format!("power {r} exceeds the dimension {d} of {}", self.desc)));
        }
        let r_fact = rat_from_uint(&factorial(r as u64));
        let level = &self.levels[r];
        let terms: Vec<(Label, Rational)> = match self.desc.ring_model() {
            SpaceDescriptor::Grassmannian { .. } => level
                .iter()
                .map(|l| (l.clone(), &r_fact / rat_from_uint(&hook_product(l.as_partition().unwrap()))))
                .collect(),
            SpaceDescriptor::OgEven { .. } => level
                .iter()
                .map(|l| (l.clone(), &r_fact / rat_from_uint(&shifted_hook_product(&Self::strict(l)))))
                .collect(),
            SpaceDescriptor::Lagrangian { .. } => level
                .iter()
                .map(|l| {
                    let s = Self::strict(l);
                    let c = pow2(s.alpha() as i64) * &r_fact / rat_from_uint(&shifted_hook_product(&s));
                    (l.clone(), c)
                })
                .collect(),
            SpaceDescriptor::QuadricOdd { .. } => {
                let k = self.quadric_k() as usize;
                if r < k {
                    vec![(QuadricLabel::power(r as u32).into(), Rational::one())]
                } else {
                    vec![(QuadricLabel::with((r - k) as u32, Branch::E).into(), rat(2, 1))]
                }
            }
            SpaceDescriptor::QuadricEven { .. } => {
                let k = self.quadric_k() as usize;
                match r.cmp(&k) {
                    std::cmp::Ordering::Less => vec![(QuadricLabel::power(r as u32).into(), Rational::one())],
                    std::cmp::Ordering::Equal => vec![
                        (QuadricLabel::with(0, Branch::E0).into(), Rational::one()),
                        (QuadricLabel::with(0, Branch::E1).into(), Rational::one()),
                    ],
                    std::cmp::Ordering::Greater => {
                        vec![(QuadricLabel::with((r - k) as u32, Branch::E0).into(), rat(2, 1))]
                    }
                }
            }
            SpaceDescriptor::OgOddAlias { .. } => unreachable!(),
        };
        Ok(self.class(terms))
    }

    /// The coefficient `c` in `*ω_ℓ = c · ω_ℓ'`.
    pub fn star_coefficient(&self, label: &Label) -> Rational {
        let dual = self.poincare_dual_label(label).expect("label of this space");
        match self.desc.ring_model() {
            SpaceDescriptor::Grassmannian { .. } => ratio(
                &hook_product(label.as_partition().unwrap()),
                &hook_product(dual.as_partition().unwrap()),
            ),
            SpaceDescriptor::OgEven { .. } => ratio(
                &shifted_hook_product(&Self::strict(label)),
                &shifted_hook_product(&Self::strict(&dual)),
            ),
            SpaceDescriptor::Lagrangian { .. } => {
                let (s, t) = (Self::strict(label), Self::strict(&dual));
                pow2(t.alpha() as i64 - s.alpha() as i64)
                    * ratio(&shifted_hook_product(&s), &shifted_hook_product(&t))
            }
            SpaceDescriptor::QuadricOdd { .. } | SpaceDescriptor::QuadricEven { .. } => {
                let q = label.as_quadric().unwrap();
                let n = self.complex_dim() as u64;
                let below_middle = |i: u64| {
                    rat_int(2) * rat_from_uint(&factorial(i)) / rat_from_uint(&factorial(n - i))
                };
                match q.branch {
                    Branch::None => below_middle(q.power as u64),
                    Branch::E0 | Branch::E1 if q.power == 0 && matches!(self.desc, SpaceDescriptor::QuadricEven { .. }) => {
                        Rational::one()
                    }
                    _ => {
                        // Determined by ** = 1 from the dual pure power.
                        let i = dual.as_quadric().unwrap().power as u64;
                        below_middle(i).recip()
                    }
                }
            }
            SpaceDescriptor::OgOddAlias { .. } => unreachable!(),
        }
    }

    /// The closed-form Hodge star, extended linearly.
    pub fn star(&self, x: &CohomologyClass) -> CohomologyClass {
        self.extend_linearly(x, |l| {
            let dual = self.poincare_dual_label(l).expect("label of this space");
            vec![(dual, self.star_coefficient(l))]
        })
    }

    /// `Λ` on a single basis label from the closed-form removal coefficients.
    pub fn lambda_label(&self, label: &Label) -> Vec<(Label, Rational)> {
        match (self.desc.ring_model(), label) {
            (SpaceDescriptor::Grassmannian { m, n }, Label::Partition(p)) => p
                .remove_box_children()
                .into_iter()
                .map(|(i, mu)| {
                    let li = p.part(i) as i64;
                    let (m, n, i) = (m as i64, n as i64, i as i64);
                    (Label::Partition(mu), rat((m - i + li) * (n + i - li), 1))
                })
                .collect(),
            (SpaceDescriptor::OgEven { n }, Label::Partition(p)) => p
                .remove_box_children()
                .into_iter()
                .filter(|(_, mu)| mu.is_strict())
                .map(|(i, mu)| (Label::Partition(mu), strict_removal_coefficient(n, p.part(i))))
                .collect(),
            (SpaceDescriptor::Lagrangian { n }, Label::Partition(p)) => {
                let mut out: Vec<(Label, Rational)> = p
                    .remove_box_children()
                    .into_iter()
                    .filter(|(_, mu)| mu.is_strict() && mu.len() == p.len())
                    .map(|(i, mu)| {
                        let c = strict_removal_coefficient(n + 1, p.part(i)) / rat_int(2);
                        (Label::Partition(mu), c)
                    })
                    .collect();
                if p.parts().last() == Some(&1) {
                    let minus = Partition::new(p.parts()[..p.len() - 1].to_vec()).expect("prefix of a partition");
                    out.push((Label::Partition(minus), strict_removal_coefficient(n + 1, 1)));
                }
                out
            }
            (SpaceDescriptor::QuadricOdd { .. } | SpaceDescriptor::QuadricEven { .. }, _) => {
                let starred = self.star(&self.basis_class(label));
                let lifted = self.lefschetz_apply(&starred);
                self.star(&lifted)
                    .terms()
                    .map(|(l, q)| (l.clone(), q.clone()))
                    .collect()
            }
            _ => unreachable!("label kind matches the family"),
        }
    }

    /// The adjoint `Λ` of the Lefschetz operator.
    pub fn lambda_adjoint(&self, x: &CohomologyClass) -> CohomologyClass {
        self.extend_linearly(x, |l| self.lambda_label(l))
    }

    /// `B = Σ (d - i) pr_i`, with `i` the cohomological degree.
    pub fn b_operator(&self, x: &CohomologyClass) -> CohomologyClass {
        let d = self.complex_dim() as i64;
        self.extend_linearly(x, |l| vec![(l.clone(), rat(d - self.degree(l) as i64, 1))])
    }

    /// Intersection pairing normalised to `1` on every dual pair.
    pub fn pairing(&self, x: &CohomologyClass, y: &CohomologyClass) -> Rational {
        self.check_class(x);
        self.check_class(y);
        x.terms()
            .map(|(l, q)| {
                let dual = self.poincare_dual_label(l).expect("label of this space");
                q * y.coefficient(&dual)
            })
            .fold(Rational::zero(), |acc, v| acc + v)
    }

    /// Star operator of the rescaled metric `ρ ω`: `ρ^{d-k} *` on degree `k`.
    pub fn star_scaled(&self, x: &CohomologyClass, rho: &Rational) -> Result<CohomologyClass> {
        if !rho.is_positive() {
            return Err(invalid(format!("scale factor {rho} must be positive")));
        }
        let d = self.complex_dim() as i64;
        let mut out = self.zero();
        for (l, q) in x.terms() {
            let factor = rat_pow(rho, d - self.degree(l) as i64);
            let dual = self.poincare_dual_label(l)?;
            out.add_term(dual, self.star_coefficient(l) * q * factor);
        }
        Ok(out)
    }

    /// The weight `w_ℓ` with `ω^r / r! = Σ_{|ℓ| = r} w_ℓ ℓ`
    /// (`1/h_λ`, `1/g_λ`, `2^{α(λ)}/g_λ`, ...).
    pub fn renormalization_weight(&self, label: &Label) -> Rational {
        let r = self.half_degree(label);
        let expansion = self.omega_power_expand(r).expect("degree within range");
        expansion.coefficient(label) / rat_from_uint(&factorial(r as u64))
    }

    /// Checks that the renormalised forms `w_ℓ ℓ` are permuted by the star
    /// operator: `*(w_ℓ ℓ) = w_ℓ' ℓ'` for every label.
    pub fn renormalized_star_check(&self) -> bool {
        self.labels().all(|l| {
            let dual = self.poincare_dual_label(l).expect("label of this space");
            let lhs = self.star(&self.basis_class(l).scale(&self.renormalization_weight(l)));
            let rhs = self.basis_class(&dual).scale(&self.renormalization_weight(&dual));
            lhs == rhs
        })
    }
}

/// Hook-product quotient `h_λ h_μ' / (h_λ' h_μ)` for a Grassmannian removal, kept
/// alongside the closed form as a second route to the same numbers.
pub fn grassmannian_adjoint_by_hooks(m: usize, n: usize, lambda: &Partition, mu: &Partition) -> Result<Rational> {
    let lp = complement_in_rectangle(lambda, m, n)?;
    let mp = complement_in_rectangle(mu, m, n)?;
    let num: BigUint = hook_product(lambda) * hook_product(&mp);
    let den: BigUint = hook_product(&lp) * hook_product(mu);
    Ok(ratio(&num, &den))
}

#[cfg(test)]
mod tests;
