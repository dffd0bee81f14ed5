//! Exact-matrix verification of the Hodge star.
//!
//! The engine only needs the graded dimensions and the blocks of `L`. From
//! these it recovers primitive subspaces, Lefschetz decompositions and the
//! star operator via Weil's formula
//!
//! ```text
//! *L^r φ = (-1)^p r!/(d-2p-r)! L^{d-2p-r} φ,    φ ∈ P^{2p}
//! ```
//!
//! so it never consults the closed-form star it is used to check.
//! Coordinates are indexed by half-degree `p` (cohomological degree `2p`).

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{factorial, format_rational, rat_from_uint, rat_int, Rational};
use crate::error::{invalid, Error, Result};
use crate::linalg::Matrix;
use crate::spaces::{CohomologyClass, Label, Space, SpaceDescriptor, SpaceJson};

/// A graded linear operator of fixed cohomological shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedOperatorMatrix {
    pub space: SpaceDescriptor,
    /// Shift in cohomological degree (always even).
    pub shift: i64,
    /// `blocks[p]` maps half-degree `p` to half-degree `p + shift/2`; blocks
    /// whose target is out of range are `0 × dim` matrices.
    pub blocks: Vec<Matrix>,
}

impl GradedOperatorMatrix {
    fn from_label_map(space: &Space, shift: i64, f: impl Fn(&Label) -> CohomologyClass) -> Self {
        let d = space.complex_dim();
        let blocks = (0..=d)
            .map(|p| {
                let target = p as i64 + shift / 2;
                let rows = if (0..=d as i64).contains(&target) {
                    space.level(target as usize).len()
                } else {
                    0
                };
                let src = space.level(p);
                let mut m = Matrix::zeros(rows, src.len());
                for (j, l) in src.iter().enumerate() {
                    for (t, q) in f(l).terms() {
                        let (tp, i) = space.position(t).expect("image label of this space");
                        debug_assert_eq!(tp as i64, target);
                        m[(i, j)] = q.clone();
                    }
                }
                m
            })
            .collect();
        Self {
            space: space.descriptor(),
            shift,
            blocks,
        }
    }

    /// The block on half-degree `p`.
    pub fn block(&self, p: usize) -> &Matrix {
        &self.blocks[p]
    }
}

pub fn build_lefschetz_matrix(space: &Space) -> GradedOperatorMatrix {
    GradedOperatorMatrix::from_label_map(space, 2, |l| space.lefschetz_apply(&space.basis_class(l)))
}

/// `Λ` from the closed-form removal coefficients.
pub fn build_lambda_matrix(space: &Space) -> GradedOperatorMatrix {
    GradedOperatorMatrix::from_label_map(space, -2, |l| space.lambda_adjoint(&space.basis_class(l)))
}

pub fn build_b_matrix(space: &Space) -> GradedOperatorMatrix {
    GradedOperatorMatrix::from_label_map(space, 0, |l| space.b_operator(&space.basis_class(l)))
}

/// One summand `L^r φ` of a Lefschetz decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzComponent {
    pub p: usize,
    pub r: usize,
    pub primitive_part: CohomologyClass,
}

/// A summand in coordinates: `φ` as a vector on half-degree `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateComponent {
    pub p: usize,
    pub r: usize,
    pub primitive: Vec<Rational>,
}

/// Graded dimensions plus `L`, with everything derived from them.
#[derive(Clone, Debug)]
pub struct LefschetzEngine {
    d: usize,
    dims: Vec<usize>,
    l_blocks: Vec<Matrix>,
    primitives: Vec<Vec<Vec<Rational>>>,
    /// Inverse of the Lefschetz-basis change of coordinates, per level.
    decomposers: Vec<Option<Matrix>>,
}

impl LefschetzEngine {
    /// `l_blocks[p]` is the `dims[p+1] × dims[p]` matrix of `L` for `p < d`.
    pub fn from_blocks(dims: Vec<usize>, l_blocks: Vec<Matrix>) -> Result<Self> {
        let d = dims
            .len()
            .checked_sub(1)
            .ok_or_else(|| invalid("a graded model needs at least one level"))?;
        if l_blocks.len() < d {
            return Err(invalid(format!("expected {d} blocks of L, got {}", l_blocks.len())));
        }
        for (p, b) in l_blocks.iter().take(d).enumerate() {
            if b.rows() != dims[p + 1] || b.cols() != dims[p] {
                return Err(invalid(format!("block {p} of L has the wrong shape")));
            }
        }
        let mut engine = Self {
            d,
            dims,
            l_blocks: l_blocks.into_iter().take(d).collect(),
            primitives: Vec::new(),
            decomposers: Vec::new(),
        };
        engine.primitives = (0..=d / 2)
            .map(|p| engine.power(p, d - 2 * p + 1).kernel())
            .collect();
        engine.decomposers = (0..=d).map(|q| engine.lefschetz_basis(q).inverse()).collect();
        Ok(engine)
    }

    pub fn for_space(space: &Space) -> Result<Self> {
        let d = space.complex_dim();
        let dims = (0..=d).map(|p| space.level(p).len()).collect();
        let mut l = build_lefschetz_matrix(space).blocks;
        l.truncate(d);
        Self::from_blocks(dims, l)
    }

    pub fn complex_dim(&self) -> usize {
        self.d
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `L^k` from half-degree `p`; a `0 × dim` matrix past the top.
    pub fn power(&self, p: usize, k: usize) -> Matrix {
        if p + k > self.d {
            return Matrix::zeros(0, self.dims[p]);
        }
        (p..p + k).fold(Matrix::identity(self.dims[p]), |acc, i| &self.l_blocks[i] * &acc)
    }

    /// Basis of `ker L^{d-2p+1}` on half-degree `p`.
    pub fn primitive_subspace(&self, p: usize) -> Result<&[Vec<Rational>]> {
        self.primitives
            .get(p)
            .map(Vec::as_slice)
            .ok_or_else(|| invalid(format!("no primitive classes above the middle degree (p = {p}, d = {})", self.d)))
    }

    /// Pairs `(p, r)` with `p + r = q` that can contribute on level `q`.
    fn slots(&self, q: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..=q.min(self.d / 2))
            .map(move |p| (p, q - p))
            .filter(move |&(p, r)| r <= self.d - 2 * p)
    }

    /// Columns `L^r φ` for every primitive basis vector `φ` feeding level `q`.
    fn lefschetz_basis(&self, q: usize) -> Matrix {
        let cols: Vec<Vec<Rational>> = self
            .slots(q)
            .flat_map(|(p, r)| {
                let lr = self.power(p, r);
                self.primitives[p].iter().map(move |v| lr.mul_vec(v)).collect::<Vec<_>>()
            })
            .collect();
        Matrix::from_columns(self.dims[q], &cols)
    }

    /// `L^{d-2p}: H^{2p} → H^{2d-2p}` has full rank for every `2p ≤ d`.
    pub fn hard_lefschetz_failures(&self) -> Vec<(usize, usize, usize)> {
        (0..=self.d / 2)
            .filter_map(|p| {
                let rank = self.power(p, self.d - 2 * p).rank();
                let (a, b) = (self.dims[p], self.dims[self.d - p]);
                (rank != a || a != b).then_some((p, a, rank))
            })
            .collect()
    }

    pub fn decompose_coords(&self, q: usize, x: &[Rational]) -> Result<Vec<CoordinateComponent>> {
        if q > self.d || x.len() != self.dims[q] {
            return Err(invalid(format!("vector does not live on level {q}")));
        }
        let inv = self.decomposers[q].as_ref().ok_or_else(|| {
            Error::InternalInvariant(format!("Lefschetz basis on level {q} is not a basis"))
        })?;
        let c = inv.mul_vec(x);
        let mut out = Vec::new();
        let mut offset = 0;
        for (p, r) in self.slots(q) {
            let basis = &self.primitives[p];
            let mut phi = vec![Rational::zero(); self.dims[p]];
            for (coef, v) in c[offset..offset + basis.len()].iter().zip(basis) {
                if coef.is_zero() {
                    continue;
                }
                for (a, b) in phi.iter_mut().zip(v) {
                    *a += coef * b;
                }
            }
            offset += basis.len();
            if phi.iter().any(|v| !v.is_zero()) {
                out.push(CoordinateComponent { p, r, primitive: phi });
            }
        }
        Ok(out)
    }

    /// Weil's formula applied to each component; the result lives on level `d - q`.
    pub fn star_coords(&self, q: usize, x: &[Rational]) -> Result<Vec<Rational>> {
        let mut out = vec![Rational::zero(); self.dims[self.d - q]];
        for comp in self.decompose_coords(q, x)? {
            let (p, r) = (comp.p, comp.r);
            let s = self.d - 2 * p - r;
            let mut coef = rat_from_uint(&factorial(r as u64)) / rat_from_uint(&factorial(s as u64));
            if p % 2 == 1 {
                coef = -coef;
            }
            for (a, b) in out.iter_mut().zip(self.power(p, s).mul_vec(&comp.primitive)) {
                *a += &coef * b;
            }
        }
        Ok(out)
    }

    /// Matrix of the oracle star from level `q` to level `d - q`.
    pub fn star_matrix(&self, q: usize) -> Result<Matrix> {
        let cols = (0..self.dims[q])
            .map(|j| {
                let mut e = vec![Rational::zero(); self.dims[q]];
                e[j] = Rational::one();
                self.star_coords(q, &e)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(self.dims[self.d - q], &cols))
    }
}

fn coords(space: &Space, x: &CohomologyClass, q: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); space.level(q).len()];
    for (l, c) in x.terms() {
        let (p, i) = space.position(l).expect("label of this space");
        assert_eq!(p, q, "class is not homogeneous");
        v[i] = c.clone();
    }
    v
}

fn class_from_coords(space: &Space, q: usize, v: &[Rational]) -> CohomologyClass {
    space.class(space.level(q).iter().cloned().zip(v.iter().cloned()))
}

fn homogeneous_degree(space: &Space, x: &CohomologyClass) -> Result<Option<usize>> {
    let mut degrees = x.terms().map(|(l, _)| space.half_degree(l));
    let Some(first) = degrees.next() else {
        return Ok(None);
    };
    if degrees.any(|p| p != first) {
        return Err(invalid("class is not homogeneous"));
    }
    Ok(Some(first))
}

/// Primitive classes of degree `2p`, as classes of `space`.
pub fn primitive_subspace(space: &Space, p: usize) -> Result<Vec<CohomologyClass>> {
    let engine = LefschetzEngine::for_space(space)?;
    Ok(engine
        .primitive_subspace(p)?
        .iter()
        .map(|v| class_from_coords(space, p, v))
        .collect())
}

/// The oracle bound to one space, so matrices are built once.
#[derive(Clone, Debug)]
pub struct Oracle<'a> {
    space: &'a Space,
    engine: LefschetzEngine,
}

impl<'a> Oracle<'a> {
    pub fn new(space: &'a Space) -> Result<Self> {
        Ok(Self {
            space,
            engine: LefschetzEngine::for_space(space)?,
        })
    }

    pub fn engine(&self) -> &LefschetzEngine {
        &self.engine
    }

    /// Components sorted by `p`; zero components are omitted.
    pub fn decompose(&self, x: &CohomologyClass) -> Result<Vec<LefschetzComponent>> {
        let Some(q) = homogeneous_degree(self.space, x)? else {
            return Ok(Vec::new());
        };
        Ok(self
            .engine
            .decompose_coords(q, &coords(self.space, x, q))?
            .into_iter()
            .map(|c| LefschetzComponent {
                p: c.p,
                r: c.r,
                primitive_part: class_from_coords(self.space, c.p, &c.primitive),
            })
            .collect())
    }

    /// Star via Weil's formula; inhomogeneous classes are handled degree by degree.
    pub fn star(&self, x: &CohomologyClass) -> Result<CohomologyClass> {
        let d = self.space.complex_dim();
        let mut out = self.space.zero();
        for q in 0..=d {
            let part = self.space.homogeneous_part(x, 2 * q);
            if part.is_zero() {
                continue;
            }
            let v = self.engine.star_coords(q, &coords(self.space, &part, q))?;
            out = out + class_from_coords(self.space, d - q, &v);
        }
        Ok(out)
    }
}

pub fn lefschetz_decompose(space: &Space, x: &CohomologyClass) -> Result<Vec<LefschetzComponent>> {
    Oracle::new(space)?.decompose(x)
}

pub fn star_oracle(space: &Space, x: &CohomologyClass) -> Result<CohomologyClass> {
    Oracle::new(space)?.star(x)
}

fn lefschetz_power(space: &Space, x: &CohomologyClass, r: usize) -> CohomologyClass {
    (0..r).fold(x.clone(), |y, _| space.lefschetz_apply(&y))
}

/// `Σ L^r φ` over the components.
pub fn reassemble(space: &Space, components: &[LefschetzComponent]) -> CohomologyClass {
    components
        .iter()
        .fold(space.zero(), |acc, c| acc + lefschetz_power(space, &c.primitive_part, c.r))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub label: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub space: SpaceJson,
    pub check: String,
    pub passed: bool,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    fn new(space: &Space, check: &str, failures: Vec<Failure>) -> Self {
        Self {
            space: space.descriptor().into(),
            check: check.to_string(),
            passed: failures.is_empty(),
            failures,
        }
    }

    fn error(space: &Space, check: &str, err: &Error) -> Self {
        Self::new(
            space,
            check,
            vec![Failure {
                label: "*".into(),
                expected: "no error".into(),
                got: err.to_string(),
            }],
        )
    }
}

fn format_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let row: Vec<String> = (0..m.cols()).map(|j| format_rational(&m[(i, j)])).collect();
            format!("[{}]", row.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

fn compare_classes(space: &Space, label: &Label, expected: &CohomologyClass, got: &CohomologyClass) -> Option<Failure> {
    (expected != got).then(|| Failure {
        label: label.to_string(),
        expected: space.display_class(expected),
        got: space.display_class(got),
    })
}

/// `L^{d-2p}` is bijective from degree `2p` for every `2p ≤ d`.
pub fn check_hard_lefschetz(space: &Space) -> VerificationReport {
    const CHECK: &str = "hard_lefschetz";
    let engine = match LefschetzEngine::for_space(space) {
        Ok(e) => e,
        Err(e) => return VerificationReport::error(space, CHECK, &e),
    };
    let d = engine.complex_dim();
    let failures = engine
        .hard_lefschetz_failures()
        .into_iter()
        .map(|(p, dim, rank)| Failure {
            label: format!("degree {}", 2 * p),
            expected: format!("bijection onto degree {} (rank {dim})", 2 * (d - p)),
            got: format!("rank {rank}, target dimension {}", engine.dims()[d - p]),
        })
        .collect();
    VerificationReport::new(space, CHECK, failures)
}

/// `[B,L] = -2L`, `[B,Λ] = 2Λ` and `[Λ,L] = B` with the closed-form `Λ`.
pub fn check_sl2(space: &Space) -> VerificationReport {
    let d = space.complex_dim();
    let l = build_lefschetz_matrix(space);
    let lam = build_lambda_matrix(space);
    let b = build_b_matrix(space);
    let mut failures = Vec::new();
    let mut record = |name: &str, p: usize, lhs: Matrix, rhs: Matrix| {
        if lhs != rhs {
            failures.push(Failure {
                label: format!("{name} on degree {}", 2 * p),
                expected: format_matrix(&rhs),
                got: format_matrix(&lhs),
            });
        }
    };
    for p in 0..=d {
        if p < d {
            let bl = &b.blocks[p + 1] * &l.blocks[p];
            let lb = &l.blocks[p] * &b.blocks[p];
            record("[B,L]", p, bl.sub(&lb), l.blocks[p].scale(&rat_int(-2)));
        }
        if p > 0 {
            let bl = &b.blocks[p - 1] * &lam.blocks[p];
            let lb = &lam.blocks[p] * &b.blocks[p];
            record("[B,Λ]", p, bl.sub(&lb), lam.blocks[p].scale(&rat_int(2)));
        }
        let n = space.level(p).len();
        let lam_l = if p < d {
            &lam.blocks[p + 1] * &l.blocks[p]
        } else {
            Matrix::zeros(n, n)
        };
        let l_lam = if p > 0 {
            &l.blocks[p - 1] * &lam.blocks[p]
        } else {
            Matrix::zeros(n, n)
        };
        record("[Λ,L]", p, lam_l.sub(&l_lam), b.blocks[p].clone());
    }
    VerificationReport::new(space, "sl2", failures)
}

/// Every basis class equals the sum of its Lefschetz components.
pub fn check_decomposition(space: &Space) -> VerificationReport {
    const CHECK: &str = "lefschetz_decomposition";
    let oracle = match Oracle::new(space) {
        Ok(o) => o,
        Err(e) => return VerificationReport::error(space, CHECK, &e),
    };
    let failures = space
        .labels()
        .filter_map(|l| {
            let x = space.basis_class(l);
            let comps = match oracle.decompose(&x) {
                Ok(c) => c,
                Err(e) => {
                    return Some(Failure {
                        label: l.to_string(),
                        expected: space.display_class(&x),
                        got: e.to_string(),
                    })
                }
            };
            let bad = comps.iter().any(|c| {
                c.r > space.complex_dim() - 2 * c.p
                    || !lefschetz_power(space, &c.primitive_part, space.complex_dim() - 2 * c.p + 1).is_zero()
            });
            let back = reassemble(space, &comps);
            if bad {
                Some(Failure {
                    label: l.to_string(),
                    expected: "primitive components".into(),
                    got: "non-primitive component".into(),
                })
            } else {
                compare_classes(space, l, &x, &back)
            }
        })
        .collect();
    VerificationReport::new(space, CHECK, failures)
}

/// Closed-form star against the Weil-formula oracle, label by label.
pub fn verify_theorem_vs_oracle(space: &Space) -> VerificationReport {
    const CHECK: &str = "theorem_vs_oracle";
    let oracle = match Oracle::new(space) {
        Ok(o) => o,
        Err(e) => return VerificationReport::error(space, CHECK, &e),
    };
    let failures = space
        .labels()
        .filter_map(|l| {
            let x = space.basis_class(l);
            let expected = space.star(&x);
            match oracle.star(&x) {
                Ok(got) => compare_classes(space, l, &expected, &got),
                Err(e) => Some(Failure {
                    label: l.to_string(),
                    expected: space.display_class(&expected),
                    got: e.to_string(),
                }),
            }
        })
        .collect();
    VerificationReport::new(space, CHECK, failures)
}

/// Closed-form `Λ` against `*L*` with the oracle star.
pub fn check_lambda_vs_oracle(space: &Space) -> VerificationReport {
    const CHECK: &str = "lambda_vs_oracle";
    let oracle = match Oracle::new(space) {
        Ok(o) => o,
        Err(e) => return VerificationReport::error(space, CHECK, &e),
    };
    let failures = space
        .labels()
        .filter_map(|l| {
            let x = space.basis_class(l);
            let expected = space.lambda_adjoint(&x);
            let got = oracle
                .star(&x)
                .map(|s| space.lefschetz_apply(&s))
                .and_then(|y| oracle.star(&y));
            match got {
                Ok(got) => compare_classes(space, l, &expected, &got),
                Err(e) => Some(Failure {
                    label: l.to_string(),
                    expected: space.display_class(&expected),
                    got: e.to_string(),
                }),
            }
        })
        .collect();
    VerificationReport::new(space, CHECK, failures)
}

/// `** = 1` and single positive support on the Poincaré dual, for both the
/// oracle and the closed form.
pub fn check_star_involution(space: &Space) -> VerificationReport {
    const CHECK: &str = "star_involution";
    let oracle = match Oracle::new(space) {
        Ok(o) => o,
        Err(e) => return VerificationReport::error(space, CHECK, &e),
    };
    let mut failures = Vec::new();
    for l in space.labels() {
        let x = space.basis_class(l);
        let dual = match space.poincare_dual_label(l) {
            Ok(d) => d,
            Err(e) => {
                failures.push(Failure {
                    label: l.to_string(),
                    expected: "a Poincaré dual label".into(),
                    got: e.to_string(),
                });
                continue;
            }
        };
        let once = match oracle.star(&x) {
            Ok(y) => y,
            Err(e) => {
                failures.push(Failure {
                    label: l.to_string(),
                    expected: "oracle star".into(),
                    got: e.to_string(),
                });
                continue;
            }
        };
        let supported = once.len() == 1 && once.coefficient(&dual).is_positive();
        if !supported {
            failures.push(Failure {
                label: l.to_string(),
                expected: format!("positive multiple of {}", space.display_label(&dual)),
                got: space.display_class(&once),
            });
        }
        match oracle.star(&once) {
            Ok(twice) => failures.extend(compare_classes(space, l, &x, &twice)),
            Err(e) => failures.push(Failure {
                label: l.to_string(),
                expected: space.display_class(&x),
                got: e.to_string(),
            }),
        }
        let closed_twice = space.star(&space.star(&x));
        if let Some(mut f) = compare_classes(space, l, &x, &closed_twice) {
            f.label = format!("{l} (closed form)");
            failures.push(f);
        }
    }
    VerificationReport::new(space, CHECK, failures)
}

/// The closed-form scaling law for the metric `ρω` against the oracle built
/// from `ρL`.
pub fn check_scaled_star(space: &Space, rho: &Rational) -> VerificationReport {
    const CHECK: &str = "scaled_star";
    let d = space.complex_dim();
    let dims: Vec<usize> = (0..=d).map(|p| space.level(p).len()).collect();
    let blocks: Vec<Matrix> = build_lefschetz_matrix(space).blocks[..d].iter().map(|b| b.scale(rho)).collect();
    let engine = match LefschetzEngine::from_blocks(dims, blocks) {
        Ok(e) => e,
        Err(e) => return VerificationReport::error(space, CHECK, &e),
    };
    let mut failures = Vec::new();
    for l in space.labels() {
        let x = space.basis_class(l);
        let q = space.half_degree(l);
        let got = engine.star_coords(q, &coords(space, &x, q)).map(|v| class_from_coords(space, d - q, &v));
        let expected = space.star_scaled(&x, rho);
        match (expected, got) {
            (Ok(e), Ok(g)) => failures.extend(compare_classes(space, l, &e, &g)),
            (e, g) => failures.push(Failure {
                label: l.to_string(),
                expected: format!("{:?}", e.map(|c| space.display_class(&c))),
                got: format!("{:?}", g.map(|c| space.display_class(&c))),
            }),
        }
    }
    VerificationReport::new(space, CHECK, failures)
}

/// All suites in dependency order: hard Lefschetz first, since the
/// decomposition and the oracle rely on it.
pub fn verify_all(space: &Space) -> Vec<VerificationReport> {
    let hl = check_hard_lefschetz(space);
    if !hl.passed {
        return vec![hl];
    }
    vec![
        hl,
        check_decomposition(space),
        verify_theorem_vs_oracle(space),
        check_lambda_vs_oracle(space),
        check_star_involution(space),
        check_sl2(space),
    ]
}

#[cfg(test)]
mod tests;
