//! Integer partitions and the hook-length combinatorics built on them.
//!
//! Ordinary partitions index Schubert classes on Grassmannians, strict ones
//! index the orthogonal and Lagrangian Grassmannians. Besides the closed
//! formulas (hook products, Schur's product for shifted hooks, beta
//! sequences) this module carries brute-force tableau counters that serve
//! as independent oracles for those formulas.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::factorial;
use crate::error::{invalid, Error, Result};

/// Default cap on the weight accepted by the brute-force tableau counters.
pub const DEFAULT_ENUM_BOUND: usize = 12;

/// Environment variable that overrides [`DEFAULT_ENUM_BOUND`] in the CLI.
pub const ENUM_BOUND_ENV: &str = "HODGESTAR_ENUM_BOUND";

/// Reads the enumeration bound from [`ENUM_BOUND_ENV`], falling back to the default.
pub fn enum_bound_from_env() -> Result<usize> {
    match std::env::var(ENUM_BOUND_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| invalid(format!("{ENUM_BOUND_ENV}={v:?} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_ENUM_BOUND),
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

/// A partition with distinct parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct StrictPartition(Partition);

/// A box of a diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoxCoordinate {
    pub row: usize,
    pub col: usize,
}

impl BoxCoordinate {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

impl Partition {
    /// Trailing zeros are dropped; any other violation of weak decrease is rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(invalid(format!("{parts:?} has an interior zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part (1-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn contains_box(&self, x: BoxCoordinate) -> bool {
        x.row >= 1 && x.col >= 1 && self.part(x.row) as usize >= x.col
    }

    /// Diagram containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn fits_in_rectangle(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(1) as usize <= cols
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = BoxCoordinate> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len as usize).map(move |c| BoxCoordinate::new(r + 1, c)))
    }

    /// Partitions obtained by adding one box.
    pub fn add_box_children(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            let cur = self.part(i + 1);
            if i == 0 || self.part(i) > cur {
                let mut parts = self.0.clone();
                if i == self.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition(parts));
            }
        }
        out
    }

    /// Partitions obtained by removing one box, with the (1-based) row it came from.
    pub fn remove_box_children(&self) -> Vec<(usize, Partition)> {
        let mut out = Vec::new();
        for i in 1..=self.len() {
            if self.part(i) > self.part(i + 1) {
                let mut parts = self.0.clone();
                parts[i - 1] -= 1;
                out.push((i, Partition::new(parts).expect("removing a corner keeps a partition")));
            }
        }
        out
    }
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let p = Partition::new(parts)?;
        Self::try_from(p)
    }

    pub fn empty() -> Self {
        Self(Partition::empty())
    }

    /// The staircase `(n, n-1, ..., 1)`.
    pub fn staircase(n: u32) -> Self {
        Self(Partition((1..=n).rev().collect()))
    }

    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.weight()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes outside the first column: `|λ| - ℓ(λ)`.
    pub fn alpha(&self) -> usize {
        self.weight() - self.len()
    }

    pub fn has_part(&self, k: u32) -> bool {
        self.parts().contains(&k)
    }

    /// Boxes of the shifted diagram: row `i` occupies columns `i ..= i + λ_i - 1`.
    pub fn shifted_boxes(&self) -> impl Iterator<Item = BoxCoordinate> + '_ {
        self.parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (r + 1..r + 1 + len as usize).map(move |c| BoxCoordinate::new(r + 1, c)))
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;

    fn try_from(p: Partition) -> Result<Self> {
        if !p.is_strict() {
            return Err(invalid(format!("{p} is not strict")));
        }
        Ok(Self(p))
    }
}

impl From<StrictPartition> for Partition {
    fn from(p: StrictPartition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `5,3,2`, `5 3 2`, and `""` or `0` for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() || s == "0" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| invalid(format!("bad partition part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::try_from(s.parse::<Partition>()?)
    }
}

/// Ordering used for labels: weight first, then reverse lexicographic on parts,
/// so `(2)` precedes `(1,1)`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for StrictPartition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.cmp(&other.0)
    }
}

impl PartialOrd for StrictPartition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

pub fn hook_length(lambda: &Partition, x: BoxCoordinate) -> Result<usize> {
    if !lambda.contains_box(x) {
        return Err(invalid(format!(
            "box ({}, {}) is not in the diagram of {lambda}",
            x.row, x.col
        )));
    }
    let arm = lambda.part(x.row) as usize - x.col;
    let leg = lambda.parts()[x.row..]
        .iter()
        .filter(|&&p| p as usize >= x.col)
        .count();
    Ok(arm + leg + 1)
}

/// Product of all hook lengths; `1` for the empty partition.
pub fn hook_product(lambda: &Partition) -> BigUint {
    lambda
        .boxes()
        .map(|x| hook_length(lambda, x).expect("box of its own diagram"))
        .fold(BigUint::one(), |acc, h| acc * h)
}

fn check_bound(weight: usize, bound: usize, name: &'static str) -> Result<()> {
    if weight > bound {
        return Err(Error::ResourceLimit {
            name,
            requested: weight,
            bound,
        });
    }
    Ok(())
}

/// Counts standard Young tableaux of shape `lambda` by enumerating every
/// tableau: the entries `1, 2, ...` are placed one at a time into each
/// admissible outer corner.
pub fn syt_count_bruteforce(lambda: &Partition, bound: usize) -> Result<u64> {
    check_bound(lambda.weight(), bound, "syt_enumeration_bound")?;
    fn grow(target: &[u32], cur: &mut Vec<u32>, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for i in 0..target.len() {
            let fits_row = cur[i] < target[i];
            let fits_above = i == 0 || cur[i - 1] > cur[i];
            if fits_row && fits_above {
                cur[i] += 1;
                total += grow(target, cur, left - 1);
                cur[i] -= 1;
            }
        }
        total
    }
    let mut cur = vec![0; lambda.len()];
    Ok(grow(lambda.parts(), &mut cur, lambda.weight()))
}

/// Same enumeration for standard shifted tableaux of a strict shape.
pub fn shifted_syt_count_bruteforce(lambda: &StrictPartition, bound: usize) -> Result<u64> {
    check_bound(lambda.weight(), bound, "shifted_syt_enumeration_bound")?;
    fn grow(target: &[u32], cur: &mut Vec<u32>, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for i in 0..target.len() {
            let fits_row = cur[i] < target[i];
            // Row i starts one column right of row i-1, so the box above the
            // next cell exists iff row i-1 is at least two longer.
            let fits_above = i == 0 || cur[i - 1] > cur[i] + 1;
            if fits_row && fits_above {
                cur[i] += 1;
                total += grow(target, cur, left - 1);
                cur[i] -= 1;
            }
        }
        total
    }
    let mut cur = vec![0; lambda.len()];
    Ok(grow(lambda.parts(), &mut cur, lambda.weight()))
}

/// `λ'_i = n - λ_{m+1-i}`: the complement of `λ` in the `m × n` rectangle, rotated.
pub fn complement_in_rectangle(lambda: &Partition, m: usize, n: usize) -> Result<Partition> {
    if !lambda.fits_in_rectangle(m, n) {
        return Err(invalid(format!("{lambda} does not fit in a {m}x{n} rectangle")));
    }
    let parts = (1..=m).map(|i| n as u32 - lambda.part(m + 1 - i)).collect();
    Partition::new(parts)
}

/// Parts of `{1, ..., n}` not used by `lambda`, in decreasing order.
pub fn complement_in_set(lambda: &StrictPartition, n: u32) -> Result<StrictPartition> {
    if lambda.parts().iter().any(|&p| p > n) {
        return Err(invalid(format!("{lambda} has a part exceeding {n}")));
    }
    let parts = (1..=n).rev().filter(|k| !lambda.has_part(*k)).collect();
    Ok(StrictPartition(Partition(parts)))
}

/// The double diagram `D(λ) = (λ_1, ..., λ_m | λ_1 - 1, ..., λ_m - 1)` in Frobenius coordinates.
pub fn double_diagram(lambda: &StrictPartition) -> Partition {
    let arms: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let legs: Vec<usize> = arms.iter().map(|&p| p - 1).collect();
    let r = arms.len();
    let mut rows: Vec<u32> = (0..r).map(|i| (arms[i] + i + 1) as u32).collect();
    // Below the Durfee square, row i has one box in column j for each leg reaching it.
    let mut i = r + 1;
    loop {
        let len = (0..r).filter(|&j| legs[j] + j + 1 >= i).count();
        if len == 0 {
            break;
        }
        rows.push(len as u32);
        i += 1;
    }
    Partition::new(rows).expect("Frobenius coordinates give a partition")
}

/// `g_λ`: product of hook lengths of `D(λ)` over the boxes of the shifted diagram,
/// which sit strictly above the diagonal of `D(λ)`.
pub fn shifted_hook_product(lambda: &StrictPartition) -> BigUint {
    let d = double_diagram(lambda);
    lambda
        .shifted_boxes()
        .map(|x| {
            let y = BoxCoordinate::new(x.row, x.col + 1);
            hook_length(&d, y).expect("shifted box lies in the double diagram")
        })
        .fold(BigUint::one(), |acc, h| acc * h)
}

/// `g_λ = ∏ λ_i! · ∏_{i<j} (λ_i + λ_j) / ∏_{i<j} (λ_i - λ_j)`.
pub fn schur_g_formula(lambda: &StrictPartition) -> BigUint {
    let p = lambda.parts();
    let mut num = p
        .iter()
        .fold(BigUint::one(), |acc, &x| acc * factorial(x as u64));
    let mut den = BigUint::one();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            num *= p[i] + p[j];
            den *= p[i] - p[j];
        }
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// `(λ_1 + m - 1, λ_2 + m - 2, ..., λ_m)`.
pub fn beta_sequence(lambda: &Partition, m: usize) -> Result<Vec<u32>> {
    if lambda.len() > m {
        return Err(invalid(format!("{lambda} has more than {m} rows")));
    }
    Ok((1..=m).map(|i| lambda.part(i) + (m - i) as u32).collect())
}

/// `h_λ = ∏ β_j! / ∏_{j<k} (β_j - β_k)`.
pub fn hook_product_via_beta(lambda: &Partition, m: usize) -> Result<BigUint> {
    let beta = beta_sequence(lambda, m)?;
    let num = beta
        .iter()
        .fold(BigUint::one(), |acc, &b| acc * factorial(b as u64));
    Ok(num / beta_vandermonde(&beta))
}

/// `∏_{j<k} (β_j - β_k)` for a strictly decreasing sequence.
pub fn beta_vandermonde(beta: &[u32]) -> BigUint {
    let mut acc = BigUint::one();
    for j in 0..beta.len() {
        for k in j + 1..beta.len() {
            acc *= beta[j] - beta[k];
        }
    }
    acc
}

/// All partitions inside the `m × n` rectangle.
pub fn partitions_in_rectangle(m: usize, n: usize) -> Vec<Partition> {
    fn rec(m: usize, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition(prefix.clone()));
        if prefix.len() == m {
            return;
        }
        for p in 1..=max {
            prefix.push(p);
            rec(m, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, n as u32, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All strict partitions with parts in `{1, ..., n}`, i.e. inside the staircase `ρ_n`.
pub fn strict_partitions_in_staircase(n: u32) -> Vec<StrictPartition> {
    let mut out: Vec<StrictPartition> = (0..1u64 << n)
        .map(|mask| {
            let parts = (1..=n).rev().filter(|k| mask >> (k - 1) & 1 == 1).collect();
            StrictPartition(Partition(parts))
        })
        .collect();
    out.sort();
    out
}

/// All partitions of `w`.
pub fn partitions_of(w: usize) -> Vec<Partition> {
    partitions_in_rectangle(w, w)
        .into_iter()
        .filter(|p| p.weight() == w)
        .collect()
}

/// All strict partitions of `w`.
pub fn strict_partitions_of(w: usize) -> Vec<StrictPartition> {
    fn rec(left: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
        if left == 0 {
            out.push(StrictPartition(Partition(prefix.clone())));
            return;
        }
        for p in (1..=max.min(left)).rev() {
            prefix.push(p);
            rec(left - p, p - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(w as u32, w as u32, &mut Vec::new(), &mut out);
    out.sort();
    out
}
