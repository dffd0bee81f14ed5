//! Root systems, parabolic quotients `W¹` and their Bruhat posets.
//!
//! Simple roots are numbered as in Bourbaki and addressed 1-based in the
//! public API. Roots are integer vectors in the simple-root basis; Weyl group
//! elements act through integer matrices in the same basis.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::arith::{factorial, rat_from_uint, Rational};
use crate::error::{invalid, Error, Result};
use crate::lefschetz::LefschetzEngine;
use crate::linalg::Matrix;
use crate::partitions::Partition;
use crate::spaces::{Branch, Label, QuadricLabel, SpaceDescriptor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
}

impl CartanType {
    /// Validates a `(type, rank)` pair such as `("D", 5)` or `("E", 6)`.
    pub fn new(kind: &str, rank: usize) -> Result<Self> {
        let t = match kind.to_ascii_uppercase().as_str() {
            "A" => CartanType::A(rank),
            "B" => CartanType::B(rank),
            "C" => CartanType::C(rank),
            "D" => CartanType::D(rank),
            "E" | "E6" | "E7" if rank == 6 => CartanType::E6,
            "E" | "E6" | "E7" if rank == 7 => CartanType::E7,
            _ => return Err(invalid(format!("unsupported root system {kind}{rank}"))),
        };
        let min = match t {
            CartanType::D(_) => 2,
            _ => 1,
        };
        if t.rank() < min {
            return Err(invalid(format!("rank {rank} is too small for type {kind}")));
        }
        Ok(t)
    }

    pub fn rank(&self) -> usize {
        match *self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n) => n,
            CartanType::E6 => 6,
            CartanType::E7 => 7,
        }
    }

    fn letter(&self) -> char {
        match self {
            CartanType::A(_) => 'A',
            CartanType::B(_) => 'B',
            CartanType::C(_) => 'C',
            CartanType::D(_) => 'D',
            CartanType::E6 | CartanType::E7 => 'E',
        }
    }

    /// `A[i][j] = <α_i^∨, α_j>`, 0-based.
    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match *self {
            CartanType::A(_) | CartanType::B(_) | CartanType::C(_) => {
                for i in 1..n {
                    link(i - 1, i);
                }
            }
            CartanType::D(_) => {
                for i in 1..n - 1 {
                    link(i - 1, i);
                }
                if n >= 3 {
                    link(n - 3, n - 1);
                }
            }
            CartanType::E6 | CartanType::E7 => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
        }
        if n >= 2 {
            match self {
                CartanType::B(_) => a[n - 1][n - 2] = -2,
                CartanType::C(_) => a[n - 2][n - 1] = -2,
                _ => {}
            }
        }
        a
    }

    /// Half squared lengths `d_i` with `d_i A_ij` symmetric.
    fn symmetrizer(&self) -> Vec<i64> {
        let n = self.rank();
        let mut d = vec![1; n];
        match self {
            CartanType::B(_) if n >= 2 => d[..n - 1].fill(2),
            CartanType::C(_) if n >= 2 => d[n - 1] = 2,
            _ => {}
        }
        d
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter(), self.rank())
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses `A3`, `d5`, `E6`, ...
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rank) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let rank: usize = rank
            .parse()
            .map_err(|_| invalid(format!("cannot parse root system type {s:?}")))?;
        CartanType::new(kind, rank)
    }
}

pub type Root = Vec<i64>;

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    pub cartan_matrix: Vec<Vec<i64>>,
    /// Sorted by height, then coordinates.
    pub positive_roots: Vec<Root>,
    symmetrizer: Vec<i64>,
    index: HashMap<Root, usize>,
}

fn height(r: &Root) -> i64 {
    r.iter().sum()
}

fn is_positive(r: &[i64]) -> bool {
    r.iter().all(|&c| c >= 0) && r.iter().any(|&c| c > 0)
}

fn unit(n: usize, i: usize) -> Root {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Positive roots of the system with Cartan matrix `a`, closing the simple
/// roots under simple reflections.
fn close_positive_roots(a: &[Vec<i64>]) -> Vec<Root> {
    let n = a.len();
    let mut seen: BTreeSet<Root> = (0..n).map(|i| unit(n, i)).collect();
    let mut queue: VecDeque<Root> = seen.iter().cloned().collect();
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            if beta == unit(n, i) {
                continue;
            }
            let pairing: i64 = (0..n).map(|j| a[i][j] * beta[j]).sum();
            let mut image = beta.clone();
            image[i] -= pairing;
            if is_positive(&image) && seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    let mut roots: Vec<Root> = seen.into_iter().collect();
    roots.sort_by(|x, y| height(x).cmp(&height(y)).then_with(|| x.cmp(y)));
    roots
}

pub fn build_root_system(cartan_type: CartanType) -> RootSystem {
    let cartan_matrix = cartan_type.cartan_matrix();
    let positive_roots = close_positive_roots(&cartan_matrix);
    let index = positive_roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
    RootSystem {
        cartan_type,
        symmetrizer: cartan_type.symmetrizer(),
        cartan_matrix,
        positive_roots,
        index,
    }
}

/// Integer matrix acting on simple-root coordinates; column `j` is `w(α_j)`.
type Action = Vec<Vec<i64>>;

fn mat_mul(a: &Action, b: &Action) -> Action {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn mat_identity(n: usize) -> Action {
    (0..n).map(|i| unit(n, i)).collect()
}

fn column(a: &Action, j: usize) -> Root {
    a.iter().map(|row| row[j]).collect()
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.cartan_matrix.len()
    }

    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        self.index.get(root).copied()
    }

    /// `(x, y)` for the invariant form normalised by `(α_i, α_i) = 2 d_i`.
    fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.rank();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| x[i] * self.symmetrizer[i] * self.cartan_matrix[i][j] * y[j])
            .sum()
    }

    /// `<β^∨, v> = 2 (β, v) / (β, β)`.
    pub fn coroot_pairing(&self, beta: &[i64], v: &[i64]) -> i64 {
        let num = 2 * self.inner(beta, v);
        let den = self.inner(beta, beta);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// Coefficient of `α_node^∨` in `β^∨`.
    pub fn coroot_coefficient(&self, beta: &[i64], node: usize) -> i64 {
        let num = beta[node] * 2 * self.symmetrizer[node];
        let den = self.inner(beta, beta);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    fn reflection(&self, beta: &[i64]) -> Action {
        let n = self.rank();
        let mut m = mat_identity(n);
        for j in 0..n {
            let c = self.coroot_pairing(beta, &unit(n, j));
            for (row, b) in m.iter_mut().zip(beta) {
                row[j] -= c * b;
            }
        }
        m
    }

    fn simple_reflection(&self, i: usize) -> Action {
        self.reflection(&unit(self.rank(), i))
    }

    /// Longest element of the subgroup generated by `nodes`.
    fn longest_element(&self, nodes: &[usize]) -> Action {
        let mut w = mat_identity(self.rank());
        while let Some(&j) = nodes.iter().find(|&&j| is_positive(&column(&w, j))) {
            w = mat_mul(&w, &self.simple_reflection(j));
        }
        w
    }
}

#[derive(Clone, Debug)]
pub struct ParabolicChoice {
    pub root_system: RootSystem,
    /// 1-based index of the simple root outside the Levi factor.
    pub excluded_simple_node: usize,
}

impl ParabolicChoice {
    pub fn new(cartan_type: CartanType, node: usize) -> Result<Self> {
        if node == 0 || node > cartan_type.rank() {
            return Err(invalid(format!("node {node} is outside 1..={} for {cartan_type}", cartan_type.rank())));
        }
        Ok(Self {
            root_system: build_root_system(cartan_type),
            excluded_simple_node: node,
        })
    }

    fn node0(&self) -> usize {
        self.excluded_simple_node - 1
    }

    /// Roots of the nilradical: positive roots with positive coefficient at the node.
    pub fn nilradical_roots(&self) -> Vec<usize> {
        let k = self.node0();
        (0..self.root_system.positive_roots.len())
            .filter(|&i| self.root_system.positive_roots[i][k] > 0)
            .collect()
    }

    /// Every coroot has coefficient at most 1 at the node.
    pub fn is_minuscule(&self) -> bool {
        let rs = &self.root_system;
        let k = self.node0();
        rs.positive_roots.iter().all(|b| rs.coroot_coefficient(b, k) <= 1)
    }

    /// The space of the families in [`crate::spaces`] that this quotient realises.
    pub fn space(&self) -> Option<SpaceDescriptor> {
        let node = self.excluded_simple_node;
        match self.root_system.cartan_type {
            CartanType::A(r) => Some(SpaceDescriptor::Grassmannian { m: node, n: r + 1 - node }),
            CartanType::D(n) if node == n => Some(SpaceDescriptor::OgEven { n }),
            CartanType::D(n) if node == 1 && n >= 3 => Some(SpaceDescriptor::QuadricEven { k: n - 1 }),
            CartanType::C(n) if node == n => Some(SpaceDescriptor::Lagrangian { n }),
            CartanType::B(n) if node == 1 => Some(SpaceDescriptor::QuadricOdd { k: n }),
            _ => None,
        }
    }
}

impl fmt::Display for ParabolicChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} node {}", self.root_system.cartan_type, self.excluded_simple_node)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    /// 1-based simple reflections, leftmost first.
    pub reduced_word: Vec<usize>,
    /// Indices into the positive roots of `Φ_σ = σR_- ∩ R_+`.
    pub inversion_set: BTreeSet<usize>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.reduced_word.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub lower: usize,
    pub upper: usize,
    /// Chevalley multiplicity of the cover in `ω · σ_lower`.
    pub multiplicity: u64,
}

#[derive(Clone, Debug)]
pub struct BruhatPoset {
    pub parabolic: ParabolicChoice,
    /// Ordered by length, then reduced word.
    pub nodes: Vec<WeylElement>,
    pub covers: Vec<Cover>,
    pub duality: Vec<usize>,
    pub path_counts: Vec<BigUint>,
    actions: Vec<Action>,
}

/// Breadth-first generation of `W¹ = {σ : Φ_σ ⊂ R(n)}` by right
/// multiplication: `σ s_j` stays in `W¹` exactly when `σ(α_j) ∈ R(n)`, and
/// then `Φ_{σ s_j} = Φ_σ ∪ {σ(α_j)}`. Returns elements with their actions.
fn generate(par: &ParabolicChoice) -> (Vec<WeylElement>, Vec<Action>) {
    let rs = &par.root_system;
    let n = rs.rank();
    let k = par.node0();
    let reflections: Vec<Action> = (0..n).map(|j| rs.simple_reflection(j)).collect();
    let mut nodes = vec![WeylElement {
        reduced_word: Vec::new(),
        inversion_set: BTreeSet::new(),
    }];
    let mut actions = vec![mat_identity(n)];
    let mut seen: HashMap<BTreeSet<usize>, usize> = HashMap::from([(BTreeSet::new(), 0)]);
    let mut level = vec![0usize];
    while !level.is_empty() {
        let mut next = Vec::new();
        for &i in &level {
            for (j, s_j) in reflections.iter().enumerate() {
                let beta = column(&actions[i], j);
                if !is_positive(&beta) || beta[k] == 0 {
                    continue;
                }
                let idx = rs.root_index(&beta).expect("image of a simple root is a root");
                let mut inv = nodes[i].inversion_set.clone();
                inv.insert(idx);
                if seen.contains_key(&inv) {
                    continue;
                }
                let mut word = nodes[i].reduced_word.clone();
                word.push(j + 1);
                seen.insert(inv.clone(), nodes.len());
                next.push(nodes.len());
                actions.push(mat_mul(&actions[i], s_j));
                nodes.push(WeylElement {
                    reduced_word: word,
                    inversion_set: inv,
                });
            }
        }
        level = next;
    }
    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by(|&a, &b| {
        let (x, y) = (&nodes[a].reduced_word, &nodes[b].reduced_word);
        x.len().cmp(&y.len()).then_with(|| x.cmp(y))
    });
    let nodes_sorted = order.iter().map(|&i| nodes[i].clone()).collect();
    let actions_sorted = order.iter().map(|&i| actions[i].clone()).collect();
    (nodes_sorted, actions_sorted)
}

#[allow(non_snake_case)]
pub fn generate_W1(parabolic: &ParabolicChoice) -> Vec<WeylElement> {
    generate(parabolic).0
}

/// Covers `u ⋖ w` with `u = w s_β`, `β > 0`. The multiplicity is the
/// coefficient of `α_node^∨` in `u(β)^∨`, which is what the Chevalley formula
/// attaches to the cover.
fn covers_of(par: &ParabolicChoice, nodes: &[WeylElement], actions: &[Action]) -> Vec<Cover> {
    let rs = &par.root_system;
    let k = par.node0();
    let lookup: HashMap<&Action, usize> = actions.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let reflections: Vec<Action> = rs.positive_roots.iter().map(|b| rs.reflection(b)).collect();
    let mut covers = Vec::new();
    for (w, aw) in actions.iter().enumerate() {
        for (bi, s) in reflections.iter().enumerate() {
            let au = mat_mul(aw, s);
            let Some(&u) = lookup.get(&au) else { continue };
            if nodes[u].length() + 1 != nodes[w].length() {
                continue;
            }
            let image: Root = {
                let beta = &rs.positive_roots[bi];
                (0..beta.len()).map(|i| (0..beta.len()).map(|j| au[i][j] * beta[j]).sum()).collect()
            };
            let multiplicity = rs.coroot_coefficient(&image, k);
            debug_assert!(multiplicity > 0);
            covers.push(Cover {
                lower: u,
                upper: w,
                multiplicity: multiplicity as u64,
            });
        }
    }
    covers.sort_by_key(|c| (c.lower, c.upper));
    covers
}

pub fn bruhat_covers(parabolic: &ParabolicChoice) -> Vec<Cover> {
    let (nodes, actions) = generate(parabolic);
    covers_of(parabolic, &nodes, &actions)
}

impl BruhatPoset {
    pub fn new(parabolic: ParabolicChoice) -> Result<Self> {
        let (nodes, actions) = generate(&parabolic);
        let covers = covers_of(&parabolic, &nodes, &actions);
        let rs = &parabolic.root_system;
        let levi: Vec<usize> = (0..rs.rank()).filter(|&j| j != parabolic.node0()).collect();
        let w0 = rs.longest_element(&(0..rs.rank()).collect::<Vec<_>>());
        let w0p = rs.longest_element(&levi);
        let lookup: HashMap<&Action, usize> = actions.iter().enumerate().map(|(i, a)| (a, i)).collect();
        let duality = actions
            .iter()
            .map(|a| {
                let dual = mat_mul(&mat_mul(&w0p, a), &w0);
                lookup
                    .get(&dual)
                    .copied()
                    .ok_or_else(|| Error::InternalInvariant(format!("dual element missing from W¹ of {parabolic}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut path_counts = vec![BigUint::zero(); nodes.len()];
        path_counts[0] = BigUint::one();
        for c in &covers {
            // Covers are sorted by lower node, and lower nodes precede upper ones.
            let add = path_counts[c.lower].clone();
            path_counts[c.upper] += add;
        }
        Ok(Self {
            parabolic,
            nodes,
            covers,
            duality,
            path_counts,
            actions,
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn top_length(&self) -> usize {
        self.nodes.last().map_or(0, WeylElement::length)
    }

    /// Number of nodes of each length.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.top_length() + 1];
        for n in &self.nodes {
            sizes[n.length()] += 1;
        }
        sizes
    }

    pub fn lower_covers(&self, node: usize) -> impl Iterator<Item = &Cover> {
        self.covers.iter().filter(move |c| c.upper == node)
    }

    pub fn upper_covers(&self, node: usize) -> impl Iterator<Item = &Cover> {
        self.covers.iter().filter(move |c| c.lower == node)
    }

    pub fn count_paths(&self, node: usize) -> &BigUint {
        &self.path_counts[node]
    }

    pub fn dual_node(&self, node: usize) -> usize {
        self.duality[node]
    }

    /// Node whose reduced word is `word`, if it is a canonical word of this poset.
    pub fn find_word(&self, word: &[usize]) -> Option<usize> {
        self.nodes.iter().position(|n| n.reduced_word == word)
    }

    /// Path-count star coefficient `|α|! N(α') / (|α'|! N(α))`.
    pub fn star_coefficient_pathcount(&self, node: usize) -> Result<Rational> {
        if !self.parabolic.is_minuscule() {
            return Err(Error::Unsupported(format!(
                "path-count star formula needs a minuscule quotient; {} is not",
                self.parabolic
            )));
        }
        let dual = self.duality[node];
        let num = factorial(self.nodes[node].length() as u64) * &self.path_counts[dual];
        let den = factorial(self.nodes[dual].length() as u64) * &self.path_counts[node];
        Ok(rat_from_uint(&num) / rat_from_uint(&den))
    }

    /// The Chevalley action of the hyperplane class as graded blocks.
    pub fn lefschetz_blocks(&self) -> (Vec<usize>, Vec<Matrix>) {
        let top = self.top_length();
        let sizes = self.rank_sizes();
        let mut pos = vec![0usize; self.nodes.len()];
        let mut seen = vec![0usize; top + 1];
        for (i, n) in self.nodes.iter().enumerate() {
            pos[i] = seen[n.length()];
            seen[n.length()] += 1;
        }
        let mut blocks: Vec<Matrix> = (0..top).map(|p| Matrix::zeros(sizes[p + 1], sizes[p])).collect();
        for c in &self.covers {
            let p = self.nodes[c.lower].length();
            blocks[p][(pos[c.upper], pos[c.lower])] = Rational::from_integer(c.multiplicity.into());
        }
        (sizes, blocks)
    }

    pub fn lefschetz_engine(&self) -> Result<LefschetzEngine> {
        let (dims, blocks) = self.lefschetz_blocks();
        LefschetzEngine::from_blocks(dims, blocks)
    }

    /// Label in the [`crate::spaces`] model of [`ParabolicChoice::space`].
    pub fn label(&self, node: usize) -> Option<Label> {
        let rs = &self.parabolic.root_system;
        let el = &self.nodes[node];
        let inv = || el.inversion_set.iter().map(|&i| &rs.positive_roots[i]);
        let rank = rs.rank();
        let k = self.parabolic.excluded_simple_node;
        match (rs.cartan_type, self.parabolic.space()?) {
            (CartanType::A(_), _) => {
                // The root α_a + … + α_b (a ≤ k ≤ b) is the box (k-a+1, b-k+1).
                let mut rows = vec![0u32; k];
                for r in inv() {
                    let a = r.iter().position(|&c| c != 0)? + 1;
                    rows[k - a] += 1;
                }
                Partition::new(rows).ok().map(Label::Partition)
            }
            (CartanType::D(n), SpaceDescriptor::OgEven { .. }) => {
                // e_i + e_j (i < j) is the shifted box in row n-j+1.
                let mut rows = vec![0u32; n];
                for r in inv() {
                    let (_, j) = d_type_pair(r)?;
                    rows[n - j] += 1;
                }
                Partition::new(rows).ok().map(Label::Partition)
            }
            (CartanType::C(n), _) => {
                // e_i + e_j (i ≤ j) is the shifted box in row n-j+1.
                let mut rows = vec![0u32; n];
                for r in inv() {
                    let (_, j) = c_type_pair(r)?;
                    rows[n - j] += 1;
                }
                Partition::new(rows).ok().map(Label::Partition)
            }
            (CartanType::B(_), _) => {
                let p = el.length() as u32;
                let q = if p < rank as u32 {
                    QuadricLabel::power(p)
                } else {
                    QuadricLabel::with(p - rank as u32, Branch::E)
                };
                Some(Label::Quadric(q))
            }
            (CartanType::D(_), SpaceDescriptor::QuadricEven { k: half }) => {
                let p = el.length() as u32;
                let half = half as u32;
                let q = match p.cmp(&half) {
                    std::cmp::Ordering::Less => QuadricLabel::power(p),
                    std::cmp::Ordering::Greater => QuadricLabel::with(p - half, Branch::E0),
                    std::cmp::Ordering::Equal => {
                        let first = self.nodes.iter().position(|x| x.length() == el.length())?;
                        let branch = if first == node { Branch::E0 } else { Branch::E1 };
                        QuadricLabel::with(0, branch)
                    }
                };
                Some(Label::Quadric(q))
            }
            _ => None,
        }
    }

    /// Node with the given inversion set; inversion sets determine elements.
    pub fn node_of_inversion_set(&self, inv: &BTreeSet<usize>) -> Option<usize> {
        self.nodes.iter().position(|n| &n.inversion_set == inv)
    }

    fn root_action(&self, node: usize, root: &[i64]) -> Root {
        let a = &self.actions[node];
        (0..root.len()).map(|i| (0..root.len()).map(|j| a[i][j] * root[j]).sum()).collect()
    }

    /// `σ(β)` for a node `σ` and a root `β` in simple-root coordinates.
    pub fn act(&self, node: usize, root: &[i64]) -> Result<Root> {
        if root.len() != self.parabolic.root_system.rank() {
            return Err(invalid("root has the wrong number of coordinates"));
        }
        Ok(self.root_action(node, root))
    }

    pub fn to_json(&self) -> Value {
        let nodes: Vec<Value> = (0..self.len())
            .map(|i| {
                let n = &self.nodes[i];
                let path_count = match self.path_counts[i].to_u64() {
                    Some(v) => json!(v),
                    None => json!(self.path_counts[i].to_string()),
                };
                let star = self
                    .star_coefficient_pathcount(i)
                    .ok()
                    .map(|q| crate::arith::format_rational(&q));
                json!({
                    "index": i,
                    "reduced_word": n.reduced_word,
                    "length": n.length(),
                    "dual": self.duality[i],
                    "path_count": path_count,
                    "star_coefficient": star,
                    "label": self.label(i).map(|l| l.to_string()),
                    "covers": self.upper_covers(i)
                        .map(|c| json!({"node": c.upper, "multiplicity": c.multiplicity}))
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "type": self.parabolic.root_system.cartan_type.to_string(),
            "node": self.parabolic.excluded_simple_node,
            "minuscule": self.parabolic.is_minuscule(),
            "top_length": self.top_length(),
            "nodes": nodes,
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!(
            "digraph W1 {{\n  label=\"{}\";\n  rankdir=BT;\n",
            self.parabolic
        );
        for i in 0..self.len() {
            let word: Vec<String> = self.nodes[i].reduced_word.iter().map(usize::to_string).collect();
            let word = if word.is_empty() { "1".to_string() } else { word.join(" ") };
            out.push_str(&format!(
                "  n{i} [label=\"{word}\\nN={}\"];\n",
                self.path_counts[i]
            ));
        }
        for c in &self.covers {
            if c.multiplicity == 1 {
                out.push_str(&format!("  n{} -> n{};\n", c.lower, c.upper));
            } else {
                out.push_str(&format!("  n{} -> n{} [label=\"{}\"];\n", c.lower, c.upper, c.multiplicity));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Converts a D-type root to `ε` coordinates and returns `(i, j)` for `e_i + e_j`.
fn d_type_pair(root: &[i64]) -> Option<(usize, usize)> {
    let n = root.len();
    let mut eps = vec![0i64; n];
    for (k, &c) in root.iter().enumerate() {
        if k + 1 < n {
            eps[k] += c;
            eps[k + 1] -= c;
        } else {
            eps[n - 2] += c;
            eps[n - 1] += c;
        }
    }
    plus_pair(&eps)
}

/// Same for C-type roots, where `α_n = 2e_n`; `2e_i` gives `(i, i)`.
fn c_type_pair(root: &[i64]) -> Option<(usize, usize)> {
    let n = root.len();
    let mut eps = vec![0i64; n];
    for (k, &c) in root.iter().enumerate() {
        if k + 1 < n {
            eps[k] += c;
            eps[k + 1] -= c;
        } else {
            eps[n - 1] += 2 * c;
        }
    }
    if let Some(i) = eps.iter().position(|&c| c == 2) {
        return eps.iter().filter(|&&c| c != 0).count().eq(&1).then_some((i + 1, i + 1));
    }
    plus_pair(&eps)
}

fn plus_pair(eps: &[i64]) -> Option<(usize, usize)> {
    let ones: Vec<usize> = eps.iter().enumerate().filter(|(_, &c)| c == 1).map(|(i, _)| i + 1).collect();
    (ones.len() == 2 && eps.iter().filter(|&&c| c != 0).count() == 2).then(|| (ones[0], ones[1]))
}

#[cfg(test)]
mod tests;
