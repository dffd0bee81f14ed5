use super::*;
use crate::arith::rat;
use proptest::prelude::*;

fn space(desc: SpaceDescriptor) -> Space {
    Space::new(desc).unwrap()
}

fn grass(m: usize, n: usize) -> Space {
    space(SpaceDescriptor::Grassmannian { m, n })
}

fn cls(s: &Space, terms: &[(&str, i64, i64)]) -> CohomologyClass {
    s.class(terms.iter().map(|&(l, n, d)| (s.parse_label(l).unwrap(), rat(n, d))))
}

fn ints(m: &Matrix) -> Vec<Vec<Rational>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m[(i, j)].clone()).collect()).collect()
}

fn small_spaces() -> Vec<Space> {
    let mut v = Vec::new();
    for m in 1..=3 {
        for n in 1..=3 {
            v.push(grass(m, n));
        }
    }
    for n in 2..=5 {
        v.push(space(SpaceDescriptor::OgEven { n }));
        v.push(space(SpaceDescriptor::OgOddAlias { n }));
    }
    for n in 1..=4 {
        v.push(space(SpaceDescriptor::Lagrangian { n }));
    }
    for k in 1..=4 {
        v.push(space(SpaceDescriptor::QuadricOdd { k }));
        v.push(space(SpaceDescriptor::QuadricEven { k }));
    }
    v
}

#[test]
fn lefschetz_blocks() {
    let g = grass(2, 2);
    let l = build_lefschetz_matrix(&g);
    assert_eq!(l.shift, 2);
    assert_eq!(ints(l.block(0)), vec![vec![rat(1, 1)]]);
    assert_eq!(ints(l.block(1)), vec![vec![rat(1, 1)], vec![rat(1, 1)]]);
    for (p, b) in l.blocks.iter().enumerate() {
        assert_eq!(b.cols(), g.level(p).len());
        assert_eq!(b.rows(), g.level(p + 1).len());
    }

    let q = space(SpaceDescriptor::QuadricOdd { k: 2 });
    let lq = build_lefschetz_matrix(&q);
    assert_eq!(ints(lq.block(1)), vec![vec![rat(2, 1)]]);
}

#[test]
fn primitive_subspaces() {
    let g = grass(2, 2);
    assert!(primitive_subspace(&g, 1).unwrap().is_empty());
    let p2 = primitive_subspace(&g, 2).unwrap();
    assert_eq!(p2.len(), 1);
    let expected = cls(&g, &[("2", 1, 1), ("1,1", -1, 1)]);
    let v = &p2[0];
    let scale = expected.coefficient(&g.parse_label("2").unwrap()) / v.coefficient(&g.parse_label("2").unwrap());
    assert_eq!(v.scale(&scale), expected);
    assert!(matches!(primitive_subspace(&g, 3), Err(Error::InvalidInput(_))));

    for s in small_spaces() {
        let p0 = primitive_subspace(&s, 0).unwrap();
        assert_eq!(p0.len(), 1);
        assert_eq!(p0[0], s.unit());
    }
}

#[test]
fn decompositions() {
    let g = grass(2, 2);
    let comps = lefschetz_decompose(&g, &cls(&g, &[("2", 1, 1)])).unwrap();
    assert_eq!(
        comps,
        vec![
            LefschetzComponent { p: 0, r: 2, primitive_part: g.unit().scale(&rat(1, 2)) },
            LefschetzComponent { p: 2, r: 0, primitive_part: cls(&g, &[("2", 1, 2), ("1,1", -1, 2)]) },
        ]
    );
    assert_eq!(
        lefschetz_decompose(&g, &g.unit()).unwrap(),
        vec![LefschetzComponent { p: 0, r: 0, primitive_part: g.unit() }]
    );
    assert_eq!(
        lefschetz_decompose(&g, &cls(&g, &[("1", 1, 1)])).unwrap(),
        vec![LefschetzComponent { p: 0, r: 1, primitive_part: g.unit() }]
    );
    assert!(lefschetz_decompose(&g, &g.zero()).unwrap().is_empty());
    let mixed = cls(&g, &[("1", 1, 1), ("2", 1, 1)]);
    assert!(matches!(lefschetz_decompose(&g, &mixed), Err(Error::InvalidInput(_))));
}

#[test]
fn oracle_examples() {
    let g = grass(2, 2);
    assert_eq!(star_oracle(&g, &cls(&g, &[("1", 1, 1)])).unwrap(), cls(&g, &[("2,1", 1, 3)]));
    assert_eq!(star_oracle(&g, &cls(&g, &[("2", 1, 1)])).unwrap(), cls(&g, &[("2", 1, 1)]));
    for s in small_spaces() {
        let d = s.complex_dim();
        let top = s.omega_power_expand(d).unwrap().scale(&(rat(1, 1) / rat_from_uint(&factorial(d as u64))));
        assert_eq!(star_oracle(&s, &s.unit()).unwrap(), top, "{}", s.descriptor());
    }
}

#[test]
fn oracle_on_omega_powers() {
    for s in small_spaces() {
        let d = s.complex_dim();
        let oracle = Oracle::new(&s).unwrap();
        for r in 0..=d {
            let lhs = oracle.star(&s.omega_power_expand(r).unwrap()).unwrap();
            let c = rat_from_uint(&factorial(r as u64)) / rat_from_uint(&factorial((d - r) as u64));
            let rhs = s.omega_power_expand(d - r).unwrap().scale(&c);
            assert_eq!(lhs, rhs, "{} r={r}", s.descriptor());
        }
    }
}

#[test]
fn sl2_examples() {
    let g = grass(2, 2);
    let lam = build_lambda_matrix(&g);
    let l = build_lefschetz_matrix(&g);
    assert_eq!(ints(&(&lam.blocks[1] * &l.blocks[0])), vec![vec![rat(4, 1)]]);
    for desc in [
        SpaceDescriptor::Lagrangian { n: 3 },
        SpaceDescriptor::QuadricEven { k: 3 },
        SpaceDescriptor::Grassmannian { m: 2, n: 2 },
    ] {
        let r = check_sl2(&space(desc));
        assert!(r.passed, "{:?}", r.failures);
    }
}

#[test]
fn hard_lefschetz_examples() {
    let g = grass(3, 3);
    let engine = LefschetzEngine::for_space(&g).unwrap();
    assert_eq!(engine.power(2, 5).rank(), 2);
    assert_eq!(engine.power(0, 9).rank(), 1);
    assert!(check_hard_lefschetz(&space(SpaceDescriptor::OgEven { n: 5 })).passed);
    assert!(check_hard_lefschetz(&grass(2, 2)).passed);
}

#[test]
fn hard_lefschetz_failure_is_reported() {
    // L = 0 on a two-level model cannot satisfy hard Lefschetz.
    let engine = LefschetzEngine::from_blocks(vec![1, 1], vec![Matrix::zeros(1, 1)]).unwrap();
    assert_eq!(engine.hard_lefschetz_failures(), vec![(0, 1, 0)]);
    assert!(matches!(
        engine.decompose_coords(1, &[rat(1, 1)]),
        Err(Error::InternalInvariant(_))
    ));
    assert!(LefschetzEngine::from_blocks(vec![1, 2], vec![Matrix::zeros(1, 1)]).is_err());
}

#[test]
fn theorem_vs_oracle_examples() {
    for (desc, n) in [
        (SpaceDescriptor::Grassmannian { m: 2, n: 3 }, 10),
        (SpaceDescriptor::Lagrangian { n: 3 }, 8),
        (SpaceDescriptor::QuadricEven { k: 1 }, 4),
    ] {
        let s = space(desc);
        assert_eq!(s.rank(), n);
        let r = verify_theorem_vs_oracle(&s);
        assert!(r.passed, "{desc}: {:?}", r.failures);
    }
}

#[test]
fn all_suites_on_small_spaces() {
    for s in small_spaces() {
        for r in verify_all(&s) {
            assert!(r.passed, "{} {}: {:?}", s.descriptor(), r.check, r.failures);
        }
    }
}

#[test]
fn report_json_shape() {
    let r = verify_theorem_vs_oracle(&grass(2, 2));
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    assert_eq!(v["check"], "theorem_vs_oracle");
    assert_eq!(v["passed"], true);
    assert_eq!(v["space"]["family"], "grassmannian");
    assert!(v["failures"].as_array().unwrap().is_empty());
    let back: VerificationReport = serde_json::from_value(v).unwrap();
    assert_eq!(back, r);
}

#[test]
fn scaled_star_matches_rescaled_oracle() {
    for s in small_spaces() {
        for rho in [rat(3, 2), rat(1, 5), rat(1, 1)] {
            let r = check_scaled_star(&s, &rho);
            assert!(r.passed, "{} {rho}: {:?}", s.descriptor(), r.failures);
        }
    }
    assert!(!check_scaled_star(&grass(2, 2), &rat(-1, 1)).passed);
}

proptest! {
    #[test]
    fn decomposition_reassembles(coeffs in proptest::collection::vec(-4i64..5, 3)) {
        let s = grass(2, 4);
        let level = s.level(3);
        let x = s.class(level.iter().cloned().zip(coeffs.iter().map(|&c| rat(c, 1))));
        let comps = lefschetz_decompose(&s, &x).unwrap();
        prop_assert_eq!(reassemble(&s, &comps), x.clone());
        let star = star_oracle(&s, &x).unwrap();
        prop_assert_eq!(star_oracle(&s, &star).unwrap(), x);
    }
}
