use super::*;
use crate::arith::rat;
use proptest::prelude::*;

fn grass(m: usize, n: usize) -> Space {
    Space::new(SpaceDescriptor::Grassmannian { m, n }).unwrap()
}

fn og(n: usize) -> Space {
    Space::new(SpaceDescriptor::OgEven { n }).unwrap()
}

fn lg(n: usize) -> Space {
    Space::new(SpaceDescriptor::Lagrangian { n }).unwrap()
}

fn qodd(k: usize) -> Space {
    Space::new(SpaceDescriptor::QuadricOdd { k }).unwrap()
}

fn qeven(k: usize) -> Space {
    Space::new(SpaceDescriptor::QuadricEven { k }).unwrap()
}

fn lab(space: &Space, s: &str) -> Label {
    space.parse_label(s).unwrap()
}

fn cls(space: &Space, terms: &[(&str, i64, i64)]) -> CohomologyClass {
    space.class(terms.iter().map(|&(l, n, d)| (lab(space, l), rat(n, d))))
}

fn small_spaces() -> Vec<Space> {
    let mut v = Vec::new();
    for m in 1..=3 {
        for n in 1..=3 {
            v.push(grass(m, n));
        }
    }
    for n in 2..=5 {
        v.push(og(n));
        v.push(Space::new(SpaceDescriptor::OgOddAlias { n }).unwrap());
    }
    for n in 1..=4 {
        v.push(lg(n));
    }
    for k in 1..=4 {
        v.push(qodd(k));
        v.push(qeven(k));
    }
    v
}

#[test]
fn descriptor_dimensions_and_ranks() {
    let cases = [
        (SpaceDescriptor::Grassmannian { m: 2, n: 3 }, 6, 10),
        (SpaceDescriptor::OgEven { n: 4 }, 6, 8),
        (SpaceDescriptor::OgOddAlias { n: 4 }, 6, 8),
        (SpaceDescriptor::Lagrangian { n: 3 }, 6, 8),
        (SpaceDescriptor::QuadricOdd { k: 3 }, 5, 6),
        (SpaceDescriptor::QuadricEven { k: 3 }, 6, 8),
    ];
    for (desc, d, rank) in cases {
        let s = Space::new(desc).unwrap();
        assert_eq!(s.complex_dim(), d, "{desc}");
        assert_eq!(s.rank(), rank, "{desc}");
        assert_eq!(desc.rank(), rank as u128, "{desc}");
    }
    assert!(Space::new(SpaceDescriptor::OgEven { n: 1 }).is_err());
    assert!(Space::new(SpaceDescriptor::Grassmannian { m: 0, n: 2 }).is_err());
    assert!(SpaceDescriptor::from_family("lg", &[1, 2]).is_err());
    assert_eq!(
        SpaceDescriptor::from_family("grassmannian", &[2, 3]).unwrap(),
        SpaceDescriptor::Grassmannian { m: 2, n: 3 }
    );
}

#[test]
fn bases() {
    let g = grass(2, 2);
    assert_eq!(g.basis(4).unwrap(), [lab(&g, "2"), lab(&g, "1,1")]);
    let l = lg(2);
    assert_eq!(l.basis(0).unwrap(), [lab(&l, "0")]);
    let q = qeven(2);
    assert_eq!(q.basis(4).unwrap(), [lab(&q, "e0"), lab(&q, "e1")]);
    assert!(g.basis(3).is_err());
    assert!(g.basis(10).is_err());
    let total: usize = (0..=g.complex_dim()).map(|p| g.basis(2 * p).unwrap().len()).sum();
    assert_eq!(total, g.rank());
    let q = qodd(2);
    let names: Vec<String> = q.labels().map(|l| l.to_string()).collect();
    assert_eq!(names, ["w^0", "w^1", "e", "w^1*e"]);
    let q = qeven(2);
    let names: Vec<String> = q.labels().map(|l| l.to_string()).collect();
    assert_eq!(names, ["w^0", "w^1", "e0", "e1", "w^1*e0", "w^2*e0"]);
}

#[test]
fn labels_are_validated() {
    let g = grass(2, 2);
    assert!(g.parse_label("3").is_err());
    assert!(g.parse_label("1,1,1").is_err());
    assert!(og(4).parse_label("2,2").is_err());
    assert!(og(4).parse_label("4").is_err());
    assert!(lg(3).parse_label("3,2,1").is_ok());
    assert!(qodd(2).parse_label("e0").is_err());
    assert!(qeven(2).parse_label("w^1*e1").is_err());
    assert!(g.poincare_dual_label(&Label::Partition("3".parse().unwrap())).is_err());
}

#[test]
fn poincare_duals() {
    let g = grass(2, 2);
    assert_eq!(g.poincare_dual_label(&lab(&g, "1")).unwrap(), lab(&g, "2,1"));
    let l = lg(2);
    assert_eq!(l.poincare_dual_label(&lab(&l, "2")).unwrap(), lab(&l, "1"));
    let q = qeven(2);
    assert_eq!(q.poincare_dual_label(&lab(&q, "e1")).unwrap(), lab(&q, "e1"));
    let q = qeven(3);
    assert_eq!(q.poincare_dual_label(&lab(&q, "e1")).unwrap(), lab(&q, "e0"));
    assert_eq!(q.poincare_dual_label(&lab(&q, "w^1")).unwrap(), lab(&q, "w^2*e0"));
    let q = qodd(3);
    assert_eq!(q.poincare_dual_label(&lab(&q, "w^0")).unwrap(), lab(&q, "w^2*e"));
    for s in small_spaces() {
        let d = s.complex_dim();
        for l in s.labels() {
            let dual = s.poincare_dual_label(l).unwrap();
            assert_eq!(s.half_degree(l) + s.half_degree(&dual), d, "{} {l}", s.descriptor());
            assert_eq!(&s.poincare_dual_label(&dual).unwrap(), l);
        }
    }
}

#[test]
fn lefschetz_examples() {
    let g = grass(2, 2);
    assert_eq!(
        g.lefschetz_apply(&cls(&g, &[("1", 1, 1)])),
        cls(&g, &[("2", 1, 1), ("1,1", 1, 1)])
    );
    // Adding to row 1 would leave ρ_2, so only λ^+ = (2,1) survives, with multiplicity 1.
    let l = lg(2);
    assert_eq!(l.lefschetz_apply(&cls(&l, &[("2", 1, 1)])), cls(&l, &[("2,1", 1, 1)]));
    assert_eq!(l.lefschetz_apply(&cls(&l, &[("1", 1, 1)])), cls(&l, &[("2", 2, 1)]));
    let q = qodd(2);
    assert_eq!(q.lefschetz_apply(&cls(&q, &[("w^1", 1, 1)])), cls(&q, &[("e", 2, 1)]));
    let q = qeven(2);
    assert_eq!(
        q.lefschetz_apply(&cls(&q, &[("w^1", 1, 1)])),
        cls(&q, &[("e0", 1, 1), ("e1", 1, 1)])
    );
    assert_eq!(q.lefschetz_apply(&cls(&q, &[("e1", 1, 1)])), cls(&q, &[("w^1*e0", 1, 1)]));
    assert!(q.lefschetz_apply(&cls(&q, &[("w^2*e0", 1, 1)])).is_zero());
}

#[test]
fn omega_power_examples() {
    let g = grass(2, 2);
    assert_eq!(g.omega_power_expand(2).unwrap(), cls(&g, &[("2", 1, 1), ("1,1", 1, 1)]));
    assert_eq!(g.omega_power_expand(0).unwrap(), g.unit());
    assert!(g.omega_power_expand(5).is_err());
    let l = lg(2);
    assert_eq!(l.omega_power_expand(2).unwrap(), cls(&l, &[("2", 2, 1)]));
    assert_eq!(l.omega_power_expand(3).unwrap(), cls(&l, &[("2,1", 2, 1)]));
}

#[test]
fn omega_power_matches_iterated_lefschetz() {
    for s in small_spaces() {
        let mut x = s.unit();
        for r in 0..=s.complex_dim() {
            assert_eq!(x, s.omega_power_expand(r).unwrap(), "{} r={r}", s.descriptor());
            x = s.lefschetz_apply(&x);
        }
        assert!(x.is_zero());
    }
}

#[test]
fn star_examples() {
    let g = grass(2, 2);
    assert_eq!(g.star(&cls(&g, &[("1", 1, 1)])), cls(&g, &[("2,1", 1, 3)]));
    let l = lg(2);
    assert_eq!(l.star(&cls(&l, &[("1", 1, 1)])), cls(&l, &[("2", 1, 1)]));
    let q = qodd(2);
    assert_eq!(q.star(&q.unit()), cls(&q, &[("w^1*e", 1, 3)]));
    let q = qeven(2);
    assert_eq!(q.star(&cls(&q, &[("e0", 1, 1)])), cls(&q, &[("e0", 1, 1)]));
    let q = qeven(1);
    assert_eq!(q.star(&cls(&q, &[("e0", 1, 1)])), cls(&q, &[("e1", 1, 1)]));
}

#[test]
fn star_is_an_involution_supported_on_duals() {
    for s in small_spaces() {
        for l in s.labels() {
            let x = s.basis_class(l);
            let y = s.star(&x);
            assert_eq!(y.len(), 1);
            let (m, c) = y.terms().next().unwrap();
            assert_eq!(m, &s.poincare_dual_label(l).unwrap());
            assert!(c.is_positive());
            assert_eq!(s.star(&y), x, "{} {l}", s.descriptor());
        }
    }
}

#[test]
fn star_of_unit_is_normalised_top_power() {
    for s in small_spaces() {
        let d = s.complex_dim();
        let top = s.omega_power_expand(d).unwrap().scale(&rat_from_uint(&factorial(d as u64)).recip());
        assert_eq!(s.star(&s.unit()), top, "{}", s.descriptor());
    }
}

#[test]
fn lambda_examples() {
    let g = grass(2, 3);
    assert_eq!(
        g.lambda_adjoint(&cls(&g, &[("2,1", 1, 1)])),
        cls(&g, &[("1,1", 6, 1), ("2", 4, 1)])
    );
    assert!(g.lambda_adjoint(&g.unit()).is_zero());
    let o = og(4);
    assert_eq!(o.lambda_adjoint(&cls(&o, &[("3,2", 1, 1)])), cls(&o, &[("3,1", 10, 1)]));
    assert_eq!(o.lambda_adjoint(&cls(&o, &[("1", 1, 1)])), cls(&o, &[("0", 6, 1)]));
    let l = lg(2);
    assert_eq!(l.lambda_adjoint(&cls(&l, &[("1", 1, 1)])), cls(&l, &[("0", 3, 1)]));
    assert_eq!(l.lambda_adjoint(&cls(&l, &[("2", 1, 1)])), cls(&l, &[("1", 2, 1)]));
}

#[test]
fn lambda_equals_star_l_star() {
    for s in small_spaces() {
        for l in s.labels() {
            let x = s.basis_class(l);
            let expected = s.star(&s.lefschetz_apply(&s.star(&x)));
            assert_eq!(s.lambda_adjoint(&x), expected, "{} {l}", s.descriptor());
        }
    }
}

#[test]
fn grassmannian_adjoint_hook_quotient_agrees() {
    for (m, n) in [(2, 3), (3, 3), (2, 5), (3, 4)] {
        let g = grass(m, n);
        for l in g.labels() {
            let p = l.as_partition().unwrap();
            for (mu, c) in g.lambda_label(l) {
                let q = grassmannian_adjoint_by_hooks(m, n, p, mu.as_partition().unwrap()).unwrap();
                assert_eq!(c, q);
            }
        }
    }
}

#[test]
fn b_operator_examples() {
    let g = grass(2, 2);
    assert_eq!(g.b_operator(&g.unit()), g.unit().scale(&rat(4, 1)));
    assert!(g.b_operator(&cls(&g, &[("2", 1, 1), ("1,1", 3, 1)])).is_zero());
    assert_eq!(g.b_operator(&cls(&g, &[("2,1", 1, 1)])), cls(&g, &[("2,1", -2, 1)]));
}

#[test]
fn pairing_examples() {
    let g = grass(2, 2);
    assert_eq!(g.pairing(&cls(&g, &[("1", 1, 1)]), &cls(&g, &[("2,1", 1, 1)])), rat(1, 1));
    assert_eq!(g.pairing(&cls(&g, &[("1", 1, 1)]), &cls(&g, &[("2", 1, 1)])), rat(0, 1));
    let q = qeven(2);
    assert_eq!(q.pairing(&cls(&q, &[("e0", 1, 1)]), &cls(&q, &[("e0", 1, 1)])), rat(1, 1));
    assert_eq!(q.pairing(&cls(&q, &[("e0", 1, 1)]), &cls(&q, &[("e1", 1, 1)])), rat(0, 1));
}

#[test]
fn scaled_star() {
    let g = grass(2, 2);
    let x = cls(&g, &[("1", 1, 1)]);
    assert_eq!(g.star_scaled(&x, &rat(1, 1)).unwrap(), g.star(&x));
    assert_eq!(g.star_scaled(&x, &rat(2, 1)).unwrap(), cls(&g, &[("2,1", 4, 3)]));
    let top = cls(&g, &[("2,2", 1, 1)]);
    assert_eq!(
        g.star_scaled(&top, &rat(2, 1)).unwrap(),
        g.star(&top).scale(&rat(1, 16))
    );
    assert!(g.star_scaled(&x, &rat(0, 1)).is_err());
    assert!(g.star_scaled(&x, &rat(-1, 2)).is_err());
}

#[test]
fn renormalized_star_fixed_points() {
    assert!(grass(2, 2).renormalized_star_check());
    assert!(grass(3, 3).renormalized_star_check());
    assert!(og(4).renormalized_star_check());
    for s in small_spaces() {
        assert!(s.renormalized_star_check(), "{}", s.descriptor());
    }
}

#[test]
fn aequ_identity_for_grassmannians() {
    for m in 1..=4 {
        for n in 1..=(9 - m).min(5) {
            let g = grass(m, n);
            let d = g.complex_dim();
            for r in 0..=d {
                let mut lhs = g.zero();
                for l in g.level(r) {
                    let h = rat_from_uint(&hook_product(l.as_partition().unwrap()));
                    lhs = lhs + g.star(&g.basis_class(l)).scale(&h.recip());
                }
                let rhs = g.class(g.level(d - r).iter().map(|l| {
                    (l.clone(), rat_from_uint(&hook_product(l.as_partition().unwrap())).recip())
                }));
                assert_eq!(lhs, rhs, "G({m},{n}) r={r}");
            }
        }
    }
}

#[test]
fn og_odd_alias_matches_og_even() {
    for n in 2..=6 {
        let even = og(n);
        let odd = Space::new(SpaceDescriptor::OgOddAlias { n }).unwrap();
        assert_eq!(even.rank(), odd.rank());
        assert_eq!(even.complex_dim(), odd.complex_dim());
        for (a, b) in even.labels().zip(odd.labels()) {
            assert_eq!(a, b);
            let strip = |x: CohomologyClass| x.terms().map(|(l, q)| (l.clone(), q.clone())).collect::<Vec<_>>();
            assert_eq!(strip(even.star(&even.basis_class(a))), strip(odd.star(&odd.basis_class(b))));
            assert_eq!(
                strip(even.lefschetz_apply(&even.basis_class(a))),
                strip(odd.lefschetz_apply(&odd.basis_class(b)))
            );
            assert_eq!(
                strip(even.lambda_adjoint(&even.basis_class(a))),
                strip(odd.lambda_adjoint(&odd.basis_class(b)))
            );
        }
    }
}

#[test]
fn json_round_trip_examples() {
    let q = qeven(3);
    let x = cls(&q, &[("w^1", 2, 3), ("e1", -1, 1), ("w^2*e0", 5, 1)]);
    let j = ClassJson::from_class(&x).unwrap();
    assert_eq!(j.space.family, "quadric-even");
    let text = serde_json::to_string(&j).unwrap();
    let back: ClassJson = serde_json::from_str(&text).unwrap();
    assert_eq!(q.class_from_json(&back).unwrap(), x);
    assert!(grass(2, 2).class_from_json(&back).is_err());
}

proptest! {
    #[test]
    fn json_round_trips_grassmannian_classes(coeffs in proptest::collection::vec((-50i64..50, 1i64..20), 20)) {
        let g = grass(3, 3);
        let x = g.class(g.labels().cloned().zip(coeffs.iter().map(|&(n, d)| rat(n, d))));
        let text = serde_json::to_string(&ClassJson::from_class(&x).unwrap()).unwrap();
        let back: ClassJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(g.class_from_json(&back).unwrap(), x);
    }

    #[test]
    fn star_is_linear(a in -20i64..20, b in -20i64..20) {
        let g = grass(2, 3);
        let x = g.class([(lab(&g, "1"), rat(a, 1)), (lab(&g, "2,1"), rat(b, 3))]);
        let y = g.star(&g.basis_class(&lab(&g, "1"))).scale(&rat(a, 1))
            + g.star(&g.basis_class(&lab(&g, "2,1"))).scale(&rat(b, 3));
        prop_assert_eq!(g.star(&x), y);
    }
}
