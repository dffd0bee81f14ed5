use super::*;
use crate::arith::rat;
use crate::partitions::{hook_product, shifted_hook_product, StrictPartition};
use crate::spaces::Space;

fn poset(t: CartanType, node: usize) -> BruhatPoset {
    BruhatPoset::new(ParabolicChoice::new(t, node).unwrap()).unwrap()
}

#[test]
fn positive_root_counts() {
    let cases = [
        (CartanType::A(3), 6),
        (CartanType::A(1), 1),
        (CartanType::B(3), 9),
        (CartanType::C(4), 16),
        (CartanType::D(4), 12),
        (CartanType::D(2), 2),
        (CartanType::E6, 36),
        (CartanType::E7, 63),
    ];
    for (t, n) in cases {
        let rs = build_root_system(t);
        assert_eq!(rs.positive_roots.len(), n, "{t}");
        assert!((0..rs.rank()).all(|i| rs.cartan_matrix[i][i] == 2));
    }
}

#[test]
fn cartan_conventions() {
    let b = build_root_system(CartanType::B(3)).cartan_matrix;
    assert_eq!((b[2][1], b[1][2]), (-2, -1));
    let c = build_root_system(CartanType::C(3)).cartan_matrix;
    assert_eq!((c[2][1], c[1][2]), (-1, -2));
    let d = build_root_system(CartanType::D(5)).cartan_matrix;
    assert_eq!((d[2][3], d[2][4], d[3][4]), (-1, -1, 0));
    let e = build_root_system(CartanType::E6).cartan_matrix;
    assert_eq!((e[0][2], e[1][3], e[1][2], e[2][3]), (-1, -1, 0, -1));
    // Highest roots.
    let e6 = build_root_system(CartanType::E6);
    assert_eq!(e6.positive_roots.last().unwrap(), &vec![1, 2, 2, 3, 2, 1]);
    let e7 = build_root_system(CartanType::E7);
    assert_eq!(e7.positive_roots.last().unwrap(), &vec![2, 2, 3, 4, 3, 2, 1]);
}

#[test]
fn cartan_type_parsing() {
    assert_eq!("A3".parse::<CartanType>().unwrap(), CartanType::A(3));
    assert_eq!("e7".parse::<CartanType>().unwrap(), CartanType::E7);
    assert_eq!(CartanType::new("E", 6).unwrap(), CartanType::E6);
    assert!(CartanType::new("E", 8).is_err());
    assert!(CartanType::new("D", 1).is_err());
    assert!(CartanType::new("A", 0).is_err());
    assert!("X3".parse::<CartanType>().is_err());
    assert!(ParabolicChoice::new(CartanType::A(3), 4).is_err());
    assert!(ParabolicChoice::new(CartanType::A(3), 0).is_err());
}

#[test]
fn grassmannian_quotient() {
    let p = poset(CartanType::A(3), 2);
    let lengths: Vec<usize> = p.nodes.iter().map(WeylElement::length).collect();
    assert_eq!(lengths, vec![0, 1, 2, 2, 3, 4]);
    let one = 1;
    let level2: Vec<usize> = (2..4).collect();
    for &u in &level2 {
        let lower: Vec<usize> = p.lower_covers(u).map(|c| c.lower).collect();
        assert_eq!(lower, vec![one]);
    }
    assert_eq!(p.dual_node(0), 5);
    assert_eq!(p.dual_node(5), 0);
    let two = (0..p.len()).find(|&i| p.label(i) == Some(Label::Partition(Partition::new(vec![2]).unwrap()))).unwrap();
    assert_eq!(p.dual_node(two), two);
    assert_eq!(p.star_coefficient_pathcount(1).unwrap(), rat(1, 3));
    assert_eq!(p.star_coefficient_pathcount(two).unwrap(), rat(1, 1));
}

#[test]
fn exceptional_quotients() {
    let e6 = poset(CartanType::E6, 1);
    assert_eq!(e6.len(), 27);
    assert_eq!(e6.top_length(), 16);
    let e7 = poset(CartanType::E7, 7);
    assert_eq!(e7.len(), 56);
    assert_eq!(e7.top_length(), 27);
    for p in [&e6, &e7] {
        assert!(p.parabolic.is_minuscule());
        let sizes = p.rank_sizes();
        let rev: Vec<usize> = sizes.iter().rev().copied().collect();
        assert_eq!(sizes, rev);
        let top = p.len() - 1;
        let c = p.star_coefficient_pathcount(0).unwrap();
        let expected = rat_from_uint(p.count_paths(top)) / rat_from_uint(&factorial(p.top_length() as u64));
        assert_eq!(c, expected);
    }
}

#[test]
fn chain_for_odd_quadric() {
    for k in 1..=5 {
        let p = poset(CartanType::B(k), 1);
        assert_eq!(p.rank_sizes(), vec![1; 2 * k]);
        for i in 1..p.len() {
            let lower: Vec<usize> = p.lower_covers(i).map(|c| c.lower).collect();
            assert_eq!(lower, vec![i - 1]);
        }
        assert_eq!(p.parabolic.is_minuscule(), k == 1);
        if k > 1 {
            assert!(matches!(p.star_coefficient_pathcount(0), Err(Error::Unsupported(_))));
        }
    }
}

#[test]
fn minuscule_classification() {
    let yes = [
        (CartanType::A(4), 2),
        (CartanType::D(5), 5),
        (CartanType::D(5), 1),
        (CartanType::C(3), 1),
        (CartanType::B(3), 3),
        (CartanType::E6, 6),
        (CartanType::E7, 7),
    ];
    let no = [(CartanType::C(3), 3), (CartanType::B(3), 1), (CartanType::E6, 2), (CartanType::D(5), 3)];
    for (t, n) in yes {
        assert!(ParabolicChoice::new(t, n).unwrap().is_minuscule(), "{t} {n}");
    }
    for (t, n) in no {
        assert!(!ParabolicChoice::new(t, n).unwrap().is_minuscule(), "{t} {n}");
    }
}

#[test]
fn path_counts_match_hook_formulas() {
    for total in 2..=9 {
        for m in 1..total {
            let p = poset(CartanType::A(total - 1), m);
            for i in 0..p.len() {
                let lambda = p.label(i).unwrap();
                let lambda = lambda.as_partition().unwrap();
                let expected = factorial(lambda.weight() as u64) / hook_product(lambda);
                assert_eq!(p.count_paths(i), &expected, "G({m},{}) {lambda}", total - m);
            }
        }
    }
    for n in 2..=7 {
        let p = poset(CartanType::D(n), n);
        assert_eq!(p.len(), 1 << (n - 1));
        for i in 0..p.len() {
            let lambda = StrictPartition::try_from(p.label(i).unwrap().as_partition().unwrap().clone()).unwrap();
            let expected = factorial(lambda.weight() as u64) / shifted_hook_product(&lambda);
            assert_eq!(p.count_paths(i), &expected, "OG({n}) {lambda:?}");
        }
    }
}

#[test]
fn quotient_sizes_match_space_ranks() {
    for (t, node) in [
        (CartanType::A(5), 3),
        (CartanType::D(6), 6),
        (CartanType::D(5), 1),
        (CartanType::C(4), 4),
        (CartanType::B(4), 1),
    ] {
        let p = poset(t, node);
        let space = Space::new(p.parabolic.space().unwrap()).unwrap();
        assert_eq!(p.len(), space.rank(), "{t}");
        assert_eq!(p.top_length(), space.complex_dim(), "{t}");
    }
    assert_eq!(poset(CartanType::D(4), 1).len(), 2 * 3 + 2);
}

#[test]
fn duality_reverses_order() {
    for (t, node) in [(CartanType::E6, 1), (CartanType::E7, 7), (CartanType::D(5), 5), (CartanType::C(3), 3)] {
        let p = poset(t, node);
        let top = p.top_length();
        for i in 0..p.len() {
            let j = p.dual_node(i);
            assert_eq!(p.dual_node(j), i);
            assert_eq!(p.nodes[i].length() + p.nodes[j].length(), top);
        }
        for c in &p.covers {
            let dual_cover = p
                .covers
                .iter()
                .any(|d| d.lower == p.dual_node(c.upper) && d.upper == p.dual_node(c.lower));
            assert!(dual_cover, "{t}: cover {c:?} has no dual");
        }
    }
}

#[test]
fn inversion_sets_lie_in_nilradical() {
    let par = ParabolicChoice::new(CartanType::E6, 1).unwrap();
    let nil: BTreeSet<usize> = par.nilradical_roots().into_iter().collect();
    assert_eq!(nil.len(), 16);
    for el in generate_W1(&par) {
        assert_eq!(el.inversion_set.len(), el.length());
        assert!(el.inversion_set.is_subset(&nil));
    }
}

#[test]
fn covers_are_reflections() {
    let par = ParabolicChoice::new(CartanType::A(4), 2).unwrap();
    let covers = bruhat_covers(&par);
    let p = BruhatPoset::new(par).unwrap();
    assert_eq!(covers, p.covers);
    // In the partition model, covers add one box.
    for c in &covers {
        let lo = p.label(c.lower).unwrap();
        let hi = p.label(c.upper).unwrap();
        assert!(hi.as_partition().unwrap().contains(lo.as_partition().unwrap()));
        assert_eq!(c.multiplicity, 1);
    }
}

#[test]
fn act_checks_dimensions() {
    let p = poset(CartanType::A(2), 1);
    assert!(p.act(0, &[1]).is_err());
    assert_eq!(p.act(0, &[1, 0]).unwrap(), vec![1, 0]);
}

#[test]
fn exports_are_deterministic() {
    let p = poset(CartanType::A(3), 2);
    let json = p.to_json();
    assert_eq!(json["nodes"].as_array().unwrap().len(), 6);
    assert_eq!(json["nodes"][1]["star_coefficient"], "1/3");
    assert_eq!(json["nodes"][5]["path_count"], 2);
    assert_eq!(json, poset(CartanType::A(3), 2).to_json());
    let dot = p.to_dot();
    assert!(dot.starts_with("digraph W1 {"));
    assert_eq!(dot.matches("->").count(), p.covers.len());
    let c = poset(CartanType::C(2), 2).to_json();
    assert_eq!(c["minuscule"], false);
    assert!(c["nodes"][0]["star_coefficient"].is_null());
}

fn realised_quotients() -> Vec<BruhatPoset> {
    let mut v = Vec::new();
    for total in 2..=7 {
        for m in 1..total {
            v.push(poset(CartanType::A(total - 1), m));
        }
    }
    for n in 2..=6 {
        v.push(poset(CartanType::D(n), n));
        v.push(poset(CartanType::C(n), n));
        v.push(poset(CartanType::B(n), 1));
    }
    v.push(poset(CartanType::C(1), 1));
    for n in 3..=6 {
        v.push(poset(CartanType::D(n), 1));
    }
    v
}

#[test]
fn chevalley_action_matches_pieri_rules() {
    for p in realised_quotients() {
        let space = Space::new(p.parabolic.space().unwrap()).unwrap();
        let labels: Vec<Label> = (0..p.len()).map(|i| p.label(i).unwrap()).collect();
        let distinct: BTreeSet<&Label> = labels.iter().collect();
        assert_eq!(distinct.len(), p.len(), "{}", p.parabolic);
        for (i, l) in labels.iter().enumerate() {
            assert!(space.contains(l), "{}: {l}", p.parabolic);
            let expected = space.lefschetz_apply(&space.basis_class(l));
            let got = space.class(
                p.upper_covers(i)
                    .map(|c| (labels[c.upper].clone(), rat(c.multiplicity as i64, 1))),
            );
            assert_eq!(got, expected, "{}: L({l})", p.parabolic);
            assert_eq!(labels[p.dual_node(i)], space.poincare_dual_label(l).unwrap(), "{}", p.parabolic);
        }
    }
}

#[test]
fn path_count_star_matches_closed_form() {
    for p in realised_quotients() {
        if !p.parabolic.is_minuscule() {
            continue;
        }
        let space = Space::new(p.parabolic.space().unwrap()).unwrap();
        for i in 0..p.len() {
            let l = p.label(i).unwrap();
            assert_eq!(p.star_coefficient_pathcount(i).unwrap(), space.star_coefficient(&l), "{}: {l}", p.parabolic);
        }
    }
}

#[test]
fn path_count_star_on_exceptional_quotients() {
    for p in [poset(CartanType::E6, 1), poset(CartanType::E7, 7)] {
        let engine = p.lefschetz_engine().unwrap();
        assert!(engine.hard_lefschetz_failures().is_empty());
        let mut pos = vec![0usize; p.len()];
        let mut seen = vec![0usize; p.top_length() + 1];
        for (i, n) in p.nodes.iter().enumerate() {
            pos[i] = seen[n.length()];
            seen[n.length()] += 1;
        }
        for i in 0..p.len() {
            let j = p.dual_node(i);
            let c = p.star_coefficient_pathcount(i).unwrap();
            assert_eq!(&c * p.star_coefficient_pathcount(j).unwrap(), rat(1, 1));
            let q = p.nodes[i].length();
            let mut e = vec![Rational::zero(); engine.dims()[q]];
            e[pos[i]] = rat(1, 1);
            let star = engine.star_coords(q, &e).unwrap();
            let mut expected = vec![Rational::zero(); star.len()];
            expected[pos[j]] = c;
            assert_eq!(star, expected, "{} node {i}", p.parabolic);
        }
    }
}

#[test]
fn omega_powers_count_paths() {
    // With multiplicity-free covers, ω^r = Σ_{|α| = r} N(α) α.
    for p in realised_quotients().into_iter().filter(|p| p.parabolic.is_minuscule()) {
        let space = Space::new(p.parabolic.space().unwrap()).unwrap();
        for r in 0..=p.top_length() {
            let power = space.omega_power_expand(r).unwrap();
            for i in (0..p.len()).filter(|&i| p.nodes[i].length() == r) {
                let l = p.label(i).unwrap();
                assert_eq!(power.coefficient(&l), rat_from_uint(p.count_paths(i)), "{}", p.parabolic);
            }
        }
    }
}
