use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use tropfaith::algebra::{frac, rat, MPoly, Rat};
use tropfaith::cones::*;
use tropfaith::hyperelliptic::{detect_blocks, BlockKind};
use tropfaith::projections::{project_xz, project_yz};
use tropfaith::tropical::{dual_subdivision, tropicalize};
use tropfaith::Error;

fn w(u: [i64; 6]) -> WeightVector {
    WeightVector::from_ints(u)
}

fn row(lhs: &[(usize, i64)], rhs: &[(usize, i64)]) -> Vec<Rat> {
    let mut a = vec![rat(0); 6];
    for &(i, k) in lhs {
        a[i] += rat(k);
    }
    for &(i, k) in rhs {
        a[i] -= rat(k);
    }
    a
}

fn has_strict(c: &Cone, a: &[Rat]) -> bool {
    c.inequalities.iter().any(|(r, rel)| r == a && *rel == Rel::Lt)
}

fn label(c: &Cone) -> &str {
    &c.label
}

/// Random integer points of the open 3-theta cone, built coordinate by coordinate.
fn random_theta3(rng: &mut impl Rng) -> WeightVector {
    let u7 = rng.gen_range(0..4);
    let u6 = u7 + rng.gen_range(1..8);
    let u56 = u6 + rng.gen_range(1..12);
    let u4 = u6 + rng.gen_range(1..12);
    let u34 = u4 + rng.gen_range(1..12);
    let u2 = u4 + rng.gen_range(1..12);
    w([u2, u34, u4, u56, u6, u7])
}

fn xz_of(u: &WeightVector) -> MPoly {
    let b = instantiate_beta(u, &ones()).unwrap();
    let c = theta3_curve(&b).unwrap();
    project_xz(&c.g_poly, &theta3_reembedding(&b)).unwrap()
}

fn yz_of(u: &WeightVector, coeffs: &[Rat]) -> MPoly {
    let b = instantiate_beta(u, coeffs).unwrap();
    let c = theta3_curve(&b).unwrap();
    project_yz(&c.g_poly, &theta3_reembedding(&b)).unwrap()
}

/// val(coefficient of x^k) − val(coefficient of z²) in the xz-projection.
fn xz_val(g: &MPoly, k: i32) -> Option<i64> {
    Some(g.coeff(&[k, 0]).val()? - g.coeff(&[0, 2]).val()?)
}

#[test]
fn theta3_membership() {
    let c = theta3_cone();
    // valuations (u2, u34, u4, u56, u6, u7): u7 < u6 < u56, u6 < u4 < u34, u2
    assert!(c.contains(&WeightVector::new([rat(-1), frac(-1, 2), rat(-2), frac(-3, 2), rat(-3), rat(-4)])));
    assert!(c.contains(&w([8, 9, 6, 7, 3, 1])));
    assert!(!c.contains(&w([8, 9, 6, 7, 3, 3])));
    assert!(!c.contains(&WeightVector::new([rat(1), frac(1, 2), rat(2), frac(3, 2), rat(3), rat(4)])));
    let p = sample_point(&c).unwrap();
    assert!(c.contains(&p));
}

#[test]
fn xz_cone_rows() {
    let cones = xz_cones();
    let labels: Vec<&str> = cones.iter().map(label).collect();
    assert_eq!(labels.len(), 16);
    assert_eq!(labels[0], "C_{1A}");
    assert_eq!(labels[15], "C_{4D}");
    let c1a = &cones[0];
    assert!(has_strict(c1a, &row(&[(U6, 2)], &[(U56, 1), (U7, 1)])));
    assert!(has_strict(c1a, &row(&[(U56, 1)], &[(U4, 1)])));
    let c2d = &cones[7];
    assert_eq!(c2d.label, "C_{2D}");
    assert!(has_strict(c2d, &row(&[(U2, 1), (U6, 1)], &[(U4, 2)])));
    assert!(has_strict(c2d, &row(&[(U2, 1)], &[(U34, 1)])));
    // every cone lies in the 3-theta cone
    for c in &cones {
        for r in &theta3_cone().inequalities {
            assert!(c.inequalities.contains(r), "{}", c.label);
        }
    }
}

#[test]
fn xz_cones_feasible_and_disjoint() {
    let cones = xz_cones();
    for c in &cones {
        let p = sample_point(c).unwrap();
        assert!(c.contains(&p), "{}", c.label);
    }
    for i in 0..cones.len() {
        for j in i + 1..cones.len() {
            assert!(!cones[i].intersect(&cones[j], "pair").is_feasible(), "{} meets {}", cones[i].label, cones[j].label);
        }
    }
}

#[test]
fn random_points_land_in_one_cone() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    let cones = xz_cones();
    let mut seen = 0;
    while seen < 200 {
        let u = random_theta3(&mut rng);
        let closed = cones.iter().filter(|c| c.closure_contains(&u)).count();
        let open = cones.iter().filter(|c| c.contains(&u)).count();
        assert!(closed >= 1);
        if closed == 1 {
            assert_eq!(open, 1);
            seen += 1;
        } else {
            assert_eq!(open, 0, "a wall point lies in an open cone");
        }
    }
}

#[test]
fn refinement_only_for_beta4_dominant() {
    let cones = xz_cones();
    for c in &cones {
        let (i, _) = parse_label(&c.label).unwrap();
        let pieces = dominance_refinement(c);
        if i == 1 || i == 3 {
            assert_eq!(pieces, vec![c.clone()]);
            continue;
        }
        assert!(pieces.len() >= 2, "{}", c.label);
        for p in &pieces {
            assert!(p.label.starts_with(&c.label) && p.label.contains("phi"), "{}", p.label);
            let x = sample_point(p).unwrap();
            assert!(c.contains(&x) && p.contains(&x));
        }
        for a in 0..pieces.len() {
            for b in a + 1..pieces.len() {
                assert!(!pieces[a].intersect(&pieces[b], "pair").is_feasible());
            }
        }
    }
    // on C_{2C} the δ condition cuts as well
    let c2c = dominance_refinement(&cones[6]);
    assert_eq!(c2c.len(), 4);
    assert!(c2c.iter().any(|c| c.label == "C_{2C}[delta<,phi>]"));
}

#[test]
fn refinement_drops_implied_conditions() {
    // α and γ are implied on every β₄-dominant cone, β is implied everywhere
    for c in refined_cones() {
        for tag in ["alpha", "beta", "gamma"] {
            assert!(!c.label.contains(tag), "{}", c.label);
        }
    }
    let c2a = cone_by_label("C_{2A}").unwrap();
    let alpha_gt = c2a.with_row(row(&[(U34, 1), (U56, 1)], &[(U4, 2)]), Rel::Lt);
    assert!(!alpha_gt.is_feasible());
}

#[test]
fn classify_constructed_points() {
    // 2u6 = 2 < u56 + u7 = 3, u56 = 3 < u4 = 5, 2u4 = 10 < u34 + u6 = 11, u34 < u2
    assert_eq!(classify_weight(&w([11, 10, 5, 3, 1, 0])).labels, vec!["C_{1A}"]);
    // on the wall 2u6 = u56 + u7
    let wall = classify_weight(&w([12, 11, 5, 4, 2, 0]));
    assert_eq!(wall.labels, vec!["C_{1A}", "C_{3A}"]);
    let not = classify_weight(&w([1, 1, 1, 1, 1, 5]));
    assert!(not.labels.is_empty());
    assert!(not.note.unwrap().contains("3-theta"));
}

#[test]
fn sample_points() {
    let half = Cone::new("u7>0", vec![(row(&[], &[(U7, 1)]), Rel::Lt)]);
    let p = sample_point(&half).unwrap();
    assert!(p.u[U7] > rat(0));
    let c2d = cone_by_label("C_{2D}").unwrap();
    let p = sample_point(&c2d).unwrap();
    let u = &p.u;
    assert!(&u[U2] + &u[U6] < rat(2) * &u[U4] && u[U2] < u[U34]);
    assert!(&u[U4] + &u[U7] > rat(2) * &u[U6] || rat(2) * &u[U6] < &u[U4] + &u[U7]);
    assert_eq!(sample_point(&c2d).unwrap(), p);
    let empty = half.with_row(row(&[(U7, 1)], &[]), Rel::Lt);
    assert!(matches!(sample_point(&empty), Err(Error::Infeasible(_))));
    for c in refined_cones() {
        let q = integer_point(&c).unwrap();
        assert!(c.contains(&q) && q.integer_entries().is_some(), "{}", c.label);
    }
}

#[test]
fn leading_terms_of_the_xz_table() {
    for c in xz_cones() {
        let (i, l) = parse_label(&c.label).unwrap();
        assert_eq!(leading_terms_over_cone(&XZ_X5_TERMS, &c), BTreeSet::from([expected_x5(i)]), "{}", c.label);
        assert_eq!(leading_terms_over_cone(&XZ_X3_TERMS, &c), BTreeSet::from([expected_x3(l)]), "{}", c.label);
    }
    assert_eq!(leading_terms_over_cone(&[[1, 2, 3, 4, 5, 6]], &theta3_cone()), BTreeSet::from([0]));
    // over the whole 3-theta cone every x⁵ candidate can lead
    assert_eq!(leading_terms_over_cone(&XZ_X5_TERMS, &theta3_cone()).len(), 3);
}

#[test]
fn instantiation() {
    let u = w([11, 10, 5, 3, 1, 0]);
    let b = instantiate_beta(&u, &ones()).unwrap();
    assert_eq!(b.iter().map(|x| x.val().unwrap()).collect::<Vec<_>>(), vec![11, 10, 5, 3, 1, 0]);
    let blocks = detect_blocks(&theta3_curve(&b).unwrap()).unwrap();
    assert_eq!(blocks.iter().map(|b| b.kind.clone()).collect::<Vec<_>>(), vec![BlockKind::ThreeTheta]);
    let half = WeightVector::new([rat(11), rat(10), rat(5), rat(3), frac(1, 2), rat(0)]);
    assert!(matches!(instantiate_beta(&half, &ones()), Err(Error::ScalingRequired(_))));
    let mut zero = vec![rat(1); 6];
    zero[3] = rat(0);
    assert!(instantiate_beta(&u, &zero).is_err());
    let other = instantiate_beta(&u, &[rat(2), rat(-3), rat(5), rat(7), rat(-1), rat(3)]).unwrap();
    let back = WeightVector::from_ints(std::array::from_fn(|i| other[i].val().unwrap()));
    assert_eq!(classify_weight(&back), classify_weight(&u));
}

#[test]
fn xz_leading_terms_end_to_end() {
    for c in xz_cones() {
        let (i, l) = parse_label(&c.label).unwrap();
        let u = integer_point(&c).unwrap();
        let g = xz_of(&u);
        let w5: Vec<Rat> = XZ_X5_TERMS.iter().map(|a| u.weight(a)).collect();
        let w3: Vec<Rat> = XZ_X3_TERMS.iter().map(|a| u.weight(a)).collect();
        assert_eq!(xz_val(&g, 5).map(rat), Some(w5[expected_x5(i)].clone()), "{}", c.label);
        assert_eq!(xz_val(&g, 3).map(rat), Some(w3[expected_x3(l)].clone()), "{}", c.label);
        assert!(w5.iter().enumerate().all(|(k, x)| k == expected_x5(i) || *x > w5[expected_x5(i)]));
    }
}

#[test]
fn xz_subdivision_type_is_not_constant_on_a_cone() {
    // On C_{3C} the x³, x⁴, x⁵ coefficients lead with β₃₄²β₆⁴β₇², β₄²β₆²β₇², β₅₆²β₇²,
    // so (4, 0) is a vertex of the subdivision iff 2u₄ < u₃₄ + u₅₆. That is the α
    // dominance condition, which cuts this β₅₆-dominant cone.
    let c = cone_by_label("C_{3C}").unwrap();
    let a = row(&[(U4, 2)], &[(U34, 1), (U56, 1)]);
    let below = c.with_row(a.clone(), Rel::Lt);
    let above = c.with_row(a.iter().map(|x| -x).collect(), Rel::Lt);
    let mut types = Vec::new();
    for side in [below, above] {
        let u = integer_point(&side).unwrap();
        let g = xz_of(&u);
        assert_eq!(xz_val(&g, 4).map(rat), Some(u.weight(&[0, 0, 2, 0, 2, 2])));
        let sd = dual_subdivision(&tropicalize(&g).unwrap());
        let vertex = sd.cells.iter().any(|cell| cell.hull.iter().any(|&k| sd.points[k].0 == [4, 0]));
        types.push((vertex, sd.combinatorial_type()));
    }
    assert!(types[0].0 && !types[1].0);
    assert_ne!(types[0].1, types[1].1);
}

#[test]
fn yz_table_where_it_holds() {
    // unrefined cones and φ> pieces: every coefficient of degree ≥ 4 is as tabulated
    for l in ["C_{1A}", "C_{3D}", "C_{2B}[phi>]", "C_{4C}[phi>]"] {
        let c = cone_by_label(l).unwrap();
        let u = integer_point(&c).unwrap();
        for cmp in compare_yz_table(&u, &yz_of(&u, &ones())) {
            if cmp.degree() >= 4 {
                assert!(cmp.agrees(), "{l} {cmp:?}");
            }
        }
    }
}

#[test]
fn yz_table_misses_terms_for_phi_less() {
    // with 2u₄ < u₅₆ + u₆ some coefficients fall below every tabulated candidate;
    // cancellation can only raise a valuation, so the candidate list is incomplete
    let c = cone_by_label("C_{2A}[phi<]").unwrap();
    let u = integer_point(&c).unwrap();
    let cmps = compare_yz_table(&u, &yz_of(&u, &ones()));
    let deg4: Vec<_> = cmps.iter().filter(|c| c.degree() == 4).collect();
    assert!(deg4.iter().all(|c| rat(c.observed.unwrap()) < c.predicted));
    assert!(cmps.iter().filter(|c| c.degree() >= 5).all(|c| c.agrees()));
    let again = compare_yz_table(&u, &yz_of(&u, &[rat(3), rat(-2), rat(5), rat(7), rat(2), rat(-1)]));
    assert_eq!(cmps.iter().map(|c| c.observed).collect::<Vec<_>>(), again.iter().map(|c| c.observed).collect::<Vec<_>>());
}

fn exps_strategy() -> impl Strategy<Value = Vec<[i64; 6]>> {
    prop::collection::vec(prop::array::uniform6(0i64..5), 1..7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn leading_terms_match_brute_force(exps in exps_strategy(), k in 0usize..16, seed in any::<u64>()) {
        let c = &xz_cones()[k];
        let set = leading_terms_over_cone(&exps, c);
        prop_assert!(!set.is_empty());
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut tried = 0;
        while tried < 20 {
            let u = random_theta3(&mut rng);
            if !c.contains(&u) {
                continue;
            }
            tried += 1;
            let ws: Vec<Rat> = exps.iter().map(|a| u.weight(a)).collect();
            let min = ws.iter().min().unwrap();
            let argmin = ws.iter().position(|x| x == min).unwrap();
            prop_assert!(set.contains(&argmin), "argmin {} not in {:?}", argmin, set);
        }
        for (m, u) in leading_term_witnesses(&exps, c) {
            prop_assert!(c.contains(&u));
            let wm = u.weight(&exps[m]);
            prop_assert!(exps.iter().all(|a| u.weight(a) >= wm));
        }
    }

    #[test]
    fn classification_is_scale_invariant(u in prop::array::uniform6(-6i64..20), num in 1i64..9, den in 1i64..9) {
        let u = w(u);
        let s = frac(num, den);
        prop_assert_eq!(classify_weight(&u), classify_weight(&u.scaled(&s)));
    }
}

fn ones() -> Vec<Rat> {
    vec![rat(1); 6]
}
