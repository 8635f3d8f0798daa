use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use tropfaith::algebra::{frac, parse_expr_in, rat, substitute, MPoly, Rat, RatFunc};
use tropfaith::hyperelliptic::{
    combine_reembeddings, defining_poly, detect_blocks, j_invariant_cubic, reembedding_for_block, reembedding_plan, BlockKind, HECurve, RootSpec,
};
use tropfaith::Error;

fn tk(c: i64, k: i64) -> RatFunc {
    RatFunc::monomial(rat(c), k)
}

fn xy(s: &str) -> MPoly {
    parse_expr_in(s, &["x", "y"]).unwrap()
}

fn two_cycles() -> HECurve {
    HECurve::from_values(&[tk(1, 2), tk(1, 4), tk(1, 6), tk(1, 8)]).unwrap()
}

/// β-form roots of the 3-theta family at β = t^u.
fn theta3(u2: i64, u34: i64, u4: i64, u56: i64, u6: i64, u7: i64) -> HECurve {
    let b = |k| tk(1, k);
    HECurve::new(vec![
        RootSpec::Square { beta: b(u2), sign: 1 },
        RootSpec::Square { beta: &b(u34) + &b(u4), sign: 1 },
        RootSpec::Square { beta: b(u4), sign: 1 },
        RootSpec::Square { beta: &b(u56) + &b(u6), sign: 1 },
        RootSpec::Square { beta: b(u6), sign: 1 },
        RootSpec::Square { beta: b(u7), sign: -1 },
    ])
    .unwrap()
}

fn kinds(c: &HECurve) -> Vec<(BlockKind, usize)> {
    detect_blocks(c).unwrap().into_iter().map(|b| (b.kind, b.start_index)).collect()
}

#[test]
fn defining_poly_expands() {
    assert_eq!(defining_poly(&two_cycles()), xy("y^2 - x*(x-t^2)*(x-t^4)*(x-t^6)*(x-t^8)"));
    let c = HECurve::from_values(&[tk(3, 1), tk(-2, 0)]).unwrap();
    assert_eq!(defining_poly(&c), xy("y^2 - x^3 + (3*t-2)*x^2 + 6*t*x"));
}

#[test]
fn beta_roots_match_literal_expansion() {
    let c = theta3(4, 6, 3, 5, 2, 1);
    let lit = xy("y^2-x*(x-(t^4)^2)*(x-(t^6+t^3)^2)*(x-(t^3)^2)*(x-(t^2+t^5)^2)*(x-(t^2)^2)*(x+(t)^2)");
    assert_eq!(defining_poly(&c), lit);
}

#[test]
fn duplicate_roots_rejected() {
    let r = HECurve::new(vec![RootSpec::Value(tk(1, 2)), RootSpec::Square { beta: tk(1, 1), sign: 1 }]);
    assert!(matches!(r, Err(Error::DuplicateRoot(_))));
}

#[test]
fn two_cycles_and_a_bridge() {
    assert_eq!(kinds(&two_cycles()), vec![(BlockKind::Cycle, 1), (BlockKind::Bridge, 3), (BlockKind::Cycle, 3)]);
}

#[test]
fn elliptic_cycle() {
    let c = HECurve::from_values(&[tk(1, 2), tk(1, 4)]).unwrap();
    assert_eq!(kinds(&c), vec![(BlockKind::Cycle, 1)]);
}

#[test]
fn three_theta_detected() {
    assert_eq!(kinds(&theta3(4, 6, 3, 5, 2, 1)), vec![(BlockKind::ThreeTheta, 1)]);
}

#[test]
fn two_theta_and_point_blocks() {
    // valuations 8 > 6 = 6 > 2 with equal initials on the tie
    let c = HECurve::from_values(&[tk(1, 8), &tk(1, 6) + &tk(1, 7), tk(1, 6), tk(1, 2)]).unwrap();
    assert_eq!(kinds(&c), vec![(BlockKind::TwoTheta, 1)]);
    // the same tie with distinct initials
    let c = HECurve::from_values(&[tk(1, 8), tk(2, 6), tk(1, 6), tk(1, 2)]).unwrap();
    assert_eq!(kinds(&c), vec![(BlockKind::Cycle, 1), (BlockKind::PointConnector, 3), (BlockKind::Cycle, 3)]);
    // good reduction: one run of equal valuations
    let c = HECurve::from_values(&[tk(1, 0), tk(2, 0)]).unwrap();
    assert_eq!(kinds(&c), vec![(BlockKind::KPoint(1), 1)]);
}

#[test]
fn unsupported_stratum_reported() {
    let c = HECurve::from_values(&[tk(1, 2), &tk(1, 2) + &tk(1, 5)]).unwrap();
    assert!(matches!(detect_blocks(&c), Err(Error::UnsupportedStratum(_))));
}

#[test]
fn example_cycle_polynomials() {
    let c = two_cycles();
    let blocks = detect_blocks(&c).unwrap();
    assert_eq!(reembedding_for_block(&blocks[0], &c).unwrap(), xy("y - t^6*x"));
    assert_eq!(reembedding_for_block(&blocks[2], &c).unwrap(), xy("y - t*x^2"));
    let fs: Vec<MPoly> = [&blocks[0], &blocks[2]].iter().map(|b| reembedding_for_block(b, &c).unwrap()).collect();
    assert_eq!(combine_reembeddings(&fs, &c).unwrap(), xy("y - t^6*x - t*x^2"));
    assert_eq!(combine_reembeddings(&fs[..1], &c).unwrap(), fs[0]);
    assert!(matches!(combine_reembeddings(&[fs[0].clone(), fs[0].clone()], &c), Err(Error::Combination(_))));
}

#[test]
fn plans() {
    let c = two_cycles();
    let p = reembedding_plan(&c, false).unwrap();
    assert_eq!(p.generators.len(), 3);
    assert_eq!(p.new_vars, vec!["z1", "z2"]);
    let p = reembedding_plan(&c, true).unwrap();
    assert_eq!(p.generators.len(), 2);
    assert_eq!(p.generators[1], parse_expr_in("z - (y - t^6*x - t*x^2)", &["x", "y", "z"]).unwrap());
    // -t^12 has no square root in Q(t), the plan says so
    assert!(!p.notes.is_empty());
    let e = HECurve::from_values(&[tk(1, 2), tk(1, 4)]).unwrap();
    assert_eq!(reembedding_plan(&e, true).unwrap().fs.len(), 1);
    assert_eq!(reembedding_plan(&e, false).unwrap().fs.len(), 1);
}

#[test]
fn negated_roots_take_the_signed_square_root() {
    let c = HECurve::from_values(&[tk(-1, 2), tk(-1, 4), tk(-1, 6), tk(-1, 8)]).unwrap();
    let p = reembedding_plan(&c, true).unwrap();
    assert!(p.notes.is_empty());
    assert_eq!(p.fs[0], xy("y - t^6*x - t*x^2"));
}

#[test]
fn three_theta_polynomial() {
    let c = theta3(4, 6, 3, 5, 2, 1);
    let b = &detect_blocks(&c).unwrap()[0];
    let f = reembedding_for_block(b, &c).unwrap();
    let lit = xy("y - (t^3)*(t^6+t^3)*(t^2)*(t^2+t^5)*t*x + (t^2)*(t^2+t^5)*t*x^2 - t*x^3");
    assert_eq!(f, lit);
}

fn weierstrass_j(a: &Rat, b: &Rat) -> Rat {
    let a3 = a * a * a;
    rat(1728) * rat(4) * &a3 / (rat(4) * &a3 + rat(27) * b * b)
}

#[test]
fn j_matches_weierstrass_formula() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let mut n = 0;
    while n < 10 {
        let a = frac(rng.gen_range(-40..40), rng.gen_range(1..9));
        let b = frac(rng.gen_range(-40..40), rng.gen_range(1..9));
        if rat(4) * &a * &a * &a + rat(27) * &b * &b == rat(0) {
            continue;
        }
        let f = xy(&format!("y^2 - x^3 - ({a})*x - ({b})"));
        assert_eq!(j_invariant_cubic(&f).unwrap(), RatFunc::from_rat(weierstrass_j(&a, &b)));
        n += 1;
    }
}

#[test]
fn j_special_values() {
    assert!(j_invariant_cubic(&xy("x^3+y^3+1")).unwrap().is_zero());
    assert_eq!(j_invariant_cubic(&xy("y^2-x^3-x")).unwrap(), RatFunc::from_int(1728));
    assert!(matches!(j_invariant_cubic(&xy("y^2-x^3")), Err(Error::SingularCurve(_))));
    assert!(j_invariant_cubic(&xy("y^2-x^4-1")).is_err());
}

#[test]
fn j_of_example_cubic() {
    let f = xy("(-t^2)*x^3+(t^20)*x^2*y+(t^2)*x*y^2+(t^14)*y^3+(-3*t^3)*x^2+x*y+(t^3+t^5-t^6)*y^2+(-3*t^4)*x+(t+t^2)*y+(2*t^2+t^5)");
    let j = j_invariant_cubic(&f).unwrap();
    assert_eq!(j.val().unwrap().abs(), 10);
    let g = substitute(&f, "x", &xy("x-t")).unwrap();
    assert_eq!(j_invariant_cubic(&g).unwrap(), j);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn j_invariant_under_shear(a in -9i64..9, b in -9i64..9, c in -5i64..5, d in 1i64..4) {
        let f = xy(&format!("y^2 + ({b})*x*y - x^3 - ({a})*x - t"));
        let j = j_invariant_cubic(&f).unwrap();
        let cc = frac(c, d);
        let g = substitute(&f, "x", &xy(&format!("x + ({cc})"))).unwrap();
        let g = substitute(&g, "y", &xy(&format!("y + ({cc})*x"))).unwrap();
        prop_assert_eq!(j_invariant_cubic(&g).unwrap(), j);
    }

    #[test]
    fn blocks_stable_under_square_rescaling(vals in prop::collection::btree_set(1i64..12, 4), c in 1i64..7, d in 1i64..7, neg in any::<bool>()) {
        let roots: Vec<RatFunc> = vals.iter().map(|&k| tk(1, k)).collect();
        let cu = HECurve::from_values(&roots).unwrap();
        let s = if neg { -frac(c * c, d * d) } else { frac(c * c, d * d) };
        let scaled: Vec<RatFunc> = roots.iter().map(|r| r.scale(&frac(c * c, d * d))).collect();
        let cs = HECurve::from_values(&scaled).unwrap();
        prop_assert_eq!(detect_blocks(&cu).unwrap(), detect_blocks(&cs).unwrap());
        let _ = s;
    }

    #[test]
    fn square_form_roots_always_have_square_roots(u in prop::collection::vec(1i64..4, 6)) {
        // build a point of the 3-theta cone: u7 < u6 < u56, u6 < u4 < u34, u4 < u2
        let u7 = u[0];
        let u6 = u7 + u[1];
        let u4 = u6 + u[2];
        let u56 = u6 + u[3];
        let u34 = u4 + u[4];
        let u2 = u4 + u[5];
        let c = theta3(u2, u34, u4, u56, u6, u7);
        let p = reembedding_plan(&c, true).unwrap();
        prop_assert!(p.notes.is_empty());
        prop_assert_eq!(p.blocks[0].kind, BlockKind::ThreeTheta);
    }
}
