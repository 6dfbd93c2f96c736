use dnc_core::dgalg::{homology_table, make_cdga, GeneratorSpec, SemifreeCDGA};
use dnc_core::polycore::{Ideal, Monomial, MonomialOrder, Polynomial, Rational, Ring};
use proptest::prelude::*;

fn ring3() -> Ring {
    Ring::new(&["x", "y", "z"])
}

/// Polynomial from (exponents, coefficient) triples.
fn poly(r: &Ring, terms: &[(Vec<u32>, i64)]) -> Polynomial {
    Polynomial::from_terms(
        r,
        terms
            .iter()
            .map(|(e, c)| (Monomial::from_exponents(e.clone()), Rational::from_integer((*c).into()))),
    )
}

fn arb_poly(nvars: usize, maxdeg: u32) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0..=maxdeg, nvars), -3i64..=3), 1..4)
}

/// Homogeneous of degree `d` in two variables.
fn arb_homog2(d: u32) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec(-2i64..=2, (d + 1) as usize).prop_map(move |cs| {
        cs.into_iter()
            .enumerate()
            .map(|(i, c)| (vec![i as u32, d - i as u32], c))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn normal_form_is_compatible(gs in prop::collection::vec(arb_poly(3, 2), 1..3), f in arb_poly(3, 3), h in arb_poly(3, 2)) {
        let r = ring3();
        let gens: Vec<Polynomial> = gs.iter().map(|t| poly(&r, t)).collect();
        let i = Ideal::new(&r, gens.clone()).unwrap();
        let gb = i.groebner(MonomialOrder::DegRevLex);
        let f = poly(&r, &f);
        let nf = gb.normal_form(&f).unwrap();
        prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(gb.contains(&(&f - &nf)).unwrap());
        let shifted = &f + &(&poly(&r, &h) * &gens[0]);
        prop_assert_eq!(gb.normal_form(&shifted).unwrap(), nf);
        for g in &gens {
            prop_assert!(gb.contains(g).unwrap());
        }
    }

    #[test]
    fn groebner_is_idempotent_and_order_free(gs in prop::collection::vec(arb_poly(3, 2), 1..4)) {
        let r = ring3();
        let gens: Vec<Polynomial> = gs.iter().map(|t| poly(&r, t)).collect();
        let gb = Ideal::new(&r, gens.clone()).unwrap().groebner(MonomialOrder::DegRevLex);
        let again = Ideal::new(&r, gb.basis().to_vec()).unwrap().groebner(MonomialOrder::DegRevLex);
        prop_assert_eq!(&gb, &again);
        let mut rev = gens;
        rev.reverse();
        prop_assert_eq!(gb, Ideal::new(&r, rev).unwrap().groebner(MonomialOrder::DegRevLex));
    }

    #[test]
    fn saturation_contains_ideal(gs in prop::collection::vec(arb_poly(3, 2), 1..3), f in arb_poly(3, 1)) {
        let r = ring3();
        let i = Ideal::new(&r, gs.iter().map(|t| poly(&r, t)).collect()).unwrap();
        let f = poly(&r, &f);
        prop_assume!(!f.is_zero());
        let s = i.saturate(&f).unwrap();
        prop_assert!(i.is_subset_of(&s).unwrap());
        let ss = s.saturate(&f).unwrap();
        prop_assert!(ss.equals(&s, MonomialOrder::DegRevLex).unwrap());
    }

    #[test]
    fn powers_multiply(gs in prop::collection::vec(arb_poly(2, 2), 1..3), m in 0u32..3, n in 0u32..2) {
        let r = Ring::new(&["x", "y"]);
        let i = Ideal::new(&r, gs.iter().map(|t| poly(&r, t)).collect()).unwrap();
        let lhs = i.power(m).product(&i.power(n)).unwrap();
        prop_assert!(lhs.equals(&i.power(m + n), MonomialOrder::DegRevLex).unwrap());
    }
}

fn koszul(base: &Ring, elems: &[Polynomial]) -> SemifreeCDGA {
    let e: Vec<(Polynomial, i64)> = elems.iter().map(|p| (p.clone(), 0)).collect();
    SemifreeCDGA::base_algebra(base).derived_quotient(&e).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn regular_sequences_are_acyclic(a in 1u32..4, b in 1u32..4) {
        let r = Ring::new(&["x", "y"]);
        let k = koszul(&r, &[Polynomial::var(&r, 0).pow(a), Polynomial::var(&r, 1).pow(b)]);
        let t = homology_table(&k, 1..=2, 0..=0, a.max(b) + 3).unwrap();
        prop_assert!(t.vanishes_from(1));
    }

    #[test]
    fn euler_characteristic_matches_chains(f in arb_homog2(2), g in arb_homog2(1)) {
        let r = Ring::new(&["u", "v"]);
        let k = koszul(&r, &[poly(&r, &f), poly(&r, &g)]);
        let t = homology_table(&k, 0..=2, 0..=0, 5).unwrap();
        for d in 0..=5 {
            prop_assert_eq!(t.euler_homology(0, d), t.euler_chains(0, d));
        }
    }

    #[test]
    fn pi0_of_quotient(f in arb_homog2(2), g in arb_homog2(2)) {
        let r = Ring::new(&["u", "v"]);
        let (f, g) = (poly(&r, &f), poly(&r, &g));
        let a = koszul(&r, &[f.clone()]);
        let b = a.derived_quotient(&[(g.clone(), 0)]).unwrap();
        let expect = a.pi0().ideal().with(&[g]).unwrap();
        prop_assert!(b.pi0().ideal().equals(&expect, MonomialOrder::DegRevLex).unwrap());
    }

    #[test]
    fn tensor_matches_joint_quotient(f in arb_homog2(2), g in arb_homog2(1)) {
        let r = Ring::new(&["u", "v"]);
        let (f, g) = (poly(&r, &f), poly(&r, &g));
        let (t, _) = koszul(&r, &[f.clone()]).derived_tensor(&koszul(&r, &[g.clone()])).unwrap();
        let j = koszul(&r, &[f, g]);
        prop_assert_eq!(
            homology_table(&t, 0..=2, 0..=0, 5).unwrap().entries,
            homology_table(&j, 0..=2, 0..=0, 5).unwrap().entries
        );
    }

    #[test]
    fn cancel_cell_preserves_invariants(p in arb_homog2(2), f in arb_homog2(3)) {
        let r = Ring::new(&["u", "v"]);
        let gens = vec![
            GeneratorSpec::new("s", 0, 0).with_deg(2),
            GeneratorSpec::new("e", 1, 0),
            GeneratorSpec::new("c", 1, 0),
        ];
        let total = r.extended(&["s", "e", "c"]);
        let s = Polynomial::named(&total, "s");
        let u = Polynomial::named(&total, "u");
        let de = &s - &poly(&r, &p).to_ring(&total).unwrap();
        let dc = &(&s * &u) - &poly(&r, &f).to_ring(&total).unwrap();
        let a = make_cdga(&r, gens, vec![Polynomial::zero(&total), de, dc]).unwrap();
        let b = a.cancel_cell("e", "s").unwrap();
        let pb = b.pi0().ideal().clone();
        let pa = a.pi0().ideal().eliminate_names(&["u", "v"]).unwrap().to_ring(pb.ring()).unwrap();
        prop_assert!(pa.equals(&pb, MonomialOrder::DegRevLex).unwrap());
        let ta = homology_table(&a, 0..=2, 0..=0, 6).unwrap();
        let tb = homology_table(&b, 0..=2, 0..=0, 6).unwrap();
        let band = ta.certified_band.min(tb.certified_band);
        for ((k, w, d), n) in ta.certified() {
            if d <= band {
                prop_assert_eq!(n, tb.get(k, w, d), "k={} d={}", k, d);
            }
        }
    }
}
