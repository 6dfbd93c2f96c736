use dnc_core::dgalg::{
    homology_table, make_cdga, sym_algebra, weight_piece, DGModuleSpec, DgError, GeneratorSpec, SemifreeCDGA,
};
use dnc_core::polycore::{parse_polynomial, Polynomial, Rational, Ring};

fn ring(names: &[&str]) -> Ring {
    Ring::new(names)
}

fn koszul(base: &Ring, elems: &[&str]) -> SemifreeCDGA {
    let a = SemifreeCDGA::base_algebra(base);
    let e: Vec<(Polynomial, i64)> = elems.iter().map(|t| (parse_polynomial(t, base).unwrap(), 0)).collect();
    a.derived_quotient(&e).unwrap()
}

fn cdga(base: &Ring, gens: &[(&str, u32, i64, Option<u32>)], diffs: &[&str]) -> Result<SemifreeCDGA, DgError> {
    let specs: Vec<GeneratorSpec> = gens
        .iter()
        .map(|&(n, h, w, d)| {
            let g = GeneratorSpec::new(n, h, w);
            match d {
                Some(d) => g.with_deg(d),
                None => g,
            }
        })
        .collect();
    let names: Vec<&str> = gens.iter().map(|g| g.0).collect();
    let total = base.extended(&names);
    // build a throwaway algebra with zero differentials only to parse with signs
    let scratch = make_cdga(base, specs.clone(), vec![Polynomial::zero(&total); specs.len()]).unwrap();
    let diffs = diffs.iter().map(|t| scratch.parse(t).unwrap()).collect();
    make_cdga(base, specs, diffs)
}

#[test]
fn koszul_signs() {
    let a = cdga(&ring(&["u"]), &[("e", 1, 0, None), ("f", 1, 0, None)], &["u", "u"]).unwrap();
    let ef = a.parse("e*f").unwrap();
    let fe = a.parse("f*e").unwrap();
    assert_eq!(ef, -&fe);
    assert!(a.parse("e*e").unwrap().is_zero());
    // d(e f) = u f - u e
    assert_eq!(a.d(&ef), a.parse("u*f - u*e").unwrap());
    assert!(a.d(&a.d(&ef)).is_zero());
}

#[test]
fn make_cdga_examples() {
    let a = cdga(&ring(&["u"]), &[("e", 1, 0, None)], &["u"]).unwrap();
    assert_eq!(a.pi0().basis_strings(), vec!["u"]);

    let q = make_cdga(&ring(&[]), vec![], vec![]).unwrap();
    assert!(q.gens().is_empty());
    assert!(q.pi0().ideal().is_zero());

    assert!(cdga(&ring(&["u"]), &[("e", 1, 0, None), ("f", 2, 0, None)], &["0", "u*e"]).is_ok());
    match cdga(&ring(&["u"]), &[("e", 1, 0, None), ("f", 2, 0, None)], &["u", "e"]) {
        Err(DgError::DSquareNonzero { generator, residue }) => {
            assert_eq!(generator, "f");
            assert_eq!(residue, "u");
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(
        cdga(&ring(&["u"]), &[("tinv", 0, -1, Some(0)), ("e", 1, 0, None)], &["0", "tinv"]).unwrap_err(),
        DgError::WeightMismatch("e".into())
    );
    assert_eq!(
        cdga(&ring(&["u"]), &[("f", 2, 0, None)], &["u"]).unwrap_err(),
        DgError::DegreeMismatch("f".into())
    );
    assert_eq!(
        cdga(&ring(&["u"]), &[("s", 0, 0, None)], &["u"]).unwrap_err(),
        DgError::DegreeMismatch("s".into())
    );
}

#[test]
fn derived_quotient_examples() {
    let r = ring(&["x", "y"]);
    let k = koszul(&r, &["x", "y"]);
    let t = homology_table(&k, 1..=2, 0..=0, 6).unwrap();
    assert!(!t.homogenized);
    assert_eq!(t.certified_band, 5);
    assert!(t.entries.values().all(|&n| n == 0));

    let a = SemifreeCDGA::base_algebra(&r);
    assert_eq!(a.derived_quotient(&[]).unwrap(), a);

    let rx = ring(&["x"]);
    let z = koszul(&rx, &["0"]);
    assert_eq!(z.gens()[0].deg, Some(0));
    let t = homology_table(&z, 1..=1, 0..=0, 3).unwrap();
    for d in 0..=3 {
        assert_eq!(t.get(1, 0, d), 1, "degree {d}");
    }
    assert!(z.pi0().ideal().is_zero());

    let bad = a.derived_quotient_named(&[("e", a.parse("x").unwrap(), 1)]);
    assert_eq!(bad.unwrap_err(), DgError::WeightMismatch("e".into()));
    let k1 = koszul(&r, &["x"]);
    let bad = k1.derived_quotient_named(&[("g", k1.parse("e1").unwrap(), 0)]);
    assert_eq!(bad.unwrap_err(), DgError::NotDegreeZero("g".into()));
}

#[test]
fn derived_tensor_examples() {
    let r = ring(&["x", "y"]);
    let (t, renames) = koszul(&r, &["x"]).derived_tensor(&koszul(&r, &["y"])).unwrap();
    assert_eq!(renames, vec![("e1".to_string(), "e1_2".to_string())]);
    let kxy = koszul(&r, &["x", "y"]);
    assert_eq!(
        homology_table(&t, 0..=2, 0..=0, 5).unwrap().entries,
        homology_table(&kxy, 0..=2, 0..=0, 5).unwrap().entries
    );

    let a = koszul(&r, &["x^2 - y^2"]);
    let (same, none) = a.derived_tensor(&SemifreeCDGA::base_algebra(&r)).unwrap();
    assert_eq!(same, a);
    assert!(none.is_empty());

    let rx = ring(&["x"]);
    let (sq, _) = koszul(&rx, &["x"]).derived_tensor(&koszul(&rx, &["x"])).unwrap();
    let tab = homology_table(&sq, 1..=1, 0..=0, 4).unwrap();
    let total: usize = (0..=tab.certified_band).map(|d| tab.get(1, 0, d)).sum();
    assert_eq!(total, 1);
    assert_eq!(tab.get(1, 0, 1), 1);

    assert_eq!(
        koszul(&rx, &["x"]).derived_tensor(&koszul(&r, &["x"])).unwrap_err(),
        DgError::BaseMismatch
    );
}

fn rees_c1() -> SemifreeCDGA {
    cdga(
        &ring(&["u"]),
        &[("tinv", 0, -1, Some(0)), ("x", 0, 1, Some(1)), ("e", 1, 0, None)],
        &["0", "0", "x*tinv - u"],
    )
    .unwrap()
}

#[test]
fn base_change_examples() {
    let r = rees_c1();
    let zero = Polynomial::zero(r.total_ring());
    let s = r.base_change(&[("tinv", zero)]).unwrap();
    assert_eq!(s.gens().iter().map(|g| g.name.as_str()).collect::<Vec<_>>(), vec!["x", "e"]);
    assert_eq!(s.diff_of("e").unwrap().to_string(), "-u");

    assert_eq!(r.base_change(&[]).unwrap(), r);

    let k = koszul(&ring(&["x", "y"]), &["x"]);
    let id = k.base_change(&[("x", k.parse("x").unwrap()), ("y", k.parse("y").unwrap())]).unwrap();
    assert_eq!(id, k);

    let bad = r.base_change(&[("tinv", r.parse("x").unwrap())]);
    assert_eq!(bad.unwrap_err(), DgError::WeightMismatch("tinv".into()));
}

#[test]
fn localize_examples() {
    let a = cdga(&ring(&[]), &[("tinv", 0, -1, Some(0))], &["0"]).unwrap();
    let l = a.localize("tinv").unwrap();
    let names: Vec<&str> = l.gens().iter().map(|g| g.name.as_str()).collect();
    assert_eq!(names, vec!["tinv", "t", "eta_tinv"]);
    assert_eq!(l.generator("t").unwrap().weight, 1);
    assert_eq!(l.pi0().basis_strings(), vec!["tinv*t - 1"]);

    let ll = l.localize("tinv").unwrap();
    let p = ll.pi0();
    let diff = parse_polynomial("t - t_", p.ring()).unwrap();
    assert!(p.contains(&diff).unwrap());
    let back = p.ideal().eliminate_names(&["tinv", "t"]).unwrap();
    assert!(back.to_ring(l.pi0().ring()).unwrap().equals(l.pi0().ideal(), Default::default()).unwrap());

    let k = koszul(&ring(&["x"]), &["x"]);
    assert_eq!(k.localize("e1").unwrap_err(), DgError::NotDegreeZero("e1".into()));
}

#[test]
fn weight_piece_examples() {
    let a = cdga(&ring(&[]), &[("tinv", 0, -1, Some(0)), ("x", 0, 1, Some(1))], &["0", "0"]).unwrap();
    let w0 = weight_piece(&a, 0, 4).unwrap();
    for d in 0..=4 {
        let v = &w0.by_slot[&(0, d)];
        assert_eq!(v.len(), 1);
        let expect = if d == 0 { "1".to_string() } else if d == 1 { "tinv*x".into() } else { format!("tinv^{d}*x^{d}") };
        assert_eq!(v[0].to_string(), expect);
    }
    let only_t = cdga(&ring(&[]), &[("tinv", 0, -1, Some(0))], &["0"]).unwrap();
    assert!(weight_piece(&only_t, 1, 5).unwrap().is_empty());

    let r = rees_c1();
    let w1 = weight_piece(&r, 1, 3).unwrap();
    assert!(w1.by_slot[&(0, 1)].iter().any(|p| p.to_string() == "x"));
    assert!(w1.by_slot[&(1, 2)].iter().any(|p| p.to_string() == "x*e"));
}

#[test]
fn homology_examples() {
    let c3 = cdga(
        &ring(&["x"]),
        &[("x1", 0, 1, Some(1)), ("x2", 0, 1, Some(1)), ("e1", 1, 0, None), ("e2", 1, 0, None)],
        &["0", "0", "-x", "-x"],
    )
    .unwrap();
    let t = homology_table(&c3, 1..=1, 0..=0, 4).unwrap();
    assert_eq!(t.get(1, 0, 1), 1);
    let cube = koszul(&ring(&["x"]), &["x^3"]);
    assert_eq!(
        homology_table(&cube, 0..=1, 0..=0, 2).unwrap_err(),
        DgError::CutoffTooSmall { cutoff: 2, maxdeg: 3 }
    );
}

#[test]
fn pi0_examples() {
    assert_eq!(koszul(&ring(&["x", "y"]), &["x", "y"]).pi0().basis_strings(), vec!["y", "x"]);
    let p = rees_c1().pi0();
    assert_eq!(p.ring().names(), &["u", "tinv", "x"]);
    assert_eq!(p.basis_strings(), vec!["tinv*x - u"]);
    assert!(koszul(&ring(&["x"]), &["0"]).pi0().ideal().is_zero());
}

#[test]
fn cancel_cell_examples() {
    let a = cdga(&ring(&["u"]), &[("s", 0, 0, Some(2)), ("e", 1, 0, None)], &["0", "s - u^2"]).unwrap();
    let c = a.cancel_cell("e", "s").unwrap();
    assert!(c.gens().is_empty());

    let pre = cdga(
        &ring(&["x", "y"]),
        &[("v", 0, 0, None), ("s", 0, 0, None), ("e1", 1, 0, None), ("e2", 1, 0, None)],
        &["0", "0", "s - x", "v*s - y"],
    )
    .unwrap();
    let chart = pre.cancel_cell("e1", "s").unwrap();
    assert_eq!(chart.diff_of("e2").unwrap().to_string(), "x*v - y");

    let bad = cdga(&ring(&["u"]), &[("s", 0, 0, None), ("e", 1, 0, None)], &["0", "s*u - u^2"]).unwrap();
    assert!(matches!(bad.cancel_cell("e", "s"), Err(DgError::CellNotCancellable { .. })));
}

#[test]
fn sym_algebra_examples() {
    let q = SemifreeCDGA::base_algebra(&ring(&[]));
    let m = DGModuleSpec::free(&q, vec![GeneratorSpec::new("x1", 0, 1), GeneratorSpec::new("x2", 0, 1)]);
    let s = sym_algebra(&m).unwrap();
    assert_eq!(s.total_ring().names(), &["x1", "x2"]);
    assert!(s.pi0().ideal().is_zero());

    let m = DGModuleSpec::free(&q, vec![GeneratorSpec::new("xi", 1, 1).with_deg(1)]);
    let s = sym_algebra(&m).unwrap();
    let dims: Vec<usize> = (0..4).map(|n| weight_piece(&s, n, 4).unwrap().by_slot.values().map(Vec::len).sum()).collect();
    assert_eq!(dims, vec![1, 1, 0, 0]);

    let r = ring(&["x", "y"]);
    let k = koszul(&r, &["x", "y"]);
    let m = DGModuleSpec::free(&k, vec![GeneratorSpec::new("x1", 0, 1), GeneratorSpec::new("x2", 0, 1)]);
    let cone = sym_algebra(&m).unwrap().canonicalized();
    let rext = cdga(
        &r,
        &[
            ("tinv", 0, -1, Some(0)),
            ("x1", 0, 1, None),
            ("x2", 0, 1, None),
            ("e1", 1, 0, None),
            ("e2", 1, 0, None),
        ],
        &["0", "0", "0", "x1*tinv - x", "x2*tinv - y"],
    )
    .unwrap();
    let special = rext.base_change(&[("tinv", Polynomial::zero(rext.total_ring()))]).unwrap();
    let minus = -Rational::from_integer(1.into());
    let flipped = special.rescale_generator("e1", &minus).unwrap().rescale_generator("e2", &minus).unwrap();
    assert_eq!(flipped, cone);
}
