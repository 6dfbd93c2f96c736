mod common;

use common::*;
use dnc_core::blowup::*;
use dnc_core::center::CenterPresentation;
use dnc_core::polycore::{parse_polynomial, Ring, RingMap};
use dnc_core::Error;

#[test]
fn plane_at_origin() {
    let charts = blowup_charts(&c2()).unwrap();
    assert_eq!(charts.len(), 2);
    let c1 = &charts[0];
    assert_eq!(c1.exceptional_equation.to_string(), "x");
    assert_eq!(c1.cdga.diff_of("e2").unwrap().to_string(), "x*y2 - y");
    assert_eq!(c1.cdga.pi0().basis_strings(), vec!["x*y2 - y"]);
    assert!(c1.precursor_maps_to_rees && c1.pi0_preserved);
    for c in &charts {
        let h = chart_homology(c, 6).unwrap();
        assert!(h.certified_band >= 4);
        assert!(h.vanishes_from(1));
    }
    let e = exceptional_divisor(c1).unwrap();
    assert_eq!(e.pi0().basis_strings(), vec!["y", "x"]);
    assert_eq!(e.diff_of("eps").unwrap().to_string(), "x");
}

#[test]
fn degenerate_centers() {
    assert!(blowup_charts(&c0()).unwrap().is_empty());
    let cu = blowup_charts(&cu()).unwrap();
    assert_eq!(cu.len(), 1);
    assert!(cu[0].cdga.gens().is_empty());
    assert!(exceptional_divisor(&cu[0]).unwrap().pi0().ideal().is_unit());

    let c1 = blowup_charts(&c1()).unwrap();
    let e = exceptional_divisor(&c1[0]).unwrap();
    let koszul = dnc_core::dgalg::SemifreeCDGA::base_algebra(c1[0].cdga.base())
        .derived_quotient_named(&[("eps", c1[0].exceptional_equation.clone(), 0)])
        .unwrap();
    assert_eq!(e, koszul);
}

#[test]
fn non_regular_chart() {
    let charts = blowup_charts(&c4()).unwrap();
    assert_eq!(charts[1].cdga.diff_of("e1").unwrap().to_string(), "x*y*y1 - x^2");
    assert_eq!(charts[1].cdga.pi0().basis_strings(), vec!["x*y*y1 - x^2"]);
    assert!(charts.iter().all(|c| c.pi0_preserved && c.precursor_maps_to_rees));
}

#[test]
fn transitions_and_cocycle() {
    let charts = blowup_charts(&c2()).unwrap();
    let t = transition(&charts, 2, 1).unwrap();
    assert!(t.holds());
    assert_eq!(t.images[0], ("y1".to_string(), "y2_inv".to_string()));
    assert!(transition(&charts, 1, 2).unwrap().holds());
    assert!(matches!(transition(&charts, 1, 3), Err(Error::IndexOutOfRange { .. })));
    assert!(matches!(transition(&charts, 1, 1), Err(Error::IndexOutOfRange { .. })));

    let c3 = blowup_charts(&c3()).unwrap();
    assert!(transition(&c3, 1, 2).unwrap().holds());
    assert!(transition(&c1_charts(), 1, 1).is_err());

    let t3 = CenterPresentation::parse(&["x", "y", "z"], &["x", "y", "z"]).unwrap();
    let charts = blowup_charts(&t3).unwrap();
    for (i, j, k) in [(1, 2, 3), (2, 3, 1), (3, 1, 2), (1, 3, 2)] {
        assert!(check_cocycle(&charts, i, j, k).unwrap());
        assert!(transition(&charts, k, i).unwrap().holds());
    }
}

fn c1_charts() -> Vec<ChartPresentation> {
    blowup_charts(&c1()).unwrap()
}

#[test]
fn excessive_squares() {
    let r = Ring::new(&["x", "y"]);
    let p = |s: &str| parse_polynomial(s, &r).unwrap();
    let id = RingMap::new(&r, &r, &[]).unwrap();

    // origin in the line x = 0 in the plane
    let selfint = ExcessiveSquareData {
        source: CenterPresentation::new(&r, vec![p("x"), p("y")]).unwrap(),
        target: CenterPresentation::new(&r, vec![p("y")]).unwrap(),
        ambient_relations: vec![p("x")],
        ambient_map: id.clone(),
        coefficients: vec![vec![p("0")], vec![p("1")]],
    };
    assert!(check_excessive(&selfint).unwrap().excessive);

    // base change along Q[x,y] -> Q[x,y]/(y - x^2)
    let bc = ExcessiveSquareData {
        source: CenterPresentation::new(&r, vec![p("x"), p("y")]).unwrap(),
        target: CenterPresentation::new(&r, vec![p("x"), p("y")]).unwrap(),
        ambient_relations: vec![p("y - x^2")],
        ambient_map: id.clone(),
        coefficients: vec![vec![p("1"), p("0")], vec![p("0"), p("1")]],
    };
    let rep = check_excessive(&bc).unwrap();
    assert!(rep.classically_cartesian && rep.conormal_surjective && rep.excessive);
    assert_eq!(rep.certified_band, None);

    let bad = ExcessiveSquareData {
        source: CenterPresentation::new(&r, vec![p("x^2")]).unwrap(),
        target: CenterPresentation::new(&r, vec![p("x")]).unwrap(),
        ambient_relations: vec![],
        ambient_map: id,
        coefficients: vec![vec![p("x")]],
    };
    let rep = check_excessive(&bad).unwrap();
    assert!(rep.well_formed);
    assert!(!rep.classically_cartesian && !rep.excessive);
}

#[test]
fn deformation_as_blowup() {
    for c in [c1(), c2(), c3(), c4()] {
        let rep = verify_deformation_as_blowup(&c).unwrap();
        assert_eq!(rep.charts.len(), c.len() + 1);
        assert!(rep.holds());
    }
    assert!(matches!(verify_deformation_as_blowup(&c0()), Err(Error::EmptyCenter)));
}
