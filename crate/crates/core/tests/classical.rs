mod common;

use common::*;
use dnc_core::classical::*;
use dnc_core::comparisons::*;
use dnc_core::polycore::{MonomialOrder, Polynomial};
use dnc_core::rees::rees_extended;
use dnc_core::Error;

#[test]
fn rees_ideals() {
    assert!(classical_rees(&c1(), false).unwrap().ideal.is_zero());
    assert_eq!(classical_rees(&c1(), true).unwrap().basis_strings(), vec!["tinv*x1 - u"]);
    assert_eq!(classical_rees(&c2(), false).unwrap().basis_strings(), vec!["y*x1 - x*x2"]);
    assert_eq!(classical_rees(&c4(), false).unwrap().basis_strings(), vec!["y*x1 - x*x2"]);
    assert_eq!(classical_rees(&c3(), true).unwrap().basis_strings(), vec!["x1 - x2", "tinv*x2 - x"]);
    assert!(matches!(classical_rees(&c0(), false), Err(Error::EmptyCenter)));
}

#[test]
fn extended_by_saturation_agrees() {
    for c in [c1(), c2(), c3(), c4(), cu()] {
        let ext = classical_rees(&c, true).unwrap();
        let j = rees_extended(&c).pi0().ideal().to_ring(ext.ring()).unwrap();
        let t = Polynomial::named(ext.ring(), ext.tinv.as_deref().unwrap());
        assert!(j.saturate(&t).unwrap().equals(&ext.ideal, MonomialOrder::DegRevLex).unwrap());
    }
}

#[test]
fn normal_cones() {
    assert_eq!(classical_normal_cone(&c1()).unwrap().basis_strings(), vec!["u"]);
    assert_eq!(classical_normal_cone(&c2()).unwrap().basis_strings(), vec!["y", "x"]);
    assert_eq!(
        classical_normal_cone(&c4()).unwrap().basis_strings(),
        vec!["y*x1 - x*x2", "x*y", "x^2"]
    );
}

#[test]
fn oracle_self_consistency() {
    for (name, c) in suite().into_iter().filter(|(n, _)| *n != "C0") {
        assert!(oracle_consistency(&c, 5).unwrap().holds(), "{name}");
    }
}

#[test]
fn deformation_comparison() {
    for c in [c1(), c2(), cu()] {
        let r = compare_classical_deformation(&c).unwrap();
        assert!(r.holds() && r.saturation_noop);
    }
    let r3 = compare_classical_deformation(&c3()).unwrap();
    assert!(r3.holds() && !r3.saturation_noop);
    assert_eq!(r3.torsion, vec!["x1 - x2"]);
    let r4 = compare_classical_deformation(&c4()).unwrap();
    assert!(r4.holds());
    assert_eq!(r4.torsion, vec!["y*x1 - x*x2"]);
    assert!(matches!(compare_classical_deformation(&c0()), Err(Error::EmptyCenter)));
}

#[test]
fn blowup_comparison() {
    for (name, c) in suite().into_iter().filter(|(n, _)| *n != "C0") {
        let charts = compare_classical_blowup(&c).unwrap();
        assert_eq!(charts.len(), c.len());
        assert!(charts.iter().all(|r| r.matches), "{name}");
    }
    assert!(compare_classical_blowup(&c2()).unwrap().iter().all(|r| r.saturation_noop));
    let c4 = compare_classical_blowup(&c4()).unwrap();
    assert!(!c4[1].saturation_noop);
    assert_eq!(c4[1].classical, vec!["y*y1 - x"]);
    assert_eq!(classical_chart(&c2(), 1).unwrap().reduced_basis()[0].to_string(), "x*y2 - y");
}
