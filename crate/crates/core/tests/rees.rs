mod common;

use common::*;
use dnc_core::center::CenterPresentation;
use dnc_core::rees::*;

#[test]
fn rees_presentations() {
    let r = rees_extended(&c1());
    assert_eq!(r.tinv(), "tinv");
    assert_eq!(r.cdga().diff_of("e1").unwrap().to_string(), "tinv*x1 - u");
    assert_eq!(r.pi0().basis_strings(), vec!["tinv*x1 - u"]);

    let r0 = rees_extended(&c0());
    assert_eq!(r0.cdga().gens().len(), 1);
    assert!(r0.pi0().basis_strings().is_empty());

    let r3 = rees_extended(&c3());
    assert_eq!(r3.pi0().basis_strings(), vec!["tinv*x2 - x", "tinv*x1 - x", "x*x1 - x*x2"]);
}

#[test]
fn structure_on_suite() {
    for (name, c) in suite() {
        let s = rees_structure(&rees_extended(&c), 6).unwrap();
        assert!(s.nonpositive_free, "{name}");
        assert!(s.generated_in_weight_one, "{name}");
        assert!(s.weight_one_is_ideal, "{name}");
    }
    let s3 = rees_structure(&rees_extended(&c3()), 6).unwrap();
    assert_eq!(s3.weight_one_torsion, vec!["x1 - x2"]);
    let s4 = rees_structure(&rees_extended(&c4()), 6).unwrap();
    assert_eq!(s4.weight_one_torsion, vec!["y*x1 - x*x2"]);
    assert_eq!(s4.weight_one_image, vec!["x*y", "x^2"]);
    assert!(rees_structure(&rees_extended(&c2()), 6).unwrap().weight_one_torsion.is_empty());
}

#[test]
fn fibers() {
    let r = rees_extended(&c1());
    let g = check_generic_fiber(&r).unwrap();
    assert!(g.holds);
    assert_eq!(g.computed, vec!["-u*t + x1", "tinv*t - 1"]);

    let special = deformation_fiber(&r, FiberKind::Special).cdga;
    assert_eq!(special.diff_of("e1").unwrap().to_string(), "-u");
    for (name, c) in suite() {
        let r = rees_extended(&c);
        assert!(check_generic_fiber(&r).unwrap().holds, "{name}");
        let s = check_special_fiber(&r, -1..=2, 6).unwrap();
        assert!(s.presentation_equal && s.tables_equal, "{name}");
    }
}

#[test]
fn normal_cone_models() {
    assert_eq!(conormal_model(&c2()).rank(), 2);
    assert_eq!(conormal_model(&c0()).rank(), 0);
    assert_eq!(conormal_model(&c3()).algebra.gens().len(), 2);
    let cone = normal_cone_model(&c1());
    let names: Vec<&str> = cone.gens().iter().map(|g| g.name.as_str()).collect();
    assert_eq!(names, vec!["x1", "e1"]);
    assert_eq!(normal_cone_model(&c0()).gens().len(), 0);
}

#[test]
fn weight_components() {
    let r1 = rees_extended(&c1());
    let neg = weight_component(&r1, -2, 4).unwrap();
    assert_eq!(neg.free_on_tinv_power, Some(true));
    assert!((0..=neg.homology.certified_band).all(|d| neg.homology.get(0, -2, d) == 1));

    let one = weight_component(&r1, 1, 4).unwrap();
    assert_eq!(one.homology.get(0, 1, 0), 0);
    assert!((1..=one.homology.certified_band).all(|d| one.homology.get(0, 1, d) == 1));

    let r3 = rees_extended(&c3());
    let w = weight_component(&r3, 1, 4).unwrap();
    let h0: Vec<usize> = (0..=3).map(|d| w.homology.get(0, 1, d)).collect();
    assert_eq!(h0, vec![0, 2, 1, 1]);
}

#[test]
fn adic_pieces() {
    let r1 = rees_extended(&c1());
    let f0 = adic_filtration(&r1, 0).unwrap();
    assert!(f0.image.is_unit() && f0.image_is_power);
    let f1 = adic_filtration(&r1, 1).unwrap();
    assert_eq!(f1.generators.len(), 1);
    assert_eq!(f1.image.reduced_basis()[0].to_string(), "u");

    let r4 = rees_extended(&c4());
    let f2 = adic_filtration(&r4, 2).unwrap();
    assert_eq!(f2.generators.len(), 3);
    assert!(f2.image_is_power);

    let f = adic_filtration(&rees_extended(&c0()), 1).unwrap();
    assert!(f.image.is_zero());
}

#[test]
fn multiplicativity() {
    let a = CenterPresentation::parse(&["x", "y"], &["x"]).unwrap();
    let b = CenterPresentation::parse(&["x", "y"], &["y"])
        .unwrap()
        .with_names(&["x2"], &["e2"])
        .unwrap();
    let m = check_multiplicativity(&a, &b).unwrap();
    assert!(m.presentation_equal && m.pi0_equal);
    assert_eq!(rees_extended(&a.union(&b).unwrap()).cdga(), rees_extended(&c2()).cdga());
}
