#![allow(dead_code)]

use dnc_core::center::CenterPresentation;

pub fn c0() -> CenterPresentation {
    CenterPresentation::parse(&["z"], &[]).unwrap()
}

pub fn c1() -> CenterPresentation {
    CenterPresentation::parse(&["u"], &["u"]).unwrap()
}

pub fn c2() -> CenterPresentation {
    CenterPresentation::parse(&["x", "y"], &["x", "y"]).unwrap()
}

pub fn c3() -> CenterPresentation {
    CenterPresentation::parse(&["x"], &["x", "x"]).unwrap()
}

pub fn c4() -> CenterPresentation {
    CenterPresentation::parse(&["x", "y"], &["x^2", "x*y"]).unwrap()
}

pub fn cu() -> CenterPresentation {
    CenterPresentation::parse(&["z"], &["1"]).unwrap()
}

pub fn suite() -> Vec<(&'static str, CenterPresentation)> {
    vec![("C0", c0()), ("C1", c1()), ("C2", c2()), ("C3", c3()), ("C4", c4()), ("CU", cu())]
}
