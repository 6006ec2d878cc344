//! Shared benchmark inputs.

use frobgen_core::{parse_poly, MonomialOrder, Poly, RingContext};

pub struct Instance {
    pub name: &'static str,
    pub f: Poly,
}

fn instance(name: &'static str, p: u32, vars: &[&str], f: &str) -> Instance {
    let ring = RingContext::new(p, vars, MonomialOrder::Grevlex).expect("valid context");
    Instance { name, f: parse_poly(f, &ring).expect("valid polynomial") }
}

pub fn instances() -> Vec<Instance> {
    vec![
        instance("four_squares_p5", 5, &["x1", "x2", "x3", "x4"], "x1^2+x2^2+x3^2+x4^2"),
        instance("four_squares_p3", 3, &["x1", "x2", "x3", "x4"], "x1^2+x2^2+x3^2+x4^2"),
        instance("nodal_cubic_p2", 2, &["x", "y"], "x^2*y + x*y^2"),
        instance("cusp_p5", 5, &["x", "y"], "y^2 - x^3"),
        instance("whitney_p3", 3, &["x", "y", "z"], "x^2 - y^2*z"),
        instance("quartic_p5", 5, &["x", "y", "z"], "x^4 + y^3*z + x*y*z^2"),
    ]
}
