#![no_main]

use std::sync::OnceLock;

use gradmod::exactla::Field;
use gradmod::instance::parse_poly;
use gradmod::ring::{Monomial, Ring};
use libfuzzer_sys::fuzz_target;

fn ring() -> &'static Ring {
    static R: OnceLock<Ring> = OnceLock::new();
    R.get_or_init(|| {
        let gens: Vec<Monomial> = [[3, 0, 0, 0], [2, 1, 0, 0], [1, 2, 0, 0], [0, 3, 0, 0], [1, 0, 0, 1], [0, 0, 2, 0], [0, 0, 0, 2]]
            .iter()
            .map(|e| Monomial::new(e.to_vec()))
            .collect();
        Ring::new(&["x", "y", "z", "w"], Field::DEFAULT, &gens).unwrap()
    })
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(e) = parse_poly(ring(), text) {
        assert_eq!(parse_poly(ring(), &e.to_string()).expect("printed polynomials parse"), e);
    }
});
