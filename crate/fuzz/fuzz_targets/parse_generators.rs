#![no_main]

use gradmod::semigroup::NumericalSemigroup;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(h) = NumericalSemigroup::parse(text) {
        if h.frobenius() < 2000 {
            let _ = h.pseudo_frobenius();
        }
    }
});
