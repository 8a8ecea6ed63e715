#![no_main]

use gradmod::instance::parse_instance;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = parse_instance(text) {
        let printed = f.to_string();
        let again = parse_instance(&printed).expect("printed instance files parse");
        assert_eq!(f, again);
    }
});
