#![no_main]

use burau2::ring::RatF2;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(f) = burau2::conjugation::parse_fraction(input) {
        // parsed values are canonical
        let again = RatF2::new(f.num().clone(), f.den().clone()).unwrap();
        assert_eq!(again, f);
    }
});
