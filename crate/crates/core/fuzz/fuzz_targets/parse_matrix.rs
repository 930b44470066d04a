#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(mat) = burau2::matrix::parse_canonical_f2l(input) {
        // accepted strings are exactly the canonical encodings
        assert_eq!(mat.canonical_string(), input);
    }
});
