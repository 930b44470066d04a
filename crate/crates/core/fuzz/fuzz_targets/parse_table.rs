#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else {
        return;
    };
    let Some(expect_n) = input
        .lines()
        .next()
        .and_then(|l| l.strip_prefix("stab7 v1 n="))
        .and_then(|s| s.parse::<i64>().ok())
    else {
        return;
    };
    if let Ok(table) = burau2::groups::parse_stab7_text(input, expect_n) {
        // a loaded table must be internally consistent
        assert!(table.order() > 0);
        assert!(table.element(table.identity_pos()).is_identity());
    }
});
