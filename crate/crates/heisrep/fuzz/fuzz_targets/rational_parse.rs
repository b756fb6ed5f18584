//! Fuzz the rational string parser with arbitrary bytes.
//!
//! The parser must never panic; accepted inputs must come out canonical and
//! survive a display/parse round trip bit-exactly.

#![no_main]

use libfuzzer_sys::fuzz_target;

use heisrep::linalg::{format_rational, is_canonical, parse_rational};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = parse_rational(text) {
        assert!(is_canonical(&r), "parsed rational is not canonical");
        let wire = format_rational(&r);
        let back = parse_rational(&wire).expect("canonical output must reparse");
        assert_eq!(r, back, "wire round trip changed the value");
    }
});
