//! Fuzz the algebra JSON parser with arbitrary bytes.
//!
//! Parsing must never panic. Accepted algebras must round trip through
//! serialization, and small ones must survive the structural checks without
//! panicking.

#![no_main]

use libfuzzer_sys::fuzz_target;

use heisrep::json::{algebra_to_string, parse_algebra};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(alg) = parse_algebra(text) {
        let wire = algebra_to_string(&alg);
        let back = parse_algebra(&wire).expect("emitted algebra must reparse");
        assert_eq!(alg, back, "serialization round trip changed the algebra");
        if alg.dim() <= 8 {
            let _ = alg.check_jacobi();
            let _ = alg.center();
            let _ = alg.nilpotency_class();
        }
    }
});
