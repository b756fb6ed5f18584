//! Fuzz the representation JSON parser with arbitrary bytes.
//!
//! Parsing must never panic. Accepted representations must round trip, and
//! small ones must survive the verification checks without panicking.

#![no_main]

use libfuzzer_sys::fuzz_target;

use heisrep::json::{parse_representation, representation_to_string};
use heisrep::repcheck::{is_faithful, is_homomorphism, rep_kernel};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(rep) = parse_representation(text) {
        let wire = representation_to_string(&rep);
        let back = parse_representation(&wire).expect("emitted representation must reparse");
        assert_eq!(
            rep, back,
            "serialization round trip changed the representation"
        );
        if rep.space_dim() <= 6 && rep.algebra().dim() <= 8 {
            let _ = is_homomorphism(&rep);
            let kernel = rep_kernel(&rep);
            assert_eq!(
                is_faithful(&rep),
                kernel.is_zero(),
                "faithfulness must match a trivial kernel"
            );
        }
    }
});
