#![no_main]
use libfuzzer_sys::fuzz_target;
use qca_lab::fpoly::{format_poly, parse_poly};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        for dim in 1..=3 {
            if let Ok(p) = parse_poly(s, dim) {
                // canonical form must parse back to the same polynomial
                assert_eq!(parse_poly(&format_poly(&p), dim).unwrap(), p);
            }
        }
    }
});
