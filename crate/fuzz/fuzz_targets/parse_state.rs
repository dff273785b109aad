#![no_main]
use libfuzzer_sys::fuzz_target;
use qca_lab::expectation::{lambda_of_state, moments_from_bloch, ProductStateParams};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(state) = ProductStateParams::parse(s) {
            let lambda = lambda_of_state(&moments_from_bloch(&state));
            assert!((0.0..=1.0 + 1e-12).contains(&lambda));
        }
    }
});
