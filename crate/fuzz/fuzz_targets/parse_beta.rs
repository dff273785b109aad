#![no_main]
use libfuzzer_sys::fuzz_target;
use qca_lab::expectation::BetaSpec;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = BetaSpec::parse(s);
    }
});
