#![no_main]
use libfuzzer_sys::fuzz_target;
use qca_lab::pauli::parse_pauli;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(p) = parse_pauli(s, 1, 1) {
            assert_eq!(parse_pauli(&p.to_string(), 1, 1).unwrap(), p);
            let _ = p.to_vector(1, 1);
        }
        let _ = parse_pauli(s, 2, 2);
    }
});
