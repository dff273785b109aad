#![no_main]
use libfuzzer_sys::fuzz_target;
use qca_lab::config::QcaConfig;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(cfg) = QcaConfig::from_json_str(s) {
            let _ = cfg.build();
        }
    }
});
