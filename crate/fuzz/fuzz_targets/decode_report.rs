#![no_main]

use libfuzzer_sys::fuzz_target;
use sakaguchi::report::{reports_from_json, reports_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(set) = reports_from_json(text) {
        let json = reports_to_json(&set);
        let again = reports_from_json(&json).expect("encoded reports decode");
        assert_eq!(reports_to_json(&again), json);
    }
});
