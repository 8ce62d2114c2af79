#![no_main]

use libfuzzer_sys::fuzz_target;
use sakaguchi::report::{stats_from_json, stats_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(set) = stats_from_json(text) {
        let json = stats_to_json(&set);
        let again = stats_from_json(&json).expect("encoded stats decode");
        assert_eq!(stats_to_json(&again), json);
    }
});
